//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `--nocapture`) and asserting the stated bounds.
//! The staged singular-locus probe is long-running and reported
//! separately: run it with `cargo test --test acceptance -- --ignored`.

use campedelli_core::campedelli::{
    admissible_scalars, betti_consistency, cone_lemma_check, expected_hilbert_series,
    fixed_locus_dimension_check, hilbert_and_betti_check, listed_generators_of_l, reduce_to_a,
    smoothness_probe, verify_dimensions, verify_explicit_table, verify_group_invariance,
    verify_ideal_invariance, verify_step_replays, verify_surface_structure, CampedelliModel,
    CampedelliParams, FixedLocusElement, SmoothnessOutcome, SurfaceMode,
};
use campedelli_core::coeff::{Cyclotomic6, Field, PrimeField, Rationals};
use campedelli_core::groebner::{
    buchberger, monomial_dimension, Budget, HilbertSeries, Ideal, MonomialOrder,
};
use campedelli_core::pfaffian::SkewMatrix;
use campedelli_core::polyring::{Monomial, Polynomial, Ring};
use campedelli_core::report::Reporter;
use campedelli_core::unprojection::{
    expected_generator_count, verify_codimension, verify_identities, verify_specialization,
    verify_structure, GenericModel, RMode,
};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

fn conclude(criterion: &str, start: Instant, limit: Duration, rep: &Reporter) {
    let elapsed = start.elapsed();
    let ok = rep.all_passed();
    println!(
        "acceptance: {criterion} {} in {elapsed:?} (limit {limit:?}, {} checks)",
        if ok { "PASS" } else { "FAIL" },
        rep.checks().len(),
    );
    if !ok {
        for c in rep.checks() {
            println!("  {:?}", c);
        }
    }
    assert!(ok, "{criterion} has failing checks");
    assert!(
        elapsed <= limit,
        "{criterion} exceeded its runtime budget: {elapsed:?} > {limit:?}"
    );
}

#[test]
fn criterion_01_explicit_table_conformance() {
    let start = Instant::now();
    let model = CampedelliModel::new(Cyclotomic6, SurfaceMode::Symbolic).unwrap();
    let mut rep = Reporter::new();
    verify_explicit_table(&model, &mut rep).unwrap();
    assert_eq!(rep.checks().len(), 14);
    conclude("criterion-1 explicit-table", start, Duration::from_secs(1), &rep);
}

#[test]
fn criterion_02_structural_identities() {
    let start = Instant::now();
    let mut rep = Reporter::new();
    for n in 2..=5 {
        let model = GenericModel::new(Rationals, n, RMode::Symbolic).unwrap();
        verify_identities(&model, &mut rep);
    }
    conclude(
        "criterion-2 structural-identities",
        start,
        Duration::from_secs(30),
        &rep,
    );
}

#[test]
fn criterion_03_generator_counts_and_uniqueness() {
    let start = Instant::now();
    let mut rep = Reporter::new();
    for n in 2..=6 {
        let model = GenericModel::new(Rationals, n, RMode::Symbolic).unwrap();
        verify_structure(&model, &mut rep);
        for p in 2..=n {
            rep.eq_check(
                format!("count/n={n}/p={p}"),
                &(2 * p + p * (p - 1) / 2),
                &model.ideal(p).unwrap().len(),
            );
        }
    }
    let surface = CampedelliModel::new(Cyclotomic6, SurfaceMode::Symbolic).unwrap();
    rep.eq_check("count/surface", &14usize, &surface.pfaffian_ideal().len());
    conclude(
        "criterion-3 generator-counts",
        start,
        Duration::from_secs(120),
        &rep,
    );
}

#[test]
fn criterion_04_codimension_ladder() {
    let start = Instant::now();
    let field = PrimeField::new(31991).unwrap();
    let budget = Budget::default();
    let mut rep = Reporter::new();
    rep.note_prime(31991);
    for n in 2..=3 {
        let model = GenericModel::new(field, n, RMode::Symbolic).unwrap();
        verify_codimension(&model, &budget, &mut rep).unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0401);
    for draw in 0..3 {
        let values: Vec<u64> = (0..16).map(|_| field.sample(&mut rng)).collect();
        let model = GenericModel::new(field, 4, RMode::Concrete(values)).unwrap();
        let before = rep.checks().len();
        verify_codimension(&model, &budget, &mut rep).unwrap();
        assert_eq!(rep.checks().len(), before + 5, "draw {draw} covers p = 0..4");
    }
    conclude(
        "criterion-4 codimension-ladder",
        start,
        Duration::from_secs(600),
        &rep,
    );
}

#[test]
fn criterion_05_specialization_closed_forms() {
    let start = Instant::now();
    let mut rep = Reporter::new();
    for n in 2..=4 {
        let model = GenericModel::new(Rationals, n, RMode::Symbolic).unwrap();
        verify_specialization(&model, &mut rep).unwrap();
    }
    conclude(
        "criterion-5 specialization",
        start,
        Duration::from_secs(10),
        &rep,
    );
}

#[test]
fn criterion_06_surface_dimensions_and_reduced_ideal() {
    let start = Instant::now();
    let mut rep = Reporter::new();
    verify_dimensions(&Rationals, &Budget::default(), &mut rep).unwrap();
    conclude(
        "criterion-6 surface-dimensions",
        start,
        Duration::from_secs(300),
        &rep,
    );
}

#[test]
fn criterion_07_hilbert_series_and_betti() {
    let start = Instant::now();
    let mut rep = Reporter::new();
    betti_consistency(&mut rep);
    let budget = Budget::default();
    for prime in [103u64, 31991] {
        let field = PrimeField::new(prime).unwrap();
        rep.note_prime(prime);
        for draw in 0..3 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0700 + draw);
            let params = CampedelliParams::random_generic(&field, &mut rng);
            let model = CampedelliModel::new(field, SurfaceMode::Concrete(params)).unwrap();
            hilbert_and_betti_check(&model, &budget, &format!("p{prime}-draw{draw}"), &mut rep)
                .unwrap();
        }
    }
    conclude(
        "criterion-7 hilbert-and-betti",
        start,
        Duration::from_secs(600),
        &rep,
    );
}

#[test]
fn criterion_08_invariance_suite() {
    let start = Instant::now();
    let mut rep = Reporter::new();
    let model = CampedelliModel::new(Cyclotomic6, SurfaceMode::Symbolic).unwrap();
    verify_surface_structure(&model, &mut rep);
    verify_group_invariance(&model, &mut rep).unwrap();

    let field = PrimeField::new(103).unwrap();
    rep.note_prime(103);
    let mut rng = ChaCha8Rng::seed_from_u64(0x0800);
    let params = CampedelliParams::random_generic(&field, &mut rng);
    params.record_genericity(&field, &mut rep);
    let concrete = CampedelliModel::new(field, SurfaceMode::Concrete(params)).unwrap();
    verify_ideal_invariance(&concrete, &Budget::default(), &mut rep).unwrap();
    conclude(
        "criterion-8 invariance",
        start,
        Duration::from_secs(60),
        &rep,
    );
}

#[test]
fn criterion_09_fixed_locus() {
    let start = Instant::now();
    let mut rep = Reporter::new();

    // scalar pre-filter over both a prime field and the cyclotomic field
    for spec in ["p103", "cyclotomic"] {
        let (g2, g3) = match spec {
            "p103" => {
                let f = PrimeField::new(103).unwrap();
                (
                    admissible_scalars(&f, FixedLocusElement::GSquared).unwrap(),
                    admissible_scalars(&f, FixedLocusElement::GCubed).unwrap(),
                )
            }
            _ => (
                admissible_scalars(&Cyclotomic6, FixedLocusElement::GSquared).unwrap(),
                admissible_scalars(&Cyclotomic6, FixedLocusElement::GCubed).unwrap(),
            ),
        };
        rep.eq_check_debug(format!("prefilter/{spec}/square"), &vec![0u64, 2, 4], &g2);
        rep.eq_check_debug(format!("prefilter/{spec}/cube"), &vec![0u64, 3], &g3);
    }

    let symbolic = CampedelliModel::new(Cyclotomic6, SurfaceMode::Symbolic).unwrap();
    verify_step_replays(&symbolic, &mut rep).unwrap();

    let budget = Budget::default();
    let field = PrimeField::new(103).unwrap();
    rep.note_prime(103);
    for draw in 0..2u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0900 + draw);
        let params = CampedelliParams::random_generic(&field, &mut rng);
        params.record_genericity(&field, &mut rep);
        let model = CampedelliModel::new(field, SurfaceMode::Concrete(params)).unwrap();
        for element in [FixedLocusElement::GSquared, FixedLocusElement::GCubed] {
            fixed_locus_dimension_check(
                &model,
                element,
                &budget,
                &format!("{}-draw{draw}", element.label()),
                &mut rep,
            )
            .unwrap();
        }
    }
    conclude(
        "criterion-9 fixed-locus",
        start,
        Duration::from_secs(900),
        &rep,
    );
}

#[test]
fn criterion_10_cone_lemma() {
    let start = Instant::now();
    let mut rep = Reporter::new();
    let symbolic = CampedelliModel::new(Cyclotomic6, SurfaceMode::Symbolic).unwrap();
    cone_lemma_check(&symbolic, &Budget::default(), &mut rep).unwrap();

    let field = PrimeField::new(103).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1000);
    let params = CampedelliParams::random_generic(&field, &mut rng);
    let concrete = CampedelliModel::new(field, SurfaceMode::Concrete(params)).unwrap();
    cone_lemma_check(&concrete, &Budget::default(), &mut rep).unwrap();
    conclude("criterion-10 cone-lemma", start, Duration::from_secs(60), &rep);
}

#[test]
fn criterion_11_engine_properties() {
    let start = Instant::now();
    let mut rep = Reporter::new();

    // Pfaffian squared equals the determinant, cofactor-expansion oracle.
    let field = PrimeField::new(31).unwrap();
    let ring = Ring::new(field, vec!["t".to_string()], vec![1]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1101);
    let mut all_ok = true;
    for size in [2usize, 4, 6, 8] {
        for _ in 0..25 {
            let upper: Vec<Polynomial<PrimeField>> = (0..size * (size - 1) / 2)
                .map(|_| Polynomial::constant(&ring, field.sample(&mut rng)))
                .collect();
            let m = SkewMatrix::from_upper(&ring, size, upper);
            let pf = m.pfaffian().unwrap();
            let entries: Vec<Vec<Polynomial<PrimeField>>> = (0..size)
                .map(|i| (0..size).map(|j| m.entry(i, j)).collect())
                .collect();
            all_ok &= pf.mul(&pf) == cofactor_det(&entries, &ring);
        }
    }
    rep.bool_check("engine/pfaffian-squared-det", all_ok);

    // Buchberger criterion re-check on emitted bases.
    let budget = Budget::default();
    let mut criterion_ok = true;
    {
        let model = GenericModel::new(PrimeField::new(31991).unwrap(), 2, RMode::Symbolic).unwrap();
        for p in 0..=2 {
            let ideal = model.ideal(p).unwrap();
            let basis = buchberger(&ideal, MonomialOrder::WeightedDegRevLex, &budget).unwrap();
            criterion_ok &= basis.verify_buchberger_criterion().is_ok();
        }
    }
    {
        let one = Rationals.one();
        let zero = Rationals.zero();
        let params = CampedelliParams::new(
            &Rationals,
            [
                one.clone(),
                zero.clone(),
                zero.clone(),
                one,
                zero.clone(),
                zero.clone(),
                zero.clone(),
                zero,
            ],
        )
        .unwrap();
        let model = CampedelliModel::new(Rationals, SurfaceMode::Concrete(params)).unwrap();
        let reduced = reduce_to_a(&model).unwrap();
        let basis = buchberger(&reduced, MonomialOrder::WeightedDegRevLex, &budget).unwrap();
        criterion_ok &= basis.verify_buchberger_criterion().is_ok();
        // and the reduced ideal ties back to the listed generators
        let listed = Ideal::from_polynomials(
            reduced.ring(),
            listed_generators_of_l()
                .iter()
                .map(|t| campedelli_core::polyring::parse_poly(t, reduced.ring()).unwrap())
                .collect(),
        );
        criterion_ok &= basis.same_ideal_as(listed.basis(&budget).unwrap());
    }
    rep.bool_check("engine/buchberger-criterion-recheck", criterion_ok);

    // Hilbert series against brute-force counts of standard monomials.
    let mut series_ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(0x1102);
    for _ in 0..20 {
        let nvars = 2 + (rng.next_u64() % 5) as usize; // up to 6
        let weights: Vec<u32> = (0..nvars).map(|_| 1 + (rng.next_u64() % 2) as u32).collect();
        let ngens = 1 + (rng.next_u64() % 5) as usize;
        let gens: Vec<Monomial> = (0..ngens)
            .map(|_| {
                let exps: Vec<u16> = (0..nvars).map(|_| (rng.next_u64() % 4) as u16).collect();
                Monomial::from_exponents(&exps, &weights)
            })
            .filter(|m| !m.is_one())
            .collect();
        let hs = HilbertSeries::of_monomial_quotient(&gens, &weights);
        series_ok &= hs.expansion(12) == brute_force_counts(&gens, &weights, 12);
    }
    rep.bool_check("engine/hilbert-vs-enumeration", series_ok);

    conclude(
        "criterion-11 engine-properties",
        start,
        Duration::from_secs(300),
        &rep,
    );
}

/// Determinant by cofactor expansion: the oracle for the Pfaffian square.
fn cofactor_det(
    entries: &[Vec<Polynomial<PrimeField>>],
    ring: &std::sync::Arc<Ring<PrimeField>>,
) -> Polynomial<PrimeField> {
    let n = entries.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    let mut acc = Polynomial::zero(ring);
    for (j, e) in entries[0].iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial<PrimeField>>> = entries[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = e.mul(&cofactor_det(&minor, ring));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Counts monomials of each weighted degree not divisible by a generator.
fn brute_force_counts(gens: &[Monomial], weights: &[u32], up_to: usize) -> Vec<i64> {
    let n = weights.len();
    let mut counts = vec![0i64; up_to + 1];
    let mut exps = vec![0u16; n];
    loop {
        let deg: usize = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as usize * w as usize)
            .sum();
        if deg <= up_to {
            let m = Monomial::from_exponents(&exps, weights);
            if !gens.iter().any(|g| g.divides(&m)) {
                counts[deg] += 1;
            }
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return counts;
            }
            exps[pos] += 1;
            let d: usize = exps
                .iter()
                .zip(weights)
                .map(|(&e, &w)| e as usize * w as usize)
                .sum();
            if d <= up_to {
                break;
            }
            exps[pos] = 0;
            pos += 1;
        }
    }
}

/// Monomial-dimension spot check used by the degeneration argument of the
/// larger family: the displayed monomial ideal drops the dimension by the
/// regular-sequence length.
#[test]
fn criterion_05b_monomial_ideal_of_field_extension_argument() {
    let start = Instant::now();
    let mut rep = Reporter::new();
    for (n, p) in [(2usize, 2usize), (3, 2), (3, 3), (4, 3)] {
        // variables x_1..x_n, y_1..y_p, and the lone surviving coefficient
        let nvars = n + p + 1;
        let weights = vec![1u32; nvars];
        let mono = |pairs: &[(usize, u16)]| {
            let mut exps = vec![0u16; nvars];
            for &(i, e) in pairs {
                exps[i] = e;
            }
            Monomial::from_exponents(&exps, &weights)
        };
        let mut gens = Vec::new();
        // x_i y_i for i <= p; y_i y_j; and the products skipping one x
        for i in 0..p {
            gens.push(mono(&[(i, 1), (n + i, 1)]));
        }
        for i in 0..p {
            for j in i + 1..p {
                gens.push(mono(&[(n + i, 1), (n + j, 1)]));
            }
        }
        for t in 0..p {
            let mut pairs = vec![(nvars - 1, 1u16)];
            for i in 0..n {
                if i != t {
                    pairs.push((i, 1));
                }
            }
            gens.push(mono(&pairs));
        }
        let dim = monomial_dimension(&gens, nvars);
        rep.eq_check(format!("extension-argument/n={n}/p={p}"), &(n as isize), &dim);
    }
    conclude(
        "criterion-5b extension-monomials",
        start,
        Duration::from_secs(10),
        &rep,
    );
}

/// Stretch criterion: the staged singular-locus probe. Long-running and
/// reported separately from the core suite; `resource_limit` with a
/// partial bound is an acceptable non-failure outcome.
#[test]
#[ignore = "stretch criterion: run explicitly with -- --ignored"]
fn criterion_12_smoothness_probe() {
    let start = Instant::now();
    let field = PrimeField::new(103).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1200);
    let params = loop {
        let mut r: [u64; 8] = std::array::from_fn(|_| field.sample(&mut rng));
        r[6] = 0;
        r[7] = 0;
        if let Ok(p) = CampedelliParams::new(&field, r) {
            if p.genericity(&field).iter().all(|(_, _, ok)| *ok) {
                break p;
            }
        }
    };
    let model = CampedelliModel::new(field, SurfaceMode::Concrete(params)).unwrap();
    let mut rep = Reporter::new();
    let outcome = smoothness_probe(
        &model,
        &mut rng,
        &Budget::default(),
        512,
        16,
        &mut rep,
    )
    .unwrap();
    println!(
        "acceptance: criterion-12 smoothness {:?} in {:?}",
        outcome,
        start.elapsed()
    );
    match outcome {
        SmoothnessOutcome::VertexOnly { minors_used } => {
            println!("  singular locus is the vertex only ({minors_used} minors)");
        }
        SmoothnessOutcome::Bound {
            dimension,
            minors_used,
        } => {
            println!("  resource-limited: dimension bound {dimension} after {minors_used} minors");
            assert!(dimension >= 0, "a negative bound would mean the probe finished");
        }
    }
    assert!(rep
        .checks()
        .iter()
        .all(|c| c.status != campedelli_core::report::CheckStatus::Fail));
}

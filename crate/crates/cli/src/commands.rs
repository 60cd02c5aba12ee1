use campedelli_core::campedelli::{
    betti_consistency, cone_lemma_check, fixed_locus_dimension_check, hilbert_and_betti_check,
    point_action_report, smoothness_probe, verify_dimensions, verify_explicit_table,
    verify_group_invariance, verify_ideal_invariance, verify_step_replays,
    verify_surface_structure, CampedelliModel, CampedelliParams, FixedLocusElement, SurfaceMode,
};
use campedelli_core::coeff::{primes, Cyclotomic6, Field, PrimeField, Rationals};
use campedelli_core::groebner::Budget;
use campedelli_core::report::{Reporter, VerificationReport};
use campedelli_core::unprojection::{
    generator_listing, regular_sequence_check, verify_codimension, verify_identities,
    verify_specialization, verify_structure, GenericModel, RMode,
};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::path::Path;

type Outcome = Result<(String, i32), String>;

pub fn resolve_budget(cli_budget: Option<u64>) -> Budget {
    let max_pairs = cli_budget
        .or_else(|| {
            std::env::var("UNPROJ_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(Budget::default().max_pairs);
    Budget {
        max_pairs,
        ..Budget::default()
    }
}

fn seeded(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Seeded primes congruent to 1 mod 6, reported alongside the built-ins.
fn random_sixth_root_primes(rng: &mut dyn RngCore, count: usize) -> Vec<u64> {
    let mut out = Vec::new();
    while out.len() < count {
        let k = 2_000 + rng.next_u64() % 8_000;
        let candidate = 6 * k + 1;
        if primes::is_prime(candidate) && !out.contains(&candidate) {
            out.push(candidate);
        }
    }
    out
}

fn load_params<F: Field>(field: &F, path: &Path) -> Result<CampedelliParams<F>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let entries: Vec<String> =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    CampedelliParams::parse(field, &entries).map_err(|e| e.to_string())
}

fn params_or_random<F: Field>(
    field: &F,
    path: Option<&Path>,
    rng: &mut dyn RngCore,
) -> Result<CampedelliParams<F>, String> {
    match path {
        Some(p) => load_params(field, p),
        None => Ok(CampedelliParams::random_generic(field, rng)),
    }
}

pub fn construct(n: usize, stage: usize, prime: Option<u64>, json: bool) -> Outcome {
    if !(2..=6).contains(&n) {
        return Err(format!("--n must be within 2..=6, got {n}"));
    }
    if stage > n {
        return Err(format!("--stage must be within 0..={n}, got {stage}"));
    }
    let listing = match prime {
        Some(p) => {
            let field = PrimeField::new(p).map_err(|e| e.to_string())?;
            let model = GenericModel::new(field, n, RMode::Symbolic).map_err(|e| e.to_string())?;
            generator_listing(&model, stage).map_err(|e| e.to_string())?
        }
        None => {
            let model =
                GenericModel::new(Rationals, n, RMode::Symbolic).map_err(|e| e.to_string())?;
            generator_listing(&model, stage).map_err(|e| e.to_string())?
        }
    };
    let text = if json {
        serde_json::to_string_pretty(&listing).expect("listing serializes")
    } else {
        let mut out = String::new();
        for g in &listing {
            let degree = g
                .degree
                .map(|d| d.to_string())
                .unwrap_or_else(|| "-".to_string());
            out.push_str(&format!("{:10} deg {:>3}  {}\n", g.name, degree, g.text));
        }
        out
    };
    Ok((text, 0))
}

pub fn verify_structural(n: usize, prime: u64, budget: &Budget) -> Result<VerificationReport, String> {
    if !(2..=6).contains(&n) {
        return Err(format!("--n must be within 2..=6, got {n}"));
    }
    let mut rep = Reporter::new();

    // Exact identities and the degeneration argument over the rationals.
    let model = GenericModel::new(Rationals, n, RMode::Symbolic).map_err(|e| e.to_string())?;
    verify_structure(&model, &mut rep);
    verify_identities(&model, &mut rep);
    verify_specialization(&model, &mut rep).map_err(|e| e.to_string())?;

    // Dimension ladder over a prime field: symbolic coefficients up to
    // n = 3, concrete draws at n = 4, skipped beyond.
    let field = PrimeField::new(prime).map_err(|e| e.to_string())?;
    rep.note_prime(prime);
    if n <= 3 {
        let model =
            GenericModel::new(field, n, RMode::Symbolic).map_err(|e| e.to_string())?;
        verify_codimension(&model, budget, &mut rep).map_err(|e| e.to_string())?;
        let top = model.ideal(n).map_err(|e| e.to_string())?;
        regular_sequence_check(
            &top,
            &[&format!("x{n}"), &format!("z{n}")],
            budget,
            &mut rep,
            &format!("regular-sequence/n={n}/top-pair"),
        )
        .map_err(|e| e.to_string())?;
        let base = model.ideal(0).map_err(|e| e.to_string())?;
        regular_sequence_check(
            &base,
            &["x1", "x2"],
            budget,
            &mut rep,
            &format!("regular-sequence/n={n}/hypersurface"),
        )
        .map_err(|e| e.to_string())?;
        if n == 3 {
            regular_sequence_check(
                &top,
                &["x1", "x3"],
                budget,
                &mut rep,
                "regular-sequence/n=3/skew-pair",
            )
            .map_err(|e| e.to_string())?;
        }
    } else if n == 4 {
        let mut rng = seeded(0, 4);
        for draw in 0..3 {
            let values: Vec<u64> = (0..16).map(|_| field.sample(&mut rng)).collect();
            let model = GenericModel::new(field, 4, RMode::Concrete(values))
                .map_err(|e| e.to_string())?;
            let mut sub = Reporter::new();
            verify_codimension(&model, budget, &mut sub).map_err(|e| e.to_string())?;
            let renamed = sub_with_prefix(sub, &format!("draw{draw}/"));
            rep.merge(renamed);
        }
    } else {
        rep.skip(
            format!("codimension/n={n}"),
            "basis computation not attempted above n = 4",
        );
    }
    Ok(rep.into_report())
}

fn sub_with_prefix(sub: Reporter, prefix: &str) -> Reporter {
    let mut renamed = Reporter::new();
    for c in sub.checks() {
        renamed.record(
            format!("{prefix}{}", c.check_id),
            c.status,
            c.details.clone(),
        );
    }
    renamed
}

pub fn verify_campedelli(
    params_path: Option<&Path>,
    prime: u64,
    symbolic_r: bool,
    seed: u64,
    budget: &Budget,
) -> Result<VerificationReport, String> {
    let mut rep = Reporter::new();

    if symbolic_r {
        let model = CampedelliModel::new(Cyclotomic6, SurfaceMode::Symbolic)
            .map_err(|e| e.to_string())?;
        verify_explicit_table(&model, &mut rep).map_err(|e| e.to_string())?;
        verify_surface_structure(&model, &mut rep);
        verify_group_invariance(&model, &mut rep).map_err(|e| e.to_string())?;
        cone_lemma_check(&model, budget, &mut rep).map_err(|e| e.to_string())?;
    }

    let field = PrimeField::new(prime).map_err(|e| e.to_string())?;
    rep.note_prime(prime);
    let mut rng = seeded(seed, 1);
    let params = params_or_random(&field, params_path, &mut rng)?;
    params.record_genericity(&field, &mut rep);
    let model = CampedelliModel::new(field, SurfaceMode::Concrete(params))
        .map_err(|e| e.to_string())?;
    let mut sub = Reporter::new();
    verify_surface_structure(&model, &mut sub);
    verify_ideal_invariance(&model, budget, &mut sub).map_err(|e| e.to_string())?;
    cone_lemma_check(&model, budget, &mut sub).map_err(|e| e.to_string())?;
    hilbert_and_betti_check(&model, budget, "params", &mut sub).map_err(|e| e.to_string())?;
    rep.merge(sub_with_prefix(sub, "concrete/"));

    verify_dimensions(&Rationals, budget, &mut rep).map_err(|e| e.to_string())?;
    Ok(rep.into_report())
}

pub fn verify_hilbert(
    params_path: Option<&Path>,
    extra_prime: Option<u64>,
    seed: u64,
    budget: &Budget,
) -> Result<VerificationReport, String> {
    let mut rep = Reporter::new();
    betti_consistency(&mut rep);

    let mut rng = seeded(seed, 2);
    let mut primes_used: Vec<u64> = vec![103, 31991];
    primes_used.extend(random_sixth_root_primes(&mut rng, 2));
    if let Some(p) = extra_prime {
        if !primes_used.contains(&p) {
            primes_used.push(p);
        }
    }

    // independent draws per prime, dispatched across a worker pool
    let jobs: Vec<(u64, usize, u64)> = primes_used
        .iter()
        .flat_map(|&p| (0..3usize).map(move |k| (p, k, seed)))
        .collect();
    let results: Vec<Result<Reporter, String>> = jobs
        .par_iter()
        .map(|&(p, k, seed)| {
            let field = PrimeField::new(p).map_err(|e| e.to_string())?;
            let mut rng = seeded(seed, 100 + k as u64);
            let params = match params_path {
                Some(path) if k == 0 => load_params(&field, path)?,
                _ => CampedelliParams::random_generic(&field, &mut rng),
            };
            let mut sub = Reporter::new();
            params.record_genericity(&field, &mut sub);
            let model = CampedelliModel::new(field, SurfaceMode::Concrete(params))
                .map_err(|e| e.to_string())?;
            hilbert_and_betti_check(&model, budget, &format!("p{p}/draw{k}"), &mut sub)
                .map_err(|e| e.to_string())?;
            Ok(sub)
        })
        .collect();
    for (job, result) in jobs.iter().zip(results) {
        rep.note_prime(job.0);
        rep.merge(result?);
    }
    Ok(rep.into_report())
}

pub fn verify_fixed_locus(
    g_squared: bool,
    prime: u64,
    seed: u64,
    budget: &Budget,
) -> Result<VerificationReport, String> {
    let element = if g_squared {
        FixedLocusElement::GSquared
    } else {
        FixedLocusElement::GCubed
    };
    let mut rep = Reporter::new();
    point_action_report(&mut rep);

    // Symbolic replays of the coordinate reductions.
    let model =
        CampedelliModel::new(Cyclotomic6, SurfaceMode::Symbolic).map_err(|e| e.to_string())?;
    verify_step_replays(&model, &mut rep).map_err(|e| e.to_string())?;

    if prime % 6 != 1 {
        return Err(format!(
            "--prime must be 1 mod 6 so the scalar candidates exist, got {prime}"
        ));
    }
    let field = PrimeField::new(prime).map_err(|e| e.to_string())?;
    rep.note_prime(prime);
    for draw in 0..2 {
        let mut rng = seeded(seed, 300 + draw);
        let params = CampedelliParams::random_generic(&field, &mut rng);
        let mut sub = Reporter::new();
        params.record_genericity(&field, &mut sub);
        let model = CampedelliModel::new(field, SurfaceMode::Concrete(params))
            .map_err(|e| e.to_string())?;
        fixed_locus_dimension_check(
            &model,
            element,
            budget,
            &format!("{}/draw{draw}", element.label()),
            &mut sub,
        )
        .map_err(|e| e.to_string())?;
        rep.merge(sub);
    }
    Ok(rep.into_report())
}

pub fn verify_smoothness(
    prime: u64,
    max_minors: usize,
    batch: usize,
    seed: u64,
    budget: &Budget,
) -> Result<VerificationReport, String> {
    let field = PrimeField::new(prime).map_err(|e| e.to_string())?;
    let mut rep = Reporter::new();
    rep.note_prime(prime);
    let mut rng = seeded(seed, 7);
    // the probe keeps the two quadratic-section products off, matching
    // the integral model
    let params = loop {
        let mut r: [u64; 8] = std::array::from_fn(|_| field.sample(&mut rng));
        r[6] = 0;
        r[7] = 0;
        if let Ok(p) = CampedelliParams::new(&field, r) {
            if p.genericity(&field)
                .iter()
                .all(|(name, _, ok)| *ok || name.starts_with("r7") || name.starts_with("r8"))
            {
                break p;
            }
        }
    };
    params.record_genericity(&field, &mut rep);
    let model =
        CampedelliModel::new(field, SurfaceMode::Concrete(params)).map_err(|e| e.to_string())?;
    smoothness_probe(&model, &mut rng, budget, max_minors, batch, &mut rep)
        .map_err(|e| e.to_string())?;
    Ok(rep.into_report())
}

pub fn reprint(input: &Path, json: bool) -> Outcome {
    let text = std::fs::read_to_string(input)
        .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
    let report: VerificationReport =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", input.display()))?;
    let rendered = if json {
        report.to_json()
    } else {
        report.to_text()
    };
    Ok((rendered, report.exit_code()))
}

//! The generic serial-unprojection family: for `n >= 2`, a polynomial
//! ring carrying a multilinear form `Q` in `n` variable pairs, one 5x5
//! skew matrix per index pair, and the chain of Pfaffian ideals obtained
//! by adjoining unprojection variables `y_1..y_p`.

use crate::coeff::Field;
use crate::groebner::{Budget, GroebnerError, Ideal};
use crate::pfaffian::SkewMatrix;
use crate::polyring::{Monomial, PolyError, Polynomial, Ring};
use crate::report::Reporter;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum UnprojectionError {
    #[error("n must be at least 2, got {0}")]
    BadN(usize),
    #[error("stage {p} out of range for n = {n}")]
    BadStage { p: usize, n: usize },
    #[error("concrete parameter vector must have 2^n = {expected} entries, got {got}")]
    BadParameterCount { expected: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Whether the `2^n` form coefficients stay symbolic ring variables or are
/// specialized to field values.
#[derive(Debug, Clone)]
pub enum RMode<F: Field> {
    Symbolic,
    Concrete(Vec<F::Elem>),
}

/// The fully constructed family for one `n`: the ambient ring at the top
/// stage, the form `Q`, and the named Pfaffian generators, deduplicated
/// across all matrices.
#[derive(Debug, Clone)]
pub struct GenericModel<F: Field> {
    field: F,
    n: usize,
    rmode: RMode<F>,
    ring: Arc<Ring<F>>,
    q: Polynomial<F>,
    e_xy: Vec<Polynomial<F>>,
    e_zy: Vec<Polynomial<F>>,
    e_y: BTreeMap<(usize, usize), Polynomial<F>>,
}

/// Variable names for the ambient ring of stage `p`: `x`s, `z`s, the
/// bitstring-indexed coefficients (symbolic mode only), then `y_1..y_p`.
fn stage_variables<F: Field>(n: usize, p: usize, rmode: &RMode<F>) -> (Vec<String>, Vec<u32>) {
    let mut vars = Vec::new();
    let mut weights = Vec::new();
    for i in 1..=n {
        vars.push(format!("x{i}"));
        weights.push(1);
    }
    for i in 1..=n {
        vars.push(format!("z{i}"));
        weights.push(1);
    }
    if matches!(rmode, RMode::Symbolic) {
        for bits in 0..1u32 << n {
            vars.push(r_name(n, bits));
            weights.push(1);
        }
    }
    for i in 1..=p {
        vars.push(format!("y{i}"));
        weights.push(n as u32 - 1);
    }
    (vars, weights)
}

fn r_name(n: usize, bits: u32) -> String {
    let mut name = String::with_capacity(n + 1);
    name.push('r');
    for i in 0..n {
        // bit of d_1 is the most significant: bitstrings count up
        // lexicographically from 00..0 to 11..1
        let bit = (bits >> (n - 1 - i)) & 1;
        name.push(if bit == 0 { '0' } else { '1' });
    }
    name
}

impl<F: Field> GenericModel<F> {
    pub fn new(field: F, n: usize, rmode: RMode<F>) -> Result<Self, UnprojectionError> {
        if n < 2 {
            return Err(UnprojectionError::BadN(n));
        }
        if let RMode::Concrete(values) = &rmode {
            if values.len() != 1 << n {
                return Err(UnprojectionError::BadParameterCount {
                    expected: 1 << n,
                    got: values.len(),
                });
            }
        }
        let (vars, weights) = stage_variables(n, n, &rmode);
        let ring = Ring::new(field.clone(), vars, weights)?;
        let q = build_q(&field, n, &rmode, &ring);
        let mut model = GenericModel {
            field,
            n,
            rmode,
            ring,
            q,
            e_xy: Vec::new(),
            e_zy: Vec::new(),
            e_y: BTreeMap::new(),
        };
        model.collect_generators()?;
        Ok(model)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn q(&self) -> &Polynomial<F> {
        &self.q
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.rmode, RMode::Symbolic)
    }

    pub fn x(&self, i: usize) -> Polynomial<F> {
        Polynomial::var_named(&self.ring, &format!("x{i}")).expect("x variable")
    }

    pub fn z(&self, i: usize) -> Polynomial<F> {
        Polynomial::var_named(&self.ring, &format!("z{i}")).expect("z variable")
    }

    pub fn y(&self, i: usize) -> Polynomial<F> {
        Polynomial::var_named(&self.ring, &format!("y{i}")).expect("y variable")
    }

    /// The coefficient variable (symbolic mode) for a bit pattern.
    pub fn r(&self, bits: u32) -> Polynomial<F> {
        Polynomial::var_named(&self.ring, &r_name(self.n, bits)).expect("r variable")
    }

    pub fn e_xy(&self, t: usize) -> &Polynomial<F> {
        &self.e_xy[t - 1]
    }

    pub fn e_zy(&self, t: usize) -> &Polynomial<F> {
        &self.e_zy[t - 1]
    }

    pub fn e_y(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.e_y[&(i, j)]
    }

    /// Second partials of `Q` for the pair `i < j`, in the order
    /// `(xx, xz, zx, zz)` where the first letter differentiates index `i`.
    pub fn second_partials(&self, i: usize, j: usize) -> [Polynomial<F>; 4] {
        let d = |a: &str, s: usize, b: &str, t: usize| {
            self.q
                .derivative_named(&format!("{a}{s}"))
                .and_then(|p| p.derivative_named(&format!("{b}{t}")))
                .expect("partial derivative")
        };
        [
            d("x", i, "x", j),
            d("x", i, "z", j),
            d("z", i, "x", j),
            d("z", i, "z", j),
        ]
    }

    /// The 5x5 skew matrix attached to the pair `i < j`.
    pub fn matrix(&self, i: usize, j: usize) -> SkewMatrix<F> {
        assert!(1 <= i && i < j && j <= self.n, "need 1 <= i < j <= n");
        let [qxx, qxz, qzx, qzz] = self.second_partials(i, j);
        // upper triangle rows: (x_i, z_i, -x_j, -z_j | y_j, Q^zz, -Q^zx | -Q^xz, Q^xx | -y_i)
        let upper = vec![
            self.x(i),
            self.z(i),
            self.x(j).neg(),
            self.z(j).neg(),
            self.y(j),
            qzz,
            qzx.neg(),
            qxz.neg(),
            qxx,
            self.y(i).neg(),
        ];
        SkewMatrix::from_upper(&self.ring, 5, upper)
    }

    /// Collects the submaximal Pfaffians of every matrix, classifying each
    /// by its marker monomial (`x_t*y_t`, `z_t*y_t` or `y_i*y_j`, always
    /// with coefficient one) and asserting that the polynomial attached to
    /// a marker does not depend on which matrix produced it.
    fn collect_generators(&mut self) -> Result<(), UnprojectionError> {
        let (e_xy, e_zy, e_y) =
            collect_pfaffian_generators(&self.ring, self.n, |i, j| self.matrix(i, j));
        self.e_xy = e_xy;
        self.e_zy = e_zy;
        self.e_y = e_y;
        Ok(())
    }

    fn marker_monomial(&self, a: &str, s: usize, b: &str, t: usize) -> Monomial {
        marker_monomial(&self.ring, a, s, b, t)
    }

    /// The ambient ring of stage `p`, containing `y_1..y_p` only.
    pub fn stage_ring(&self, p: usize) -> Result<Arc<Ring<F>>, UnprojectionError> {
        if p > self.n {
            return Err(UnprojectionError::BadStage { p, n: self.n });
        }
        let (vars, weights) = stage_variables(self.n, p, &self.rmode);
        Ok(Ring::new(self.field.clone(), vars, weights)?)
    }

    /// Stage-`p` generator names in canonical order.
    pub fn stage_generator_names(&self, p: usize) -> Vec<String> {
        match p {
            0 => vec!["Q".to_string()],
            _ => {
                let mut names: Vec<String> =
                    (1..=p).map(|t| format!("e_xy_{t}")).collect();
                names.extend((1..=p).map(|t| format!("e_zy_{t}")));
                for i in 1..=p {
                    for j in i + 1..=p {
                        names.push(format!("e_y_{i}{j}"));
                    }
                }
                names
            }
        }
    }

    /// The stage-`p` ideal inside its own ambient ring.
    pub fn ideal(&self, p: usize) -> Result<Ideal<F>, UnprojectionError> {
        let ring = self.stage_ring(p)?;
        let mut gens = Vec::new();
        if p == 0 {
            gens.push(("Q".to_string(), self.q.into_ring(&ring)?));
        } else {
            for t in 1..=p {
                gens.push((format!("e_xy_{t}"), self.e_xy(t).into_ring(&ring)?));
            }
            for t in 1..=p {
                gens.push((format!("e_zy_{t}"), self.e_zy(t).into_ring(&ring)?));
            }
            for i in 1..=p {
                for j in i + 1..=p {
                    gens.push((format!("e_y_{i}{j}"), self.e_y(i, j).into_ring(&ring)?));
                }
            }
        }
        Ok(Ideal::new(&ring, gens))
    }
}

#[derive(Debug, Clone, Copy)]
enum Marker {
    Xy(usize),
    Zy(usize),
    Yy(usize, usize),
}

fn merge<F: Field>(slot: &mut Option<Polynomial<F>>, pf: Polynomial<F>) {
    match slot {
        None => *slot = Some(pf),
        Some(existing) => assert_eq!(
            existing, &pf,
            "generator for a marker must not depend on the matrix"
        ),
    }
}

pub(crate) fn marker_monomial<F: Field>(
    ring: &Arc<Ring<F>>,
    a: &str,
    s: usize,
    b: &str,
    t: usize,
) -> Monomial {
    let mut exps = vec![0u16; ring.num_vars()];
    exps[ring.variable_index(&format!("{a}{s}")).unwrap()] += 1;
    exps[ring.variable_index(&format!("{b}{t}")).unwrap()] += 1;
    Monomial::from_exponents(&exps, ring.weights())
}

fn classify<F: Field>(
    ring: &Arc<Ring<F>>,
    pf: &Polynomial<F>,
    i: usize,
    j: usize,
) -> Option<(Marker, Monomial)> {
    let candidates = [
        (Marker::Xy(i), marker_monomial(ring, "x", i, "y", i)),
        (Marker::Zy(i), marker_monomial(ring, "z", i, "y", i)),
        (Marker::Xy(j), marker_monomial(ring, "x", j, "y", j)),
        (Marker::Zy(j), marker_monomial(ring, "z", j, "y", j)),
        (Marker::Yy(i, j), marker_monomial(ring, "y", i, "y", j)),
    ];
    let mut hit = None;
    for (marker, monomial) in candidates {
        if pf.coefficient_of(&monomial).is_some() {
            assert!(hit.is_none(), "Pfaffian carries two marker monomials");
            hit = Some((marker, monomial));
        }
    }
    hit
}

pub(crate) type NamedGenerators<F> = (
    Vec<Polynomial<F>>,
    Vec<Polynomial<F>>,
    BTreeMap<(usize, usize), Polynomial<F>>,
);

/// Shared generator collection for any family of 5x5 matrices indexed by
/// pairs `1 <= i < j <= n` whose Pfaffians carry the marker monomials.
pub(crate) fn collect_pfaffian_generators<F: Field>(
    ring: &Arc<Ring<F>>,
    n: usize,
    matrix: impl Fn(usize, usize) -> SkewMatrix<F>,
) -> NamedGenerators<F> {
    let one = ring.field().one();
    let mut e_xy: Vec<Option<Polynomial<F>>> = vec![None; n];
    let mut e_zy: Vec<Option<Polynomial<F>>> = vec![None; n];
    let mut e_y: BTreeMap<(usize, usize), Polynomial<F>> = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let m = matrix(i, j);
            let pfaffians = m.submaximal_pfaffians().expect("size five");
            for pf in pfaffians {
                let (slot, marker) = classify(ring, &pf, i, j)
                    .expect("every Pfaffian contains exactly one marker monomial");
                let coef = pf.coefficient_of(&marker).expect("marker present");
                assert!(coef == &one, "marker monomial must carry coefficient one");
                match slot {
                    Marker::Xy(t) => merge(&mut e_xy[t - 1], pf),
                    Marker::Zy(t) => merge(&mut e_zy[t - 1], pf),
                    Marker::Yy(a, b) => match e_y.entry((a, b)) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(pf);
                        }
                        std::collections::btree_map::Entry::Occupied(e) => {
                            assert_eq!(
                                e.get(),
                                &pf,
                                "generator for a marker must not depend on the matrix"
                            );
                        }
                    },
                }
            }
        }
    }
    (
        e_xy.into_iter().map(|p| p.expect("covered")).collect(),
        e_zy.into_iter().map(|p| p.expect("covered")).collect(),
        e_y,
    )
}

fn build_q<F: Field>(
    field: &F,
    n: usize,
    rmode: &RMode<F>,
    ring: &Arc<Ring<F>>,
) -> Polynomial<F> {
    let mut acc = Polynomial::zero(ring);
    for bits in 0..1u32 << n {
        let mut exps = vec![0u16; ring.num_vars()];
        for i in 1..=n {
            let bit = (bits >> (n - i)) & 1;
            let name = if bit == 0 { format!("x{i}") } else { format!("z{i}") };
            exps[ring.variable_index(&name).unwrap()] += 1;
        }
        let coef = match rmode {
            RMode::Symbolic => {
                exps[ring.variable_index(&r_name(n, bits)).unwrap()] += 1;
                field.one()
            }
            RMode::Concrete(values) => values[bits as usize].clone(),
        };
        let m = Monomial::from_exponents(&exps, ring.weights());
        acc = acc.add(&Polynomial::from_terms(ring, vec![(m, coef)]));
    }
    acc
}

/// Expected generator count of the stage-`p` ideal.
pub fn expected_generator_count(p: usize) -> usize {
    match p {
        0 => 1,
        1 => 2,
        _ => 2 * p + p * (p - 1) / 2,
    }
}

/// Structural checks: generator counts, marker uniqueness across every
/// matrix, homogeneity degrees (symbolic mode), and the stage chain.
pub fn verify_structure<F: Field>(model: &GenericModel<F>, rep: &mut Reporter) {
    let n = model.n();
    let tag = |s: &str| format!("structural/n={n}/{s}");

    for p in 0..=n {
        let ideal = model.ideal(p).expect("stage ideal");
        rep.eq_check(
            tag(&format!("count/p={p}")),
            &expected_generator_count(p),
            &ideal.len(),
        );
    }

    // Marker uniqueness: scanning the Pfaffians of every matrix, each
    // marker monomial occurs in exactly one distinct polynomial.
    let mut seen: HashMap<String, Vec<Polynomial<F>>> = HashMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let pfaffians = model.matrix(i, j).submaximal_pfaffians().expect("size 5");
            for pf in pfaffians {
                for t in 1..=n {
                    for kind in ["x", "z"] {
                        let marker = model.marker_monomial(kind, t, "y", t);
                        if pf.coefficient_of(&marker).is_some() {
                            let entry = seen.entry(format!("{kind}{t}y{t}")).or_default();
                            if !entry.contains(&pf) {
                                entry.push(pf.clone());
                            }
                        }
                    }
                }
            }
        }
    }
    let unique = seen.values().all(|polys| polys.len() == 1)
        && seen.len() == 2 * n;
    rep.bool_check(tag("marker-uniqueness"), unique);

    if model.is_symbolic() {
        let q_deg = model.q().weighted_degree();
        rep.bool_check(
            tag("degree/Q"),
            q_deg == Ok(crate::polyring::Degree::Homogeneous(n as u32 + 1)),
        );
        let mut degrees_ok = true;
        for t in 1..=n {
            degrees_ok &= homogeneous_of_degree(model.e_xy(t), n as u32);
            degrees_ok &= homogeneous_of_degree(model.e_zy(t), n as u32);
        }
        for i in 1..=n {
            for j in i + 1..=n {
                degrees_ok &= homogeneous_of_degree(model.e_y(i, j), 2 * (n as u32 - 1));
            }
        }
        rep.bool_check(tag("degree/generators"), degrees_ok);
    }

    // Chain: stage p-1 generators map to the same-named stage-p generators.
    let mut chain_ok = true;
    for p in 1..=n {
        let prev = model.ideal(p - 1).expect("stage ideal");
        let cur = model.ideal(p).expect("stage ideal");
        for (name, g) in prev.generators() {
            if name == "Q" {
                continue; // stage 0 lists the form itself
            }
            let lifted = g.into_ring(cur.ring()).expect("stage rings are nested");
            chain_ok &= cur.generator(name) == Some(&lifted);
        }
    }
    rep.bool_check(tag("stage-chain"), chain_ok);
}

fn homogeneous_of_degree<F: Field>(f: &Polynomial<F>, d: u32) -> bool {
    f.weighted_degree() == Ok(crate::polyring::Degree::Homogeneous(d))
}

/// Exact polynomial identities: the four-partial decomposition of `Q`, the
/// pairwise Euler relation through the generators, both unprojection
/// syzygies, and the matrix-kernel identity.
pub fn verify_identities<F: Field>(model: &GenericModel<F>, rep: &mut Reporter) {
    let n = model.n();
    let tag = |s: &str| format!("identities/n={n}/{s}");

    let mut decomposition = true;
    for i in 1..=n {
        for j in i + 1..=n {
            let [qxx, qxz, qzx, qzz] = model.second_partials(i, j);
            let rebuilt = model
                .x(i)
                .mul(&model.x(j))
                .mul(&qxx)
                .add(&model.x(i).mul(&model.z(j)).mul(&qxz))
                .add(&model.z(i).mul(&model.x(j)).mul(&qzx))
                .add(&model.z(i).mul(&model.z(j)).mul(&qzz));
            decomposition &= &rebuilt == model.q();
        }
    }
    rep.bool_check(tag("q-decomposition"), decomposition);

    // Per-pair linearity of Q, both directly and through the generators.
    let mut pair_linear = true;
    for t in 1..=n {
        let direct = model
            .x(t)
            .mul(&model.q().derivative_named(&format!("x{t}")).expect("x var"))
            .add(&model.z(t).mul(&model.q().derivative_named(&format!("z{t}")).expect("z var")));
        pair_linear &= &direct == model.q();
    }
    rep.bool_check(tag("pair-euler"), pair_linear);

    let mut euler = true;
    for t in 1..=n {
        let lhs = model
            .z(t)
            .mul(model.e_xy(t))
            .sub(&model.x(t).mul(model.e_zy(t)));
        if &lhs != model.q() {
            euler = false;
            let mut details = std::collections::BTreeMap::new();
            details.insert("index".to_string(), t.to_string());
            rep.fail(tag(&format!("euler/t={t}")), details);
        }
    }
    if euler {
        rep.pass(tag("euler"));
    }

    let mut syzygy = true;
    for i in 1..=n {
        for j in i + 1..=n {
            let [qxx, qxz, qzx, qzz] = model.second_partials(i, j);
            let a_lhs = model
                .y(i)
                .mul(model.e_xy(j))
                .sub(&model.x(j).mul(model.e_y(i, j)));
            let a_rhs = qxz.mul(model.e_xy(i)).add(&qzz.mul(model.e_zy(i)));
            let b_lhs = model
                .z(j)
                .mul(model.e_y(i, j))
                .sub(&model.y(i).mul(model.e_zy(j)));
            let b_rhs = qxx.mul(model.e_xy(i)).add(&qzx.mul(model.e_zy(i)));
            if a_lhs != a_rhs || b_lhs != b_rhs {
                syzygy = false;
                let mut details = std::collections::BTreeMap::new();
                details.insert("pair".to_string(), format!("({i},{j})"));
                rep.fail(tag(&format!("syzygy/{i}{j}")), details);
            }
        }
    }
    if syzygy {
        rep.pass(tag("syzygy"));
    }

    let mut kernel = true;
    for i in 1..=n {
        for j in i + 1..=n {
            let m = model.matrix(i, j);
            let v = m.signed_pfaffian_vector().expect("size five");
            if !m.apply(&v).iter().all(|p| p.is_zero()) {
                kernel = false;
                let mut details = std::collections::BTreeMap::new();
                details.insert("pair".to_string(), format!("({i},{j})"));
                rep.fail(tag(&format!("pfaffian-kernel/{i}{j}")), details);
            }
        }
    }
    if kernel {
        rep.pass(tag("pfaffian-kernel"));
    }
}

/// The degeneration check: kill `x_p, z_p, y_p` and every mixed
/// coefficient variable, compare the generator images against their
/// closed forms, and verify the residual monomial ideal has dimension
/// `2n - 2`. Symbolic mode only.
pub fn verify_specialization<F: Field>(
    model: &GenericModel<F>,
    rep: &mut Reporter,
) -> Result<(), UnprojectionError> {
    assert!(model.is_symbolic(), "degeneration check needs symbolic coefficients");
    let n = model.n();
    for p in 1..=n {
        let tag = |s: &str| format!("specialization/n={n}/p={p}/{s}");
        let ring = model.stage_ring(p)?;
        let ideal = model.ideal(p)?;
        let zero = Polynomial::zero(&ring);
        let mut killed: Vec<String> = vec![format!("x{p}"), format!("z{p}"), format!("y{p}")];
        for bits in 1..(1u32 << n) - 1 {
            killed.push(r_name(n, bits));
        }
        let images: HashMap<String, Polynomial<F>> = killed
            .iter()
            .map(|name| (name.clone(), zero.clone()))
            .collect();
        let eta = |f: &Polynomial<F>| f.substitute(&images, &ring).expect("specialize");

        let var = |name: String| Polynomial::var_named(&ring, &name).expect("stage variable");
        let x = |i: usize| var(format!("x{i}"));
        let z = |i: usize| var(format!("z{i}"));
        let yv = |i: usize| var(format!("y{i}"));
        let r_lo = var(r_name(n, 0));
        let r_hi = var(r_name(n, (1 << n) - 1));
        let range_product = |make: &dyn Fn(usize) -> Polynomial<F>, skip: &[usize]| {
            (1..=n)
                .filter(|t| !skip.contains(t))
                .fold(Polynomial::one(&ring), |acc, t| acc.mul(&make(t)))
        };

        let mut forms_ok = true;
        let mut monomial_gens: Vec<Monomial> = Vec::new();
        let push_gen = |f: &Polynomial<F>, monomial_gens: &mut Vec<Monomial>| {
            if f.is_zero() {
                return;
            }
            assert_eq!(f.num_terms(), 1, "specialized generator must be a monomial");
            monomial_gens.push(f.terms()[0].0.clone());
        };

        for (name, g) in ideal.generators() {
            let image = eta(g);
            let expected = match parse_generator_name(name) {
                GenName::Xy(t) if t < p => x(t).mul(&yv(t)),
                GenName::Zy(t) if t < p => z(t).mul(&yv(t)),
                GenName::Yy(i, j) if j < p => yv(i).mul(&yv(j)),
                GenName::Yy(i, j) => {
                    debug_assert_eq!(j, p);
                    r_lo.mul(&r_hi).mul(&range_product(&|t| x(t).mul(&z(t)), &[i, p]))
                }
                GenName::Xy(_) => r_hi.mul(&range_product(&z, &[p])),
                GenName::Zy(_) => r_lo.mul(&range_product(&x, &[p])).neg(),
                GenName::Q => unreachable!("stage >= 1"),
            };
            if image != expected {
                forms_ok = false;
                let mut details = std::collections::BTreeMap::new();
                details.insert("generator".into(), name.clone());
                details.insert("expected".into(), expected.to_string());
                details.insert("computed".into(), image.to_string());
                rep.fail(tag(&format!("form/{name}")), details);
            }
            push_gen(&image, &mut monomial_gens);
        }
        if forms_ok {
            rep.pass(tag("closed-forms"));
        }

        for name in killed {
            push_gen(&var(name), &mut monomial_gens);
        }
        let dim = crate::groebner::monomial_dimension(&monomial_gens, ring.num_vars());
        rep.eq_check(tag("residual-dimension"), &(2 * n as isize - 2), &dim);
    }
    Ok(())
}

enum GenName {
    Q,
    Xy(usize),
    Zy(usize),
    Yy(usize, usize),
}

fn parse_generator_name(name: &str) -> GenName {
    if name == "Q" {
        return GenName::Q;
    }
    if let Some(t) = name.strip_prefix("e_xy_") {
        return GenName::Xy(t.parse().expect("index"));
    }
    if let Some(t) = name.strip_prefix("e_zy_") {
        return GenName::Zy(t.parse().expect("index"));
    }
    let ij = name.strip_prefix("e_y_").expect("generator name");
    let digits: Vec<usize> = ij
        .chars()
        .map(|c| c.to_digit(10).expect("digit") as usize)
        .collect();
    GenName::Yy(digits[0], digits[1])
}

/// Gröbner-verified codimension ladder: at every stage the quotient drops
/// by exactly `p + 1`.
pub fn verify_codimension<F: Field>(
    model: &GenericModel<F>,
    budget: &Budget,
    rep: &mut Reporter,
) -> Result<(), UnprojectionError> {
    let n = model.n();
    let mode = if model.is_symbolic() { "symbolic" } else { "concrete" };
    for p in 0..=n {
        let tag = format!("codimension/n={n}/{mode}/p={p}");
        let ideal = model.ideal(p)?;
        let ambient = ideal.ring().num_vars() as isize;
        match ideal.dimension(budget) {
            Ok(dim) => rep.eq_check(tag, &(ambient - (p as isize + 1)), &dim),
            Err(e @ GroebnerError::Resource { .. }) => rep.resource_limit(tag, e.to_string()),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

/// Dimension-drop test for a candidate regular sequence on `ring/ideal`.
pub fn regular_sequence_check<F: Field>(
    ideal: &Ideal<F>,
    sequence: &[&str],
    budget: &Budget,
    rep: &mut Reporter,
    tag: &str,
) -> Result<(), UnprojectionError> {
    let extra: Vec<(String, Polynomial<F>)> = sequence
        .iter()
        .map(|name| {
            Polynomial::var_named(ideal.ring(), name).map(|p| (format!("seq_{name}"), p))
        })
        .collect::<Result<_, _>>()?;
    let extended = ideal.extended(extra);
    let dims = ideal
        .dimension(budget)
        .and_then(|base| extended.dimension(budget).map(|dim| (base, dim)));
    match dims {
        Ok((base, dim)) => rep.eq_check(tag, &(base - sequence.len() as isize), &dim),
        Err(e @ GroebnerError::Resource { .. }) => rep.resource_limit(tag, e.to_string()),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

/// Named listing of stage generators, for the construction subcommand.
#[derive(Debug, Clone, serde::Serialize)]
pub struct GeneratorInfo {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    pub text: String,
}

pub fn generator_listing<F: Field>(
    model: &GenericModel<F>,
    p: usize,
) -> Result<Vec<GeneratorInfo>, UnprojectionError> {
    let ideal = model.ideal(p)?;
    Ok(ideal
        .generators()
        .iter()
        .map(|(name, g)| GeneratorInfo {
            name: name.clone(),
            degree: match g.weighted_degree() {
                Ok(crate::polyring::Degree::Homogeneous(d)) => Some(d),
                _ => None,
            },
            text: g.to_string(),
        })
        .collect())
}

#[cfg(test)]
mod tests;

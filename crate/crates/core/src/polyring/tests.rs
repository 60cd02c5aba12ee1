use super::poly::Degree;
use super::*;
use crate::coeff::{Cyclotomic6, Field, PrimeField, Rationals};
use proptest::prelude::*;
use std::collections::HashMap;
use std::sync::Arc;

fn qring(vars: &[&str], weights: &[u32]) -> Arc<Ring<Rationals>> {
    Ring::new(
        Rationals,
        vars.iter().map(|s| s.to_string()).collect(),
        weights.to_vec(),
    )
    .unwrap()
}

fn p(ring: &Arc<Ring<Rationals>>, text: &str) -> Polynomial<Rationals> {
    parse_poly(text, ring).unwrap()
}

#[test]
fn construction_validates() {
    assert!(matches!(
        Ring::new(Rationals, vec!["x".into(), "x".into()], vec![1, 1]),
        Err(PolyError::DuplicateVariable(_))
    ));
    assert!(matches!(
        Ring::new(Rationals, vec!["x".into()], vec![0]),
        Err(PolyError::ZeroWeight(_))
    ));
}

#[test]
fn product_of_conjugates() {
    let r = qring(&["x1", "z1"], &[1, 1]);
    let lhs = p(&r, "x1+z1").mul(&p(&r, "x1-z1"));
    assert_eq!(lhs, p(&r, "x1^2 - z1^2"));
}

#[test]
fn additive_identity() {
    let r = qring(&["x1", "z1"], &[1, 1]);
    let f = p(&r, "3*x1^2*z1 - 1/2*z1");
    assert_eq!(f.add(&Polynomial::zero(&r)), f);
}

#[test]
fn derivative_examples() {
    let r = qring(&["x1", "z2"], &[1, 1]);
    let f = p(&r, "x1^2*z2");
    assert_eq!(f.derivative_named("x1").unwrap(), p(&r, "2*x1*z2"));
    assert!(f.derivative_named("nope").is_err());
}

#[test]
fn derivative_symmetry() {
    let r = qring(&["x1", "z1", "y1"], &[1, 1, 2]);
    let f = p(&r, "x1^3*z1^2*y1 - 7*x1*y1^2 + z1^4 + 5");
    let uv = f.derivative_named("x1").unwrap().derivative_named("z1").unwrap();
    let vu = f.derivative_named("z1").unwrap().derivative_named("x1").unwrap();
    assert_eq!(uv, vu);
}

#[test]
fn derivative_drops_weight() {
    let r = qring(&["x1", "y1"], &[1, 3]);
    let f = p(&r, "x1^2*y1 + x1^5");
    assert_eq!(f.weighted_degree().unwrap(), Degree::Homogeneous(5));
    let d = f.derivative_named("y1").unwrap();
    assert_eq!(d.weighted_degree().unwrap(), Degree::Homogeneous(2));
}

#[test]
fn substitution_examples() {
    let r = qring(&["x1", "y1"], &[1, 2]);
    let f = p(&r, "x1*y1");
    let mut images = HashMap::new();
    images.insert("x1".to_string(), Polynomial::zero(&r));
    assert!(f.substitute(&images, &r).unwrap().is_zero());
}

#[test]
fn substitution_changes_ring() {
    let src = qring(&["x1", "x2"], &[1, 1]);
    let dst = qring(&["x2", "t"], &[1, 1]);
    let f = p(&src, "x1^2 + x2");
    let mut images = HashMap::new();
    images.insert("x1".to_string(), p(&dst, "t - x2"));
    let g = f.substitute(&images, &dst).unwrap();
    assert_eq!(g, p(&dst, "t^2 - 2*t*x2 + x2^2 + x2"));
    // Unassigned variable missing from the target is an error.
    let h = p(&src, "x1 + x2");
    let mut bad = HashMap::new();
    bad.insert("x2".to_string(), p(&dst, "t"));
    let dst2 = qring(&["t"], &[1]);
    let mut bad2 = HashMap::new();
    bad2.insert("x2".to_string(), p(&dst2, "t"));
    assert!(h.substitute(&bad2, &dst2).is_err());
    drop(bad);
}

#[test]
fn degree_reporting() {
    let r = qring(&["x1", "y1"], &[1, 2]);
    assert!(matches!(
        Polynomial::<Rationals>::zero(&r).weighted_degree(),
        Err(PolyError::ZeroDegree)
    ));
    assert_eq!(
        p(&r, "x1^2 + y1").weighted_degree().unwrap(),
        Degree::Homogeneous(2)
    );
    assert_eq!(
        p(&r, "x1 + y1").weighted_degree().unwrap(),
        Degree::Inhomogeneous
    );
}

#[test]
fn parse_format_round_trip() {
    let r = qring(&["x1", "x2", "z1", "r01"], &[1, 1, 1, 1]);
    for text in [
        "x1*z1 + r01*x2 + 3*z1",
        "-3*x1^2*z1",
        "1/2*x1 - 2/3",
        "0",
        "7",
        "x1^11*x2*z1^2 - x1 + r01^2",
    ] {
        let f = p(&r, text);
        let again = p(&r, &f.to_string());
        assert_eq!(f, again, "round trip failed for `{text}` -> `{f}`");
    }
}

#[test]
fn parse_cyclotomic_coefficients() {
    let ring = Ring::new(Cyclotomic6, vec!["x1".into()], vec![1]).unwrap();
    let f = parse_poly("(1+2*w)*x1 - (0+1*w)", &ring).unwrap();
    let w = Cyclotomic6.primitive_sixth_root().unwrap();
    let x = Polynomial::variable(&ring, 0);
    let one_plus_2w = Cyclotomic6.add(&Cyclotomic6.one(), &Cyclotomic6.add(&w, &w));
    let expected = x.scale(&one_plus_2w).sub(&Polynomial::constant(&ring, w));
    assert_eq!(f, expected);
    let again = parse_poly(&f.to_string(), &ring).unwrap();
    assert_eq!(f, again, "cyclotomic round trip: {f}");
}

#[test]
fn parse_rejects_unknown_variable_and_syntax() {
    let r = qring(&["x1"], &[1]);
    assert!(matches!(
        parse_poly("x1 + q3", &r),
        Err(PolyError::UnknownVariable(name)) if name == "q3"
    ));
    assert!(matches!(
        parse_poly("x1 + ", &r),
        Err(PolyError::Syntax { .. })
    ));
    assert!(matches!(
        parse_poly("x1 * * x1", &r),
        Err(PolyError::Syntax { .. })
    ));
}

#[test]
fn prime_field_polynomials_display_canonically() {
    let f = PrimeField::new(7).unwrap();
    let ring = Ring::new(f, vec!["x1".into()], vec![1]).unwrap();
    let g = parse_poly("-x1 + 10", &ring).unwrap();
    assert_eq!(g.to_string(), "6*x1 + 3");
}

fn arb_poly(nterms: usize) -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
    proptest::collection::vec(
        (proptest::collection::vec(0u16..4, 3), -20i64..20),
        0..nterms,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_over_prime_field(a in arb_poly(6), b in arb_poly(6), c in arb_poly(6)) {
        let f = PrimeField::new(31991).unwrap();
        let ring = Ring::new(f, vec!["x".into(), "y".into(), "z".into()], vec![1, 1, 2]).unwrap();
        let build = |data: &Vec<(Vec<u16>, i64)>| {
            let terms = data
                .iter()
                .map(|(e, c)| (Monomial::from_exponents(e, ring.weights()), f.from_i64(*c)))
                .collect();
            Polynomial::from_terms(&ring, terms)
        };
        let (pa, pb, pc) = (build(&a), build(&b), build(&c));
        // associativity, commutativity, distributivity
        prop_assert_eq!(pa.mul(&pb).mul(&pc), pa.mul(&pb.mul(&pc)));
        prop_assert_eq!(pa.mul(&pb), pb.mul(&pa));
        prop_assert_eq!(pa.add(&pb).mul(&pc), pa.mul(&pc).add(&pb.mul(&pc)));
        prop_assert_eq!(pa.sub(&pa), Polynomial::zero(&ring));
    }

    #[test]
    fn product_degree_adds_and_evaluation_agrees(a in arb_poly(5), b in arb_poly(5), pt in proptest::collection::vec(0i64..31, 3)) {
        let f = PrimeField::new(31).unwrap();
        let ring = Ring::new(f, vec!["x".into(), "y".into(), "z".into()], vec![1, 2, 1]).unwrap();
        let build = |data: &Vec<(Vec<u16>, i64)>| {
            let terms = data
                .iter()
                .map(|(e, c)| (Monomial::from_exponents(e, ring.weights()), f.from_i64(*c)))
                .collect();
            Polynomial::from_terms(&ring, terms)
        };
        let (pa, pb) = (build(&a), build(&b));
        let prod = pa.mul(&pb);
        // evaluation homomorphism as an independent oracle
        let point: Vec<u64> = pt.iter().map(|&v| f.from_i64(v)).collect();
        prop_assert_eq!(prod.evaluate(&point), f.mul(&pa.evaluate(&point), &pb.evaluate(&point)));
        if let (Some(da), Some(db), Some(dp)) = (pa.max_degree(), pb.max_degree(), prod.max_degree()) {
            // over a field the top weighted-homogeneous parts cannot cancel
            prop_assert_eq!(dp, da + db);
        }
    }

    #[test]
    fn mixed_partials_commute(a in arb_poly(8)) {
        let f = PrimeField::new(31991).unwrap();
        let ring = Ring::new(f, vec!["x".into(), "y".into(), "z".into()], vec![1, 1, 2]).unwrap();
        let terms = a
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e, ring.weights()), f.from_i64(*c)))
            .collect();
        let p = Polynomial::from_terms(&ring, terms);
        for u in 0..3 {
            for v in 0..3 {
                prop_assert_eq!(
                    p.derivative(u).derivative(v),
                    p.derivative(v).derivative(u)
                );
            }
        }
    }

    #[test]
    fn substitution_is_ring_homomorphism(a in arb_poly(4), b in arb_poly(4)) {
        let f = PrimeField::new(103).unwrap();
        let ring = Ring::new(f, vec!["x".into(), "y".into(), "z".into()], vec![1, 1, 1]).unwrap();
        let build = |data: &Vec<(Vec<u16>, i64)>| {
            let terms = data
                .iter()
                .map(|(e, c)| (Monomial::from_exponents(e, ring.weights()), f.from_i64(*c)))
                .collect();
            Polynomial::from_terms(&ring, terms)
        };
        let (pa, pb) = (build(&a), build(&b));
        let mut images = HashMap::new();
        images.insert("x".to_string(), parse_poly("y + 2*z", &ring).unwrap());
        images.insert("y".to_string(), parse_poly("z^2 - 1", &ring).unwrap());
        let lhs = pa.mul(&pb).substitute(&images, &ring).unwrap();
        let rhs = pa.substitute(&images, &ring).unwrap().mul(&pb.substitute(&images, &ring).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

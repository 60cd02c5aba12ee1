use super::*;
use crate::coeff::{PrimeField, Rationals};
use crate::groebner::Budget;
use crate::polyring::parse_poly;
use crate::report::Reporter;

fn model_q(n: usize) -> GenericModel<Rationals> {
    GenericModel::new(Rationals, n, RMode::Symbolic).unwrap()
}

#[test]
fn ambient_ring_shapes() {
    let m2 = model_q(2);
    assert_eq!(m2.ring().num_vars(), 10); // 2 + 2 + 4 + 2
    assert_eq!(
        m2.ring().variables(),
        &["x1", "x2", "z1", "z2", "r00", "r01", "r10", "r11", "y1", "y2"]
    );
    // y-weight is n - 1
    let y_idx = m2.ring().variable_index("y1").unwrap();
    assert_eq!(m2.ring().weights()[y_idx], 1);

    let m4 = model_q(4);
    assert_eq!(m4.ring().num_vars(), 28); // 4 + 4 + 16 + 4
    let y_idx = m4.ring().variable_index("y3").unwrap();
    assert_eq!(m4.ring().weights()[y_idx], 3);

    assert!(matches!(
        GenericModel::new(Rationals, 1, RMode::<Rationals>::Symbolic),
        Err(UnprojectionError::BadN(1))
    ));
}

#[test]
fn q_for_small_n() {
    let m = model_q(2);
    let expected = parse_poly("r00*x1*x2 + r01*x1*z2 + r10*z1*x2 + r11*z1*z2", m.ring()).unwrap();
    assert_eq!(m.q(), &expected);

    let m3 = model_q(3);
    assert_eq!(m3.q().num_terms(), 8);
    assert_eq!(
        m3.q().weighted_degree().unwrap(),
        crate::polyring::Degree::Homogeneous(4)
    );
    for n in 2..=5 {
        let m = model_q(n);
        assert_eq!(
            m.q().weighted_degree().unwrap(),
            crate::polyring::Degree::Homogeneous(n as u32 + 1)
        );
    }
}

#[test]
fn derivative_of_q_matches_hand_expansion() {
    // Expanding the four-term Q for n = 2 and differentiating by hand.
    let m = model_q(2);
    let dz1 = m.q().derivative_named("z1").unwrap();
    assert_eq!(dz1, parse_poly("r10*x2 + r11*z2", m.ring()).unwrap());
}

#[test]
fn second_partials_for_n2() {
    let m = model_q(2);
    let [qxx, qxz, qzx, qzz] = m.second_partials(1, 2);
    assert_eq!(qxx, parse_poly("r00", m.ring()).unwrap());
    assert_eq!(qxz, parse_poly("r01", m.ring()).unwrap());
    assert_eq!(qzx, parse_poly("r10", m.ring()).unwrap());
    assert_eq!(qzz, parse_poly("r11", m.ring()).unwrap());
}

#[test]
fn matrix_entries_as_displayed() {
    let m = model_q(3);
    let mat = m.matrix(1, 2);
    assert_eq!(mat.entry(0, 1), m.x(1));
    assert_eq!(mat.entry(0, 2), m.z(1));
    assert_eq!(mat.entry(0, 3), m.x(2).neg());
    assert_eq!(mat.entry(0, 4), m.z(2).neg());
    assert_eq!(mat.entry(1, 2), m.y(2));
    let [qxx, qxz, qzx, qzz] = m.second_partials(1, 2);
    assert_eq!(mat.entry(1, 3), qzz);
    assert_eq!(mat.entry(1, 4), qzx.neg());
    assert_eq!(mat.entry(2, 3), qxz.neg());
    assert_eq!(mat.entry(2, 4), qxx);
    assert_eq!(mat.entry(3, 4), m.y(1).neg());
}

#[test]
fn named_generators_for_n2() {
    let m = model_q(2);
    assert_eq!(
        m.e_xy(1),
        &parse_poly("x1*y1 + r10*x2 + r11*z2", m.ring()).unwrap()
    );
    assert_eq!(
        m.e_zy(1),
        &parse_poly("z1*y1 - r00*x2 - r01*z2", m.ring()).unwrap()
    );
    assert_eq!(
        m.e_y(1, 2),
        &parse_poly("y1*y2 - r01*r10 + r00*r11", m.ring()).unwrap()
    );
    // The first-stage ideal is exactly the pair involving x1*y1 and z1*y1.
    let i1 = m.ideal(1).unwrap();
    assert_eq!(i1.len(), 2);
    let names: Vec<&str> = i1.generators().iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, vec!["e_xy_1", "e_zy_1"]);
}

#[test]
fn generator_counts() {
    for n in 2..=5 {
        let m = model_q(n);
        for p in 0..=n {
            assert_eq!(
                m.ideal(p).unwrap().len(),
                expected_generator_count(p),
                "n={n} p={p}"
            );
        }
    }
    assert_eq!(expected_generator_count(4), 14);
    assert_eq!(model_q(3).ideal(2).unwrap().len(), 5);
}

#[test]
fn stage_ideal_lives_in_stage_ring() {
    let m = model_q(3);
    let i2 = m.ideal(2).unwrap();
    assert_eq!(i2.ring().num_vars(), 3 + 3 + 8 + 2);
    assert!(i2.ring().variable_index("y3").is_none());
}

#[test]
fn structure_and_identities_small_n() {
    for n in 2..=3 {
        let m = model_q(n);
        let mut rep = Reporter::new();
        verify_structure(&m, &mut rep);
        verify_identities(&m, &mut rep);
        assert!(rep.all_passed(), "n={n}: {:?}", rep.checks());
    }
}

#[test]
fn specialization_closed_forms() {
    let m = model_q(3);
    let mut rep = Reporter::new();
    verify_specialization(&m, &mut rep).unwrap();
    assert!(rep.all_passed(), "{:?}", rep.checks());

    // Spot checks of the displayed images.
    let ring = m.stage_ring(3).unwrap();
    let zero = Polynomial::zero(&ring);
    let mut images = HashMap::new();
    for name in ["x3", "z3", "y3", "r001", "r010", "r011", "r100", "r101", "r110"] {
        images.insert(name.to_string(), zero.clone());
    }
    let image = m
        .e_zy(3)
        .into_ring(&ring)
        .unwrap()
        .substitute(&images, &ring)
        .unwrap();
    assert_eq!(image, parse_poly("-r000*x1*x2", &ring).unwrap());
    let image = m
        .e_xy(1)
        .into_ring(&ring)
        .unwrap()
        .substitute(&images, &ring)
        .unwrap();
    assert_eq!(image, parse_poly("x1*y1", &ring).unwrap());
}

#[test]
fn codimension_ladder_n2_symbolic_mod_p() {
    let field = PrimeField::new(31991).unwrap();
    let m = GenericModel::new(field, 2, RMode::Symbolic).unwrap();
    let mut rep = Reporter::new();
    verify_codimension(&m, &Budget::default(), &mut rep).unwrap();
    assert!(rep.all_passed(), "{:?}", rep.checks());
}

#[test]
fn codimension_concrete_r() {
    let field = PrimeField::new(31991).unwrap();
    let values: Vec<u64> = (0..4).map(|k| field.from_i64(3 * k + 1)).collect();
    let m = GenericModel::new(field, 2, RMode::Concrete(values)).unwrap();
    assert_eq!(m.ring().num_vars(), 6);
    let mut rep = Reporter::new();
    verify_codimension(&m, &Budget::default(), &mut rep).unwrap();
    assert!(rep.all_passed(), "{:?}", rep.checks());
}

#[test]
fn regular_sequences_smallest_case() {
    let field = PrimeField::new(31991).unwrap();
    let m = GenericModel::new(field, 2, RMode::Symbolic).unwrap();
    let budget = Budget::default();
    let mut rep = Reporter::new();
    // top stage: the final variable pair drops the dimension by two
    regular_sequence_check(&m.ideal(2).unwrap(), &["x2", "z2"], &budget, &mut rep, "regseq/xz")
        .unwrap();
    // hypersurface stage: a pair of x-variables drops by two
    regular_sequence_check(&m.ideal(0).unwrap(), &["x1", "x2"], &budget, &mut rep, "regseq/xx")
        .unwrap();
    assert!(rep.all_passed(), "{:?}", rep.checks());
}

#[test]
fn q_round_trips_through_text() {
    let m = model_q(3);
    assert_eq!(m.q().num_terms(), 8);
    let again = parse_poly(&m.q().to_string(), m.ring()).unwrap();
    assert_eq!(&again, m.q());
}

#[test]
fn euler_combination_has_zero_normal_form() {
    // Sharper than membership: the combination is the form itself, so its
    // normal form against the stage basis vanishes.
    let field = PrimeField::new(31991).unwrap();
    let m = GenericModel::new(field, 2, RMode::Symbolic).unwrap();
    let ideal = m.ideal(2).unwrap();
    let basis = ideal.basis(&Budget::default()).unwrap();
    let ring = ideal.ring();
    for t in 1..=2usize {
        let combo = Polynomial::var_named(ring, &format!("z{t}"))
            .unwrap()
            .mul(ideal.generator(&format!("e_xy_{t}")).unwrap())
            .sub(
                &Polynomial::var_named(ring, &format!("x{t}"))
                    .unwrap()
                    .mul(ideal.generator(&format!("e_zy_{t}")).unwrap()),
            )
            .sub(&m.q().into_ring(ring).unwrap());
        assert!(combo.is_zero(), "exact identity");
        assert!(basis.normal_form(&combo).is_zero());
        // and the form itself is a member
        assert!(basis.contains(&m.q().into_ring(ring).unwrap()));
    }
}

#[test]
fn listing_carries_names_and_degrees() {
    let m = model_q(2);
    let listing = generator_listing(&m, 2).unwrap();
    assert_eq!(listing.len(), 5);
    assert_eq!(listing[0].name, "e_xy_1");
    assert_eq!(listing[0].degree, Some(2));
    let ey = listing.iter().find(|g| g.name == "e_y_12").unwrap();
    assert_eq!(ey.degree, Some(2));
}

//! The order-six linear action on the ambient ring and the invariance of
//! the constructed ideals under it.

use super::{CampedelliError, CampedelliModel};
use crate::coeff::Field;
use crate::groebner::Budget;
use crate::polyring::Polynomial;
use crate::report::Reporter;
use std::collections::{BTreeMap, HashMap};

/// Image of each variable under the generator `g`: the first three `x`
/// (and `y`) variables cycle with a sign, the `z` variables cycle without,
/// and the fourth coordinates pick up the sign alone.
fn generator_images<F: Field>(model: &CampedelliModel<F>) -> HashMap<String, Polynomial<F>> {
    let mut images = HashMap::new();
    let cycle = |i: usize| i % 3 + 1; // 1->2, 2->3, 3->1
    for i in 1..=3 {
        images.insert(format!("x{i}"), model.x(cycle(i)).neg());
        images.insert(format!("z{i}"), model.z(cycle(i)));
        images.insert(format!("y{i}"), model.y(cycle(i)).neg());
    }
    images.insert("x4".to_string(), model.x(4).neg());
    images.insert("z4".to_string(), model.z(4));
    images.insert("y4".to_string(), model.y(4).neg());
    images
}

/// Applies `g^k` to a polynomial, `k` normalized mod 6.
pub fn apply_group<F: Field>(
    model: &CampedelliModel<F>,
    f: &Polynomial<F>,
    k: i64,
) -> Polynomial<F> {
    let images = generator_images(model);
    let mut out = f.clone();
    for _ in 0..k.rem_euclid(6) {
        out = out
            .substitute(&images, model.ring())
            .expect("action stays in the ring");
    }
    out
}

/// The full invariance suite: invariance of the quartic and of the basis
/// quartics, the generator mapping table, eigenform eigenvalues, section
/// eigenvalues, and the order of the action.
pub fn verify_group_invariance<F: Field>(
    model: &CampedelliModel<F>,
    rep: &mut Reporter,
) -> Result<(), CampedelliError> {
    let g = |f: &Polynomial<F>| apply_group(model, f, 1);

    rep.bool_check("invariance/quartic", &g(model.q_s()) == model.q_s());

    let mut f_ok = true;
    for f in model.f_basis() {
        f_ok &= &g(f) == f;
    }
    rep.bool_check("invariance/quartic-basis", f_ok);

    // Generator mapping table: indices 1..3 advance cyclically, the
    // fourth is fixed up to sign, and the mixed pairs rotate.
    let cycle = |i: usize| i % 3 + 1;
    let mut table_ok = true;
    let mut failed: Vec<String> = Vec::new();
    let mut expect = |label: String, lhs: Polynomial<F>, rhs: Polynomial<F>| {
        if lhs != rhs {
            table_ok = false;
            failed.push(label);
        }
    };
    for i in 1..=3usize {
        let t = cycle(i);
        expect(
            format!("g e_sxy_{i} = e_sxy_{t}"),
            g(model.e_xy(i)),
            model.e_xy(t).clone(),
        );
        expect(
            format!("g e_szy_{i} = -e_szy_{t}"),
            g(model.e_zy(i)),
            model.e_zy(t).neg(),
        );
        expect(
            format!("g e_sy_{i}4 = e_sy_{t}4"),
            g(model.e_y(i, 4)),
            model.e_y(t, 4).clone(),
        );
    }
    expect(
        "g e_sxy_4 = e_sxy_4".to_string(),
        g(model.e_xy(4)),
        model.e_xy(4).clone(),
    );
    expect(
        "g e_szy_4 = -e_szy_4".to_string(),
        g(model.e_zy(4)),
        model.e_zy(4).neg(),
    );
    expect(
        "g e_sy_12 = e_sy_23".to_string(),
        g(model.e_y(1, 2)),
        model.e_y(2, 3).clone(),
    );
    expect(
        "g e_sy_13 = e_sy_12".to_string(),
        g(model.e_y(1, 3)),
        model.e_y(1, 2).clone(),
    );
    expect(
        "g e_sy_23 = e_sy_13".to_string(),
        g(model.e_y(2, 3)),
        model.e_y(1, 3).clone(),
    );
    if table_ok {
        rep.pass("invariance/generator-table");
    } else {
        let mut details = BTreeMap::new();
        details.insert("failed".to_string(), failed.join("; "));
        rep.fail("invariance/generator-table", details);
    }

    // Eigenform table: g m^i_j = w^i m^i_j.
    match model.field().primitive_sixth_root() {
        Ok(w) => {
            let mut eigen_ok = true;
            for (i, j) in CampedelliModel::<F>::m_form_indices() {
                let m = model.m_form(i, j)?;
                let scaled = m.scale(&model.field().pow(&w, i as u64));
                eigen_ok &= g(&m) == scaled;
            }
            rep.bool_check("invariance/eigenform-table", eigen_ok);
        }
        Err(_) => rep.skip(
            "invariance/eigenform-table",
            "field has no sixth root of unity",
        ),
    }

    // Section eigenvalues +1, +1, -1, -1.
    let h_ok = g(model.h(1)) == *model.h(1)
        && g(model.h(2)) == *model.h(2)
        && g(model.h(3)) == model.h(3).neg()
        && g(model.h(4)) == model.h(4).neg();
    rep.bool_check("invariance/section-eigenvalues", h_ok);

    // g has order six on every generator.
    let mut order_ok = true;
    for (_, gen) in model.pfaffian_ideal().generators() {
        order_ok &= apply_group(model, gen, 6) == *gen;
    }
    order_ok &= apply_group(model, model.h(4), 6) == *model.h(4);
    rep.bool_check("invariance/order-six", order_ok);

    Ok(())
}

/// Ideal-level invariance: for every power `g^k`, the transformed
/// generator set spans the same ideal, verified through two-sided normal
/// forms (equality of reduced bases).
pub fn verify_ideal_invariance<F: Field>(
    model: &CampedelliModel<F>,
    budget: &Budget,
    rep: &mut Reporter,
) -> Result<(), CampedelliError> {
    let section = model.section_ideal();
    let base = section.basis(budget)?;
    for k in 1..6 {
        let transformed: Vec<(String, Polynomial<F>)> = section
            .generators()
            .iter()
            .map(|(name, gen)| (name.clone(), apply_group(model, gen, k)))
            .collect();
        let moved = crate::groebner::Ideal::new(section.ring(), transformed);
        let moved_basis = moved.basis(budget)?;
        let same = base.same_ideal_as(moved_basis) && base == moved_basis;
        rep.bool_check(format!("invariance/ideal/g^{k}"), same);
    }
    Ok(())
}

//! Staged Jacobian-criterion probe: the singular locus of the reduced
//! cone is cut out by the ideal together with the 5x5 minors of its
//! 14x8 Jacobian. Minors are adjoined in seeded random batches until the
//! dimension reaches zero (vertex only) or the stage budget runs out;
//! the dimension can only drop as minors are added, so any intermediate
//! value is a valid upper bound.

use super::{reduce_to_a, CampedelliError, CampedelliModel};
use crate::coeff::Field;
use crate::groebner::{Budget, GroebnerError, Ideal};
use crate::polyring::Polynomial;
use crate::report::Reporter;
use rand::RngCore;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmoothnessOutcome {
    /// Dimension reached zero: singular only at the vertex.
    VertexOnly { minors_used: usize },
    /// Budget exhausted with the best dimension bound so far.
    Bound { dimension: isize, minors_used: usize },
}

fn determinant<F: Field>(
    entries: &[Vec<Polynomial<F>>],
    ring: &std::sync::Arc<crate::polyring::Ring<F>>,
) -> Polynomial<F> {
    let n = entries.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    let mut acc = Polynomial::zero(ring);
    for (j, e) in entries[0].iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial<F>>> = entries[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = e.mul(&determinant(&minor, ring));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn sample_subset(rng: &mut dyn RngCore, n: usize, k: usize) -> Vec<usize> {
    let mut picked: Vec<usize> = Vec::with_capacity(k);
    while picked.len() < k {
        let c = (rng.next_u64() % n as u64) as usize;
        if !picked.contains(&c) {
            picked.push(c);
        }
    }
    picked.sort_unstable();
    picked
}

/// Runs the staged probe. `max_minors` caps the number of adjoined
/// minors; `batch` minors are added between dimension recomputations.
pub fn smoothness_probe<F: Field>(
    model: &CampedelliModel<F>,
    rng: &mut dyn RngCore,
    budget: &Budget,
    max_minors: usize,
    batch: usize,
    rep: &mut Reporter,
) -> Result<SmoothnessOutcome, CampedelliError> {
    let reduced = reduce_to_a(model)?;
    let ring = reduced.ring().clone();

    match reduced.dimension(budget) {
        Ok(dim) => rep.eq_check("smoothness/base-dimension", &3isize, &dim),
        Err(e @ GroebnerError::Resource { .. }) => {
            rep.resource_limit("smoothness/base-dimension", e.to_string());
            return Ok(SmoothnessOutcome::Bound {
                dimension: isize::MAX,
                minors_used: 0,
            });
        }
        Err(e) => return Err(e.into()),
    }

    let jacobian: Vec<Vec<Polynomial<F>>> = reduced
        .generators()
        .iter()
        .map(|(_, g)| (0..ring.num_vars()).map(|v| g.derivative(v)).collect())
        .collect();
    rep.eq_check_debug(
        "smoothness/jacobian-shape",
        &(14usize, 8usize),
        &(jacobian.len(), ring.num_vars()),
    );

    let mut gens: Vec<(String, Polynomial<F>)> = reduced.generators().to_vec();
    let mut minors_used = 0usize;
    let mut best_dim = isize::MAX;
    let mut seen: std::collections::HashSet<(Vec<usize>, Vec<usize>)> =
        std::collections::HashSet::new();
    while minors_used < max_minors {
        let mut added = 0usize;
        while added < batch && minors_used + added < max_minors {
            let rows = sample_subset(rng, jacobian.len(), 5);
            let cols = sample_subset(rng, ring.num_vars(), 5);
            if !seen.insert((rows.clone(), cols.clone())) {
                continue;
            }
            let entries: Vec<Vec<Polynomial<F>>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| jacobian[r][c].clone()).collect())
                .collect();
            let minor = determinant(&entries, &ring);
            if !minor.is_zero() {
                gens.push((format!("minor_{}", minors_used + added), minor));
            }
            added += 1;
        }
        minors_used += added;
        let ideal = Ideal::new(&ring, gens.clone());
        match ideal.dimension(budget) {
            Ok(dim) => {
                best_dim = best_dim.min(dim);
                if dim <= 0 {
                    rep.pass("smoothness/singular-locus-dimension");
                    return Ok(SmoothnessOutcome::VertexOnly { minors_used });
                }
            }
            Err(GroebnerError::Resource { .. }) => {
                // this stage ran out; a larger stage will not finish either
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    rep.resource_limit(
        "smoothness/singular-locus-dimension",
        format!("dimension bound {best_dim} after {minors_used} minors"),
    );
    Ok(SmoothnessOutcome::Bound {
        dimension: best_dim,
        minors_used,
    })
}

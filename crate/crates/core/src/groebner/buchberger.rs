use super::{Budget, GroebnerError};
use crate::coeff::Field;
use crate::polyring::{Monomial, Polynomial, Ring};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

/// Complete multivariate division: every term of the result is reducible
/// by no element of `basis`. Reducers are scanned in slice order, so the
/// result is deterministic for a fixed basis; for a Gröbner basis it is
/// the unique normal form.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let mut work = f.clone();
    let mut remainder_terms: Vec<(Monomial, F::Elem)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.leading_term() {
        for g in basis {
            let (glm, glc) = g.leading_term().expect("basis elements are nonzero");
            if glm.divides(lm) {
                let q = glm.divide_into(lm);
                let c = field
                    .div(lc, glc)
                    .expect("leading coefficients are invertible");
                work = work.sub(&g.mul_term(&q, &c));
                continue 'outer;
            }
        }
        remainder_terms.push((lm.clone(), lc.clone()));
        let lm = lm.clone();
        let lc = lc.clone();
        work = work.sub(&Polynomial::from_terms(&ring, vec![(lm, lc)]));
    }
    // Terms were peeled off in strictly decreasing order.
    Polynomial::from_terms(&ring, remainder_terms)
}

/// The S-polynomial `(lcm/lt(f))*f/lc(f) - (lcm/lt(g))*g/lc(g)`.
pub fn s_polynomial<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    weights: &[u32],
) -> Polynomial<F> {
    let field = f.ring().field().clone();
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm_with_weights(gm, weights);
    let fq = fm.divide_into(&lcm);
    let gq = gm.divide_into(&lcm);
    let finv = field.inv(fc).expect("unit leading coefficient");
    let ginv = field.inv(gc).expect("unit leading coefficient");
    f.mul_term(&fq, &finv).sub(&g.mul_term(&gq, &ginv))
}

#[derive(Debug)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Pair queue keyed by (weighted lcm degree, creation index): the normal
/// selection strategy. Cancelled pairs are removed lazily.
struct PairQueue {
    heap: BinaryHeap<Reverse<(u32, u64)>>,
    pairs: Vec<Option<Pair>>,
    live: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue {
            heap: BinaryHeap::new(),
            pairs: Vec::new(),
            live: HashSet::new(),
        }
    }

    fn push(&mut self, pair: Pair) {
        let key = (pair.lcm.weighted_degree(), self.pairs.len() as u64);
        self.live.insert((pair.i, pair.j));
        self.heap.push(Reverse(key));
        self.pairs.push(Some(pair));
    }

    fn cancel(&mut self, i: usize, j: usize) {
        self.live.remove(&(i, j));
    }

    fn pop(&mut self) -> Option<Pair> {
        while let Some(Reverse((_, idx))) = self.heap.pop() {
            let slot = &mut self.pairs[idx as usize];
            if let Some(pair) = slot.take() {
                if self.live.remove(&(pair.i, pair.j)) {
                    return Some(pair);
                }
            }
        }
        None
    }
}

/// The Gebauer–Möller update: prunes the pending queue against the new
/// leading term and adds the surviving new pairs.
fn update_pairs<F: Field>(
    queue: &mut PairQueue,
    basis: &[Polynomial<F>],
    t: usize,
    weights: &[u32],
) {
    let lt = |k: usize| basis[k].leading_term().expect("nonzero").0;
    let tau = lt(t).clone();

    // Chain criterion on pending pairs: (i,j) is redundant when the new
    // leading term divides lcm(i,j) strictly finer than both mixed lcms.
    let stale: Vec<(usize, usize)> = queue
        .live
        .iter()
        .copied()
        .filter(|&(i, j)| {
            let pair_lcm = lt(i).lcm_with_weights(lt(j), weights);
            tau.divides(&pair_lcm)
                && lt(i).lcm_with_weights(&tau, weights) != pair_lcm
                && lt(j).lcm_with_weights(&tau, weights) != pair_lcm
        })
        .collect();
    for (i, j) in stale {
        queue.cancel(i, j);
    }

    // New pairs (i, t), pruned among themselves: a candidate survives when
    // its leading terms are coprime (so it can still prune others) or no
    // other candidate's lcm divides its lcm. Coprime survivors are then
    // discarded by the product criterion.
    let cands: Vec<Pair> = (0..t)
        .map(|i| Pair {
            lcm: lt(i).lcm_with_weights(&tau, weights),
            i,
            j: t,
        })
        .collect();
    let mut kept: Vec<Pair> = Vec::new();
    for (a, cand) in cands.iter().enumerate() {
        let coprime = lt(cand.i).coprime_with(&tau);
        let dominated = cands[a + 1..].iter().any(|c| c.lcm.divides(&cand.lcm))
            || kept.iter().any(|c| c.lcm.divides(&cand.lcm));
        if coprime || !dominated {
            kept.push(Pair {
                lcm: cand.lcm.clone(),
                i: cand.i,
                j: cand.j,
            });
        }
    }
    for pair in kept {
        if !lt(pair.i).coprime_with(&tau) {
            queue.push(pair);
        }
    }
}

/// Buchberger's algorithm; returns the reduced, monic basis sorted by
/// increasing leading monomial.
pub fn run<F: Field>(
    ring: &Arc<Ring<F>>,
    generators: &[(String, Polynomial<F>)],
    budget: &Budget,
) -> Result<Vec<Polynomial<F>>, GroebnerError> {
    let weights = ring.weights().to_vec();
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut queue = PairQueue::new();
    let mut pairs_processed: u64 = 0;

    let over_budget = |pairs: u64, basis_len: usize| -> Option<GroebnerError> {
        if pairs > budget.max_pairs || basis_len > budget.max_basis {
            Some(GroebnerError::Resource {
                pairs_processed: pairs,
                basis_size: basis_len,
                max_pairs: budget.max_pairs,
                max_basis: budget.max_basis,
            })
        } else {
            None
        }
    };

    for (_, g) in generators {
        if g.is_zero() {
            continue;
        }
        let nf = normal_form(g, &basis);
        if !nf.is_zero() {
            basis.push(nf.monic());
            update_pairs(&mut queue, &basis, basis.len() - 1, &weights);
        }
    }

    while let Some(pair) = queue.pop() {
        pairs_processed += 1;
        if let Some(err) = over_budget(pairs_processed, basis.len()) {
            return Err(err);
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], &weights);
        let nf = normal_form(&s, &basis);
        if !nf.is_zero() {
            basis.push(nf.monic());
            if let Some(err) = over_budget(pairs_processed, basis.len()) {
                return Err(err);
            }
            update_pairs(&mut queue, &basis, basis.len() - 1, &weights);
        }
    }

    Ok(reduce_basis(basis))
}

/// Minimizes (no leading term divides another) and tail-reduces; output is
/// monic and sorted by increasing leading monomial.
fn reduce_basis<F: Field>(mut basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    basis.sort_by(|a, b| {
        a.leading_term()
            .expect("nonzero")
            .0
            .cmp(b.leading_term().expect("nonzero").0)
    });
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for g in basis {
        let lm = g.leading_term().expect("nonzero").0;
        if !minimal
            .iter()
            .any(|h| h.leading_term().expect("nonzero").0.divides(lm))
        {
            minimal.push(g);
        }
    }
    let snapshot = minimal.clone();
    let reduced: Vec<Polynomial<F>> = snapshot
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let others: Vec<Polynomial<F>> = snapshot
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            normal_form(g, &others).monic()
        })
        .filter(|g| !g.is_zero())
        .collect();
    reduced
}

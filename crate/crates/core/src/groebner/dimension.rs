use crate::polyring::Monomial;

/// Krull dimension of `k[x_1..x_n]/M` for a monomial ideal `M`: the largest
/// cardinality of a variable subset containing no generator's support.
/// Computed as `n` minus a minimum vertex cover of the support hypergraph,
/// by branch and bound. Returns -1 for the unit ideal (empty variety).
pub fn monomial_dimension(generators: &[Monomial], nvars: usize) -> isize {
    assert!(nvars <= 128, "dimension search uses 128-bit variable masks");
    if generators.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut supports: Vec<u128> = generators
        .iter()
        .map(|m| m.support().fold(0u128, |acc, v| acc | (1 << v)))
        .collect();
    supports.sort_unstable_by_key(|s| s.count_ones());
    supports.dedup();
    // Only minimal supports matter: covering a subset covers its supersets.
    let mut minimal: Vec<u128> = Vec::new();
    for s in supports {
        if !minimal.iter().any(|m| m & s == *m) {
            minimal.push(s);
        }
    }
    if minimal.is_empty() {
        return nvars as isize;
    }
    let mut best = minimal.len().min(nvars);
    branch(&minimal, 0, 0, &mut best);
    nvars as isize - best as isize
}

fn branch(supports: &[u128], cover: u128, size: usize, best: &mut usize) {
    // Lower bound: pairwise-disjoint uncovered supports each need their own
    // cover variable.
    let mut bound = 0usize;
    let mut used = 0u128;
    let mut first_uncovered: Option<u128> = None;
    for &s in supports {
        if s & cover != 0 {
            continue;
        }
        if first_uncovered.is_none() {
            first_uncovered = Some(s);
        }
        if s & used == 0 {
            bound += 1;
            used |= s;
        }
    }
    let Some(target) = first_uncovered else {
        *best = (*best).min(size);
        return;
    };
    if size + bound >= *best {
        return;
    }
    let mut s = target;
    while s != 0 {
        let var = s.trailing_zeros();
        s &= s - 1;
        branch(supports, cover | (1 << var), size + 1, best);
    }
}

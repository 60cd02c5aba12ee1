use crate::polyring::Monomial;
use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense integer polynomial in one variable `t`, used for Hilbert
/// numerators. Coefficients are checked 64-bit integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = IntPoly(coeffs);
        p.trim();
        p
    }

    /// `1 - t^w`.
    pub fn one_minus_t_pow(w: u32) -> Self {
        let mut coeffs = vec![0i64; w as usize + 1];
        coeffs[0] = 1;
        coeffs[w as usize] = -1;
        IntPoly(coeffs)
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![0i64; self.0.len().max(other.0.len())];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self
                .coeff(i)
                .checked_add(other.coeff(i))
                .expect("Hilbert numerator overflow");
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        IntPoly::from_coeffs(
            self.0
                .iter()
                .map(|c| c.checked_mul(k).expect("Hilbert numerator overflow"))
                .collect(),
        )
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: u32) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0i64; k as usize];
        coeffs.extend_from_slice(&self.0);
        IntPoly(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                let prod = a.checked_mul(b).expect("Hilbert numerator overflow");
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(prod)
                    .expect("Hilbert numerator overflow");
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0
            .iter()
            .fold(0i64, |acc, &c| acc.checked_add(c).expect("overflow"))
    }

    /// Exact division by `1 - t^w`; `None` when the division has remainder.
    pub fn div_exact_one_minus_t_pow(&self, w: u32) -> Option<Self> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let w = w as usize;
        let n = self.0.len();
        if n < w {
            return None;
        }
        // p = (1 - t^w) q  =>  q_k = p_k + q_{k-w}
        let mut q = vec![0i64; n - w];
        for k in 0..n - w {
            let prev = if k >= w { q[k - w] } else { 0 };
            q[k] = self.0[k].checked_add(prev).expect("overflow");
        }
        // verify the top coefficients cancel
        let q = IntPoly::from_coeffs(q);
        (q.mul(&IntPoly::one_minus_t_pow(w as u32)) == *self).then_some(q)
    }

    /// Multiplicity of `t = 1` as a root, via repeated exact division.
    pub fn multiplicity_at_one(&self) -> u32 {
        let mut mult = 0;
        let mut p = self.clone();
        while !p.is_zero() {
            match p.div_exact_one_minus_t_pow(1) {
                Some(q) => {
                    mult += 1;
                    p = q;
                }
                None => break,
            }
        }
        mult
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().filter(|(_, &c)| c != 0) {
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}*t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, m) => write!(f, "{m}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Exact Hilbert series of a graded quotient: an integer numerator over
/// the product of `1 - t^w` across the ring's variable weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub denominator_weights: Vec<u32>,
}

impl HilbertSeries {
    pub fn new(numerator: IntPoly, mut denominator_weights: Vec<u32>) -> Self {
        denominator_weights.sort_unstable();
        HilbertSeries {
            numerator,
            denominator_weights,
        }
    }

    /// Hilbert numerator of `k[x]/M` for a monomial ideal, by the colon
    /// recursion `N(J + (m)) = N(J) - t^deg(m) * N(J : m)`.
    pub fn of_monomial_quotient(generators: &[Monomial], weights: &[u32]) -> Self {
        let gens = minimalize(generators.to_vec());
        let numerator = numerator_rec(gens, weights);
        HilbertSeries::new(numerator, weights.to_vec())
    }

    fn denominator(&self) -> IntPoly {
        self.denominator_weights
            .iter()
            .fold(IntPoly::one(), |acc, &w| {
                acc.mul(&IntPoly::one_minus_t_pow(w))
            })
    }

    /// Equality as rational functions, by cross multiplication.
    pub fn eq_as_rational(&self, other: &HilbertSeries) -> bool {
        self.numerator.mul(&other.denominator()) == other.numerator.mul(&self.denominator())
    }

    /// Power-series coefficients up to and including degree `up_to`.
    pub fn expansion(&self, up_to: usize) -> Vec<i64> {
        let mut series = vec![0i64; up_to + 1];
        for (k, &c) in self.numerator.coeffs().iter().enumerate() {
            if k <= up_to {
                series[k] = c;
            }
        }
        // divide by each (1 - t^w): s_k += s_{k-w}
        for &w in &self.denominator_weights {
            let w = w as usize;
            for k in w..=up_to {
                series[k] = series[k]
                    .checked_add(series[k - w])
                    .expect("series coefficient overflow");
            }
        }
        series
    }

    /// Order of the pole at `t = 1`: number of denominator factors minus
    /// the multiplicity of `1` in the numerator. For a homogeneous ideal
    /// this equals the Krull dimension of the quotient.
    pub fn pole_order_at_one(&self) -> i64 {
        self.denominator_weights.len() as i64 - self.numerator.multiplicity_at_one() as i64
    }

    /// The limit of `(1-t)^d * HS(t)` at `t = 1`, where `d` is the pole
    /// order: the degree (multiplicity) of the graded quotient.
    pub fn degree_at_one(&self) -> BigRational {
        let mut num = self.numerator.clone();
        while let Some(q) = num.div_exact_one_minus_t_pow(1) {
            if num.is_zero() {
                break;
            }
            num = q;
        }
        let denom: i64 = self
            .denominator_weights
            .iter()
            .map(|&w| w as i64)
            .product();
        BigRational::new(BigInt::from(num.eval_at_one()), BigInt::from(denom))
    }

    /// Cancels numerator factors `1 - t^w` against the denominator where
    /// the division is exact.
    pub fn simplified(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut weights = Vec::new();
        for &w in &self.denominator_weights {
            if num.is_zero() {
                break;
            }
            match num.div_exact_one_minus_t_pow(w) {
                Some(q) => num = q,
                None => weights.push(w),
            }
        }
        HilbertSeries::new(num, weights)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (", self.numerator)?;
        let mut by_weight: Vec<(u32, usize)> = Vec::new();
        for &w in &self.denominator_weights {
            match by_weight.last_mut() {
                Some((lw, count)) if *lw == w => *count += 1,
                _ => by_weight.push((w, 1)),
            }
        }
        for (i, (w, count)) in by_weight.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            let factor = if *w == 1 {
                "(1-t)".to_string()
            } else {
                format!("(1-t^{w})")
            };
            if *count == 1 {
                write!(f, "{factor}")?;
            } else {
                write!(f, "{factor}^{count}")?;
            }
        }
        write!(f, ")")
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for g in gens {
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    minimal
}

/// Recursive Hilbert numerator of a minimal monomial generating set.
fn numerator_rec(gens: Vec<Monomial>, weights: &[u32]) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(|m| m.is_one()) {
        return IntPoly::zero();
    }
    // Pairwise-coprime generators form a regular sequence.
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime_with(b)));
    if coprime {
        return gens.iter().fold(IntPoly::one(), |acc, m| {
            acc.mul(&IntPoly::one_minus_t_pow(m.weighted_degree()))
        });
    }
    // Split off a generator of maximal degree (most entangled last).
    let pivot_idx = gens
        .iter()
        .enumerate()
        .max_by_key(|(i, m)| (m.weighted_degree(), *i))
        .map(|(i, _)| i)
        .expect("nonempty");
    let mut rest = gens;
    let pivot = rest.swap_remove(pivot_idx);
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|m| m.gcd_with_weights(&pivot, weights).divide_into(m))
        .collect();
    let left = numerator_rec(rest, weights);
    let right = numerator_rec(minimalize(colon), weights);
    left.sub(&right.shift(pivot.weighted_degree()))
}

use smallvec::SmallVec;
use std::cmp::Ordering;

/// Exponent vector with cached weighted degree. The comparison order is
/// weighted-degree reverse-lexicographic against the owning ring's fixed
/// variable order; the degree cache makes the degree test O(1).
///
/// Exponents are 16-bit: degrees in this crate stay far below that bound
/// and the constructors check for overflow.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[u16; 24]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            deg: 0,
            exps: smallvec::smallvec![0; nvars],
        }
    }

    pub fn from_exponents(exps: &[u16], weights: &[u32]) -> Self {
        assert_eq!(exps.len(), weights.len(), "exponent/weight length mismatch");
        let deg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .fold(0u32, |a, d| a.checked_add(d).expect("degree overflow"));
        Monomial {
            deg,
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn variable(index: usize, nvars: usize, weights: &[u32]) -> Self {
        let mut exps = smallvec::smallvec![0u16; nvars];
        exps[index] = 1;
        Monomial {
            deg: weights[index],
            exps,
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn weighted_degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial {
            deg: self.deg.checked_add(other.deg).expect("degree overflow"),
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn divide_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            deg: other.deg - self.deg,
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(&b, &a)| b - a)
                .collect(),
        }
    }

    pub fn lcm_with_weights(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: SmallVec<[u16; 24]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let deg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum::<u32>();
        Monomial { deg, exps }
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn gcd_with_weights(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: SmallVec<[u16; 24]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        let deg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum::<u32>();
        Monomial { deg, exps }
    }

    pub(crate) fn with_exponent(&self, var: usize, exp: u16, weights: &[u32]) -> Monomial {
        let mut exps = self.exps.clone();
        exps[var] = exp;
        Monomial::from_exponents(&exps, weights)
    }
}

/// Weighted degrevlex: higher weighted degree wins; on ties the monomial
/// with the smaller exponent at the last differing variable is larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exponents(exps, &vec![1; exps.len()])
    }

    #[test]
    fn degrevlex_standard_order() {
        // In k[x,y,z]: x > y > z and y^2 > xz, xy > y^2? xy vs y^2:
        // last differing var is y: exps 1 vs 2, smaller wins => xy > y^2.
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[0, 0, 1]));
        assert!(m(&[1, 1, 0]) > m(&[0, 2, 0]));
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
        assert!(m(&[1, 0, 1]) > m(&[0, 1, 1]));
        assert!(m(&[2, 0, 0]) > m(&[1, 1, 0]));
    }

    #[test]
    fn weighted_degree_dominates() {
        let w = [1u32, 2];
        let a = Monomial::from_exponents(&[3, 0], &w); // deg 3
        let b = Monomial::from_exponents(&[0, 2], &w); // deg 4
        assert!(b > a);
        assert_eq!(a.weighted_degree(), 3);
        assert_eq!(b.weighted_degree(), 4);
    }

    #[test]
    fn division_and_lcm() {
        let w = [1u32, 1, 1];
        let a = Monomial::from_exponents(&[2, 1, 0], &w);
        let b = Monomial::from_exponents(&[1, 1, 0], &w);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(b.divide_into(&a), m(&[1, 0, 0]));
        let c = Monomial::from_exponents(&[0, 2, 1], &w);
        let l = a.lcm_with_weights(&c, &w);
        assert_eq!(l.exponents(), &[2, 2, 1]);
        assert_eq!(l.weighted_degree(), 5);
        assert!(a.coprime_with(&m(&[0, 0, 5])));
        assert!(!a.coprime_with(&c));
    }
}

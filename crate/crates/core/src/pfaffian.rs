//! Skew-symmetric matrices over a polynomial ring and their Pfaffians.

use crate::coeff::Field;
use crate::polyring::{Polynomial, Ring};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PfaffianError {
    #[error("Pfaffian requires even size, got {0} (use submaximal_pfaffians)")]
    OddSize(usize),
    #[error("submaximal Pfaffians require size 5, got {0}")]
    NotSizeFive(usize),
}

/// Skew-symmetric matrix stored by its strict upper triangle; the diagonal
/// is zero and the lower triangle is implied by `entry(j,i) = -entry(i,j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix<F: Field> {
    size: usize,
    ring: Arc<Ring<F>>,
    upper: Vec<Polynomial<F>>,
}

impl<F: Field> SkewMatrix<F> {
    /// Builds from the strict upper triangle, row by row:
    /// `a12, a13, ..., a1n, a23, ...`.
    pub fn from_upper(ring: &Arc<Ring<F>>, size: usize, upper: Vec<Polynomial<F>>) -> Self {
        assert_eq!(upper.len(), size * (size - 1) / 2, "upper triangle length");
        SkewMatrix {
            size,
            ring: ring.clone(),
            upper,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    fn upper_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.size);
        // offset of row i within the packed triangle
        i * self.size - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Entry by zero-based indices.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial<F> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Polynomial::zero(&self.ring),
            Less => self.upper[self.upper_index(i, j)].clone(),
            Greater => self.upper[self.upper_index(j, i)].neg(),
        }
    }

    /// Principal submatrix deleting the given rows/columns (zero-based).
    pub fn delete(&self, removed: &[usize]) -> SkewMatrix<F> {
        let keep: Vec<usize> = (0..self.size).filter(|k| !removed.contains(k)).collect();
        let mut upper = Vec::with_capacity(keep.len() * (keep.len() - 1) / 2);
        for (a, &i) in keep.iter().enumerate() {
            for &j in &keep[a + 1..] {
                upper.push(self.entry(i, j));
            }
        }
        SkewMatrix::from_upper(&self.ring, keep.len(), upper)
    }

    /// The Pfaffian, by expansion along the first row:
    /// `Pf(M) = sum_{j>1} (-1)^j a_{1j} Pf(M with rows/cols 1,j removed)`.
    pub fn pfaffian(&self) -> Result<Polynomial<F>, PfaffianError> {
        if !self.size.is_multiple_of(2) {
            return Err(PfaffianError::OddSize(self.size));
        }
        Ok(self.pfaffian_rec())
    }

    fn pfaffian_rec(&self) -> Polynomial<F> {
        match self.size {
            0 => Polynomial::one(&self.ring),
            2 => self.entry(0, 1),
            _ => {
                let mut acc = Polynomial::zero(&self.ring);
                for j in 1..self.size {
                    let a = self.entry(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let minor = self.delete(&[0, j]).pfaffian_rec();
                    let term = a.mul(&minor);
                    // one-based column j+1: even columns add, odd subtract
                    acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }

    /// The five 4x4 Pfaffians of a 5x5 skew matrix, one per deleted
    /// row/column, each negated so that for the unprojection matrices of
    /// this crate the distinguished monomials `x_i*y_i`, `z_i*y_i` and
    /// `y_i*y_j` appear with coefficient +1.
    pub fn submaximal_pfaffians(&self) -> Result<[Polynomial<F>; 5], PfaffianError> {
        if self.size != 5 {
            return Err(PfaffianError::NotSizeFive(self.size));
        }
        let mut out = Vec::with_capacity(5);
        for k in 0..5 {
            out.push(self.delete(&[k]).pfaffian_rec().neg());
        }
        Ok(out.try_into().expect("five deletions"))
    }

    /// `M * v` for a vector of polynomials.
    pub fn apply(&self, v: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
        assert_eq!(v.len(), self.size);
        (0..self.size)
            .map(|i| {
                let mut acc = Polynomial::zero(&self.ring);
                for (j, vj) in v.iter().enumerate() {
                    acc = acc.add(&self.entry(i, j).mul(vj));
                }
                acc
            })
            .collect()
    }

    /// The signed-Pfaffian kernel vector `(+p1, -p2, +p3, -p4, +p5)` built
    /// from [`Self::submaximal_pfaffians`]; `M * v = 0` holds identically.
    pub fn signed_pfaffian_vector(&self) -> Result<Vec<Polynomial<F>>, PfaffianError> {
        let pf = self.submaximal_pfaffians()?;
        Ok(pf
            .into_iter()
            .enumerate()
            .map(|(k, p)| if k % 2 == 0 { p } else { p.neg() })
            .collect())
    }
}

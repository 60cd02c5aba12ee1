use super::{format_rational, rational_is_negative, CoeffError, Field, FieldSpec};
use num::{BigInt, BigRational, ToPrimitive, Zero};

/// The field of rationals with arbitrary-precision arithmetic. Elements are
/// kept in lowest terms with positive denominator, so structural equality is
/// semantic equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(1))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, CoeffError> {
        if a.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational_pair(
        &self,
        a: &BigRational,
        b: &BigRational,
    ) -> Result<BigRational, CoeffError> {
        if !b.is_zero() {
            return Err(CoeffError::NotInField {
                text: format!("{a}+{b}*w"),
                field: "QQ".into(),
            });
        }
        Ok(a.clone())
    }

    fn primitive_sixth_root(&self) -> Result<BigRational, CoeffError> {
        Err(CoeffError::NoSixthRoot { field: "QQ".into() })
    }

    fn format_elem(&self, a: &BigRational) -> String {
        format_rational(a)
    }

    fn as_positive(&self, a: &BigRational) -> Option<BigRational> {
        rational_is_negative(a).then(|| -a)
    }
}

/// Exact conversion helper used by Hilbert-series degree computations.
pub fn rational_to_i64(q: &BigRational) -> Option<i64> {
    q.is_integer().then(|| q.numer().to_i64()).flatten()
}

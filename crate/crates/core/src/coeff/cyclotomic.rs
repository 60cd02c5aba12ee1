use super::{format_rational, rational_is_negative, CoeffError, Field, FieldSpec};
use num::{BigInt, BigRational, Zero};
use std::fmt;

/// Element `a + b*w` of the sixth cyclotomic field, where `w` satisfies
/// `w^2 = w - 1`. The components stay in lowest terms, so structural
/// equality is semantic equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclo6Elem {
    pub a: BigRational,
    pub b: BigRational,
}

impl fmt::Debug for Cyclo6Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Cyclotomic6.format_elem(self))
    }
}

/// The rationals extended by a primitive sixth root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Cyclotomic6;

impl Cyclotomic6 {
    fn elem(a: BigRational, b: BigRational) -> Cyclo6Elem {
        Cyclo6Elem { a, b }
    }

    /// Multiplicative norm `a^2 + a*b + b^2`, zero only at zero.
    fn norm(&self, x: &Cyclo6Elem) -> BigRational {
        &x.a * &x.a + &x.a * &x.b + &x.b * &x.b
    }
}

impl Field for Cyclotomic6 {
    type Elem = Cyclo6Elem;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Cyclotomic6
    }

    fn zero(&self) -> Cyclo6Elem {
        Self::elem(BigRational::zero(), BigRational::zero())
    }

    fn one(&self) -> Cyclo6Elem {
        Self::elem(BigRational::from_integer(BigInt::from(1)), BigRational::zero())
    }

    fn is_zero(&self, x: &Cyclo6Elem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    fn add(&self, x: &Cyclo6Elem, y: &Cyclo6Elem) -> Cyclo6Elem {
        Self::elem(&x.a + &y.a, &x.b + &y.b)
    }

    fn sub(&self, x: &Cyclo6Elem, y: &Cyclo6Elem) -> Cyclo6Elem {
        Self::elem(&x.a - &y.a, &x.b - &y.b)
    }

    fn neg(&self, x: &Cyclo6Elem) -> Cyclo6Elem {
        Self::elem(-&x.a, -&x.b)
    }

    fn mul(&self, x: &Cyclo6Elem, y: &Cyclo6Elem) -> Cyclo6Elem {
        // (a+bw)(c+dw) with w^2 = w-1 gives (ac - bd) + (ad + bc + bd)w.
        let ac = &x.a * &y.a;
        let bd = &x.b * &y.b;
        let ad_bc = &x.a * &y.b + &x.b * &y.a;
        Self::elem(ac - &bd, ad_bc + bd)
    }

    fn inv(&self, x: &Cyclo6Elem) -> Result<Cyclo6Elem, CoeffError> {
        if self.is_zero(x) {
            return Err(CoeffError::DivisionByZero);
        }
        // Conjugate of a+bw is (a+b) - bw; the product is the rational norm.
        let n = self.norm(x);
        Ok(Self::elem((&x.a + &x.b) / &n, -&x.b / &n))
    }

    fn from_i64(&self, n: i64) -> Cyclo6Elem {
        Self::elem(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    fn from_rational_pair(
        &self,
        a: &BigRational,
        b: &BigRational,
    ) -> Result<Cyclo6Elem, CoeffError> {
        Ok(Self::elem(a.clone(), b.clone()))
    }

    fn primitive_sixth_root(&self) -> Result<Cyclo6Elem, CoeffError> {
        Ok(Self::elem(
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(1)),
        ))
    }

    fn format_elem(&self, x: &Cyclo6Elem) -> String {
        if x.b.is_zero() {
            return format_rational(&x.a);
        }
        let zeta = if rational_is_negative(&x.b) {
            format!("-{}*w", format_rational(&-&x.b))
        } else {
            format!("{}*w", format_rational(&x.b))
        };
        if x.a.is_zero() {
            zeta
        } else if rational_is_negative(&x.b) {
            format!("{}{}", format_rational(&x.a), zeta)
        } else {
            format!("{}+{}", format_rational(&x.a), zeta)
        }
    }

    fn as_positive(&self, x: &Cyclo6Elem) -> Option<Cyclo6Elem> {
        let a_neg = rational_is_negative(&x.a) || x.a.is_zero();
        let b_neg = rational_is_negative(&x.b) || x.b.is_zero();
        (a_neg && b_neg && !self.is_zero(x)).then(|| self.neg(x))
    }
}

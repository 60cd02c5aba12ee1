//! Exact coefficient fields: arbitrary-precision rationals, prime fields
//! `F_p` with `p < 2^62`, and the quadratic extension of the rationals by a
//! primitive sixth root of unity.

mod cyclotomic;
mod prime_field;
pub mod primes;
mod rationals;

pub use cyclotomic::{Cyclo6Elem, Cyclotomic6};
pub use prime_field::PrimeField;
pub use rationals::{rational_to_i64, Rationals};

use num::{BigInt, BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which exact field to work over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u64 },
    Cyclotomic6,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField { p } => write!(f, "GF({p})"),
            FieldSpec::Cyclotomic6 => write!(f, "QQ(w)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 2^62")]
    ModulusTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{field} has no primitive sixth root of unity")]
    NoSixthRoot { field: String },
    #[error("element `{text}` does not lie in {field}")]
    NotInField { text: String, field: String },
    #[error("cannot parse `{text}` as a field element: {reason}")]
    Parse { text: String, reason: String },
}

/// Handle to an exact field. All operations are pure; handles and elements
/// are immutable and freely shareable across threads.
///
/// Conversions take `&self` because the handle carries runtime data (the
/// modulus of a prime field), unlike the usual `From` conventions.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, CoeffError>;
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Converts `a + b*w` (`w` the sixth root) into a field element.
    /// Fails when the field cannot represent the requested element.
    fn from_rational_pair(
        &self,
        a: &BigRational,
        b: &BigRational,
    ) -> Result<Self::Elem, CoeffError>;

    /// Deterministic primitive sixth root of unity, when one exists.
    fn primitive_sixth_root(&self) -> Result<Self::Elem, CoeffError>;

    fn format_elem(&self, a: &Self::Elem) -> String;

    fn parse_elem(&self, text: &str) -> Result<Self::Elem, CoeffError> {
        let (a, b) = parse_rational_pair(text)?;
        self.from_rational_pair(&a, &b)
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, CoeffError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `Some(-a)` when `a` formats with a leading minus sign, used by the
    /// polynomial printer to emit `f - g` instead of `f + -g`.
    fn as_positive(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Draws an element for randomized testing: uniform over a prime
    /// field, a small integer over the other fields.
    fn sample(&self, rng: &mut dyn rand::RngCore) -> Self::Elem {
        let v = (rng.next_u64() % 2003) as i64 - 1001;
        self.from_i64(v)
    }
}

/// Runtime-selected field, for CLI dispatch.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyField {
    Rationals(Rationals),
    Prime(PrimeField),
    Cyclotomic(Cyclotomic6),
}

/// Builds a field handle from its spec, validating the modulus.
pub fn make_field(spec: &FieldSpec) -> Result<AnyField, CoeffError> {
    Ok(match spec {
        FieldSpec::Rationals => AnyField::Rationals(Rationals),
        FieldSpec::PrimeField { p } => AnyField::Prime(PrimeField::new(*p)?),
        FieldSpec::Cyclotomic6 => AnyField::Cyclotomic(Cyclotomic6),
    })
}

/// Runs `$body` with `$f` bound to the concrete field inside an [`AnyField`].
#[macro_export]
macro_rules! with_field {
    ($any:expr, |$f:ident| $body:expr) => {
        match $any {
            $crate::coeff::AnyField::Rationals($f) => $body,
            $crate::coeff::AnyField::Prime($f) => $body,
            $crate::coeff::AnyField::Cyclotomic($f) => $body,
        }
    };
}

/// Parses `a`, `a/b`, `a+b*w`, `a-b*w`, `b*w` or `w` into the pair `(a, b)`.
pub fn parse_rational_pair(text: &str) -> Result<(BigRational, BigRational), CoeffError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |reason: &str| CoeffError::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(err("empty input"));
    }
    // Split into at most two signed parts at a '+'/'-' that is not leading.
    let bytes = s.as_bytes();
    let mut split = None;
    for (i, &c) in bytes.iter().enumerate().skip(1) {
        if (c == b'+' || c == b'-') && bytes[i - 1] != b'/' {
            split = Some(i);
            break;
        }
    }
    let (first, second) = match split {
        Some(i) => (&s[..i], Some(&s[i..])),
        None => (&s[..], None),
    };
    let mut a = BigRational::zero();
    let mut b = BigRational::zero();
    for part in std::iter::once(first).chain(second) {
        if part.is_empty() {
            return Err(err("dangling sign"));
        }
        let (sign, body) = match part.as_bytes()[0] {
            b'+' => (1, &part[1..]),
            b'-' => (-1, &part[1..]),
            _ => (1, part),
        };
        let (is_zeta, body) = match body.strip_suffix("*w").or(body.strip_suffix('w')) {
            Some(rest) => (true, rest),
            None => (false, body),
        };
        let value = if body.is_empty() {
            if !is_zeta {
                return Err(err("missing numeric part"));
            }
            BigRational::from_integer(BigInt::from(1))
        } else {
            parse_rational(body).ok_or_else(|| err("malformed rational"))?
        };
        let value = if sign < 0 { -value } else { value };
        let slot = if is_zeta { &mut b } else { &mut a };
        if !slot.is_zero() {
            return Err(err("repeated component"));
        }
        *slot = value;
    }
    Ok((a, b))
}

fn parse_rational(body: &str) -> Option<BigRational> {
    match body.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = body.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn rational_is_negative(q: &BigRational) -> bool {
    q.is_negative()
}

use super::primes::{self, mul_mod, pow_mod};
use super::{CoeffError, Field, FieldSpec};
use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

/// The field `F_p` for a prime `p < 2^62`. Elements are canonical residues
/// in `0..p`, so sums fit in 64 bits and products in 128 bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, CoeffError> {
        if p >= 1 << 62 {
            return Err(CoeffError::ModulusTooLarge(p));
        }
        if !primes::is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let mut r = n % &m;
        if r.is_negative() {
            r += &m;
        }
        r.to_u64().expect("residue fits u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField { p: self.p }
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn inv(&self, a: &u64) -> Result<u64, CoeffError> {
        if *a == 0 {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(pow_mod(*a, self.p - 2, self.p))
    }

    fn from_i64(&self, n: i64) -> u64 {
        // p < 2^62 fits in i64, so rem_euclid stays in range.
        n.rem_euclid(self.p as i64) as u64
    }

    fn from_rational_pair(&self, a: &BigRational, b: &BigRational) -> Result<u64, CoeffError> {
        let lift = |q: &BigRational| -> Result<u64, CoeffError> {
            let num = self.reduce_bigint(q.numer());
            let den = self.reduce_bigint(q.denom());
            if den == 0 {
                return Err(CoeffError::NotInField {
                    text: q.to_string(),
                    field: format!("GF({})", self.p),
                });
            }
            self.div(&num, &den)
        };
        let av = lift(a)?;
        if b.is_zero() {
            return Ok(av);
        }
        let w = self.primitive_sixth_root()?;
        Ok(self.add(&av, &self.mul(&lift(b)?, &w)))
    }

    fn primitive_sixth_root(&self) -> Result<u64, CoeffError> {
        if self.p % 6 != 1 {
            return Err(CoeffError::NoSixthRoot {
                field: format!("GF({})", self.p),
            });
        }
        let g = primes::smallest_primitive_root(self.p);
        Ok(pow_mod(g, (self.p - 1) / 6, self.p))
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn sample(&self, rng: &mut dyn rand::RngCore) -> u64 {
        // rejection-free: p < 2^62 keeps the modulo bias negligible only
        // for small p, so draw 128 bits and reduce
        let hi = rng.next_u64() as u128;
        let lo = rng.next_u64() as u128;
        (((hi << 64) | lo) % self.p as u128) as u64
    }
}

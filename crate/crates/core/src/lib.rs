//! Exact computer algebra for weighted graded rings: sparse multivariate
//! polynomials over exact fields, Pfaffians of skew matrices, a Buchberger
//! Gröbner engine with Krull dimension and weighted Hilbert series, and the
//! construction and machine verification of a family of binomial-Pfaffians
//! ideals together with a specific surface configuration carrying a free
//! Z/6 action.

pub mod campedelli;
pub mod coeff;
pub mod groebner;
pub mod pfaffian;
pub mod polyring;
pub mod report;
pub mod unprojection;

pub use coeff::{AnyField, CoeffError, Field, FieldSpec};
pub use polyring::{parse_poly, Monomial, PolyError, Polynomial, Ring, RingDescriptor};

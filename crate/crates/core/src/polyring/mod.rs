//! Sparse multivariate polynomials over an exact field, with weighted
//! grading, formal differentiation and substitution.

mod monomial;
mod parse;
mod poly;
#[cfg(test)]
mod tests;

pub use monomial::Monomial;
pub use parse::parse_poly;
pub use poly::{Degree, Polynomial};

use crate::coeff::{Field, FieldSpec};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("variable weight must be positive (variable `{0}`)")]
    ZeroWeight(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial belongs to a different ring (expected {expected}, got {got})")]
    RingMismatch { expected: String, got: String },
    #[error("syntax error at byte {position}: {reason}")]
    Syntax { position: usize, reason: String },
    #[error("coefficient error: {0}")]
    Coeff(#[from] crate::coeff::CoeffError),
    #[error("the zero polynomial has no degree")]
    ZeroDegree,
}

/// A named, weighted polynomial ring over an exact field. The variable
/// order is fixed at construction and drives every monomial comparison.
#[derive(Debug)]
pub struct Ring<F: Field> {
    field: F,
    variables: Vec<String>,
    weights: Vec<u32>,
    index: HashMap<String, usize>,
}

impl<F: Field> PartialEq for Ring<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.variables == other.variables
            && self.weights == other.weights
    }
}

impl<F: Field> Eq for Ring<F> {}

impl<F: Field> Ring<F> {
    pub fn new(
        field: F,
        variables: Vec<String>,
        weights: Vec<u32>,
    ) -> Result<Arc<Self>, PolyError> {
        assert_eq!(variables.len(), weights.len());
        let mut index = HashMap::new();
        for (i, v) in variables.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
            if weights[i] == 0 {
                return Err(PolyError::ZeroWeight(v.clone()));
            }
        }
        Ok(Arc::new(Ring {
            field,
            variables,
            weights,
            index,
        }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn variable_name(&self, index: usize) -> &str {
        &self.variables[index]
    }

    pub fn descriptor(&self) -> RingDescriptor {
        RingDescriptor {
            variables: self.variables.clone(),
            weights: self.weights.clone(),
            field: self.field.spec(),
        }
    }
}

/// Serializable description of a ring: names, weights, coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RingDescriptor {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub field: FieldSpec,
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for (i, (v, w)) in self.variables.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *w == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}({w})")?;
            }
        }
        write!(f, "]")
    }
}

/// Two ring handles agree when they are the same allocation or have equal
/// content; polynomials from agreeing rings may be combined.
pub fn same_ring<F: Field>(a: &Arc<Ring<F>>, b: &Arc<Ring<F>>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

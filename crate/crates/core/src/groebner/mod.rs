//! Buchberger Gröbner engine with normal forms, Krull dimension and
//! weighted Hilbert series.

mod buchberger;
mod dimension;
mod hilbert;

pub use buchberger::normal_form;
pub use dimension::monomial_dimension;
pub use hilbert::{HilbertSeries, IntPoly};

use crate::coeff::Field;
use crate::polyring::{Monomial, PolyError, Polynomial, Ring, RingDescriptor};
use serde::{Deserialize, Serialize};
use std::sync::{Arc, OnceLock};

/// Monomial order tag. All computations in this crate use the weighted
/// degree reverse-lexicographic order over the ring's fixed variable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    #[default]
    WeightedDegRevLex,
}

/// Step limits for a Buchberger run. Exceeding a limit yields a structured
/// resource error, never a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: u64,
    pub max_basis: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 2_000_000,
            max_basis: 50_000,
        }
    }
}

impl Budget {
    pub fn with_max_pairs(max_pairs: u64) -> Self {
        Budget {
            max_pairs,
            ..Budget::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GroebnerError {
    #[error(
        "resource budget exceeded: {pairs_processed} S-pairs processed, basis size {basis_size} (budget: {max_pairs} pairs, {max_basis} elements)"
    )]
    Resource {
        pairs_processed: u64,
        basis_size: usize,
        max_pairs: u64,
        max_basis: usize,
    },
    #[error("Hilbert series requires homogeneous generators; `{name}` is not")]
    Inhomogeneous { name: String },
    #[error("generator `{name}` is not a monomial")]
    NonMonomial { name: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A named list of generators with an optional cached Gröbner basis.
#[derive(Debug)]
pub struct Ideal<F: Field> {
    ring: Arc<Ring<F>>,
    generators: Vec<(String, Polynomial<F>)>,
    cached: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let cached = OnceLock::new();
        if let Some(b) = self.cached.get() {
            let _ = cached.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cached,
        }
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<Ring<F>>, generators: Vec<(String, Polynomial<F>)>) -> Self {
        let mut seen = std::collections::HashSet::new();
        for (name, _) in &generators {
            assert!(seen.insert(name.clone()), "duplicate generator name `{name}`");
        }
        Ideal {
            ring: ring.clone(),
            generators,
            cached: OnceLock::new(),
        }
    }

    pub fn from_polynomials(ring: &Arc<Ring<F>>, polys: Vec<Polynomial<F>>) -> Self {
        let generators = polys
            .into_iter()
            .enumerate()
            .map(|(i, p)| (format!("g{}", i + 1), p))
            .collect();
        Self::new(ring, generators)
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[(String, Polynomial<F>)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&Polynomial<F>> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// A new ideal extending this one by further named generators.
    pub fn extended(&self, extra: Vec<(String, Polynomial<F>)>) -> Ideal<F> {
        let mut generators = self.generators.clone();
        generators.extend(extra);
        Ideal::new(&self.ring, generators)
    }

    /// The reduced Gröbner basis, computed on first use and cached.
    pub fn basis(&self, budget: &Budget) -> Result<&GroebnerBasis<F>, GroebnerError> {
        if let Some(b) = self.cached.get() {
            return Ok(b);
        }
        let b = buchberger(self, MonomialOrder::WeightedDegRevLex, budget)?;
        Ok(self.cached.get_or_init(|| b))
    }

    /// Krull dimension of `ring/ideal` via the leading-term ideal.
    pub fn dimension(&self, budget: &Budget) -> Result<isize, GroebnerError> {
        let basis = self.basis(budget)?;
        Ok(basis.dimension())
    }

    /// Weighted Hilbert series of `ring/ideal` for homogeneous ideals.
    pub fn hilbert_series(&self, budget: &Budget) -> Result<HilbertSeries, GroebnerError> {
        for (name, g) in &self.generators {
            if !g.is_zero() && !g.is_homogeneous() {
                return Err(GroebnerError::Inhomogeneous { name: name.clone() });
            }
        }
        let basis = self.basis(budget)?;
        Ok(basis.hilbert_series())
    }
}

/// A reduced Gröbner basis: auto-reduced, monic, sorted by increasing
/// leading monomial. Reduced bases are unique for a fixed ideal and order,
/// so equal ideals yield structurally equal bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring<F>>,
    order: MonomialOrder,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| p.leading_term().expect("basis elements are nonzero").0.clone())
            .collect()
    }

    /// Complete reduction; the result is zero exactly when `f` lies in the
    /// ideal spanned by the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Two-sided membership test for ideal equality.
    pub fn same_ideal_as(&self, other: &GroebnerBasis<F>) -> bool {
        self.elements.iter().all(|g| other.contains(g))
            && other.elements.iter().all(|g| self.contains(g))
    }

    pub fn dimension(&self) -> isize {
        let lts = self.leading_monomials();
        monomial_dimension(&lts, self.ring.num_vars())
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::of_monomial_quotient(&self.leading_monomials(), self.ring.weights())
    }

    /// Re-checks the Buchberger criterion: every S-polynomial of basis
    /// pairs reduces to zero.
    pub fn verify_buchberger_criterion(&self) -> Result<(), (usize, usize)> {
        let weights = self.ring.weights().to_vec();
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = buchberger::s_polynomial(
                    &self.elements[i],
                    &self.elements[j],
                    &weights,
                );
                if !self.normal_form(&s).is_zero() {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    pub fn export(&self) -> BasisExport {
        BasisExport {
            order: self.order,
            ring: self.ring.descriptor(),
            elements: self.elements.iter().map(|p| p.to_string()).collect(),
        }
    }
}

/// Serializable form of a basis: polynomials in the text grammar plus the
/// order tag.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisExport {
    pub order: MonomialOrder,
    pub ring: RingDescriptor,
    pub elements: Vec<String>,
}

/// Runs Buchberger's algorithm and returns the reduced basis.
pub fn buchberger<F: Field>(
    ideal: &Ideal<F>,
    order: MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    let elements = buchberger::run(ideal.ring(), ideal.generators(), budget)?;
    Ok(GroebnerBasis {
        ring: ideal.ring().clone(),
        order,
        elements,
    })
}

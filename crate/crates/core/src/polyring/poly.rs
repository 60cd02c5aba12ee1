use super::{same_ring, Monomial, PolyError, Ring};
use crate::coeff::Field;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// Homogeneity status of a nonzero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    Homogeneous(u32),
    Inhomogeneous,
}

/// Sparse polynomial: terms sorted strictly descending in the weighted
/// degrevlex order, with no zero coefficients. Canonical form makes
/// structural equality coincide with polynomial equality.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<Ring<F>>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring<F>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring<F>>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<Ring<F>>, c: F::Elem) -> Self {
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.num_vars()), c)],
        }
    }

    pub fn variable(ring: &Arc<Ring<F>>, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(
                Monomial::variable(index, ring.num_vars(), ring.weights()),
                ring.field().one(),
            )],
        }
    }

    pub fn var_named(ring: &Arc<Ring<F>>, name: &str) -> Result<Self, PolyError> {
        let idx = ring
            .variable_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::variable(ring, idx))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// dropping zeros.
    pub fn from_terms(ring: &Arc<Ring<F>>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let field = ring.field().clone();
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.exponents().len(), ring.num_vars());
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = field.add(e.get(), &c);
                    if field.is_zero(&sum) {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        let mut terms: Vec<_> = map
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        terms.reverse();
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring<F>> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials from different rings: {} vs {}",
            self.ring.descriptor(),
            other.ring.descriptor()
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match mb.cmp(ma) {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(ca, cb);
                    if !field.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), field.mul(k, c)))
                .collect(),
        }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, k)| (t.mul(m), field.mul(k, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let field = self.ring.field();
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (&self.terms, &other.terms)
        } else {
            (&other.terms, &self.terms)
        };
        for (ma, ca) in small {
            for (mb, cb) in large {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match map.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = field.add(e.get(), &c);
                        if field.is_zero(&sum) {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().collect();
        terms.reverse();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to a variable.
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.ring.num_vars(), "variable index out of range");
        let field = self.ring.field();
        let weights = self.ring.weights();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                let lowered = m.with_exponent(var, e - 1, weights);
                (lowered, field.mul(c, &field.from_i64(e as i64)))
            })
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    pub fn derivative_named(&self, name: &str) -> Result<Self, PolyError> {
        let idx = self
            .ring
            .variable_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.derivative(idx))
    }

    /// Common weighted degree of the terms, or the inhomogeneous marker.
    pub fn weighted_degree(&self) -> Result<Degree, PolyError> {
        let mut it = self.terms.iter();
        let first = it.next().ok_or(PolyError::ZeroDegree)?;
        let d = first.0.weighted_degree();
        if it.all(|(m, _)| m.weighted_degree() == d) {
            Ok(Degree::Homogeneous(d))
        } else {
            Ok(Degree::Inhomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(self.weighted_degree(), Ok(Degree::Homogeneous(_)))
    }

    /// Largest weighted degree among the terms (zero polynomial has none).
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.weighted_degree()).max()
    }

    /// Simultaneous substitution. Variables named in `images` are replaced;
    /// all others must exist in the target ring (they map to themselves).
    pub fn substitute(
        &self,
        images: &HashMap<String, Polynomial<F>>,
        target: &Arc<Ring<F>>,
    ) -> Result<Polynomial<F>, PolyError> {
        for img in images.values() {
            if !same_ring(&img.ring, target) {
                return Err(PolyError::RingMismatch {
                    expected: target.descriptor().to_string(),
                    got: img.ring.descriptor().to_string(),
                });
            }
        }
        // Per-source-variable image, with a lazily grown power cache.
        let mut image_of: Vec<Option<Polynomial<F>>> = Vec::new();
        for name in self.ring.variables() {
            match images.get(name) {
                Some(p) => image_of.push(Some(p.clone())),
                None => match target.variable_index(name) {
                    Some(idx) => image_of.push(Some(Polynomial::variable(target, idx))),
                    None => image_of.push(None),
                },
            }
        }
        let mut powers: Vec<Vec<Polynomial<F>>> = vec![Vec::new(); self.ring.num_vars()];
        let power = |var: usize,
                         e: u16,
                         image_of: &[Option<Polynomial<F>>],
                         powers: &mut Vec<Vec<Polynomial<F>>>|
         -> Result<Polynomial<F>, PolyError> {
            let base = image_of[var]
                .as_ref()
                .ok_or_else(|| PolyError::UnknownVariable(self.ring.variable_name(var).into()))?;
            let cache = &mut powers[var];
            if cache.is_empty() {
                cache.push(Polynomial::one(target));
            }
            while cache.len() <= e as usize {
                let next = cache.last().unwrap().mul(base);
                cache.push(next);
            }
            Ok(cache[e as usize].clone())
        };
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for var in m.support() {
                let p = power(var, m.exponent(var), &image_of, &mut powers)?;
                prod = prod.mul(&p);
            }
            acc = acc.add(&prod);
        }
        Ok(acc)
    }

    /// Substitution by variable index within the same ring.
    pub fn substitute_indexed(
        &self,
        images: &HashMap<usize, Polynomial<F>>,
    ) -> Result<Polynomial<F>, PolyError> {
        let by_name: HashMap<String, Polynomial<F>> = images
            .iter()
            .map(|(i, p)| (self.ring.variable_name(*i).to_string(), p.clone()))
            .collect();
        self.substitute(&by_name, &self.ring)
    }

    /// Evaluates at a point, one field element per ring variable.
    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.ring.num_vars());
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for var in m.support() {
                v = field.mul(&v, &field.pow(&point[var], m.exponent(var) as u64));
            }
            acc = field.add(&acc, &v);
        }
        acc
    }

    /// Moves the polynomial to an identically-shaped ring (same variable
    /// names) or a super-ring, by name lookup.
    pub fn into_ring(&self, target: &Arc<Ring<F>>) -> Result<Polynomial<F>, PolyError> {
        self.substitute(&HashMap::new(), target)
    }

    /// Makes the leading coefficient one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self
                    .ring
                    .field()
                    .inv(lc)
                    .expect("leading coefficient of a nonzero polynomial");
                self.scale(&inv)
            }
        }
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for var in m.support() {
            let e = m.exponent(var);
            if e == 1 {
                parts.push(self.ring.variable_name(var).to_string());
            } else {
                parts.push(format!("{}^{}", self.ring.variable_name(var), e));
            }
        }
        parts.join("*")
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign, c) = match field.as_positive(c) {
                Some(abs) => ("-", abs),
                None => ("+", c.clone()),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coef_text = field.format_elem(&c);
            let needs_parens =
                coef_text.contains(['+', 'w']) || coef_text[1..].contains('-');
            if m.is_one() {
                if needs_parens {
                    write!(f, "({coef_text})")?;
                } else {
                    write!(f, "{coef_text}")?;
                }
            } else if field.is_one(&c) {
                write!(f, "{}", self.format_monomial(m))?;
            } else if needs_parens {
                write!(f, "({coef_text})*{}", self.format_monomial(m))?;
            } else {
                write!(f, "{coef_text}*{}", self.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

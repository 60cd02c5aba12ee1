use super::{Monomial, PolyError, Polynomial, Ring};
use crate::coeff::{parse_rational_pair, Field};
use num::BigRational;
use std::sync::Arc;

/// Parses the polynomial grammar
///
/// ```text
/// poly   := ['-'] term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := var ['^' nat] | int ['/' nat] | '(' a ('+'|'-') b '*w' ')'
/// ```
///
/// Whitespace is insignificant. Variable names come from the ring.
pub fn parse_poly<F: Field>(text: &str, ring: &Arc<Ring<F>>) -> Result<Polynomial<F>, PolyError> {
    Parser {
        bytes: text.as_bytes(),
        pos: 0,
        ring,
    }
    .parse()
}

struct Parser<'a, F: Field> {
    bytes: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring<F>>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err<T>(&self, reason: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            position: self.pos,
            reason: reason.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn parse(mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            Some(_) => false,
            None => return self.err("empty polynomial"),
        };
        loop {
            let term = self.parse_term()?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                Some(c) => return self.err(format!("expected '+' or '-', found '{}'", c as char)),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial<F>, PolyError> {
        let field = self.ring.field().clone();
        let mut coef = field.one();
        let mut exps = vec![0u16; self.ring.num_vars()];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let (a, b) = self.parse_number()?;
                    coef = field.mul(&coef, &field.from_rational_pair(&a, &b)?);
                }
                Some(b'(') => {
                    let (a, b) = self.parse_paren_pair()?;
                    coef = field.mul(&coef, &field.from_rational_pair(&a, &b)?);
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let (var, e) = self.parse_var_power()?;
                    exps[var] = exps[var]
                        .checked_add(e)
                        .ok_or_else(|| PolyError::Syntax {
                            position: self.pos,
                            reason: "exponent overflow".into(),
                        })?;
                }
                Some(c) => return self.err(format!("unexpected '{}'", c as char)),
                None => return self.err("unexpected end of input"),
            }
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let m = Monomial::from_exponents(&exps, self.ring.weights());
        Ok(Polynomial::from_terms(self.ring, vec![(m, coef)]))
    }

    fn parse_number(&mut self) -> Result<(BigRational, BigRational), PolyError> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        let mut text =
            std::str::from_utf8(&self.bytes[start..self.pos]).unwrap().to_string();
        // A '/' directly after an integer continues the rational literal.
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let dstart = self.pos;
                while self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_digit())
                {
                    self.pos += 1;
                }
                text.push('/');
                text.push_str(std::str::from_utf8(&self.bytes[dstart..self.pos]).unwrap());
            } else {
                self.pos = save;
            }
        }
        parse_rational_pair(&text).map_err(|e| PolyError::Syntax {
            position: start,
            reason: e.to_string(),
        })
    }

    fn parse_paren_pair(&mut self) -> Result<(BigRational, BigRational), PolyError> {
        let open = self.pos;
        self.bump();
        let start = self.pos;
        let mut depth = 1usize;
        while let Some(&c) = self.bytes.get(self.pos) {
            match c {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        let inner = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                        self.pos += 1;
                        return parse_rational_pair(inner).map_err(|e| PolyError::Syntax {
                            position: start,
                            reason: e.to_string(),
                        });
                    }
                }
                _ => {}
            }
            self.pos += 1;
        }
        self.pos = open;
        self.err("unbalanced parenthesis")
    }

    fn parse_var_power(&mut self) -> Result<(usize, u16), PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric())
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let var = self
            .ring
            .variable_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut e = 1u16;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let estart = self.pos;
            while self
                .bytes
                .get(self.pos)
                .is_some_and(|c| c.is_ascii_digit())
            {
                self.pos += 1;
            }
            if estart == self.pos {
                return self.err("expected exponent after '^'");
            }
            e = std::str::from_utf8(&self.bytes[estart..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| PolyError::Syntax {
                    position: estart,
                    reason: "exponent out of range".into(),
                })?;
        }
        Ok((var, e))
    }
}

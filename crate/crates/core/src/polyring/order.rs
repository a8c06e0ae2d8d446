use std::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

/// Lexicographic term order with a variable precedence.
///
/// The default (`TermOrder::lex()`) ranks variables in index order, so with
/// variables `x, y` it compares `x`-exponents first. A custom precedence is a
/// permutation listing variable indices from most to least significant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TermOrder {
    precedence: Option<Vec<usize>>,
}

impl TermOrder {
    pub fn lex() -> Self {
        TermOrder { precedence: None }
    }

    pub fn lex_with_precedence(precedence: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; precedence.len()];
        for &v in &precedence {
            if v >= seen.len() || seen[v] {
                return Err(Error::InvalidOrder(format!(
                    "{precedence:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        if precedence.iter().enumerate().all(|(i, &v)| i == v) {
            return Ok(Self::lex());
        }
        Ok(TermOrder {
            precedence: Some(precedence),
        })
    }

    /// True when the order agrees with the derived `Ord` on [`Monomial`].
    pub fn is_natural(&self) -> bool {
        self.precedence.is_none()
    }

    pub fn precedence(&self) -> Option<&[usize]> {
        self.precedence.as_deref()
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        if u.arity() != v.arity() {
            return Err(Error::ArityMismatch {
                left: u.arity(),
                right: v.arity(),
            });
        }
        if let Some(p) = &self.precedence {
            if p.len() != u.arity() {
                return Err(Error::ArityMismatch {
                    left: p.len(),
                    right: u.arity(),
                });
            }
        }
        Ok(self.cmp(u, v))
    }

    /// Unchecked comparison; arities must already agree.
    pub(crate) fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match &self.precedence {
            None => u.cmp(v),
            Some(p) => p
                .iter()
                .map(|&i| u.exponent(i).cmp(&v.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
        }
    }
}

/// Compares two monomials under `ord`.
pub fn lex_compare(u: &Monomial, v: &Monomial, ord: &TermOrder) -> Result<Ordering> {
    ord.compare(u, v)
}

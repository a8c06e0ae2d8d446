use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, TermOrder};
use crate::error::{Error, Result};

/// Sparse polynomial over the integers in a fixed number of variables.
///
/// Terms live in a map keyed by [`Monomial`]; zero coefficients are never
/// stored, so the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    arity: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Polynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one(arity))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Self::zero(m.arity());
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `x_var` as a polynomial.
    pub fn var(arity: usize, var: usize) -> Self {
        Self::term(1, Monomial::var(arity, var))
    }

    /// Builds a polynomial from (coefficient, monomial) pairs, summing repeats.
    pub fn from_terms<C: Into<BigInt>>(
        arity: usize,
        terms: impl IntoIterator<Item = (C, Monomial)>,
    ) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (c, m) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: m.arity(),
                });
            }
            p.add_term(c.into(), m);
        }
        Ok(p)
    }

    /// Bivariate convenience constructor from `(c, i, j)` meaning `c x^i y^j`.
    pub fn from_xy<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, u32, u32)>) -> Self {
        let mut p = Self::zero(2);
        for (c, i, j) in terms {
            p.add_term(c.into(), Monomial::xy(i, j));
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in ascending natural lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &BigInt)> {
        if order.is_natural() {
            self.terms.last_key_value()
        } else {
            self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
        }
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn leading_coeff(&self, order: &TermOrder) -> Option<&BigInt> {
        self.leading_term(order).map(|(_, c)| c)
    }

    pub(crate) fn remove_term(&mut self, m: &Monomial) -> Option<BigInt> {
        self.terms.remove(m)
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, c: BigInt, m: Monomial) {
        debug_assert_eq!(m.arity(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, c: &BigInt, m: &Monomial, other: &Polynomial) {
        debug_assert_eq!(other.arity, self.arity);
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(c * oc, om.mul(m));
        }
    }

    fn check_arity(&self, other: &Polynomial) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(-c, m.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_arity(other)?;
        let mut out = Polynomial::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_scaled(c, m, other);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.arity);
        }
        Polynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.arity);
        out.add_scaled(c, m, self);
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.arity);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    /// Substitutes integer values for all variables.
    pub fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: point.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.exponents()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, v)| acc * v.pow(e))
            })
            .sum())
    }

    /// Renames variables: variable `i` of `self` becomes variable `map[i]` of
    /// a polynomial with `arity` variables.
    pub fn remap(&self, map: &[usize], arity: usize) -> Result<Polynomial> {
        if map.len() != self.arity || map.iter().any(|&v| v >= arity) {
            return Err(Error::InvalidArgument(format!(
                "variable map {map:?} does not fit arity {arity}"
            )));
        }
        let mut out = Polynomial::zero(arity);
        for (m, c) in &self.terms {
            let mut e = vec![0; arity];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(c.clone(), Monomial::new(e));
        }
        Ok(out)
    }

    /// Multiplies by a unit so that the leading coefficient is positive.
    pub(crate) fn normalize_sign(&mut self, order: &TermOrder) -> bool {
        if self.leading_coeff(order).is_some_and(|c| c.is_negative()) {
            for v in self.terms.values_mut() {
                *v = -std::mem::take(v);
            }
            true
        } else {
            false
        }
    }

    /// Terms sorted for display: ascending total degree, then descending lex.
    pub(crate) fn display_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| match a.0.degree().cmp(&b.0.degree()) {
            Ordering::Equal => b.0.cmp(a.0),
            o => o,
        });
        v
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.arity <= 2 {
            write!(f, "{}", super::format_poly(self))
        } else {
            f.debug_map().entries(self.terms.iter()).finish()
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on arity mismatch; use the `try_` form to get an error.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomial arity mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Applies a ring operation after checking arities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

//! Short rational forms of triangle transforms.
//!
//! Summing the two-variable geometric series at the three vertices of the
//! triangle gives
//!
//! ```text
//! T(m) = 1/((1-x)(1-y)) + x^(m+1)/((x-1)(x-y)) + y^(m+1)/((y-1)(y-x))
//! ```
//!
//! which is checked here by clearing denominators rather than by rational
//! function arithmetic.

use num_bigint::BigInt;
use num_traits::One;

use crate::bones::triangle;
use crate::polyring::{complete_homogeneous, Monomial, Polynomial};

/// `sum numerator / prod(denominator factors)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    pub terms: Vec<(Polynomial, Vec<Polynomial>)>,
}

impl RationalForm {
    /// Product of every denominator factor of every term.
    pub fn common_denominator(&self) -> Polynomial {
        self.terms
            .iter()
            .flat_map(|(_, den)| den)
            .fold(Polynomial::one(2), |acc, f| &acc * f)
    }

    /// Numerator over [`Self::common_denominator`].
    pub fn combined_numerator(&self) -> Polynomial {
        let mut out = Polynomial::zero(2);
        for (i, (num, _)) in self.terms.iter().enumerate() {
            let others = self
                .terms
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .flat_map(|(_, (_, den))| den)
                .fold(num.clone(), |acc, f| &acc * f);
            out = out + others;
        }
        out
    }

    /// Whether the form equals the polynomial `p`, by cross-multiplication.
    pub fn denotes(&self, p: &Polynomial) -> bool {
        self.combined_numerator() == p * &self.common_denominator()
    }
}

fn x() -> Polynomial {
    Polynomial::var(2, 0)
}

fn y() -> Polynomial {
    Polynomial::var(2, 1)
}

/// The three-vertex form of `T(m)`.
pub fn rational_form_t(m: u32) -> RationalForm {
    let one = Polynomial::one(2);
    let (x, y) = (x(), y());
    let top = |mono| Polynomial::term(BigInt::one(), mono);
    RationalForm {
        terms: vec![
            (one.clone(), vec![&one - &x, &one - &y]),
            (top(Monomial::xy(m + 1, 0)), vec![&x - &one, &x - &y]),
            (top(Monomial::xy(0, m + 1)), vec![&y - &one, &y - &x]),
        ],
    }
}

/// `(1 - x)(1 - y)(x - y)`.
pub fn brion_denominator() -> Polynomial {
    let one = Polynomial::one(2);
    let (x, y) = (x(), y());
    &(&(&one - &x) * &(&one - &y)) * &(&x - &y)
}

/// `(x - y) - x^(m+1) (1 - y) + y^(m+1) (1 - x)`.
pub fn brion_numerator(m: u32) -> Polynomial {
    let one = Polynomial::one(2);
    let (x, y) = (x(), y());
    let xm = Polynomial::term(1, Monomial::xy(m + 1, 0));
    let ym = Polynomial::term(1, Monomial::xy(0, m + 1));
    &(&(&x - &y) - &(&xm * &(&one - &y))) + &(&ym * &(&one - &x))
}

/// Checks `T(m) * (1-x)(1-y)(x-y) = brion_numerator(m)` and that the
/// three-term form denotes `T(m)`.
pub fn verify_brion(m: u32) -> bool {
    let t = triangle(m);
    &t * &brion_denominator() == brion_numerator(m) && rational_form_t(m).denotes(&t)
}

/// `T(m)` built row by row from `T(k) = T(k-1) + b3(k)`.
pub fn fast_triangle(m: u32) -> Polynomial {
    (1..=m).fold(Polynomial::zero(2), |acc, k| acc + complete_homogeneous(k))
}

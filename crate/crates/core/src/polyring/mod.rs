//! Sparse multivariate polynomials over the integers.

mod coeff;
mod monomial;
mod order;
mod polynomial;
mod text;

pub use coeff::{bezout, coeff_divmod, CoeffConvention};
pub(crate) use coeff::{divides, is_unit, lcm};
pub use monomial::Monomial;
pub use order::{lex_compare, TermOrder};
pub use polynomial::{poly_arith, ArithOp, Polynomial};
pub use text::{default_vars, format_poly, format_poly_with, parse_poly, parse_poly_in};

use crate::error::{Error, Result};

/// `(p(x) - p(y)) / (x - y)` for a polynomial `p` in `x` alone.
///
/// Accepts `p` with one variable or with two variables and no `y`; the result
/// is always bivariate in `x, y`.
pub fn diff_quotient(p: &Polynomial) -> Result<Polynomial> {
    let degree_in_x = |m: &Monomial| match m.arity() {
        1 => Ok(m.exponent(0)),
        2 if m.exponent(1) == 0 => Ok(m.exponent(0)),
        _ => Err(Error::NotUnivariate),
    };
    let mut out = Polynomial::zero(2);
    for (m, c) in p.terms() {
        let k = degree_in_x(m)?;
        // (x^k - y^k)/(x - y) = sum_{i<k} x^{k-1-i} y^i
        for i in 0..k {
            out.add_term(c.clone(), Monomial::xy(k - 1 - i, i));
        }
    }
    Ok(out)
}

/// `1 + x + ... + x^{n-1}` in two variables.
pub fn geometric_x(n: u32) -> Polynomial {
    Polynomial::from_xy((0..n).map(|i| (1, i, 0)))
}

/// `1 + y + ... + y^{n-1}` in two variables.
pub fn geometric_y(n: u32) -> Polynomial {
    Polynomial::from_xy((0..n).map(|i| (1, 0, i)))
}

/// `x^{n-1} + x^{n-2} y + ... + y^{n-1}`; zero for `n = 0`.
pub fn complete_homogeneous(n: u32) -> Polynomial {
    Polynomial::from_xy((0..n).map(|i| (1, n - 1 - i, i)))
}

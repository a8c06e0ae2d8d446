use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{bezout, lcm, Monomial, Polynomial, TermOrder};

/// A combination `left.0 * left.1 * g + right.0 * right.1 * h`.
pub(crate) struct Combination {
    pub left: (BigInt, Monomial),
    pub right: (BigInt, Monomial),
}

impl Combination {
    pub fn apply(&self, g: &Polynomial, h: &Polynomial) -> Polynomial {
        let mut out = g.mul_term(&self.left.0, &self.left.1);
        out.add_scaled(&self.right.0, &self.right.1, h);
        out
    }
}

type Term<'a> = (&'a Monomial, &'a BigInt);

fn leads<'a>(
    g: &'a Polynomial,
    h: &'a Polynomial,
    order: &TermOrder,
) -> Result<(Term<'a>, Term<'a>)> {
    if g.arity() != h.arity() {
        return Err(Error::ArityMismatch {
            left: g.arity(),
            right: h.arity(),
        });
    }
    match (g.leading_term(order), h.leading_term(order)) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::ZeroPolynomial),
    }
}

pub(crate) fn s_combination(
    g: &Polynomial,
    h: &Polynomial,
    order: &TermOrder,
) -> Result<Combination> {
    let ((mg, cg), (mh, ch)) = leads(g, h, order)?;
    let l = lcm(cg, ch);
    let m = mg.lcm(mh);
    Ok(Combination {
        left: (&l / cg, m.div(mg).expect("lcm is a multiple")),
        right: (-(&l / ch), m.div(mh).expect("lcm is a multiple")),
    })
}

pub(crate) fn g_combination(
    g: &Polynomial,
    h: &Polynomial,
    order: &TermOrder,
) -> Result<Combination> {
    let ((mg, cg), (mh, ch)) = leads(g, h, order)?;
    let (_, u, v) = bezout(cg, ch);
    let m = mg.lcm(mh);
    Ok(Combination {
        left: (u, m.div(mg).expect("lcm is a multiple")),
        right: (v, m.div(mh).expect("lcm is a multiple")),
    })
}

/// S-polynomial `(L/LT(g)) g - (L/LT(h)) h` with
/// `L = lcm(LC(g), LC(h)) * lcm(LM(g), LM(h))`.
pub fn s_polynomial(g: &Polynomial, h: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    Ok(s_combination(g, h, order)?.apply(g, h))
}

/// G-polynomial `u (M/LM(g)) g + v (M/LM(h)) h` with `M = lcm(LM(g), LM(h))`
/// and `u LC(g) + v LC(h) = gcd(LC(g), LC(h))`; its leading term is
/// `gcd(LC(g), LC(h)) * M`.
pub fn g_polynomial(g: &Polynomial, h: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    Ok(g_combination(g, h, order)?.apply(g, h))
}

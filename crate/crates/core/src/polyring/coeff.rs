use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// How an integer coefficient is reduced modulo a leading coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoeffConvention {
    /// Remainder of least absolute value, `0 < +1 < -1 < +2 < -2 < ...`;
    /// ties go to the positive representative.
    MinAbs,
    /// Non-negative remainder, `0 < +1 < +2 < ... < -1 < -2 < ...`.
    #[default]
    NonNeg,
}

impl CoeffConvention {
    pub fn as_str(self) -> &'static str {
        match self {
            CoeffConvention::MinAbs => "minabs",
            CoeffConvention::NonNeg => "nonneg",
        }
    }
}

impl fmt::Display for CoeffConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoeffConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minabs" => Ok(CoeffConvention::MinAbs),
            "nonneg" => Ok(CoeffConvention::NonNeg),
            other => Err(Error::InvalidArgument(format!(
                "unknown coefficient convention {other:?}"
            ))),
        }
    }
}

/// Divides `a` by `d` so that `a = q*d + r` with `r` the least element of
/// `a + dZ` under `conv`.
pub fn coeff_divmod(a: &BigInt, d: &BigInt, conv: CoeffConvention) -> Result<(BigInt, BigInt)> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let m = d.abs();
    let mut r = a.mod_floor(&m);
    if conv == CoeffConvention::MinAbs && (&r << 1usize) > m {
        r -= &m;
    }
    let q = (a - &r) / d;
    Ok((q, r))
}

/// Bézout coefficients `(g, u, v)` with `u*a + v*b = g = gcd(a, b) >= 0`.
///
/// Among all solutions `u` has least absolute value; remaining ties prefer the
/// smaller `|v|`, then positive `u`.
pub fn bezout(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let eg = a.extended_gcd(b);
    let (g, u0) = if eg.gcd.is_negative() {
        (-eg.gcd, -eg.x)
    } else {
        (eg.gcd, eg.x)
    };
    if g.is_zero() {
        return (g, BigInt::zero(), BigInt::zero());
    }
    if b.is_zero() {
        return (g, a.signum(), BigInt::zero());
    }
    let step = (b / &g).abs();
    let base = u0.mod_floor(&step);
    let v_for = |u: &BigInt| (&g - u * a) / b;
    let mut best: Option<(BigInt, BigInt)> = None;
    for u in [base.clone() - &step, base.clone(), base + &step] {
        let v = v_for(&u);
        let better = match &best {
            None => true,
            Some((bu, bv)) => {
                (u.abs(), v.abs(), u.is_negative()) < (bu.abs(), bv.abs(), bu.is_negative())
            }
        };
        if better {
            best = Some((u, v));
        }
    }
    let (u, v) = best.expect("three candidates");
    debug_assert_eq!(&u * a + &v * b, g);
    (g, u, v)
}

pub(crate) fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b).abs()
}

pub(crate) fn divides(d: &BigInt, a: &BigInt) -> bool {
    if d.is_zero() {
        return a.is_zero();
    }
    a.is_multiple_of(d)
}

pub(crate) fn is_unit(c: &BigInt) -> bool {
    c.abs().is_one()
}

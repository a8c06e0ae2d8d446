//! The n-in-line polyomino ("n-bone") ideal `I_n = <b1, b2, b3>` in `Z[x, y]`,
//! its explicit four-element strong basis and closed-form remainders of
//! triangular regions.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::groebner::{Cofactors, GroebnerBasis};
use crate::polyring::{
    complete_homogeneous, geometric_x, geometric_y, CoeffConvention, Polynomial, TermOrder,
};

/// Newton polynomial of the triangle of side `m`: `sum x^i y^j` over `i + j <= m - 1`.
pub fn triangle(m: u32) -> Polynomial {
    Polynomial::from_xy((0..m).flat_map(|i| (0..m - i).map(move |j| (1, i, j))))
}

/// The three n-bones and the explicit basis `g1..g4` of their ideal.
#[derive(Clone, Debug)]
pub struct BoneSystem {
    n: u32,
    b1: Polynomial,
    b2: Polynomial,
    b3: Polynomial,
    gbi: GroebnerBasis,
}

impl BoneSystem {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Horizontal bone `1 + x + ... + x^{n-1}`.
    pub fn b1(&self) -> &Polynomial {
        &self.b1
    }

    /// Vertical bone `1 + y + ... + y^{n-1}`.
    pub fn b2(&self) -> &Polynomial {
        &self.b2
    }

    /// Diagonal bone `x^{n-1} + x^{n-2} y + ... + y^{n-1}`.
    pub fn b3(&self) -> &Polynomial {
        &self.b3
    }

    pub fn generators(&self) -> [&Polynomial; 3] {
        [&self.b1, &self.b2, &self.b3]
    }

    /// `{b1, b2, n T(n-1), b3 - b1 - b2}` with cofactors over `(b1, b2, b3)`.
    pub fn gbi(&self) -> &GroebnerBasis {
        &self.gbi
    }

    pub fn into_gbi(self) -> GroebnerBasis {
        self.gbi
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "bone length must be >= 2, got {n}"
        )));
    }
    Ok(())
}

/// Builds the n-bone system with the non-negative coefficient convention.
pub fn bone_system(n: u32) -> Result<BoneSystem> {
    bone_system_with(n, CoeffConvention::NonNeg)
}

pub fn bone_system_with(n: u32, conv: CoeffConvention) -> Result<BoneSystem> {
    check_n(n)?;
    let b1 = geometric_x(n);
    let b2 = geometric_y(n);
    let b3 = complete_homogeneous(n);
    let elements = gbi_elements(n)?.to_vec();
    let cofactors = Cofactors {
        generators: vec![b1.clone(), b2.clone(), b3.clone()],
        rows: gbi_cofactors(n)?,
    };
    let mut gbi =
        GroebnerBasis::new(elements, TermOrder::lex(), conv)?.with_cofactors(cofactors)?;
    let report = gbi.verify();
    if !report.is_pass() {
        return Err(Error::Internal(format!(
            "explicit basis for n={n} failed verification: {report:?}"
        )));
    }
    Ok(BoneSystem { n, b1, b2, b3, gbi })
}

/// `[g1, g2, g3, g4] = [b1, b2, n T(n-1), b3 - b1 - b2]`.
pub fn gbi_elements(n: u32) -> Result<[Polynomial; 4]> {
    check_n(n)?;
    let b1 = geometric_x(n);
    let b2 = geometric_y(n);
    let g3 = triangle(n - 1).scale(&BigInt::from(n));
    let g4 = &(&complete_homogeneous(n) - &b1) - &b2;
    Ok([b1, b2, g3, g4])
}

/// Rows expressing `g1..g4` over `(b1, b2, b3)`.
///
/// The `g3` row is `(T(n-1), C, -C)` with `C = sum_{i<n-1} (n-1-i) x^i`, from
/// summing `(x^k - 1) T(n-1) = (1 + ... + x^{k-1})(b3 - b2)` over `k < n`.
pub fn gbi_cofactors(n: u32) -> Result<Vec<Vec<Polynomial>>> {
    check_n(n)?;
    let zero = Polynomial::zero(2);
    let one = Polynomial::one(2);
    let c = Polynomial::from_xy((0..n - 1).map(|i| (n - 1 - i, i, 0)));
    Ok(vec![
        vec![one.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), one.clone(), zero],
        vec![triangle(n - 1), c.clone(), -c],
        vec![-&one, -&one, one],
    ])
}

/// Closed-form remainder of `b3(m)` modulo the explicit basis: `b3(m mod n)`.
pub fn b3_remainder(m: u64, n: u32) -> Result<Polynomial> {
    check_n(n)?;
    Ok(complete_homogeneous((m % u64::from(n)) as u32))
}

/// Closed-form remainder of `T(m)` modulo the explicit basis under the non-negative
/// convention. With `m' = m mod n^2` it is zero for `m'` in `{0, n^2 - 1}` and
/// `sum_{k=1}^{m'} b3(k mod n)` otherwise.
pub fn t_remainder_closed(m: u64, n: u32) -> Result<Polynomial> {
    check_n(n)?;
    let n = u64::from(n);
    let period = n * n;
    let mp = m % period;
    if mp == 0 || mp == period - 1 {
        return Ok(Polynomial::zero(2));
    }
    // b3(r) appears once for each k <= m' with k = r (mod n).
    let mut out = Polynomial::zero(2);
    for r in 1..n {
        let count = if mp >= r { (mp - r) / n + 1 } else { 0 };
        if count > 0 {
            out = out + complete_homogeneous(r as u32).scale(&BigInt::from(count));
        }
    }
    Ok(out)
}

/// Whether the triangle `T(m)` admits a signed tiling by n-bones:
/// `m = 0` or `m = -1` modulo `n^2`.
pub fn decide_nbone(m: u64, n: u32) -> Result<bool> {
    check_n(n)?;
    let period = u64::from(n) * u64::from(n);
    let r = m % period;
    Ok(r == 0 || r == period - 1)
}

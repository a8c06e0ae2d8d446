use num_integer::Integer;

use super::pairs::s_combination;
use super::reduce::reduce_by;
use super::GroebnerBasis;
use crate::polyring::{divides, Polynomial};

/// Outcome of checking the two pairwise conditions of the strong-basis
/// criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyReport {
    Pass,
    /// No element `h` has `LM(h) | lcm(LM)` and `LC(h) | gcd(LC)` for the pair.
    MissingGcdElement {
        pair: (usize, usize),
    },
    /// The S-polynomial of the pair has a nonzero remainder.
    NonzeroRemainder {
        pair: (usize, usize),
        remainder: Polynomial,
    },
}

impl VerifyReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, VerifyReport::Pass)
    }
}

/// Checks, for every pair of elements, that (1) some element's leading term
/// divides `gcd(LC) * lcm(LM)` and (2) the S-polynomial reduces to zero.
/// Returns the first failing pair in lexicographic pair order.
pub fn verify_strong_gb(basis: &GroebnerBasis) -> VerifyReport {
    let leads = basis.leading_terms();
    let elems = basis.elements();
    for j in 0..elems.len() {
        for i in 0..j {
            let (mi, ci) = &leads[i];
            let (mj, cj) = &leads[j];
            let m = mi.lcm(mj);
            let g = ci.gcd(cj);
            if !leads
                .iter()
                .any(|(lm, lc)| lm.divides(&m) && divides(lc, &g))
            {
                return VerifyReport::MissingGcdElement { pair: (i, j) };
            }
            let s = s_combination(&elems[i], &elems[j], basis.order())
                .expect("nonzero elements")
                .apply(&elems[i], &elems[j]);
            let r = reduce_by(&s, elems, basis.order(), basis.convention(), |c| c[0]);
            if !r.remainder.is_zero() {
                return VerifyReport::NonzeroRemainder {
                    pair: (i, j),
                    remainder: r.remainder,
                };
            }
        }
    }
    VerifyReport::Pass
}

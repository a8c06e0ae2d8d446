use num_bigint::BigInt;
use num_traits::Zero;

use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::polyring::{coeff_divmod, CoeffConvention, Monomial, Polynomial, TermOrder};

/// `f = sum quotients[i] * basis[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Strong reduction of `f` by `basis`.
///
/// The current leading term is reduced by the first basis element (in list
/// order) whose leading monomial divides it and whose leading coefficient
/// yields a nonzero quotient under the basis' convention. When no element
/// applies the term moves to the remainder and reduction continues on the
/// tail.
pub fn reduce(f: &Polynomial, basis: &GroebnerBasis) -> Result<ReductionResult> {
    reduce_with(f, basis, |candidates| candidates[0])
}

/// [`reduce`] with a caller-supplied choice among the applicable elements.
/// `choose` receives the applicable indices in list order and returns one.
pub fn reduce_with(
    f: &Polynomial,
    basis: &GroebnerBasis,
    choose: impl FnMut(&[usize]) -> usize,
) -> Result<ReductionResult> {
    if f.arity() != basis.arity() {
        return Err(Error::ArityMismatch {
            left: f.arity(),
            right: basis.arity(),
        });
    }
    Ok(reduce_by(
        f,
        basis.elements(),
        basis.order(),
        basis.convention(),
        choose,
    ))
}

pub(crate) fn reduce_by(
    f: &Polynomial,
    elements: &[Polynomial],
    order: &TermOrder,
    conv: CoeffConvention,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> ReductionResult {
    let arity = f.arity();
    let leads: Vec<(Monomial, BigInt)> = elements
        .iter()
        .map(|e| {
            let (m, c) = e.leading_term(order).expect("nonzero basis element");
            (m.clone(), c.clone())
        })
        .collect();
    let mut quotients = vec![Polynomial::zero(arity); elements.len()];
    let mut remainder = Polynomial::zero(arity);
    let mut p = f.clone();
    let mut candidates = Vec::new();
    let mut steps = Vec::new();
    while let Some((m, c)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        candidates.clear();
        steps.clear();
        for (i, (lm, lc)) in leads.iter().enumerate() {
            if let Some(shift) = m.div(lm) {
                let (q, _) = coeff_divmod(&c, lc, conv).expect("nonzero leading coefficient");
                if !q.is_zero() {
                    candidates.push(i);
                    steps.push((q, shift));
                }
            }
        }
        if candidates.is_empty() {
            p.remove_term(&m);
            remainder.add_term(c, m);
            continue;
        }
        let pick = choose(&candidates);
        let k = candidates
            .iter()
            .position(|&i| i == pick)
            .expect("choice must be one of the candidates");
        let (q, shift) = &steps[k];
        p.add_scaled(&-q, shift, &elements[pick]);
        quotients[pick].add_term(q.clone(), shift.clone());
    }
    ReductionResult {
        quotients,
        remainder,
    }
}

/// Ideal membership by reduction against a verified strong basis.
///
/// Returns `Some(quotients)` with `f = sum quotients[i] * basis[i]` when `f`
/// lies in the ideal and `None` otherwise.
pub fn ideal_member(f: &Polynomial, basis: &GroebnerBasis) -> Result<Option<Vec<Polynomial>>> {
    if !basis.is_verified() {
        return Err(Error::UnverifiedBasis);
    }
    let r = reduce(f, basis)?;
    Ok(r.remainder.is_zero().then_some(r.quotients))
}

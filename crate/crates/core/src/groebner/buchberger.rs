use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::pairs::{g_combination, s_combination};
use super::reduce::reduce_by;
use super::{Cofactors, GroebnerBasis};
use crate::error::{Error, Result};
use crate::polyring::{divides, CoeffConvention, Monomial, Polynomial, TermOrder};

/// Completes `generators` to a strong Gröbner basis over the integers.
///
/// Critical pairs are processed first-in first-out; every accepted element is
/// appended and its pairs with all earlier elements join the back of the
/// queue. For each pair the G-polynomial is added (tail-reduced) when no
/// element already has a leading term dividing `gcd(LC) * lcm(LM)`, and the
/// S-polynomial remainder is added when nonzero. Pairs whose leading
/// monomials and leading coefficients are both coprime skip the S-step.
///
/// The finished basis drops elements whose leading term is divisible by
/// another's, tail-reduces the rest, makes leading coefficients positive and
/// is verified before it is returned.
pub fn buchberger(
    generators: &[Polynomial],
    order: &TermOrder,
    conv: CoeffConvention,
    track_cofactors: bool,
) -> Result<GroebnerBasis> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    let arity = first.arity();
    for g in generators {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if g.arity() != arity {
            return Err(Error::ArityMismatch {
                left: arity,
                right: g.arity(),
            });
        }
    }

    let mut state = Completion {
        order,
        conv,
        arity,
        elems: Vec::new(),
        leads: Vec::new(),
        rows: track_cofactors.then(Vec::new),
        pairs: VecDeque::new(),
    };
    for (j, g) in generators.iter().enumerate() {
        let row = track_cofactors.then(|| {
            let mut row = vec![Polynomial::zero(arity); generators.len()];
            row[j] = Polynomial::one(arity);
            row
        });
        state.push(g.clone(), row);
    }
    while let Some((i, j)) = state.pairs.pop_front() {
        state.process_pair(i, j);
    }
    let (elements, rows) = state.interreduce();

    let cofactors = rows.map(|rows| Cofactors {
        generators: generators.to_vec(),
        rows,
    });
    let mut basis = GroebnerBasis::from_parts(elements, order.clone(), conv, cofactors, false);
    let report = basis.verify();
    if !report.is_pass() {
        return Err(Error::Internal(format!(
            "completion produced a non-strong basis: {report:?}"
        )));
    }
    Ok(basis)
}

struct Completion<'a> {
    order: &'a TermOrder,
    conv: CoeffConvention,
    arity: usize,
    elems: Vec<Polynomial>,
    leads: Vec<(Monomial, BigInt)>,
    rows: Option<Vec<Vec<Polynomial>>>,
    pairs: VecDeque<(usize, usize)>,
}

impl Completion<'_> {
    fn push(&mut self, mut p: Polynomial, mut row: Option<Vec<Polynomial>>) {
        if p.normalize_sign(self.order) {
            if let Some(r) = row.as_mut() {
                for c in r.iter_mut() {
                    *c = -&*c;
                }
            }
        }
        let (m, c) = p.leading_term(self.order).expect("nonzero");
        self.leads.push((m.clone(), c.clone()));
        let k = self.elems.len();
        self.elems.push(p);
        if let (Some(rows), Some(row)) = (self.rows.as_mut(), row) {
            rows.push(row);
        }
        for i in 0..k {
            self.pairs.push_back((i, k));
        }
    }

    /// Cofactor row of `sum mult * elems[idx]`.
    fn combine(&self, terms: &[(usize, Polynomial)]) -> Option<Vec<Polynomial>> {
        let rows = self.rows.as_ref()?;
        let width = rows.first().map_or(0, Vec::len);
        let mut out = vec![Polynomial::zero(self.arity); width];
        for (idx, mult) in terms {
            if mult.is_zero() {
                continue;
            }
            for (acc, c) in out.iter_mut().zip(&rows[*idx]) {
                if !c.is_zero() {
                    *acc = &*acc + &(mult * c);
                }
            }
        }
        Some(out)
    }

    fn quotient_terms(quotients: Vec<Polynomial>) -> impl Iterator<Item = (usize, Polynomial)> {
        quotients
            .into_iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(k, q)| (k, -q))
    }

    fn process_pair(&mut self, i: usize, j: usize) {
        let (mi, ci) = self.leads[i].clone();
        let (mj, cj) = self.leads[j].clone();

        if !divides(&ci, &cj) && !divides(&cj, &ci) {
            let g = ci.gcd(&cj);
            let m = mi.lcm(&mj);
            let covered = self
                .leads
                .iter()
                .any(|(lm, lc)| lm.divides(&m) && divides(lc, &g));
            if !covered {
                let comb = g_combination(&self.elems[i], &self.elems[j], self.order)
                    .expect("nonzero elements");
                let gp = comb.apply(&self.elems[i], &self.elems[j]);
                let (lm, lc) = gp
                    .leading_term(self.order)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .expect("G-polynomial has leading term gcd * lcm");
                let mut tail = gp;
                tail.remove_term(&lm);
                let red = reduce_by(&tail, &self.elems, self.order, self.conv, |c| c[0]);
                let mut new = red.remainder;
                new.add_term(lc, lm);
                let mut terms = vec![
                    (i, Polynomial::term(comb.left.0, comb.left.1)),
                    (j, Polynomial::term(comb.right.0, comb.right.1)),
                ];
                terms.extend(Self::quotient_terms(red.quotients));
                let row = self.combine(&terms);
                self.push(new, row);
            }
        }

        if mi.is_coprime(&mj) && ci.gcd(&cj).is_one() {
            return;
        }
        let comb =
            s_combination(&self.elems[i], &self.elems[j], self.order).expect("nonzero elements");
        let s = comb.apply(&self.elems[i], &self.elems[j]);
        let red = reduce_by(&s, &self.elems, self.order, self.conv, |c| c[0]);
        if red.remainder.is_zero() {
            return;
        }
        let mut terms = vec![
            (i, Polynomial::term(comb.left.0, comb.left.1)),
            (j, Polynomial::term(comb.right.0, comb.right.1)),
        ];
        terms.extend(Self::quotient_terms(red.quotients));
        let row = self.combine(&terms);
        self.push(red.remainder, row);
    }

    fn strongly_divides(&self, a: usize, b: usize) -> bool {
        let (ma, ca) = &self.leads[a];
        let (mb, cb) = &self.leads[b];
        ma.divides(mb) && divides(ca, cb)
    }

    fn interreduce(mut self) -> (Vec<Polynomial>, Option<Vec<Vec<Polynomial>>>) {
        let n = self.elems.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&i| {
                !(0..n).any(|j| {
                    j != i && self.strongly_divides(j, i) && (!self.strongly_divides(i, j) || j < i)
                })
            })
            .collect();

        for (pos, &i) in keep.iter().enumerate() {
            let others: Vec<usize> = keep
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != pos)
                .map(|(_, &k)| k)
                .collect();
            let other_polys: Vec<Polynomial> =
                others.iter().map(|&k| self.elems[k].clone()).collect();
            let (lm, lc) = self.leads[i].clone();
            let mut tail = self.elems[i].clone();
            tail.remove_term(&lm);
            let red = reduce_by(&tail, &other_polys, self.order, self.conv, |c| c[0]);
            if red.quotients.iter().all(Polynomial::is_zero) {
                continue;
            }
            let mut new = red.remainder;
            new.add_term(lc, lm);
            let mut terms = vec![(i, Polynomial::one(self.arity))];
            terms.extend(Self::quotient_terms(red.quotients).map(|(p, q)| (others[p], q)));
            if let Some(row) = self.combine(&terms) {
                self.rows.as_mut().expect("tracking")[i] = row;
            }
            self.elems[i] = new;
        }

        let rows = self
            .rows
            .take()
            .map(|rows| keep.iter().map(|&i| rows[i].clone()).collect());
        let elems = keep.iter().map(|&i| self.elems[i].clone()).collect();
        (elems, rows)
    }
}

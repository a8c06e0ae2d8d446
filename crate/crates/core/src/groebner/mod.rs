//! Strong Gröbner bases over the integers.
//!
//! A basis is *strong* when every nonzero ideal element has a leading term
//! divisible, coefficient included, by the leading term of some basis
//! element. For such bases, reduction gives unique normal forms and the
//! remainder decides ideal membership.

mod buchberger;
mod pairs;
mod reduce;
mod verify;

pub use buchberger::buchberger;
pub use pairs::{g_polynomial, s_polynomial};
pub use reduce::{ideal_member, reduce, reduce_with, ReductionResult};
pub use verify::{verify_strong_gb, VerifyReport};

use std::fmt::Write;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{
    default_vars, format_poly_with, parse_poly_in, CoeffConvention, Monomial, Polynomial, TermOrder,
};

/// Cofactor matrix: `rows[i]` expresses basis element `i` over `generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactors {
    pub generators: Vec<Polynomial>,
    pub rows: Vec<Vec<Polynomial>>,
}

impl Cofactors {
    /// `sum_j row[j] * generators[j]`.
    pub fn expand_row(&self, row: &[Polynomial]) -> Polynomial {
        let arity = self.generators.first().map_or(0, Polynomial::arity);
        row.iter()
            .zip(&self.generators)
            .fold(Polynomial::zero(arity), |acc, (c, g)| acc + c * g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: TermOrder,
    convention: CoeffConvention,
    cofactors: Option<Cofactors>,
    verified: bool,
}

impl GroebnerBasis {
    /// Wraps a list of polynomials. The result is not yet verified.
    pub fn new(
        elements: Vec<Polynomial>,
        order: TermOrder,
        convention: CoeffConvention,
    ) -> Result<Self> {
        let Some(first) = elements.first() else {
            return Err(Error::EmptyGenerators);
        };
        let arity = first.arity();
        for e in &elements {
            if e.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            if e.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: e.arity(),
                });
            }
        }
        Ok(GroebnerBasis {
            elements,
            order,
            convention,
            cofactors: None,
            verified: false,
        })
    }

    /// Attaches a cofactor matrix after checking it by expansion.
    pub fn with_cofactors(mut self, cofactors: Cofactors) -> Result<Self> {
        if cofactors.rows.len() != self.elements.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} cofactor rows for {} elements",
                cofactors.rows.len(),
                self.elements.len()
            )));
        }
        for (i, row) in cofactors.rows.iter().enumerate() {
            if row.len() != cofactors.generators.len() {
                return Err(Error::DimensionMismatch(format!(
                    "cofactor row {i} has {} entries for {} generators",
                    row.len(),
                    cofactors.generators.len()
                )));
            }
            if cofactors.expand_row(row) != self.elements[i] {
                return Err(Error::InvalidArgument(format!(
                    "cofactor row {i} does not expand to element {i}"
                )));
            }
        }
        self.cofactors = Some(cofactors);
        Ok(self)
    }

    pub(crate) fn from_parts(
        elements: Vec<Polynomial>,
        order: TermOrder,
        convention: CoeffConvention,
        cofactors: Option<Cofactors>,
        verified: bool,
    ) -> Self {
        GroebnerBasis {
            elements,
            order,
            convention,
            cofactors,
            verified,
        }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.elements[0].arity()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn convention(&self) -> CoeffConvention {
        self.convention
    }

    /// Same basis under another coefficient convention. Strongness does not
    /// depend on the convention, so the verified flag carries over.
    pub fn with_convention(mut self, convention: CoeffConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn cofactors(&self) -> Option<&Cofactors> {
        self.cofactors.as_ref()
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Runs [`verify_strong_gb`] and records a pass.
    pub fn verify(&mut self) -> VerifyReport {
        let report = verify_strong_gb(self);
        self.verified = report.is_pass();
        report
    }

    /// Leading (monomial, coefficient) of every element.
    pub fn leading_terms(&self) -> Vec<(Monomial, BigInt)> {
        self.elements
            .iter()
            .map(|e| {
                let (m, c) = e.leading_term(&self.order).expect("nonzero element");
                (m.clone(), c.clone())
            })
            .collect()
    }

    /// Rewrites quotients over the basis as cofactors over the recorded
    /// generators. `None` without a cofactor matrix.
    pub fn lift(&self, quotients: &[Polynomial]) -> Option<Vec<Polynomial>> {
        let cof = self.cofactors.as_ref()?;
        let mut out = vec![Polynomial::zero(self.arity()); cof.generators.len()];
        for (q, row) in quotients.iter().zip(&cof.rows) {
            if q.is_zero() {
                continue;
            }
            for (acc, c) in out.iter_mut().zip(row) {
                *acc = &*acc + &(q * c);
            }
        }
        Some(out)
    }

    /// Text form: a header line followed by one polynomial per line.
    pub fn to_text(&self) -> String {
        let vars = default_vars(self.arity());
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        let mut out = String::new();
        write!(
            out,
            "order=lex vars={} conv={}",
            vars.join(","),
            self.convention
        )
        .unwrap();
        if let Some(p) = self.order.precedence() {
            let p: Vec<String> = p.iter().map(usize::to_string).collect();
            write!(out, " precedence={}", p.join(",")).unwrap();
        }
        out.push('\n');
        for e in &self.elements {
            out.push_str(&format_poly_with(e, &names));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`GroebnerBasis::to_text`]. Blank lines and lines
    /// starting with `#` are skipped. The result is unverified.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or(Error::Parse {
            pos: 0,
            msg: "missing basis header".into(),
        })?;
        let mut vars: Option<Vec<String>> = None;
        let mut conv = None;
        let mut order = TermOrder::lex();
        for field in header.split_whitespace() {
            let (key, value) = field.split_once('=').ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("malformed header field {field:?}"),
            })?;
            match key {
                "order" if value == "lex" => {}
                "order" => return Err(Error::InvalidOrder(value.to_string())),
                "vars" => vars = Some(value.split(',').map(str::to_string).collect()),
                "conv" => conv = Some(value.parse()?),
                "precedence" => {
                    let p = value
                        .split(',')
                        .map(|s| s.parse::<usize>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|e| Error::InvalidOrder(e.to_string()))?;
                    order = TermOrder::lex_with_precedence(p)?;
                }
                other => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("unknown header field {other:?}"),
                    })
                }
            }
        }
        let vars = vars.ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "header lacks vars=".into(),
        })?;
        let conv = conv.ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "header lacks conv=".into(),
        })?;
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        let elements = lines
            .map(|l| parse_poly_in(l, &names))
            .collect::<Result<Vec<_>>>()?;
        GroebnerBasis::new(elements, order, conv)
    }
}

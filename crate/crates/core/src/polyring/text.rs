//! Text form of polynomials.
//!
//! Grammar (whitespace is ignored between tokens):
//!
//! ```text
//! expression := ['+'|'-'] term (('+'|'-') term)*
//! term       := [integer ['*']] [factor ('*' factor)*]
//! factor     := variable ['^' non-negative integer]
//! ```
//!
//! Output lists terms by ascending total degree and, within one degree, in
//! descending lex order, e.g. `x^2 + x*y + y^2` and `-1 - x - y`.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

/// Default variable names for a given arity.
pub fn default_vars(arity: usize) -> Vec<String> {
    match arity {
        0..=3 => ["x", "y", "z"][..arity]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        _ => (1..=arity).map(|i| format!("x{i}")).collect(),
    }
}

/// Parses a polynomial in the variables `x, y`.
pub fn parse_poly(text: &str) -> Result<Polynomial> {
    parse_poly_in(text, &["x", "y"])
}

/// Parses a polynomial over the given variable names.
pub fn parse_poly_in(text: &str, vars: &[&str]) -> Result<Polynomial> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
        vars,
    }
    .expression()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn expression(mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.vars.len());
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, m) = self.term()?;
            out.add_term(if negative { -c } else { c }, m);
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(ch) => return self.err(format!("unexpected character {:?}", ch as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(BigInt, Monomial)> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = BigInt::one();
        let mut any = false;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            coeff = self.digits().parse().expect("digit string");
            any = true;
            // The `*` between a coefficient and its first factor is optional.
            if self.eat(b'*') || self.peek().is_some_and(is_ident_start) {
                self.factor(&mut exps)?;
            } else {
                return Ok((coeff, Monomial::new(exps)));
            }
        } else if self.peek().is_some_and(is_ident_start) {
            self.factor(&mut exps)?;
            any = true;
        }
        if !any {
            return self.err("expected a term");
        }
        while self.eat(b'*') {
            self.factor(&mut exps)?;
        }
        Ok((coeff, Monomial::new(exps)))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        if !self.peek().is_some_and(is_ident_start) {
            return self.err("expected a variable");
        }
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let Some(var) = self.vars.iter().position(|v| *v == name) else {
            self.pos = start;
            return self.err(format!("unknown variable {name:?}"));
        };
        let mut e = 1u32;
        if self.eat(b'^') {
            self.skip_ws();
            let d = self.digits();
            if d.is_empty() {
                return self.err("expected an exponent");
            }
            e = match d.parse() {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
        }
        exps[var] += e;
        Ok(())
    }
}

fn is_ident_start(b: u8) -> bool {
    b.is_ascii_alphabetic() || b == b'_'
}

/// Canonical text of `p` using default variable names.
pub fn format_poly(p: &Polynomial) -> String {
    let names = default_vars(p.arity());
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    format_poly_with(p, &names)
}

pub fn format_poly_with(p: &Polynomial, vars: &[&str]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.display_terms().into_iter().enumerate() {
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            write!(out, "{a}").unwrap();
            continue;
        }
        if !a.is_one() {
            write!(out, "{a}*").unwrap();
        }
        let mut first = true;
        for (v, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(vars[v]);
            if e > 1 {
                write!(out, "^{e}").unwrap();
            }
        }
    }
    out
}

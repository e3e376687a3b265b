//! Text form of polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! `/` only forms rational literals, so `1/2*(3*x^2-1)` is accepted and
//! `(3*x^2-1)/2` is rejected. Printing emits terms in descending powers
//! and parses back to the same polynomial.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use super::{Poly, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

/// Sparse multivariate polynomial used as the interchange form between text
/// and nested [`Poly`] values. Exponent vectors are indexed like `vars`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MultiPoly { nvars, terms }
    }

    fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        MultiPoly {
            nvars,
            terms: BTreeMap::from([(e, <Rational as Ring>::one())]),
        }
    }

    fn add(mut self, rhs: &Self, sign: bool) -> Self {
        for (e, c) in &rhs.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
            if sign {
                *entry += c;
            } else {
                *entry -= c;
            }
        }
        self.terms.retain(|_, c| !c.is_zero());
        self
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::constant(self.nvars, <Rational as Ring>::zero());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *out.terms.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }

    /// Variables (by index) that occur with a positive exponent.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    /// Exponent vectors reordered to `order` (a permutation or sub-selection of
    /// variable indices). Fails if a variable outside `order` occurs.
    pub fn reorder(&self, order: &[usize]) -> Result<Vec<(Vec<u32>, Rational)>, usize> {
        if let Some(&v) = self.used_vars().iter().find(|v| !order.contains(v)) {
            return Err(v);
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| (order.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect())
    }
}

/// Conversion between nested polynomials and flat term lists. The exponent
/// vector of a term lists the outermost variable first.
pub trait Terms: Ring {
    fn push_terms(&self, prefix: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, Rational)>);
    fn from_terms(terms: &[(Vec<u32>, Rational)]) -> Self;
}

impl Terms for Rational {
    fn push_terms(&self, prefix: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, Rational)>) {
        if !self.is_zero() {
            out.push((prefix.clone(), self.clone()));
        }
    }
    fn from_terms(terms: &[(Vec<u32>, Rational)]) -> Self {
        terms.iter().fold(<Rational as Ring>::zero(), |acc, (_, c)| acc + c)
    }
}

impl<R: Terms> Terms for Poly<R> {
    fn push_terms(&self, prefix: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, Rational)>) {
        for (i, c) in self.coeffs().iter().enumerate() {
            prefix.push(i as u32);
            c.push_terms(prefix, out);
            prefix.pop();
        }
    }
    fn from_terms(terms: &[(Vec<u32>, Rational)]) -> Self {
        let mut groups: BTreeMap<u32, Vec<(Vec<u32>, Rational)>> = BTreeMap::new();
        for (e, c) in terms {
            groups
                .entry(e[0])
                .or_default()
                .push((e[1..].to_vec(), c.clone()));
        }
        let len = groups.keys().next_back().map_or(0, |&d| d as usize + 1);
        let mut coeffs = vec![R::zero(); len];
        for (d, ts) in groups {
            coeffs[d as usize] = R::from_terms(&ts);
        }
        Poly::new(coeffs)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|c| c.1).collect();
            out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|c| c.1).collect())));
        } else if "+-*^/()".contains(ch) {
            out.push((pos, Tok::Sym(ch)));
            i += 1;
        } else {
            return err(pos, format!("unexpected character `{ch}`"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a [&'a str],
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = acc.add(&t, true);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = acc.add(&t, false);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let t = self.unary()?;
                acc = acc.mul(&t);
            } else if self.peek() == Some(&Tok::Sym('/')) {
                return err(
                    self.offset(),
                    "`/` is only allowed between integer literals (write 1/2*(...))",
                );
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return err(at, "expected a nonnegative integer exponent");
        };
        self.pos += 1;
        let Some(e) = n.to_u32() else {
            return err(at, "exponent too large");
        };
        let mut acc = MultiPoly::constant(base.nvars, <Rational as Ring>::one());
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let at = self.offset();
        let nvars = self.vars.len();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    let at = self.offset();
                    let Some(Tok::Int(d)) = self.peek().cloned() else {
                        return err(at, "expected an integer denominator");
                    };
                    self.pos += 1;
                    if num_traits::Zero::is_zero(&d) {
                        return err(at, "zero denominator");
                    }
                    return Ok(MultiPoly::constant(nvars, Rational::new(n, d)));
                }
                Ok(MultiPoly::constant(nvars, Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(idx) => Ok(MultiPoly::var(nvars, idx)),
                    None => err(
                        at,
                        format!("unknown variable `{name}` (expected one of {:?})", self.vars),
                    ),
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return err(self.offset(), "expected `)`");
                }
                Ok(e)
            }
            Some(t) => err(at, format!("unexpected token {t:?}")),
            None => err(at, "unexpected end of input"),
        }
    }
}

/// Parse a polynomial in the given variables.
pub fn parse_multi(s: &str, vars: &[&str]) -> Result<MultiPoly, ParseError> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        toks,
        pos: 0,
        vars,
        end: s.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return err(p.offset(), "trailing input");
    }
    Ok(e)
}

/// Parse into a nested polynomial whose levels follow `vars` (outermost
/// first).
pub fn parse_nested<T: Terms>(s: &str, vars: &[&str]) -> Result<T, ParseError> {
    let m = parse_multi(s, vars)?;
    let order: Vec<usize> = (0..vars.len()).collect();
    let terms = m.reorder(&order).expect("all variables kept");
    Ok(T::from_terms(&terms))
}

/// Parse a univariate polynomial in `var`.
pub fn parse_poly(s: &str, var: &str) -> Result<Poly<Rational>, ParseError> {
    parse_nested(s, &[var])
}

/// Print a nested polynomial with `vars[level]` naming each level.
pub fn format_poly<T: Terms>(p: &T, vars: &[&str]) -> String {
    let mut terms = Vec::new();
    p.push_terms(&mut Vec::new(), &mut terms);
    format_terms(terms, vars)
}

pub fn format_multi(m: &MultiPoly, vars: &[&str]) -> String {
    format_terms(m.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect(), vars)
}

fn format_terms(mut terms: Vec<(Vec<u32>, Rational)>, vars: &[&str]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let mono: Vec<String> = e
            .iter()
            .zip(vars)
            .filter(|(&k, _)| k > 0)
            .map(|(&k, v)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
            .collect();
        let neg = c.is_negative();
        let mag = c.abs();
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            mono.join("*")
        } else {
            format!("{}*{}", mag, mono.join("*"))
        };
        match (i, neg) {
            (0, true) => out.push_str(&format!("-{body}")),
            (0, false) => out.push_str(&body),
            (_, true) => out.push_str(&format!(" - {body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn accepts_scalar_prefix_rejects_division() {
        let p = parse_poly("1/2*(3*x^2-1)", "x").unwrap();
        assert_eq!(p, Poly::new(vec![rat(-1, 2), int(0), rat(3, 2)]));
        assert!(parse_poly("(3*x^2 - 1)/2", "x").is_err());
        assert!(parse_poly("x/2", "x").is_err());
        assert!(parse_poly("y + 1", "x").is_err());
        assert!(parse_poly("x^", "x").is_err());
        assert!(parse_poly("(x", "x").is_err());
        assert!(parse_poly("1/0", "x").is_err());
    }

    #[test]
    fn prints_descending() {
        let p = parse_poly("1 - 3/2*x + x^3", "x").unwrap();
        assert_eq!(format_poly(&p, &["x"]), "x^3 - 3/2*x + 1");
        let q = parse_poly("-(x+1)^2", "x").unwrap();
        assert_eq!(format_poly(&q, &["x"]), "-x^2 - 2*x - 1");
        assert_eq!(format_poly(&Poly::<Rational>::zero(), &["x"]), "0");
    }

    #[test]
    fn nested_levels() {
        // x outer, a inner
        let p: Poly<Poly<Rational>> = parse_nested("a*x^2 + a^2 - 2", &["x", "a"]).unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeff(2), Poly::x());
        assert_eq!(p.coeff(0), Poly::new(vec![int(-2), int(0), int(1)]));
        let s = format_poly(&p, &["x", "a"]);
        assert_eq!(s, "x^2*a + a^2 - 2");
        let back: Poly<Poly<Rational>> = parse_nested(&s, &["x", "a"]).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn reorder_rejects_stray_variable() {
        let m = parse_multi("x*r + a", &["x", "a", "r"]).unwrap();
        assert_eq!(m.reorder(&[0, 2]), Err(1));
        assert!(m.reorder(&[2, 0, 1]).is_ok());
    }
}

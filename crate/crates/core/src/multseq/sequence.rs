use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::MultSeqError;
use crate::arith::text::{format_poly, parse_poly};
use crate::arith::{int, parse_rational, Poly, Rational, Ring};

/// A real sequence `γ_0, γ_1, ...` with exact terms.
///
/// Text forms: `k^2 + k + 1/2`, `geom(3/2)`, `ff(4)`, `tri(4)`,
/// `list(1, 1, 0)`.
#[derive(Clone, Debug, PartialEq)]
pub enum SequenceSpec {
    PolynomialInK(Poly<Rational>),
    Geometric(Rational),
    /// `k(k−1)···(k−n+1)`, zero for `k < n`.
    FallingFactorial(usize),
    /// `Π_{j<n} (k(k+1) − j)`.
    TriangularFactorial(usize),
    /// Defined only for `k < len`.
    Explicit(Vec<Rational>),
}

impl SequenceSpec {
    pub fn poly(s: &str) -> Result<Self, MultSeqError> {
        parse_poly(s, "k")
            .map(SequenceSpec::PolynomialInK)
            .map_err(|e| MultSeqError::Parse(e.to_string()))
    }

    /// `⟨k² + αk + β⟩`.
    pub fn quadratic(alpha: &Rational, beta: &Rational) -> Self {
        SequenceSpec::PolynomialInK(Poly::new(vec![beta.clone(), alpha.clone(), int(1)]))
    }

    pub fn constant(c: Rational) -> Self {
        SequenceSpec::PolynomialInK(Poly::constant(c))
    }

    /// `γ_k`, or `None` past the end of an explicit list.
    pub fn term(&self, k: usize) -> Option<Rational> {
        let kq = int(k as i64);
        Some(match self {
            SequenceSpec::PolynomialInK(p) => p.eval(&kq),
            SequenceSpec::Geometric(r) => Ring::pow(r, k as u32),
            SequenceSpec::FallingFactorial(n) => {
                (0..*n).fold(int(1), |acc, j| acc * (&kq - int(j as i64)))
            }
            SequenceSpec::TriangularFactorial(n) => {
                let t = &kq * (&kq + int(1));
                (0..*n).fold(int(1), |acc, j| acc * (&t - int(j as i64)))
            }
            SequenceSpec::Explicit(v) => return v.get(k).cloned(),
        })
    }

    /// `γ_0..=γ_n`; fails when an explicit list is too short.
    pub fn terms(&self, n: usize) -> Result<Vec<Rational>, MultSeqError> {
        (0..=n)
            .map(|k| {
                self.term(k).ok_or(MultSeqError::SequenceTooShort {
                    needed: n + 1,
                    len: k,
                })
            })
            .collect()
    }

    /// Largest index with a defined term, `None` when unbounded.
    pub fn last_index(&self) -> Option<usize> {
        match self {
            SequenceSpec::Explicit(v) => Some(v.len().saturating_sub(1)),
            _ => None,
        }
    }

    /// `n` clipped to the defined range.
    pub fn clip(&self, n: usize) -> usize {
        self.last_index().map_or(n, |m| m.min(n))
    }
}

fn call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?
        .trim_start()
        .strip_prefix('(')?
        .strip_suffix(')')
        .map(str::trim)
}

impl FromStr for SequenceSpec {
    type Err = MultSeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = |m: &str| MultSeqError::Parse(format!("{m} in `{s}`"));
        let index = |a: &str| a.parse::<usize>().map_err(|_| bad("expected an index"));
        if let Some(a) = call(t, "geom") {
            return parse_rational(a)
                .map(SequenceSpec::Geometric)
                .map_err(|_| bad("expected a rational ratio"));
        }
        if let Some(a) = call(t, "ff") {
            return Ok(SequenceSpec::FallingFactorial(index(a)?));
        }
        if let Some(a) = call(t, "tri") {
            return Ok(SequenceSpec::TriangularFactorial(index(a)?));
        }
        if let Some(a) = call(t, "list") {
            if a.is_empty() {
                return Err(bad("empty list"));
            }
            return a
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()
                .map(SequenceSpec::Explicit)
                .map_err(|_| bad("expected rationals"));
        }
        SequenceSpec::poly(t)
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::PolynomialInK(p) => f.write_str(&format_poly(p, &["k"])),
            SequenceSpec::Geometric(r) => write!(f, "geom({r})"),
            SequenceSpec::FallingFactorial(n) => write!(f, "ff({n})"),
            SequenceSpec::TriangularFactorial(n) => write!(f, "tri({n})"),
            SequenceSpec::Explicit(v) => {
                let parts: Vec<String> = v.iter().map(|q| q.to_string()).collect();
                write!(f, "list({})", parts.join(", "))
            }
        }
    }
}

impl Serialize for SequenceSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

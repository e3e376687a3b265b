//! Serde helpers: exact values are written as text.

use serde::Serializer;

use crate::arith::{text::format_poly, GaussianRational, Poly, Rational};

pub fn rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

pub fn rationals<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}

pub fn poly<S: Serializer>(p: &Poly<Rational>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_poly(p, &["x"]))
}

pub fn polys<S: Serializer>(ps: &[Poly<Rational>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| format_poly(p, &["x"])))
}

pub fn gaussian<S: Serializer>(z: &GaussianRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(z)
}

#![allow(dead_code)]

use mulseq_core::arith::{rat, Poly, Rational};
use proptest::prelude::*;

/// `n/d` with `|n| ≤ 100`, `1 ≤ d ≤ 100`.
pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-100i64..=100, 1i64..=100).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=100, 1i64..=100, any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

pub fn poly(max_degree: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(small_rational(), 0..=max_degree + 1).prop_map(Poly::new)
}

pub fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = Poly<Rational>> {
    poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

/// Integer coefficients in `[-bound, bound]`, exact degree `deg`.
pub fn int_poly(deg: usize, bound: i64) -> impl Strategy<Value = Poly<Rational>> {
    (
        prop::collection::vec(-bound..=bound, deg),
        (1..=bound, any::<bool>()),
    )
        .prop_map(|(mut c, (lead, neg))| {
            c.push(if neg { -lead } else { lead });
            Poly::new(c.into_iter().map(|a| rat(a, 1)).collect())
        })
}

/// Product of linear factors with small rational roots.
pub fn real_rooted(max_degree: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec((-12i64..=12, 1i64..=4), 1..=max_degree).prop_map(|roots| {
        let roots: Vec<Rational> = roots.into_iter().map(|(n, d)| rat(n, d)).collect();
        Poly::from_roots(&roots)
    })
}

mod common;

use common::{nonzero_poly, poly, small_rational};
use mulseq_core::arith::text::{format_poly, parse_nested, parse_poly};
use mulseq_core::arith::{int, Poly, Rational, TruncatedSeries2};
use mulseq_core::bases::{BasisKind, BasisTable};
use proptest::prelude::*;

type P2 = Poly<Poly<Rational>>;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(6), b in poly(6), c in poly(6)) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert_eq!(a.minus(&a), Poly::zero());
        prop_assert_eq!(a.times(&Poly::one()), a.clone());
    }

    #[test]
    fn degree_is_additive(a in nonzero_poly(6), b in nonzero_poly(6)) {
        let d = a.times(&b).degree().unwrap();
        prop_assert_eq!(d, a.degree().unwrap() + b.degree().unwrap());
    }

    #[test]
    fn divrem_round_trip(a in poly(8), b in nonzero_poly(5)) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(q.times(&b).plus(&r), a);
        prop_assert!(r.degree().unwrap_or(0) < b.degree().unwrap().max(1) || r.is_zero());
    }

    #[test]
    fn derivative_rules(a in poly(6), b in poly(6), s in small_rational()) {
        prop_assert_eq!(
            a.scale_rational(&s).plus(&b).derivative(),
            a.derivative().scale_rational(&s).plus(&b.derivative())
        );
        prop_assert_eq!(
            a.times(&b).derivative(),
            a.derivative().times(&b).plus(&a.times(&b.derivative()))
        );
    }

    #[test]
    fn nested_evaluation_commutes(
        c in prop::collection::vec(poly(3), 0..5),
        a0 in small_rational(),
        x0 in small_rational(),
    ) {
        // outer variable x, inner a
        let p: P2 = Poly::new(c);
        let inner_first: Poly<Rational> = p.map(|k| k.eval(&a0));
        let full = p
            .coeffs()
            .iter()
            .rev()
            .fold(int(0), |acc, k| acc * &x0 + k.eval(&a0));
        prop_assert_eq!(inner_first.eval(&x0), full.clone());
        let x_first = p.eval(&Poly::constant(x0.clone()));
        prop_assert_eq!(x_first.eval(&a0), full);
    }

    #[test]
    fn text_round_trip(p in poly(6)) {
        let s = p.to_string();
        prop_assert_eq!(parse_poly(&s, "x").unwrap(), p);
    }

    #[test]
    fn inner_derivative_matches_difference_quotients(c in prop::collection::vec(poly(3), 1..4)) {
        // d/dr of a polynomial cubic in r is pinned down by its values at
        // five points; compare the exact derivative with the interpolant's.
        let p: P2 = Poly::new(c);
        let d = p.derivative_at(1).unwrap();
        for x0 in [int(-1), int(0), int(2)] {
            let g: Poly<Rational> = p.eval(&Poly::constant(x0.clone()));
            let dg = d.eval(&Poly::constant(x0.clone()));
            let pts: Vec<Rational> = (0..5).map(|i| int(i - 2)).collect();
            let vals: Vec<Rational> = pts.iter().map(|t| g.eval(t)).collect();
            let interp = lagrange(&pts, &vals);
            prop_assert_eq!(interp.derivative(), dg);
        }
    }
}

fn lagrange(xs: &[Rational], ys: &[Rational]) -> Poly<Rational> {
    let mut out = Poly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut term = Poly::constant(yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let lin = Poly::shift(-xj.clone()).scale_rational(&(xi - xj).recip());
                term = term.times(&lin);
            }
        }
        out = out.plus(&term);
    }
    out
}

#[test]
fn generating_function_identity() {
    let table = BasisTable::build(&BasisKind::Legendre, 12).unwrap();
    let x = parse_poly("x", "x").unwrap();
    for n in 0..=12 {
        let s = TruncatedSeries2::new(n, table.members()[..=n].to_vec());
        let lhs = TruncatedSeries2::new(n, vec![Poly::one(), x.scale_rational(&int(-2)), Poly::one()]);
        assert!(lhs.mul_truncate(&s.mul_truncate(&s).unwrap()).unwrap().is_one(), "N = {n}");
    }
}

#[test]
fn series_order_mismatch_is_an_error() {
    let a = TruncatedSeries2::one(3);
    let b = TruncatedSeries2::one(4);
    assert!(a.mul_truncate(&b).is_err());
}

#[test]
fn nested_text_keeps_variable_order() {
    let vars = ["x", "a", "r"];
    let p: Poly<P2> = parse_nested("x^2*a - r*a + 3", &vars).unwrap();
    let back: Poly<P2> = parse_nested(&format_poly(&p, &vars), &vars).unwrap();
    assert_eq!(p, back);
    assert!(parse_poly("(3*x^2 - 1)/2", "x").is_err());
    assert_eq!(
        parse_poly("1/2*(3*x^2-1)", "x").unwrap().to_string(),
        "3/2*x^2 - 1/2"
    );
}

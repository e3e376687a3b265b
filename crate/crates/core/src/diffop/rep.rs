use serde::Serialize;

use super::DiffOpError;
use crate::arith::{falling, factorial, Poly, Rational, Ring};
use crate::bases::BasisKind;
use crate::multseq::{DiagonalOperator, SequenceSpec};

/// How far past the requested order the expansion is checked.
pub const GUARD_EXTRA: usize = 4;

/// `T = Σ_{k≤order} p_k(x) Dᵏ`, solved from `T[xⁿ]` for `n ≤ order`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiffOpRep {
    pub order: usize,
    #[serde(serialize_with = "crate::ser::polys")]
    pub coeffs: Vec<Poly<Rational>>,
    /// Highest `n` at which `T[xⁿ]` was compared with the expansion.
    pub checked_through: usize,
    /// Smallest `n` in `order+1..=checked_through` where the truncated
    /// expansion stops reproducing `T`; `None` means it held throughout.
    pub first_mismatch: Option<usize>,
}

impl DiffOpRep {
    /// `Σ p_k f^{(k)}`.
    pub fn apply(&self, f: &Poly<Rational>) -> Poly<Rational> {
        let mut d = f.clone();
        let mut out = Poly::zero();
        for p in &self.coeffs {
            if d.is_zero() {
                break;
            }
            out = out.plus(&p.times(&d));
            d = d.derivative();
        }
        out
    }

    pub fn coeff(&self, k: usize) -> Poly<Rational> {
        self.coeffs.get(k).cloned().unwrap_or_else(Poly::zero)
    }

    /// True when the guard found no mismatch.
    pub fn is_exact(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Order at which a polynomial-in-`k` sequence of degree `d` terminates:
/// `d` for the standard and Legendre bases, `2d` for Hermite and Laguerre.
/// Other sequences get a modest default; the guard reports whether it held.
pub fn default_order(op: &DiagonalOperator) -> usize {
    let double = matches!(op.basis, BasisKind::Hermite | BasisKind::Laguerre(_));
    let scale = |d: usize| if double { 2 * d } else { d };
    match &op.seq {
        SequenceSpec::PolynomialInK(p) => scale(p.degree().unwrap_or(0)),
        SequenceSpec::FallingFactorial(n) => scale(*n),
        SequenceSpec::TriangularFactorial(n) => scale(2 * n),
        SequenceSpec::Geometric(_) => 8,
        SequenceSpec::Explicit(v) => v.len().saturating_sub(1),
    }
}

/// Solves `T[xⁿ] = Σ_{k≤n} p_k · n!/(n−k)! · x^{n−k}` for `p_n`, `n ≤ order`.
pub fn to_diffop(op: &DiagonalOperator, order: usize) -> Result<DiffOpRep, DiffOpError> {
    if op.seq.clip(order) < order {
        return Err(DiffOpError::SequenceTooShort {
            order,
            last: op.seq.clip(order),
        });
    }
    let top = op.seq.clip(order + GUARD_EXTRA);
    let prepared = op.prepare(top)?;
    let mut coeffs: Vec<Poly<Rational>> = Vec::with_capacity(order + 1);
    let action = |n: usize| prepared.apply(&Poly::monomial(Rational::one(), n));
    let expansion = |coeffs: &[Poly<Rational>], n: usize| {
        coeffs.iter().enumerate().take(n + 1).fold(Poly::zero(), |acc, (k, p)| {
            acc.plus(&p.times(&Poly::monomial(falling(n, k), n - k)))
        })
    };
    for n in 0..=order {
        let rest = action(n)?.minus(&expansion(&coeffs, n));
        coeffs.push(rest.scale_rational(&factorial(n).recip()));
    }
    let mut first_mismatch = None;
    for n in order + 1..=top {
        if action(n)? != expansion(&coeffs, n) {
            first_mismatch = Some(n);
            break;
        }
    }
    Ok(DiffOpRep {
        order,
        coeffs,
        checked_through: top,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::text::parse_poly;

    fn rep(basis: BasisKind, seq: &str, order: usize) -> DiffOpRep {
        to_diffop(&DiagonalOperator::new(basis, seq.parse().unwrap()), order).unwrap()
    }

    fn p(s: &str) -> Poly<Rational> {
        parse_poly(s, "x").unwrap()
    }

    #[test]
    fn euler() {
        let r = rep(BasisKind::Standard, "k", 1);
        assert_eq!(r.coeffs, vec![Poly::zero(), p("x")]);
        assert!(r.is_exact());
    }

    #[test]
    fn legendre_quadratics() {
        let r = rep(BasisKind::Legendre, "k^2+k", 2);
        assert_eq!(r.coeffs, vec![Poly::zero(), p("2*x"), p("x^2-1")]);
        assert!(r.is_exact());
        let r = rep(BasisKind::Legendre, "k^2+k+1", 2);
        assert_eq!(r.coeffs, vec![p("1"), p("2*x"), p("x^2-1")]);
    }

    #[test]
    fn identity() {
        let r = rep(BasisKind::Hermite, "1", 3);
        assert_eq!(r.coeffs[0], p("1"));
        assert!(r.coeffs[1..].iter().all(Poly::is_zero));
    }

    #[test]
    fn hermite_needs_double_order() {
        let op = DiagonalOperator::new(BasisKind::Hermite, "k".parse().unwrap());
        assert_eq!(default_order(&op), 2);
        let r = to_diffop(&op, 2).unwrap();
        assert!(r.is_exact());
        assert_eq!(r.coeffs, vec![Poly::zero(), p("x"), p("-1/2")]);
        assert!(!to_diffop(&op, 1).unwrap().is_exact());
    }

    #[test]
    fn infinite_order_is_flagged() {
        let r = rep(BasisKind::Legendre, "k", 1);
        assert_eq!(r.first_mismatch, Some(2));
    }

    #[test]
    fn reproduces_action() {
        let op = DiagonalOperator::new(BasisKind::Legendre, "k^2+k+1/2".parse().unwrap());
        let r = to_diffop(&op, 2).unwrap();
        for n in 0..=6 {
            let f = Poly::monomial(Rational::one(), n);
            assert_eq!(r.apply(&f), op.apply(&f).unwrap());
        }
    }
}

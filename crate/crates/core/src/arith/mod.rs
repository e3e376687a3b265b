//! Exact scalars and polynomials.
//!
//! [`Rational`] is the universal scalar. [`Poly`] is a dense univariate
//! polynomial over any [`Ring`]; nesting it gives multivariate polynomials.
//! The variable order used throughout the crate is `x` outermost, then the
//! sequence parameter `a` (α), then `r`.

mod gaussian;
mod poly;
mod ring;
mod series;
pub mod text;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use gaussian::GaussianRational;
pub use poly::{transpose, Poly};
pub use ring::{rational_gcd, Field, Ring};
pub use series::TruncatedSeries2;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable level {level} exceeds nesting depth {depth}")]
    VariableLevel { level: usize, depth: usize },
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
}

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `p`, `-p` or `p/q` (optional surrounding whitespace).
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let bad = || ArithError::BadRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &n * &n == *q.numer() && &d * &d == *q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator beyond f64 range; scale through bit lengths
        let nb = q.numer().bits() as i64;
        let db = q.denom().bits() as i64;
        let shift = (nb - db).clamp(-1000, 1000);
        let scaled = if shift >= 0 {
            Rational::new(q.numer().clone(), q.denom() << shift as usize)
        } else {
            Rational::new(q.numer() << (-shift) as usize, q.denom().clone())
        };
        scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
    })
}

/// Binomial coefficient as an exact rational.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return int(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::from(1);
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

/// n!/(n-k)!
pub fn falling(n: usize, k: usize) -> Rational {
    if k > n {
        return int(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    Rational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_literals() {
        assert_eq!(parse_rational("18/5").unwrap(), rat(18, 5));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn canonical_form() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 5), int(0));
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
    }

    #[test]
    fn huge_to_f64() {
        let big = Rational::new(BigInt::from(3) << 2000usize, BigInt::from(1) << 1999usize);
        assert!((to_f64(&big) - 6.0).abs() < 1e-12);
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(factorial(5), int(120));
        assert_eq!(falling(5, 2), int(20));
        assert_eq!(falling(2, 3), int(0));
    }
}

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A commutative ring that contains the rationals.
///
/// Every coefficient type in this crate is a ℚ-algebra: the rationals
/// themselves, the Gaussian rationals, and polynomial rings over any of
/// these (nested to give multivariate polynomials). Arithmetic is by
/// reference so that generic code does not have to clone big integers.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;

    fn from_rational(q: &Rational) -> Self;
    /// Multiplication by a rational scalar.
    fn scale(&self, q: &Rational) -> Self;

    /// Exact division: `Some(q)` with `q * rhs == self`, or `None` when no
    /// such element exists (including division by zero).
    fn try_div(&self, rhs: &Self) -> Option<Self>;

    /// Nonnegative rational gcd of every rational coefficient; zero for zero.
    fn content(&self) -> Rational;

    /// Number of polynomial variables wrapped around the scalar field.
    fn nesting_depth() -> usize {
        0
    }

    /// Formal partial derivative in the variable at `level` (0 = outermost).
    fn partial(&self, _level: usize) -> Option<Self> {
        None
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn content(&self) -> Rational {
        self.abs()
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// gcd over ℚ in the content sense: gcd of numerators over lcm of denominators.
pub fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    if Zero::is_zero(a) {
        return b.abs();
    }
    if Zero::is_zero(b) {
        return a.abs();
    }
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn content_gcd() {
        assert_eq!(rational_gcd(&rat(2, 3), &rat(4, 5)), rat(2, 15));
        assert_eq!(rational_gcd(&rat(0, 1), &rat(-4, 5)), rat(4, 5));
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(rat(-3, 2).pow(5), rat(-243, 32));
        assert_eq!(rat(7, 1).pow(0), rat(1, 1));
    }

    #[test]
    fn division_by_zero_is_none() {
        assert!(rat(1, 2).try_div(&rat(0, 1)).is_none());
        assert!(rat(0, 1).inverse().is_none());
    }
}

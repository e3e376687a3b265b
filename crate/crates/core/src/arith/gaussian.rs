use std::fmt;

use num_traits::Signed;

use super::ring::{rational_gcd, Field, Ring};
use super::{rational_sqrt, Rational};

/// Exact complex number `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, <Rational as Ring>::zero())
    }

    pub fn i() -> Self {
        Self::new(<Rational as Ring>::zero(), Rational::from_integer(1.into()))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// |z|², exact.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact square root when one exists in ℚ(i); the root with
    /// nonnegative real part (nonnegative imaginary part on the axis).
    pub fn sqrt(&self) -> Option<Self> {
        let modulus = rational_sqrt(&self.norm_sqr())?;
        let two = Rational::from_integer(2.into());
        let u = rational_sqrt(&((&modulus + &self.re) / &two))?;
        if u.is_zero() {
            // purely negative real
            let v = rational_sqrt(&((&modulus - &self.re) / &two))?;
            return Some(Self::new(u, v));
        }
        let v = &self.im / (&two * &u);
        Some(Self::new(u, v))
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        Self::new(<Rational as Ring>::zero(), <Rational as Ring>::zero())
    }
    fn one() -> Self {
        Self::real(Rational::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Self::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Self::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn times(&self, rhs: &Self) -> Self {
        Self::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
    fn negate(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }
    fn from_rational(q: &Rational) -> Self {
        Self::real(q.clone())
    }
    fn scale(&self, q: &Rational) -> Self {
        Self::new(&self.re * q, &self.im * q)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        let inv = rhs.inverse()?;
        Some(self.times(&inv))
    }
    fn content(&self) -> Rational {
        rational_gcd(&self.re, &self.im)
    }
}

impl Field for GaussianRational {
    fn inverse(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        // conjugate-multiply: 1/z = z̄ / |z|²
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{} {} {}*i", self.re, sign, self.im.abs())
    }
}

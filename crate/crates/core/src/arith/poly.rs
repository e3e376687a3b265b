use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{rational_gcd, Field, Ring};
use super::{ArithError, Rational};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// Always stored trimmed: the last coefficient is nonzero, and the zero
/// polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `x + c`
    pub fn shift(c: R) -> Self {
        Self::new(vec![c, R::one()])
    }

    /// Product of `(x - r)` over the given roots.
    pub fn from_roots(roots: &[R]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, r| acc.times(&Self::shift(r.negate())))
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` stands for the degree −∞ of the zero polynomial, so the
    /// natural `Option` ordering puts it below every finite degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = R::zero();
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = rhs.coeffs.get(i).unwrap_or(&zero);
                    a.plus(b)
                })
                .collect(),
        )
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = R::zero();
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = rhs.coeffs.get(i).unwrap_or(&zero);
                    a.minus(b)
                })
                .collect(),
        )
    }

    pub fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::new(out)
    }

    pub fn negate(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(R::negate).collect(),
        }
    }

    /// Multiply every coefficient by `c`.
    pub fn mul_scalar(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(q)).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc.times(self))
    }

    /// Horner evaluation at `at`.
    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.times(at).plus(c))
    }

    /// Substitute a polynomial for the variable: `self(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.times(q).plus(&Self::constant(c.clone())))
    }

    /// `p(x) ↦ p(−x)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.negate() } else { c.clone() })
                .collect(),
        )
    }

    /// Formal derivative in the outermost variable.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    /// Derivative in the variable at nesting `level` (0 = this polynomial's
    /// own variable, 1 = the variable of its coefficients, ...).
    pub fn derivative_at(&self, level: usize) -> Result<Self, ArithError> {
        Ring::partial(self, level).ok_or(ArithError::VariableLevel {
            level,
            depth: Self::nesting_depth(),
        })
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut v = vec![R::zero()];
        v.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&Rational::new(1.into(), (i + 1).into()))),
        );
        Self::new(v)
    }

    /// Exact quotient when `rhs` divides `self`, by long division using
    /// exact division of leading coefficients.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let dd = rhs.degree()?;
        let Some(dn) = self.degree() else {
            return Some(Self::zero());
        };
        if dn < dd {
            return None;
        }
        let lc = rhs.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let c = top.try_div(lc)?;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].minus(&c.times(b));
            }
            quot[i] = c;
        }
        if rem.iter().all(R::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division: `self = q·rhs + r` with `deg r < deg rhs`.
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self), ArithError> {
        let dd = rhs.degree().ok_or(ArithError::DivisionByZero)?;
        let inv = rhs
            .leading()
            .and_then(F::inverse)
            .ok_or(ArithError::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let Some(dn) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![F::zero(); dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let c = rem[i + dd].times(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].minus(&c.times(b));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.divrem(rhs).map(|(_, r)| r)
    }

    /// Scale to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading().and_then(F::inverse) {
            Some(inv) => self.mul_scalar(&inv),
            None => self.clone(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.monic();
        let mut b = rhs.monic();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor").monic();
            a = b;
            b = r;
        }
        a
    }

    /// `p / gcd(p, p')`, monic: same distinct roots, each simple.
    pub fn squarefree_part(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.divrem(&g)?;
        Ok(q.monic())
    }

    /// Yun's decomposition: monic square-free factors `f_i` with their
    /// multiplicities `i`, so that `p = lc · Π f_i^i`. Constant factors
    /// are omitted.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        let p = self.monic();
        let dp = p.derivative();
        let mut a = p.gcd(&dp);
        if a.is_zero() {
            return Ok(out);
        }
        let mut b = p.divrem(&a)?.0;
        let mut c = dp.divrem(&a)?.0;
        let mut d = c.minus(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a)?.0;
            c = d.divrem(&a)?.0;
            d = c.minus(&b.derivative());
            i += 1;
        }
        Ok(out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Poly::plus(self, rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Poly::minus(self, rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        Poly::times(self, rhs)
    }
    fn negate(&self) -> Self {
        Poly::negate(self)
    }
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(R::from_rational(q))
    }
    fn scale(&self, q: &Rational) -> Self {
        self.scale_rational(q)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_div(rhs)
    }
    fn content(&self) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::from_integer(0.into()), |g, c| {
                rational_gcd(&g, &c.content())
            })
    }
    fn nesting_depth() -> usize {
        R::nesting_depth() + 1
    }
    fn partial(&self, level: usize) -> Option<Self> {
        if level == 0 {
            return Some(self.derivative());
        }
        let inner = self
            .coeffs
            .iter()
            .map(|c| c.partial(level - 1))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::new(inner))
    }
}

/// Swap the two outermost variables of a bivariate polynomial.
pub fn transpose<R: Ring>(p: &Poly<Poly<R>>) -> Poly<Poly<R>> {
    let inner_len = p.coeffs.iter().map(|c| c.coeffs.len()).max().unwrap_or(0);
    Poly::new(
        (0..inner_len)
            .map(|j| Poly::new(p.coeffs.iter().map(|c| c.coeff(j)).collect()))
            .collect(),
    )
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl<'a, R: Ring> Add<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Poly<R> {
        self.plus(rhs)
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Self {
        self.minus(&rhs)
    }
}

impl<'a, R: Ring> Sub<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Poly<R> {
        self.minus(rhs)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl<'a, R: Ring> Mul<&'a Poly<R>> for &'a Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Poly<R> {
        self.times(rhs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Self {
        self.negate()
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self, &["x"]))
    }
}

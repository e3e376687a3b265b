//! Simple polynomial sets: standard, Legendre, Hermite and generalized
//! Laguerre, with exact change of basis.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{factorial, int, Poly, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("Laguerre parameter must exceed -1, got {0}")]
    LaguerreParameter(Rational),
    #[error("polynomial of degree {degree} exceeds basis table built to degree {max}")]
    DegreeExceedsTable { degree: usize, max: usize },
    #[error("unknown basis `{0}` (expected standard, legendre, hermite or laguerre)")]
    UnknownBasis(String),
}

/// A simple set of polynomials `{q_k}` with `deg q_k = k`.
///
/// Hermite is the physicists' family (`H_1 = 2x`); Laguerre is the
/// standard `L_n^(α)` with leading coefficient `(−1)^n / n!`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum BasisKind {
    Standard,
    Legendre,
    Hermite,
    Laguerre(#[serde(serialize_with = "crate::ser::rational")] Rational),
}

impl BasisKind {
    pub fn laguerre(alpha: Rational) -> Result<Self, BasisError> {
        let kind = BasisKind::Laguerre(alpha);
        kind.validate()?;
        Ok(kind)
    }

    pub fn validate(&self) -> Result<(), BasisError> {
        match self {
            BasisKind::Laguerre(a) if *a <= int(-1) => {
                Err(BasisError::LaguerreParameter(a.clone()))
            }
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            BasisKind::Standard => "standard",
            BasisKind::Legendre => "legendre",
            BasisKind::Hermite => "hermite",
            BasisKind::Laguerre(_) => "laguerre",
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKind::Laguerre(a) => write!(f, "laguerre({a})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Parses `standard`, `legendre`, `hermite`, `laguerre` (α = 0) or
/// `laguerre(α)`.
impl FromStr for BasisKind {
    type Err = BasisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "standard" | "monomial" => Ok(BasisKind::Standard),
            "legendre" => Ok(BasisKind::Legendre),
            "hermite" => Ok(BasisKind::Hermite),
            "laguerre" => Ok(BasisKind::Laguerre(int(0))),
            _ => {
                let inner = t
                    .strip_prefix("laguerre(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| BasisError::UnknownBasis(s.to_string()))?;
                let alpha = crate::arith::parse_rational(inner)
                    .map_err(|_| BasisError::UnknownBasis(s.to_string()))?;
                BasisKind::laguerre(alpha)
            }
        }
    }
}

/// Basis members `q_0..=q_max` in standard coordinates. Built once to the
/// requested degree and immutable afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisTable {
    kind: BasisKind,
    members: Vec<Poly<Rational>>,
}

impl BasisTable {
    pub fn build(kind: &BasisKind, max_degree: usize) -> Result<Self, BasisError> {
        kind.validate()?;
        let mut members: Vec<Poly<Rational>> = Vec::with_capacity(max_degree + 1);
        let x = Poly::<Rational>::x();
        for n in 0..=max_degree {
            let next = match (kind, n) {
                (BasisKind::Standard, _) => Poly::monomial(int(1), n),
                (_, 0) => Poly::one(),
                (BasisKind::Legendre, 1) => x.clone(),
                (BasisKind::Hermite, 1) => Poly::new(vec![int(0), int(2)]),
                (BasisKind::Laguerre(a), 1) => Poly::new(vec![a + int(1), int(-1)]),
                (BasisKind::Legendre, _) => {
                    // n·Le_n = (2n−1)·x·Le_{n−1} − (n−1)·Le_{n−2}
                    let m = n as i64;
                    x.times(&members[n - 1])
                        .scale_rational(&int(2 * m - 1))
                        .minus(&members[n - 2].scale_rational(&int(m - 1)))
                        .scale_rational(&Rational::new(1.into(), m.into()))
                }
                (BasisKind::Hermite, _) => {
                    // H_n = 2x·H_{n−1} − 2(n−1)·H_{n−2}
                    let m = n as i64;
                    x.times(&members[n - 1])
                        .scale_rational(&int(2))
                        .minus(&members[n - 2].scale_rational(&int(2 * (m - 1))))
                }
                (BasisKind::Laguerre(a), _) => {
                    // n·L_n = (2n−1+α−x)·L_{n−1} − (n−1+α)·L_{n−2}
                    let m = n as i64;
                    let lin = Poly::new(vec![int(2 * m - 1) + a, int(-1)]);
                    lin.times(&members[n - 1])
                        .minus(&members[n - 2].scale_rational(&(int(m - 1) + a)))
                        .scale_rational(&Rational::new(1.into(), m.into()))
                }
            };
            members.push(next);
        }
        Ok(BasisTable {
            kind: kind.clone(),
            members,
        })
    }

    pub fn kind(&self) -> &BasisKind {
        &self.kind
    }

    pub fn max_degree(&self) -> usize {
        self.members.len() - 1
    }

    pub fn member(&self, k: usize) -> &Poly<Rational> {
        &self.members[k]
    }

    pub fn members(&self) -> &[Poly<Rational>] {
        &self.members
    }

    /// Coefficients `a_0..a_n` with `p = Σ a_k q_k`, by back-substitution
    /// against the triangular change of basis. Works over any coefficient
    /// ring, so symbolic parameters can ride along.
    pub fn expand<R: Ring>(&self, p: &Poly<R>) -> Result<Vec<R>, BasisError> {
        let Some(deg) = p.degree() else {
            return Ok(Vec::new());
        };
        if deg > self.max_degree() {
            return Err(BasisError::DegreeExceedsTable {
                degree: deg,
                max: self.max_degree(),
            });
        }
        let mut rem: Vec<R> = p.coeffs().to_vec();
        let mut out = vec![R::zero(); deg + 1];
        for k in (0..=deg).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &self.members[k];
            let lc_inv = q.leading().expect("basis member is nonzero").recip();
            let a = rem[k].scale(&lc_inv);
            for (j, c) in q.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    rem[j] = rem[j].minus(&a.scale(c));
                }
            }
            out[k] = a;
        }
        Ok(out)
    }

    /// `Σ coeffs[k]·q_k`.
    pub fn synthesize<R: Ring>(&self, coeffs: &[R]) -> Result<Poly<R>, BasisError> {
        if coeffs.len() > self.members.len() {
            return Err(BasisError::DegreeExceedsTable {
                degree: coeffs.len() - 1,
                max: self.max_degree(),
            });
        }
        let mut out = vec![R::zero(); coeffs.len()];
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, c) in self.members[k].coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out[j] = out[j].plus(&a.scale(c));
                }
            }
        }
        Ok(Poly::new(out))
    }
}

/// The `n`-th member of the basis.
pub fn basis_poly(kind: &BasisKind, n: usize) -> Result<Poly<Rational>, BasisError> {
    Ok(BasisTable::build(kind, n)?.members.pop().expect("n+1 members"))
}

pub fn expand_in_basis(p: &Poly<Rational>, kind: &BasisKind) -> Result<Vec<Rational>, BasisError> {
    BasisTable::build(kind, p.degree().unwrap_or(0))?.expand(p)
}

pub fn synthesize_from_basis(
    coeffs: &[Rational],
    kind: &BasisKind,
) -> Result<Poly<Rational>, BasisError> {
    BasisTable::build(kind, coeffs.len().saturating_sub(1))?.synthesize(coeffs)
}

/// `Dⁿ[(x²−1)ⁿ] / (2ⁿ n!)`
pub fn rodrigues_legendre(n: usize) -> Poly<Rational> {
    let mut p = Poly::new(vec![int(-1), int(0), int(1)]).pow(n as u32);
    for _ in 0..n {
        p = p.derivative();
    }
    let scale = (factorial(n) * Rational::from_integer(num_bigint::BigInt::from(1) << n)).recip();
    p.scale_rational(&scale)
}

/// Recurrence-generated `Le_n` equals the Rodrigues expression.
pub fn rodrigues_check(n: usize) -> bool {
    basis_poly(&BasisKind::Legendre, n).is_ok_and(|le| le == rodrigues_legendre(n))
}

/// `∫_{−1}^{1} Le_m Le_n dx`, exactly.
pub fn orthogonality_integral(m: usize, n: usize) -> Rational {
    let t = BasisTable::build(&BasisKind::Legendre, m.max(n)).expect("legendre is valid");
    let anti = t.member(m).times(t.member(n)).integral();
    anti.eval(&int(1)) - anti.eval(&int(-1))
}

/// `(1−x²)Le_n'' − 2x·Le_n' + n(n+1)·Le_n`, which must vanish.
pub fn legendre_ode_residual(n: usize) -> Poly<Rational> {
    let le = basis_poly(&BasisKind::Legendre, n).expect("legendre is valid");
    let d1 = le.derivative();
    let d2 = d1.derivative();
    let m = n as i64;
    Poly::new(vec![int(1), int(0), int(-1)])
        .times(&d2)
        .minus(&Poly::new(vec![int(0), int(2)]).times(&d1))
        .plus(&le.scale_rational(&int(m * (m + 1))))
}

/// `(x²+1)Le_n'' − 2x·Le_n' − n(n+1)·Le_n`: the sign-flipped variant of the
/// Legendre equation. Nonzero for n ≥ 2, so that form is not an identity.
pub fn sign_flipped_ode_residual(n: usize) -> Poly<Rational> {
    let le = basis_poly(&BasisKind::Legendre, n).expect("legendre is valid");
    let d1 = le.derivative();
    let d2 = d1.derivative();
    let m = n as i64;
    Poly::new(vec![int(1), int(0), int(1)])
        .times(&d2)
        .minus(&Poly::new(vec![int(0), int(2)]).times(&d1))
        .minus(&le.scale_rational(&int(m * (m + 1))))
}

/// `p(x) ↦ p(−x)`
pub fn parity_reflect(p: &Poly<Rational>) -> Poly<Rational> {
    p.reflect()
}

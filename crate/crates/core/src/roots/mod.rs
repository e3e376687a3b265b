//! Exact real-root machinery: Sturm chains, isolation, interlacing,
//! resultants, discriminants and the cubic/quartic classifiers.

mod classify;
mod resultant;
mod sturm;

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;
use thiserror::Error;

use crate::arith::{int, Rational};

pub use classify::{classify_cubic, classify_quartic, CubicClass, QuarticClass, QuarticTag};
pub use resultant::{discriminant, discriminant_inner, resultant};
pub use sturm::{
    cauchy_bound, interlace_check, is_real_rooted, isolate_roots, sign_on, sturm_count,
    IsolatingInterval, RootIsolation, SturmChain,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootsError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("degrees {0} and {1} differ by more than one")]
    DegreeGap(usize, usize),
    #[error("expected degree {expected}, found {found:?}")]
    WrongDegree {
        expected: usize,
        found: Option<usize>,
    },
    #[error("discriminant needs degree at least 2")]
    DegreeTooSmall,
    #[error("isolation width must be positive")]
    BadPrecision,
    #[error("interval is empty")]
    EmptyInterval,
}

/// Endpoint of a counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

impl Bound {
    pub fn at(q: Rational) -> Self {
        Bound::At(q)
    }

    fn rank(&self) -> (i8, Option<&Rational>) {
        match self {
            Bound::NegInf => (-1, None),
            Bound::At(q) => (0, Some(q)),
            Bound::PosInf => (1, None),
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, qa) = self.rank();
        let (b, qb) = other.rank();
        a.cmp(&b).then_with(|| qa.cmp(&qb))
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::At(q) => write!(f, "{q}"),
            Bound::PosInf => f.write_str("inf"),
        }
    }
}

pub(crate) fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

pub(crate) fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) * half()
}

pub(crate) fn zero() -> Rational {
    int(0)
}

//! Sequences, the diagonal operators they induce on a basis, and finite
//! multiplier-sequence tests.

mod classical;
mod family;
mod legendre;
mod operator;
mod sequence;
mod structural;
mod verdict;

use thiserror::Error;

use crate::bases::BasisError;
use crate::roots::RootsError;

pub use classical::{classical_ms_test, jensen, quadratic_classical_region};
pub use family::{basis_ms_test, TestFamily};
pub use legendre::{classify_quadratic_legendre, gap_pair, max_b_search, max_b_search_in};
pub use operator::{apply_diagonal, apply_operator, DiagonalOperator, PreparedOperator};
pub use sequence::SequenceSpec;
pub use structural::{is_trivial, structural_checks, Check, StructuralReport};
pub use verdict::{FailEvidence, NonrealEvidence, Status, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultSeqError {
    #[error("sequence has {len} terms, {needed} needed")]
    SequenceTooShort { needed: usize, len: usize },
    #[error("degree or horizon {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("precision must be positive")]
    BadPrecision,
    #[error("no real-rooted range of b found")]
    NoUpperBound,
    #[error("bad sequence: {0}")]
    Parse(String),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Roots(#[from] RootsError),
}

//! Differential-operator form `Σ p_k(x) Dᵏ` of diagonal operators, the
//! two-variable symbol, and a numeric falsifier for upper-half-plane
//! stability of that symbol.

mod falsify;
mod numeric;
mod rep;
mod symbol;

use thiserror::Error;

use crate::multseq::MultSeqError;

pub use falsify::{
    bb_falsify, sample_point, verify_counterexample, Counterexample, Diagnostics, FalsifierConfig,
    FalsifierResult, Outcome, DEFAULT_PRECISION_BITS,
};
pub use rep::{default_order, to_diffop, DiffOpRep, GUARD_EXTRA};
pub use symbol::{quadratic_symbol_roots, symbol, OperatorSymbol, Orientation, SymbolRoots};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffOpError {
    #[error("order {order} needs terms the sequence lacks (last index {last})")]
    SequenceTooShort { order: usize, last: usize },
    #[error("symbol has degree {0} in w; closed-form roots need degree at most 2")]
    NotQuadratic(usize),
    #[error("leading coefficient in w vanishes at this point")]
    DegenerateDirection,
    #[error("at least one sample is required")]
    NoSamples,
    #[error(transparent)]
    Operator(#[from] MultSeqError),
}

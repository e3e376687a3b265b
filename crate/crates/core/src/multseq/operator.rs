use super::{MultSeqError, SequenceSpec};
use crate::arith::{Poly, Rational, Ring};
use crate::bases::{BasisKind, BasisTable};

/// The linear map `q_k ↦ γ_k q_k` on a simple set.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalOperator {
    pub basis: BasisKind,
    pub seq: SequenceSpec,
}

impl DiagonalOperator {
    pub fn new(basis: BasisKind, seq: SequenceSpec) -> Self {
        DiagonalOperator { basis, seq }
    }

    /// Basis table and multipliers through degree `n`, for repeated use.
    pub fn prepare(&self, n: usize) -> Result<PreparedOperator, MultSeqError> {
        Ok(PreparedOperator {
            table: BasisTable::build(&self.basis, n)?,
            gammas: self.seq.terms(n)?,
        })
    }

    pub fn apply(&self, p: &Poly<Rational>) -> Result<Poly<Rational>, MultSeqError> {
        self.prepare(p.degree().unwrap_or(0))?.apply(p)
    }
}

#[derive(Clone, Debug)]
pub struct PreparedOperator {
    table: BasisTable,
    gammas: Vec<Rational>,
}

impl PreparedOperator {
    pub fn max_degree(&self) -> usize {
        self.table.max_degree()
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gammas
    }

    pub fn table(&self) -> &BasisTable {
        &self.table
    }

    pub fn apply(&self, p: &Poly<Rational>) -> Result<Poly<Rational>, MultSeqError> {
        apply_diagonal(&self.table, &self.gammas, p)
    }
}

/// One-shot application of `op` to `p`.
pub fn apply_operator(op: &DiagonalOperator, p: &Poly<Rational>) -> Result<Poly<Rational>, MultSeqError> {
    op.apply(p)
}

/// Expands `p` in the table's basis, scales the `k`-th coordinate by
/// `gammas[k]` and synthesizes back. `R` may carry symbolic parameters in
/// both the multipliers and the input.
pub fn apply_diagonal<R: Ring>(
    table: &BasisTable,
    gammas: &[R],
    p: &Poly<R>,
) -> Result<Poly<R>, MultSeqError> {
    let coords = table.expand(p)?;
    if coords.len() > gammas.len() {
        return Err(MultSeqError::SequenceTooShort {
            needed: coords.len(),
            len: gammas.len(),
        });
    }
    let scaled: Vec<R> = coords.iter().zip(gammas).map(|(a, g)| a.times(g)).collect();
    Ok(table.synthesize(&scaled)?)
}

use serde::Serialize;

use super::{DiagonalOperator, MultSeqError};
use crate::arith::{Poly, Rational};
use crate::roots::{is_real_rooted, SturmChain};

/// Why a transform is certified to have a nonreal root: its square-free
/// part has more roots than real ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonrealEvidence {
    pub squarefree_degree: usize,
    pub distinct_real_roots: usize,
}

impl NonrealEvidence {
    /// `None` when `p` is zero or real-rooted.
    pub fn of(p: &Poly<Rational>) -> Option<Self> {
        let chain = SturmChain::new(p).ok()?;
        let squarefree_degree = chain.base().degree().unwrap_or(0);
        let distinct_real_roots = chain.count_all();
        (distinct_real_roots < squarefree_degree).then_some(NonrealEvidence {
            squarefree_degree,
            distinct_real_roots,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FailEvidence {
    #[serde(serialize_with = "crate::ser::poly")]
    pub witness: Poly<Rational>,
    #[serde(serialize_with = "crate::ser::poly")]
    pub transform: Poly<Rational>,
    /// Which part of the test family produced the witness.
    pub source: String,
    pub evidence: NonrealEvidence,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Status {
    /// Every test input up to degree `scope` stayed real-rooted. Finite
    /// evidence only.
    CertifiedPass { scope: usize },
    CertifiedFail(Box<FailEvidence>),
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    #[serde(flatten)]
    pub status: Status,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn pass(scope: usize) -> Self {
        Verdict {
            status: Status::CertifiedPass { scope },
            notes: Vec::new(),
        }
    }

    pub fn undecided() -> Self {
        Verdict {
            status: Status::Undecided,
            notes: Vec::new(),
        }
    }

    /// A failure, provided `transform` really has a nonreal root.
    pub fn fail(
        witness: Poly<Rational>,
        transform: Poly<Rational>,
        source: impl Into<String>,
    ) -> Option<Self> {
        let evidence = NonrealEvidence::of(&transform)?;
        Some(Verdict {
            status: Status::CertifiedFail(Box::new(FailEvidence {
                witness,
                transform,
                source: source.into(),
                evidence,
            })),
            notes: Vec::new(),
        })
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }

    pub fn is_pass(&self) -> bool {
        matches!(self.status, Status::CertifiedPass { .. })
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.status, Status::CertifiedFail(_))
    }

    pub fn failure(&self) -> Option<&FailEvidence> {
        match &self.status {
            Status::CertifiedFail(e) => Some(e),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Poly<Rational>> {
        self.failure().map(|e| &e.witness)
    }

    /// Recomputes a failure from scratch: the witness is real-rooted, `op`
    /// maps it to the recorded transform, and that transform is not
    /// real-rooted. Other verdicts trivially re-verify.
    pub fn reverify(&self, op: &DiagonalOperator) -> Result<bool, MultSeqError> {
        let Some(e) = self.failure() else {
            return Ok(true);
        };
        Ok(is_real_rooted(&e.witness)?
            && op.apply(&e.witness)? == e.transform
            && !e.transform.is_zero()
            && !is_real_rooted(&e.transform)?)
    }
}

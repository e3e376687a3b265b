use num_traits::Signed;
use serde::Serialize;

use super::{MultSeqError, SequenceSpec};
use crate::arith::{Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Check {
    Pass,
    /// First index at which the property breaks.
    Fail { index: usize },
    /// The property only constrains non-trivial sequences.
    NotApplicable,
}

impl Check {
    pub fn passed(&self) -> bool {
        !matches!(self, Check::Fail { .. })
    }

    fn first(index: Option<usize>) -> Self {
        index.map_or(Check::Pass, |index| Check::Fail { index })
    }
}

/// Necessary conditions on `γ_0..=γ_horizon`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub horizon: usize,
    /// Constant, or supported on at most two consecutive indices.
    pub trivial: bool,
    /// Nonzero terms form one contiguous run (zeros only as head or tail).
    pub zero_pattern: Check,
    /// Nonzero terms share a sign or alternate.
    pub sign_pattern: Check,
    /// `γ_k² − γ_{k−1}γ_{k+1} ≥ 0`.
    pub turan: Check,
    /// `|γ_k| ≤ |γ_{k+1}|`, required of non-trivial Legendre sequences.
    pub monotone_magnitude: Check,
}

impl StructuralReport {
    pub fn all_pass(&self) -> bool {
        [
            self.zero_pattern,
            self.sign_pattern,
            self.turan,
            self.monotone_magnitude,
        ]
        .iter()
        .all(Check::passed)
    }
}

pub fn is_trivial(g: &[Rational]) -> bool {
    let support: Vec<usize> = (0..g.len()).filter(|&k| !g[k].is_zero()).collect();
    let constant = g.windows(2).all(|w| w[0] == w[1]);
    constant || support.len() <= 1 || (support.len() == 2 && support[1] == support[0] + 1)
}

pub fn structural_checks(seq: &SequenceSpec, horizon: usize) -> Result<StructuralReport, MultSeqError> {
    if horizon < 2 {
        return Err(MultSeqError::DegreeTooSmall(horizon));
    }
    let horizon = seq.clip(horizon);
    let g = seq.terms(horizon)?;
    let nz: Vec<usize> = (0..g.len()).filter(|&k| !g[k].is_zero()).collect();

    let zero_pattern = Check::first(
        nz.windows(2)
            .find(|w| w[1] > w[0] + 1)
            .map(|w| w[0] + 1),
    );
    let same = |a: usize, b: usize| g[a].is_positive() == g[b].is_positive();
    // the pattern breaks where the prefix is neither uniform nor alternating
    let uniform_break = nz.windows(2).find(|w| !same(w[0], w[1])).map(|w| w[1]);
    let alternating_break = nz
        .windows(2)
        .find(|w| same(w[0], w[1]) != ((w[1] - w[0]) % 2 == 0))
        .map(|w| w[1]);
    let sign_pattern = Check::first(uniform_break.zip(alternating_break).map(|(u, a)| u.max(a)));
    let turan = Check::first(
        (1..horizon).find(|&k| (&g[k] * &g[k] - &g[k - 1] * &g[k + 1]).is_negative()),
    );
    let trivial = is_trivial(&g);
    let monotone_magnitude = if trivial {
        Check::NotApplicable
    } else {
        Check::first((0..horizon).find(|&k| g[k].abs() > g[k + 1].abs()))
    };
    Ok(StructuralReport {
        horizon,
        trivial,
        zero_pattern,
        sign_pattern,
        turan,
        monotone_magnitude,
    })
}

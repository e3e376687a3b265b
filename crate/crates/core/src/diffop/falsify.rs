use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::numeric::{aberth, Complex};
use super::{DiffOpError, OperatorSymbol, Orientation};
use crate::arith::{rat, GaussianRational, Rational, Ring};

pub const DEFAULT_PRECISION_BITS: usize = 256;

#[derive(Clone, Debug, PartialEq)]
pub struct FalsifierConfig {
    pub samples: usize,
    pub seed: u64,
    /// Largest exact `|F(x0, w0)|` accepted for a numeric root.
    pub residual: Rational,
    /// Smallest `Im w0` accepted as inside the upper half-plane.
    pub margin: Rational,
    pub precision_bits: usize,
}

impl Default for FalsifierConfig {
    fn default() -> Self {
        FalsifierConfig {
            samples: 500,
            seed: 42,
            residual: Rational::new(1.into(), num_bigint::BigInt::from(10).pow(30)),
            margin: Rational::new(1.into(), num_bigint::BigInt::from(10).pow(12)),
            precision_bits: DEFAULT_PRECISION_BITS,
        }
    }
}

/// A zero of the symbol in the open upper bi-half-plane, up to the stated
/// residual. Both coordinates are exact rationals.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub sample: usize,
    #[serde(serialize_with = "crate::ser::gaussian")]
    pub x0: GaussianRational,
    #[serde(serialize_with = "crate::ser::gaussian")]
    pub w0: GaussianRational,
    #[serde(serialize_with = "crate::ser::rational")]
    pub residual_bound: Rational,
    #[serde(serialize_with = "crate::ser::rational")]
    pub margin: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Outcome {
    CounterexampleFound(Counterexample),
    /// Evidence of stability on the sampled points, never a certificate.
    NoZeroFound { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Diagnostics {
    pub orientation: Orientation,
    pub precision_bits: usize,
    pub degree_in_w: usize,
    pub samples_run: usize,
    /// Samples where the leading coefficient vanished at `x0`.
    pub degenerate: usize,
    /// Largest `Im w` over all roots found (approximate).
    pub max_root_imag: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FalsifierResult {
    #[serde(flatten)]
    pub outcome: Outcome,
    pub diagnostics: Diagnostics,
}

impl FalsifierResult {
    pub fn found(&self) -> bool {
        matches!(self.outcome, Outcome::CounterexampleFound(_))
    }
}

const GRID_RE: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];
const GRID_IM: [(i64, i64); 4] = [(1, 4), (1, 2), (1, 1), (2, 1)];

/// Sample `i`: the fixed grid first, then seeded random points with real
/// part in `[−4, 4]` and imaginary part in `(0, 4]`, at resolution `2⁻¹⁶`.
pub fn sample_point(seed: u64, i: usize) -> GaussianRational {
    let grid = GRID_RE.len() * GRID_IM.len();
    if i < grid {
        let (a, b) = GRID_RE[i % GRID_RE.len()];
        let (c, d) = GRID_IM[i / GRID_RE.len()];
        return GaussianRational::new(rat(a, b), rat(c, d));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    let scale = 1i64 << 16;
    let re = rng.gen_range(-4 * scale..=4 * scale);
    let im = rng.gen_range(1..=4 * scale);
    GaussianRational::new(rat(re, scale), rat(im, scale))
}

struct SampleResult {
    hit: Option<Counterexample>,
    degenerate: bool,
    max_imag: Option<f64>,
}

fn run_sample(sym: &OperatorSymbol, cfg: &FalsifierConfig, i: usize) -> SampleResult {
    let x0 = sample_point(cfg.seed, i);
    let coeffs = sym.coeffs_at(&x0);
    let deg = coeffs.len() - 1;
    if coeffs[deg].is_zero() {
        return SampleResult {
            hit: None,
            degenerate: true,
            max_imag: None,
        };
    }
    let p = cfg.precision_bits;
    let c: Vec<Complex> = coeffs.iter().map(|a| Complex::from_gaussian(a, p)).collect();
    let roots = aberth(&c, p, 500);
    let max_imag = roots.iter().map(|z| z.approx().1).reduce(f64::max);
    let f = crate::arith::Poly::new(coeffs);
    let bound_sq = &cfg.residual * &cfg.residual;
    let hit = roots
        .iter()
        .map(Complex::to_gaussian)
        .find(|w0| w0.im > cfg.margin && f.eval(w0).norm_sqr() < bound_sq)
        .map(|w0| Counterexample {
            sample: i,
            x0: x0.clone(),
            w0,
            residual_bound: cfg.residual.clone(),
            margin: cfg.margin.clone(),
        });
    SampleResult {
        hit,
        degenerate: false,
        max_imag,
    }
}

/// Searches for `x0, w0` in the upper half-planes with `F(x0, w0) = 0`,
/// `F` being the symbol's test polynomial. One-sided: a hit disproves the
/// corresponding Borcea–Brändén condition, a miss proves nothing.
pub fn bb_falsify(sym: &OperatorSymbol, cfg: &FalsifierConfig) -> Result<FalsifierResult, DiffOpError> {
    if cfg.samples == 0 {
        return Err(DiffOpError::NoSamples);
    }
    let degree_in_w = sym.degree_in_w();
    let mut diagnostics = Diagnostics {
        orientation: sym.orientation(),
        precision_bits: cfg.precision_bits,
        degree_in_w,
        samples_run: 0,
        degenerate: 0,
        max_root_imag: None,
    };
    let no_zero = Outcome::NoZeroFound {
        samples: cfg.samples,
        seed: cfg.seed,
    };
    if degree_in_w == 0 {
        return Ok(FalsifierResult {
            outcome: no_zero,
            diagnostics,
        });
    }
    let results: Vec<SampleResult> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| run_sample(sym, cfg, i))
        .collect();
    diagnostics.samples_run = results.len();
    diagnostics.degenerate = results.iter().filter(|r| r.degenerate).count();
    diagnostics.max_root_imag = results.iter().filter_map(|r| r.max_imag).reduce(f64::max);
    let outcome = results
        .into_iter()
        .find_map(|r| r.hit)
        .map_or(no_zero, Outcome::CounterexampleFound);
    Ok(FalsifierResult {
        outcome,
        diagnostics,
    })
}

/// Re-checks a counterexample exactly against the symbol.
pub fn verify_counterexample(sym: &OperatorSymbol, c: &Counterexample) -> bool {
    let zero = <Rational as Ring>::zero();
    c.x0.im > zero
        && c.w0.im > c.margin
        && sym.eval(&c.x0, &c.w0).norm_sqr() < &c.residual_bound * &c.residual_bound
}

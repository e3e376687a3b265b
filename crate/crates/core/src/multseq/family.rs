use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::legendre::{gap_pair, max_b_search_in};
use super::{DiagonalOperator, MultSeqError, SequenceSpec, Verdict};
use crate::arith::{int, rat, Poly, Rational};
use crate::bases::BasisKind;
use crate::roots::is_real_rooted;

/// Real-rooted inputs fed to a diagonal operator, tried in a fixed order:
/// explicit candidates, shifted powers `(x+t)ⁿ` (by `n`, then `t`), gap
/// pairs `q_n + b·q_{n−2}`, then seeded random products `Π(x − rᵢ)`.
#[derive(Clone, Debug)]
pub struct TestFamily {
    pub explicit: Vec<Poly<Rational>>,
    pub shifts: Vec<Rational>,
    pub gap_pairs: bool,
    pub gap_precision: Rational,
    pub random_products: usize,
    /// Random roots are multiples of `1/root_denominator` in
    /// `[−root_bound, root_bound]`.
    pub root_bound: i64,
    pub root_denominator: i64,
    pub seed: u64,
}

impl Default for TestFamily {
    fn default() -> Self {
        let mut shifts: Vec<Rational> = [-3, -2, -1].into_iter().map(int).collect();
        shifts.extend([rat(-1, 2), int(0), rat(1, 2)]);
        shifts.extend([1, 2, 3, -8, 8, -16, 16].into_iter().map(int));
        TestFamily {
            explicit: Vec::new(),
            shifts,
            gap_pairs: true,
            gap_precision: rat(1, 1024),
            random_products: 200,
            root_bound: 4,
            root_denominator: 4,
            seed: 0,
        }
    }
}

impl TestFamily {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_explicit(mut self, polys: Vec<Poly<Rational>>) -> Self {
        self.explicit = polys;
        self
    }

    /// Every input up to degree `n`, labelled, in trial order.
    pub fn candidates(
        &self,
        basis: &BasisKind,
        n: usize,
    ) -> Result<Vec<(String, Poly<Rational>)>, MultSeqError> {
        let mut out = Vec::new();
        for p in &self.explicit {
            if p.degree().is_some_and(|d| d <= n) && is_real_rooted(p)? {
                out.push(("explicit".to_string(), p.clone()));
            }
        }
        for d in 1..=n {
            for t in &self.shifts {
                out.push((shift_label(t, d), Poly::shift(t.clone()).pow(d as u32)));
            }
        }
        if self.gap_pairs {
            let table = crate::bases::BasisTable::build(basis, n)?;
            for d in 2..=n {
                if let Ok((lo, _)) = max_b_search_in(basis, d, &self.gap_precision) {
                    out.push((format!("q_{d} + {lo}*q_{}", d - 2), gap_pair(&table, d, &lo)));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let span = self.root_bound * self.root_denominator;
        for i in 0..self.random_products {
            if n == 0 {
                break;
            }
            let d = rng.gen_range(1..=n);
            let roots: Vec<Rational> = (0..d)
                .map(|_| rat(rng.gen_range(-span..=span), self.root_denominator))
                .collect();
            out.push((format!("random #{i}"), Poly::from_roots(&roots)));
        }
        Ok(out)
    }
}

fn shift_label(t: &Rational, d: usize) -> String {
    if t.is_negative() {
        format!("(x-{})^{d}", -t)
    } else {
        format!("(x+{t})^{d}")
    }
}

/// Finite test of `seq` as a multiplier sequence for `basis`: every family
/// input up to `max_degree` must map to a real-rooted polynomial. The first
/// failure in family order is reported, whatever order the parallel
/// workers finish in.
pub fn basis_ms_test(
    seq: &SequenceSpec,
    basis: &BasisKind,
    max_degree: usize,
    family: &TestFamily,
) -> Result<Verdict, MultSeqError> {
    let n = seq.clip(max_degree);
    let op = DiagonalOperator::new(basis.clone(), seq.clone()).prepare(n)?;
    let candidates = family.candidates(basis, n)?;
    let hit = candidates
        .par_iter()
        .map(|(label, p)| -> Result<Option<Verdict>, MultSeqError> {
            let t = op.apply(p)?;
            if t.is_zero() || is_real_rooted(&t)? {
                return Ok(None);
            }
            Ok(Verdict::fail(p.clone(), t, label.clone()))
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    let mut v = match hit {
        Some(r) => r?.expect("failure carries a verdict"),
        None => Verdict::pass(n).note(format!("{} inputs stayed real-rooted", candidates.len())),
    };
    if n < max_degree {
        v = v.note(format!("sequence defined only through k = {n}"));
    }
    Ok(v)
}

use num_traits::Signed;

use super::{DiagonalOperator, MultSeqError, SequenceSpec, Verdict};
use crate::arith::{binomial, int, Poly, Rational, Ring};
use crate::bases::BasisKind;
use crate::roots::is_real_rooted;

/// The `n`-th Jensen polynomial `Σ C(n,k) γ_k x^k`.
pub fn jensen(gammas: &[Rational], n: usize) -> Poly<Rational> {
    Poly::new((0..=n).map(|k| binomial(n, k) * &gammas[k]).collect())
}

/// Nonzero terms all share a sign, or alternate in sign.
fn normalizable(gammas: &[Rational]) -> bool {
    let signs: Vec<(usize, bool)> = gammas
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(k, g)| (k, g.is_positive()))
        .collect();
    let same = signs.windows(2).all(|w| w[0].1 == w[1].1);
    let alternating = signs
        .windows(2)
        .all(|w| (w[0].1 == w[1].1) == ((w[1].0 - w[0].0) % 2 == 0));
    same || alternating
}

/// Finite Jensen-polynomial test for classical multiplier sequences.
///
/// Alternating sequences need no normalization: their Jensen polynomials
/// are those of `|γ_k|` evaluated at `−x`.
pub fn classical_ms_test(seq: &SequenceSpec, max_degree: usize) -> Result<Verdict, MultSeqError> {
    let n_max = seq.clip(max_degree);
    let gammas = seq.terms(n_max)?;
    let op = DiagonalOperator::new(BasisKind::Standard, seq.clone());
    let mut notes = Vec::new();
    if n_max < max_degree {
        notes.push(format!("sequence defined only through k = {n_max}"));
    }

    // γ_k γ_{k+2} < 0 makes x^k (γ_{k+2} x² − γ_k) nonreal-rooted
    for k in 0..n_max.saturating_sub(1) {
        if (&gammas[k] * &gammas[k + 2]).is_negative() {
            let w = Poly::monomial(int(1), k).times(&Poly::new(vec![int(-1), int(0), int(1)]));
            let t = op.apply(&w)?;
            if let Some(v) = Verdict::fail(w, t, "sign pattern") {
                return Ok(with_notes(v, notes));
            }
        }
    }
    for n in 1..=n_max {
        let j = jensen(&gammas, n);
        if !j.is_zero() && !is_real_rooted(&j)? {
            let w = Poly::shift(int(1)).pow(n as u32);
            let v = Verdict::fail(w, j, "Jensen polynomial").expect("nonreal transform");
            return Ok(with_notes(v, notes));
        }
    }
    if !normalizable(&gammas) {
        notes.push("sign pattern is neither constant nor alternating".into());
        return Ok(with_notes(Verdict::undecided(), notes));
    }
    Ok(with_notes(Verdict::pass(n_max), notes))
}

fn with_notes(mut v: Verdict, notes: Vec<String>) -> Verdict {
    v.notes.extend(notes);
    v
}

/// `⟨k² + αk + β⟩` is a classical multiplier sequence exactly when
/// `α ≥ −1` and `0 ≤ β ≤ (α+1)²/4`.
pub fn quadratic_classical_region(alpha: &Rational, beta: &Rational) -> bool {
    let a1 = alpha + int(1);
    !a1.is_negative() && !beta.is_negative() && int(4) * beta <= &a1 * &a1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::multseq::Status;

    fn seq(s: &str) -> SequenceSpec {
        s.parse().unwrap()
    }

    #[test]
    fn euler_passes() {
        let v = classical_ms_test(&seq("k"), 8).unwrap();
        assert_eq!(v.status, Status::CertifiedPass { scope: 8 });
    }

    #[test]
    fn large_constant_fails_at_two() {
        let s = seq("k^2 + 10");
        let v = classical_ms_test(&s, 8).unwrap();
        let e = v.failure().unwrap();
        assert_eq!(e.witness, Poly::shift(int(1)).pow(2));
        assert_eq!(e.transform, Poly::new(vec![int(10), int(22), int(14)]));
        let op = DiagonalOperator::new(BasisKind::Standard, s);
        assert!(v.reverify(&op).unwrap());
    }

    #[test]
    fn trivial_list_passes() {
        let v = classical_ms_test(&seq("list(1, 1, 0, 0)"), 8).unwrap();
        assert_eq!(v.status, Status::CertifiedPass { scope: 3 });
        assert!(!v.notes.is_empty());
    }

    #[test]
    fn alternating_is_normalized() {
        assert!(classical_ms_test(&seq("geom(-2)"), 8).unwrap().is_pass());
        let v = classical_ms_test(&seq("list(1, 2, -1)"), 4).unwrap();
        assert_eq!(v.failure().unwrap().source, "sign pattern");
    }

    #[test]
    fn region() {
        assert!(quadratic_classical_region(&int(1), &int(1)));
        assert!(!quadratic_classical_region(&int(1), &rat(3, 2)));
        assert!(quadratic_classical_region(&int(-1), &int(0)));
        assert!(!quadratic_classical_region(&rat(-3, 2), &int(0)));
        assert!(!quadratic_classical_region(&int(0), &rat(-1, 10)));
    }
}

use num_traits::Signed;

use super::MultSeqError;
use crate::arith::{int, Poly, Rational};
use crate::bases::{BasisKind, BasisTable};
use crate::roots::is_real_rooted;

/// `⟨k² + αk + β⟩` is a Legendre multiplier sequence exactly when `α = 1`
/// and `0 ≤ β ≤ 1`.
pub fn classify_quadratic_legendre(alpha: &Rational, beta: &Rational) -> bool {
    *alpha == int(1) && !beta.is_negative() && *beta <= int(1)
}

/// Certified bracket `(lo, hi)` around `max E_n`, where `E_n` is the set of
/// `b` for which `Le_n + b·Le_{n−2}` is real-rooted. `lo ∈ E_n`, `hi ∉ E_n`
/// and `hi − lo ≤ precision`.
pub fn max_b_search(n: usize, precision: &Rational) -> Result<(Rational, Rational), MultSeqError> {
    max_b_search_in(&BasisKind::Legendre, n, precision)
}

/// [`max_b_search`] for `q_n + b·q_{n−2}` in any basis. Assumes `E_n` meets
/// `[0, ∞)` in an interval, which holds when `q_n` is real-rooted.
pub fn max_b_search_in(
    kind: &BasisKind,
    n: usize,
    precision: &Rational,
) -> Result<(Rational, Rational), MultSeqError> {
    if n < 2 {
        return Err(MultSeqError::DegreeTooSmall(n));
    }
    if !precision.is_positive() {
        return Err(MultSeqError::BadPrecision);
    }
    let table = BasisTable::build(kind, n)?;
    let (qn, qm) = (table.member(n), table.member(n - 2));
    let member = |b: &Rational| -> Result<bool, MultSeqError> {
        Ok(is_real_rooted(&qn.plus(&qm.scale_rational(b)))?)
    };
    if !member(&int(0))? {
        return Err(MultSeqError::NoUpperBound);
    }
    let mut lo = int(0);
    let mut hi = int(1);
    let mut doublings = 0;
    while member(&hi)? {
        lo = hi.clone();
        hi *= int(2);
        doublings += 1;
        if doublings > 128 {
            return Err(MultSeqError::NoUpperBound);
        }
    }
    while &hi - &lo > *precision {
        let mid = (&lo + &hi) / int(2);
        if member(&mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// `q_n + b·q_{n−2}`.
pub fn gap_pair(table: &BasisTable, n: usize, b: &Rational) -> Poly<Rational> {
    table
        .member(n)
        .plus(&table.member(n - 2).scale_rational(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn closed_form() {
        assert!(classify_quadratic_legendre(&int(1), &rat(1, 2)));
        assert!(classify_quadratic_legendre(&int(1), &int(0)));
        assert!(!classify_quadratic_legendre(&int(0), &int(10)));
        assert!(!classify_quadratic_legendre(&int(1), &rat(11, 10)));
    }

    #[test]
    fn bracket_for_n2() {
        let (lo, hi) = max_b_search(2, &rat(1, 1000)).unwrap();
        assert!(lo <= rat(1, 2) && rat(1, 2) < hi);
        assert!(&hi - &lo <= rat(1, 1000));
    }

    #[test]
    fn brackets_are_certified() {
        let table = BasisTable::build(&BasisKind::Legendre, 8).unwrap();
        for n in 2..=8 {
            let (lo, hi) = max_b_search(n, &rat(1, 256)).unwrap();
            assert!(lo.is_positive());
            assert!(is_real_rooted(&gap_pair(&table, n, &lo)).unwrap());
            assert!(!is_real_rooted(&gap_pair(&table, n, &hi)).unwrap());
            assert!(is_real_rooted(table.member(n)).unwrap());
        }
        assert!(matches!(
            max_b_search(1, &rat(1, 2)),
            Err(MultSeqError::DegreeTooSmall(1))
        ));
    }
}

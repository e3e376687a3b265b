use std::cmp::Ordering;

use num_traits::Signed;

use super::{midpoint, sign, zero, Bound, RootsError};
use crate::arith::{int, Poly, Rational, Ring};

/// Sturm chain of the square-free part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly<Rational>>,
}

impl SturmChain {
    pub fn new(p: &Poly<Rational>) -> Result<Self, RootsError> {
        let sf = p.squarefree_part().map_err(|_| RootsError::ZeroPolynomial)?;
        let mut chain = vec![sf.clone()];
        if sf.degree() == Some(0) {
            return Ok(SturmChain { chain });
        }
        let mut prev = sf;
        let mut cur = prev.derivative();
        while !cur.is_zero() {
            let next = prev.rem(&cur).expect("nonzero divisor").negate();
            chain.push(cur.clone());
            prev = cur;
            cur = next;
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[Poly<Rational>] {
        &self.chain
    }

    /// The square-free polynomial the chain starts with.
    pub fn base(&self) -> &Poly<Rational> {
        &self.chain[0]
    }

    pub fn sign_changes(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().map(|p| {
            let lc = p.leading().map(sign).unwrap_or(0);
            match at {
                Bound::PosInf => lc,
                Bound::NegInf => {
                    if p.degree().unwrap_or(0) % 2 == 1 {
                        -lc
                    } else {
                        lc
                    }
                }
                Bound::At(q) => sign(&p.eval(q)),
            }
        });
        let mut changes = 0;
        let mut last = 0i8;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        if lo >= hi {
            return 0;
        }
        self.sign_changes(lo) - self.sign_changes(hi)
    }

    pub fn count_all(&self) -> usize {
        self.count(&Bound::NegInf, &Bound::PosInf)
    }
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn sturm_count(p: &Poly<Rational>, lo: &Bound, hi: &Bound) -> Result<usize, RootsError> {
    Ok(SturmChain::new(p)?.count(lo, hi))
}

/// True when every complex root of `p` is real. Repeated roots are allowed.
pub fn is_real_rooted(p: &Poly<Rational>) -> Result<bool, RootsError> {
    let chain = SturmChain::new(p)?;
    Ok(chain.count_all() == chain.base().degree().unwrap_or(0))
}

/// `1 + max |a_i / a_n|`; every root satisfies `|z| < bound`.
pub fn cauchy_bound(p: &Poly<Rational>) -> Result<Rational, RootsError> {
    let lc = p.leading().ok_or(RootsError::ZeroPolynomial)?;
    let n = p.coeffs().len() - 1;
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| (c / lc).abs())
        .max()
        .unwrap_or_else(zero);
    Ok(m + int(1))
}

/// A root `ρ` with `lo < ρ ≤ hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        midpoint(&self.lo, &self.hi)
    }
}

/// Disjoint isolating intervals for the distinct real roots, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootIsolation {
    pub intervals: Vec<IsolatingInterval>,
}

impl RootIsolation {
    pub fn distinct(&self) -> usize {
        self.intervals.len()
    }

    /// Real roots counted with multiplicity.
    pub fn total(&self) -> usize {
        self.intervals.iter().map(|iv| iv.multiplicity).sum()
    }
}

fn bisect(
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    width: &Rational,
    out: &mut Vec<(Rational, Rational)>,
) {
    let n = chain.count(&Bound::At(lo.clone()), &Bound::At(hi.clone()));
    if n == 0 {
        return;
    }
    if n == 1 && &(&hi - &lo) <= width {
        out.push((lo, hi));
        return;
    }
    let mid = midpoint(&lo, &hi);
    bisect(chain, lo, mid.clone(), width, out);
    bisect(chain, mid, hi, width, out);
}

/// Isolates every distinct real root to an interval of width at most `width`.
pub fn isolate_roots(p: &Poly<Rational>, width: &Rational) -> Result<RootIsolation, RootsError> {
    if !width.is_positive() {
        return Err(RootsError::BadPrecision);
    }
    let chain = SturmChain::new(p)?;
    let b = cauchy_bound(p)?;
    let mut raw = Vec::new();
    bisect(&chain, -b.clone(), b, width, &mut raw);

    let factors: Vec<(SturmChain, usize)> = p
        .squarefree_decomposition()
        .map_err(|_| RootsError::ZeroPolynomial)?
        .into_iter()
        .filter(|(f, _)| f.degree().unwrap_or(0) > 0)
        .map(|(f, m)| (SturmChain::new(&f).expect("nonzero factor"), m))
        .collect();
    let intervals = raw
        .into_iter()
        .map(|(lo, hi)| {
            let (l, h) = (Bound::At(lo.clone()), Bound::At(hi.clone()));
            let multiplicity = factors
                .iter()
                .find(|(c, _)| c.count(&l, &h) == 1)
                .map(|(_, m)| *m)
                .expect("each root belongs to one factor");
            IsolatingInterval {
                lo,
                hi,
                multiplicity,
            }
        })
        .collect();
    Ok(RootIsolation { intervals })
}

/// True when the real roots of `p` and `q` are simple and strictly alternate.
pub fn interlace_check(p: &Poly<Rational>, q: &Poly<Rational>) -> Result<bool, RootsError> {
    let dp = p.degree().ok_or(RootsError::ZeroPolynomial)?;
    let dq = q.degree().ok_or(RootsError::ZeroPolynomial)?;
    if !is_real_rooted(p)? || !is_real_rooted(q)? {
        return Err(RootsError::NotRealRooted);
    }
    if dp.abs_diff(dq) > 1 {
        return Err(RootsError::DegreeGap(dp, dq));
    }
    let simple = |f: &Poly<Rational>| f.squarefree_part().map(|s| s.degree()) == Ok(f.degree());
    if !simple(p) || !simple(q) || p.gcd(q).degree() != Some(0) {
        return Ok(false);
    }
    // roots of p·q are all simple now; label each by its owner
    let pq = p.times(q);
    let iso = isolate_roots(&pq, &cauchy_bound(&pq)?)?;
    let pc = SturmChain::new(p)?;
    let labels: Vec<bool> = iso
        .intervals
        .iter()
        .map(|iv| pc.count(&Bound::At(iv.lo.clone()), &Bound::At(iv.hi.clone())) == 1)
        .collect();
    Ok(labels.windows(2).all(|w| w[0] != w[1]))
}

/// Sign of `p` on the open interval `(lo, hi)` when it has no root there.
/// `None` when `p` vanishes somewhere inside.
pub fn sign_on(p: &Poly<Rational>, lo: &Bound, hi: &Bound) -> Result<Option<Ordering>, RootsError> {
    if lo >= hi {
        return Err(RootsError::EmptyInterval);
    }
    if p.is_zero() {
        return Ok(Some(Ordering::Equal));
    }
    let chain = SturmChain::new(p)?;
    let mut inside = chain.count(lo, hi);
    if let Bound::At(h) = hi {
        if p.eval(h).is_zero() {
            inside -= 1;
        }
    }
    if inside > 0 {
        return Ok(None);
    }
    let probe = match (lo, hi) {
        (Bound::At(a), Bound::At(b)) => midpoint(a, b),
        (Bound::At(a), _) => a + int(1),
        (_, Bound::At(b)) => b - int(1),
        _ => zero(),
    };
    Ok(Some(sign(&p.eval(&probe)).cmp(&0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, text::parse_poly};
    use crate::bases::{basis_poly, BasisKind};

    fn p(s: &str) -> Poly<Rational> {
        parse_poly(s, "x").unwrap()
    }

    fn all() -> (Bound, Bound) {
        (Bound::NegInf, Bound::PosInf)
    }

    #[test]
    fn counts() {
        let (lo, hi) = all();
        assert_eq!(sturm_count(&p("x^2+1"), &lo, &hi).unwrap(), 0);
        assert_eq!(sturm_count(&p("(x-1)^2*(x+2)"), &lo, &hi).unwrap(), 2);
        let le4 = basis_poly(&BasisKind::Legendre, 4).unwrap();
        let n = sturm_count(&le4, &Bound::At(int(-1)), &Bound::At(int(1))).unwrap();
        assert_eq!(n, 4);
        assert_eq!(
            sturm_count(&Poly::zero(), &lo, &hi),
            Err(RootsError::ZeroPolynomial)
        );
    }

    #[test]
    fn half_open() {
        let f = p("x^2-1");
        let at = |a: i64| Bound::At(int(a));
        assert_eq!(sturm_count(&f, &at(-1), &at(1)).unwrap(), 1);
        assert_eq!(sturm_count(&f, &at(-2), &at(-1)).unwrap(), 1);
        assert_eq!(sturm_count(&f, &at(1), &at(-1)).unwrap(), 0);
    }

    #[test]
    fn real_rootedness() {
        assert!(is_real_rooted(&p("(x-1)^3")).unwrap());
        assert!(!is_real_rooted(&p("x^2+x+1")).unwrap());
        let le5 = basis_poly(&BasisKind::Legendre, 5).unwrap();
        let le3 = basis_poly(&BasisKind::Legendre, 3).unwrap();
        assert!(is_real_rooted(&le5.plus(&le3.scale_rational(&rat(1, 10)))).unwrap());
        assert!(is_real_rooted(&p("7")).unwrap());
    }

    #[test]
    fn isolation() {
        let w = rat(1, 1000);
        let iso = isolate_roots(&p("x^2-2"), &w).unwrap();
        assert_eq!(iso.distinct(), 2);
        let r = &iso.intervals[1];
        assert!(r.width() <= w);
        assert!(&r.lo * &r.lo < int(2) && &r.hi * &r.hi >= int(2));
        assert!(r.lo.is_positive());

        let le2 = basis_poly(&BasisKind::Legendre, 2).unwrap();
        let iso = isolate_roots(&le2, &w).unwrap();
        for (iv, s) in iso.intervals.iter().zip([-1, 1]) {
            // ±1/√3: 3ρ² = 1
            let (a, b) = if s < 0 { (&iv.hi, &iv.lo) } else { (&iv.lo, &iv.hi) };
            assert!(int(3) * a * a <= int(1) && int(3) * b * b >= int(1));
        }

        let iso = isolate_roots(&p("x"), &w).unwrap();
        assert_eq!(iso.distinct(), 1);
        assert!(iso.intervals[0].lo < int(0) && iso.intervals[0].hi >= int(0));
    }

    #[test]
    fn multiplicities() {
        let iso = isolate_roots(&p("(x-1)^3*(x+2)*(x^2+1)"), &rat(1, 64)).unwrap();
        let m: Vec<usize> = iso.intervals.iter().map(|i| i.multiplicity).collect();
        assert_eq!(m, vec![1, 3]);
        assert_eq!(iso.total(), 4);
    }

    #[test]
    fn interlacing() {
        let le = |n| basis_poly(&BasisKind::Legendre, n).unwrap();
        assert!(interlace_check(&le(2), &le(1)).unwrap());
        // −2, −1, 1, 2 belong to q, p, p, q
        assert!(!interlace_check(&p("x^2-1"), &p("x^2-4")).unwrap());
        assert!(interlace_check(&p("x^2-1"), &p("x^2-1/4")).is_ok());
        assert!(!interlace_check(&p("x"), &p("x")).unwrap());
        assert_eq!(
            interlace_check(&p("x^2+1"), &p("x")),
            Err(RootsError::NotRealRooted)
        );
        assert_eq!(
            interlace_check(&p("x^3-x"), &p("x")),
            Err(RootsError::DegreeGap(3, 1))
        );
    }

    #[test]
    fn sign_certificates() {
        let f = p("x^2-1");
        let at = |a: i64| Bound::At(int(a));
        assert_eq!(sign_on(&f, &at(-1), &at(1)).unwrap(), Some(Ordering::Less));
        assert_eq!(sign_on(&f, &at(1), &Bound::PosInf).unwrap(), Some(Ordering::Greater));
        assert_eq!(sign_on(&f, &Bound::NegInf, &at(0)).unwrap(), None);
    }
}

//! Parametric discriminant computations for quadratic sequences and the
//! geometric family.

use std::cmp::Ordering;

use super::{Findings, ReproError};
use crate::arith::text::{format_poly, parse_nested};
use crate::arith::{int, rat, to_f64, transpose, Poly, Rational, Ring};
use crate::bases::{BasisKind, BasisTable};
use crate::multseq::apply_diagonal;
use crate::roots::{discriminant, discriminant_inner, isolate_roots, sign_on, Bound};

type P1 = Poly<Rational>;
type P2 = Poly<P1>;
type P3 = Poly<P2>;

/// Which line family sweeps the `(α, β)` region.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NestedCase {
    /// `β = r(1 − α)`, `α ≥ −1`, `α ≠ 1`, boundary `r = 1`.
    One,
    /// `β = rα`, `0 < α < 1`, boundary `r = 2`.
    Two,
}

impl NestedCase {
    pub fn boundary_r(self) -> Rational {
        match self {
            NestedCase::One => int(1),
            NestedCase::Two => int(2),
        }
    }

    /// The α-range as open segments plus closed endpoints.
    fn range(self) -> (Vec<(Bound, Bound)>, Vec<Rational>) {
        match self {
            NestedCase::One => (
                vec![
                    (Bound::At(int(-1)), Bound::At(int(1))),
                    (Bound::At(int(1)), Bound::PosInf),
                ],
                vec![int(-1)],
            ),
            NestedCase::Two => (vec![(Bound::At(int(0)), Bound::At(int(1)))], vec![]),
        }
    }

    fn range_text(self) -> &'static str {
        match self {
            NestedCase::One => "[-1, 1) u (1, oo)",
            NestedCase::Two => "(0, 1)",
        }
    }
}

/// `(1+x)⁴` under `⟨k² + αk + β⟩` with Legendre basis, in `(x, α, β)`.
pub fn quadratic_transform_general() -> Result<P3, ReproError> {
    let alpha = P2::monomial(P1::one(), 1);
    let beta = P2::constant(P1::x());
    quadratic_transform(&alpha, &beta, 4)
}

fn quadratic_transform(alpha: &P2, beta: &P2, n: usize) -> Result<P3, ReproError> {
    let table = BasisTable::build(&BasisKind::Legendre, n)?;
    let gammas: Vec<P2> = (0..=n)
        .map(|k| {
            let k = int(k as i64);
            P2::from_rational(&(&k * &k))
                .plus(&alpha.scale(&k))
                .plus(beta)
        })
        .collect();
    let p: P3 = Poly::shift(int(1)).pow(n as u32).map(P2::from_rational);
    Ok(apply_diagonal(&table, &gammas, &p)?)
}

/// The substituted transform `f(α, β(α, r), x)` for a case, in `(x, α, r)`.
pub fn case_transform(case: NestedCase) -> Result<P3, ReproError> {
    let alpha = P2::monomial(P1::one(), 1);
    let r = P2::constant(P1::x());
    let beta = match case {
        NestedCase::One => r.minus(&alpha.times(&r)),
        NestedCase::Two => alpha.times(&r),
    };
    quadratic_transform(&alpha, &beta, 4)
}

fn at_inner(p: &P2, r: &Rational) -> P1 {
    p.map(|c| c.eval(r))
}

fn sign_name(o: Option<Ordering>) -> &'static str {
    match o {
        Some(Ordering::Less) => "negative",
        Some(Ordering::Greater) => "positive",
        Some(Ordering::Equal) => "zero",
        None => "changes sign",
    }
}

/// Sign of `p` on a union of open segments and closed endpoints, `None`
/// when it is not constant.
fn sign_over(p: &P1, segments: &[(Bound, Bound)], points: &[Rational]) -> Result<Option<Ordering>, ReproError> {
    let mut signs = Vec::new();
    for (lo, hi) in segments {
        signs.push(sign_on(p, lo, hi)?);
    }
    for a in points {
        signs.push(Some(crate::roots::sign(&p.eval(a)).cmp(&0)));
    }
    let first = signs[0];
    Ok(if signs.iter().all(|s| *s == first) { first } else { None })
}

/// Largest `m` with `(α − a)^m | p`.
fn multiplicity_at(p: &P1, a: &Rational) -> usize {
    let lin = Poly::shift(-a.clone());
    let mut q = p.clone();
    let mut m = 0;
    while !q.is_zero() {
        match q.exact_div(&lin) {
            Some(next) => {
                q = next;
                m += 1;
            }
            None => break,
        }
    }
    m
}

fn parse1(s: &str, var: &str) -> P1 {
    parse_nested(s, &[var]).expect("valid literal")
}

const F_DISPLAY: &str = "4/5*(5*x^3-3*x)*(3*a+b+9) + 16/7*(3*x^2-1)*(2*a+b+4) \
    + 1/35*(35*x^4-30*x^2+3)*(4*a+b+16) + 32/5*x*(a+b+1) + 16/5*b";

const CASE1_DELTA_R: &str = "-2849934139195392/2251875390625*(a-1)^10*(7712*a^2+138576*a+619337)";
const CASE2_DELTA_R: &str =
    "-2849934139195392/2251875390625*a^4*(a-1)^6*(7712*a^2+138576*a+619337)";
const CASE1_AT_0: &str = "98304/10504375*(a-1)^4*(3602593*a^2+35402414*a+90903793)";
const CASE2_AT_0: &str = "-98304/10504375*a*(a-1)^3*(3602593*a^2+35402414*a+90903793)";
const CASE1_BOUNDARY: &str = "-16384/10504375*(a-1)^2*(26817669*a^4+534176964*a^3\
    +3774051414*a^2+10643527924*a+8729586029)";
const CASE2_BOUNDARY: &str = "-16384/10504375*(a-1)^2*(105443451*a^4+1131854040*a^3\
    +4554275238*a^2+8623435520*a+9293151751)";

pub(crate) fn case12(case: NestedCase, out: &mut Findings) -> Result<(), ReproError> {
    let vars = ["x", "a", "b"];
    let general = quadratic_transform_general()?;
    let display: P3 = parse_nested(F_DISPLAY, &vars).expect("valid literal");
    out.exact("f", format_poly(&general, &vars), format_poly(&display, &vars));

    let f = case_transform(case)?;
    let delta_x = discriminant(&f)?;
    let d_r = delta_x.derivative_at(1)?;
    let deg_r = transpose(&d_r).degree();
    out.exact("d_r_degree_in_r", fmt_degree(deg_r), "2");
    let delta_r = discriminant_inner(&d_r)?;

    let (want_delta_r, want_at_0, want_boundary) = match case {
        NestedCase::One => (CASE1_DELTA_R, CASE1_AT_0, CASE1_BOUNDARY),
        NestedCase::Two => (CASE2_DELTA_R, CASE2_AT_0, CASE2_BOUNDARY),
    };
    let at_0 = at_inner(&d_r, &int(0));
    let boundary = at_inner(&delta_x, &case.boundary_r());
    out.exact("delta_r", delta_r.to_alpha(), parse1(want_delta_r, "a").to_alpha());
    out.exact("d_r_at_r0", at_0.to_alpha(), parse1(want_at_0, "a").to_alpha());
    let bkey = format!("delta_x_at_r{}", case.boundary_r());
    out.exact(&bkey, boundary.to_alpha(), parse1(want_boundary, "a").to_alpha());

    let (segments, points) = case.range();
    let range = case.range_text();
    let s = sign_over(&delta_r, &segments, &points)?;
    out.exact(&format!("delta_r_sign_on {range}"), sign_name(s), "negative");
    let s = sign_over(&at_0, &segments, &points)?;
    out.exact(&format!("d_r_at_r0_sign_on {range}"), sign_name(s), "positive");
    let s = sign_over(&boundary, &segments, &points)?;
    out.exact(&format!("{bkey}_sign_on {range}"), sign_name(s), "negative");

    if case == NestedCase::One {
        // α = 1 either before or after substituting β = r(1 − α)
        let m = multiplicity_at(&delta_r, &int(1));
        out.exact("alpha1_after_substitution", format!("delta_r vanishes to order {m}"), "delta_r vanishes to order 10");
        let f1: Poly<P1> = f.map(|c| c.eval(&P1::one()));
        let free_of_r = f1.coeffs().iter().all(|c| c.degree().unwrap_or(0) == 0);
        out.exact(
            "alpha1_before_substitution",
            if free_of_r { "f independent of r" } else { "f depends on r" },
            "f independent of r",
        );
    }
    Ok(())
}

fn fmt_degree(d: Option<usize>) -> String {
    d.map_or("-inf".into(), |d| d.to_string())
}

trait AlphaText {
    fn to_alpha(&self) -> String;
}

impl AlphaText for P1 {
    fn to_alpha(&self) -> String {
        format_poly(self, &["a"])
    }
}

/// Discriminants of `Γ[(1+x)³]` and `Γ[(1+x)⁴]` for `Γ = ⟨k² + β⟩`, in `β`.
pub fn case3_discriminants() -> Result<(P1, P1), ReproError> {
    let alpha = P2::zero();
    let beta = P2::monomial(P1::one(), 1);
    let mut out = Vec::new();
    for n in [3, 4] {
        let f = quadratic_transform(&alpha, &beta, n)?;
        // f lives in (x, β, ·) with a constant innermost level
        let flat: Poly<P1> = f.map(|c| c.map(|d| d.coeff(0)));
        out.push(discriminant(&flat)?);
    }
    Ok((out[0].clone(), out[1].clone()))
}

pub(crate) fn case3(out: &mut Findings) -> Result<(), ReproError> {
    let (d3, d4) = case3_discriminants()?;
    out.exact("disc3", format_poly(&d3, &["b"]), format_poly(&parse1("-108/125*(20*b^2+668*b-8483)", "b"), &["b"]));
    out.exact(
        "disc4",
        format_poly(&d4, &["b"]),
        format_poly(&parse1("16384/10504375*(245000*b^3+17897964*b^2+545422758*b-9293151751)", "b"), &["b"]),
    );
    let width = rat(1, 1_000_000);
    let iso3 = isolate_roots(&d3, &width)?;
    let iso4 = isolate_roots(&d4, &width)?;
    let (Some(top3), Some(top4)) = (iso3.intervals.last(), iso4.intervals.last()) else {
        out.exact("threshold roots", "missing", "present");
        return Ok(());
    };
    let tol = rat(5, 10_000);
    let near = |iv: &crate::roots::IsolatingInterval, target: &Rational| {
        iv.lo >= target - &tol && iv.hi <= target + &tol
    };
    let t3 = rat(98149, 10_000);
    let t4 = rat(117649, 10_000);
    out.check(
        "cubic_threshold",
        format!("({}, {}] ~ {:.6}", iv_text(&top3.lo), iv_text(&top3.hi), to_f64(&top3.midpoint())),
        "9.8149 +- 5e-4",
        near(top3, &t3),
    );
    out.check(
        "quartic_threshold",
        format!("({}, {}] ~ {:.6}", iv_text(&top4.lo), iv_text(&top4.hi), to_f64(&top4.midpoint())),
        "11.7649 +- 5e-4",
        near(top4, &t4),
    );
    let s3 = sign_on(&d3, &Bound::At(top3.hi.clone()), &Bound::PosInf)?;
    out.exact("disc3_sign_above_threshold", sign_name(s3), "negative");
    let below = sign_on(&d4, &Bound::NegInf, &Bound::At(top4.lo.clone()))?;
    let at_lo = crate::roots::sign(&d4.eval(&top4.lo)).cmp(&0);
    let s4 = if below == Some(at_lo) { below } else { None };
    out.exact("disc4_sign_below_threshold", sign_name(s4), "negative");
    out.exact(
        "overlap_nonempty",
        (top3.hi < top4.lo).to_string(),
        "true",
    );
    let covered = top3.hi < top4.lo && s3 == Some(Ordering::Less) && s4 == Some(Ordering::Less);
    out.exact(
        "verdict",
        if covered { "no k^2+b is a Legendre multiplier sequence" } else { "not established" },
        "no k^2+b is a Legendre multiplier sequence",
    );
    Ok(())
}

fn iv_text(q: &Rational) -> String {
    q.to_string()
}

const GEOM_P: &str = "16/5 + 32/5*r*x + 16/7*r^2*(3*x^2-1) + 4/5*r^3*(5*x^3-3*x) \
    + 1/35*r^4*(35*x^4-30*x^2+3)";
const GEOM_DISC: &str = "16384/10504375*(44044*r^12 - 147576*r^14 + 180624*r^16 - 96991*r^18 \
    + 22329*r^20 - 2565*r^22 + 135*r^24)";

/// `{rᵏ}` applied to `(1+x)⁴` in the Legendre basis, in `(x, r)`.
pub fn geometric_transform() -> Result<Poly<P1>, ReproError> {
    let table = BasisTable::build(&BasisKind::Legendre, 4)?;
    let gammas: Vec<P1> = (0..=4).map(|k| P1::monomial(int(1), k)).collect();
    let p: Poly<P1> = Poly::shift(int(1)).pow(4).map(P1::from_rational);
    Ok(apply_diagonal(&table, &gammas, &p)?)
}

pub(crate) fn geom_disc(out: &mut Findings) -> Result<(), ReproError> {
    let vars = ["x", "r"];
    let p = geometric_transform()?;
    let want: Poly<P1> = parse_nested(GEOM_P, &vars).expect("valid literal");
    out.exact("p_tilde", format_poly(&p, &vars), format_poly(&want, &vars));
    let d = discriminant(&p)?;
    out.exact("discriminant", format_poly(&d, &["r"]), format_poly(&parse1(GEOM_DISC, "r"), &["r"]));
    out.exact("discriminant_degree", fmt_degree(d.degree()), "24");

    // p̃ at r = 2: the transform is nonreal-rooted, whatever the tag
    let p2: P1 = p.map(|c| c.eval(&int(2)));
    let class = crate::roots::classify_quartic(&p2)?;
    out.fact("quartic_class_at_r2", format!("{:?}", class.tag));
    out.exact(
        "complex_roots_at_r2",
        (class.sturm_distinct_real < 4).to_string(),
        "true",
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_transform_matches_display() {
        let vars = ["x", "a", "b"];
        let display: P3 = parse_nested(F_DISPLAY, &vars).unwrap();
        assert_eq!(quadratic_transform_general().unwrap(), display);
    }

    #[test]
    fn case_one_collapses_at_alpha_one() {
        let f = case_transform(NestedCase::One).unwrap();
        let f1: Poly<P1> = f.map(|c| c.eval(&P1::one()));
        assert!(f1.coeffs().iter().all(|c| c.degree().unwrap_or(0) == 0));
    }

    #[test]
    fn multiplicity() {
        let p = parse1("(a-1)^3*(a+2)", "a");
        assert_eq!(multiplicity_at(&p, &int(1)), 3);
        assert_eq!(multiplicity_at(&p, &int(0)), 0);
    }
}

use num_traits::Signed;
use rayon::prelude::*;

use super::nested::{case12, case3, geom_disc, NestedCase};
use super::{Experiment, Findings, Provenance, ReproError, RunContext, Tolerance};
use crate::arith::text::{format_poly, parse_nested, parse_poly};
use crate::arith::{int, rat, Poly, Rational, Ring, TruncatedSeries2};
use crate::bases::{
    basis_poly, expand_in_basis, legendre_ode_residual, orthogonality_integral, parity_reflect,
    rodrigues_check, sign_flipped_ode_residual, BasisKind, BasisTable,
};
use crate::diffop::{
    bb_falsify, quadratic_symbol_roots, sample_point, symbol, to_diffop, DiffOpRep,
    FalsifierConfig, Outcome, SymbolRoots,
};
use crate::multseq::{
    apply_diagonal, apply_operator, basis_ms_test, classical_ms_test, classify_quadratic_legendre,
    max_b_search, quadratic_classical_region, structural_checks, Check, DiagonalOperator,
    SequenceSpec, TestFamily, Verdict,
};
use crate::roots::{
    classify_cubic, classify_quartic, discriminant, interlace_check, is_real_rooted,
    isolate_roots, resultant, sign_on, sturm_count, Bound, CubicClass,
};

pub static REGISTRY: &[Experiment] = &[
    Experiment {
        id: "arith-identities",
        description: "products, derivatives, division, square-free parts and truncated series on small inputs",
        provenance: Provenance::Derived,
        tolerance: Tolerance::Exact,
        tags: &["arith"],
        ops: &["poly_arith", "derivative", "divrem", "gcd_squarefree", "series_mul_truncate"],
        report_only: false,
        run: arith_identities,
    },
    Experiment {
        id: "legendre-expansion",
        description: "(1+x)^3 in the Legendre basis",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["bases"],
        ops: &["basis_poly", "expand_in_basis", "poly_arith"],
        report_only: false,
        run: legendre_expansion,
    },
    Experiment {
        id: "linear-disc",
        description: "discriminant of <k+a> applied to (1+x)^3, and the cubic classes it forces",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["roots", "multseq"],
        ops: &["discriminant", "resultant", "sturm_count", "classify_cubic", "apply_operator"],
        report_only: false,
        run: linear_disc,
    },
    Experiment {
        id: "identity-seq",
        description: "a constant sequence fixes (1+x)^5 in every basis",
        provenance: Provenance::Trivial,
        tolerance: Tolerance::Exact,
        tags: &["multseq"],
        ops: &["apply_operator"],
        report_only: false,
        run: identity_seq,
    },
    Experiment {
        id: "classical-region",
        description: "closed-form classical region of <k^2+ak+b> against the Jensen test on a 21x21 grid",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["multseq"],
        ops: &["quadratic_classical_region", "classical_ms_test"],
        report_only: false,
        run: classical_region,
    },
    Experiment {
        id: "quadratic-legendre",
        description: "quadratic Legendre characterization against finite tests with witnesses",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["multseq"],
        ops: &["classify_quadratic_legendre", "basis_ms_test", "is_real_rooted"],
        report_only: false,
        run: quadratic_legendre,
    },
    Experiment {
        id: "case1",
        description: "nested discriminants along b = r(1-a)",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["multseq", "roots"],
        ops: &["case12_nested_discriminants", "discriminant", "derivative", "resultant"],
        report_only: false,
        run: case_one,
    },
    Experiment {
        id: "case2",
        description: "nested discriminants along b = ra",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["multseq", "roots"],
        ops: &["case12_nested_discriminants", "discriminant", "derivative"],
        report_only: false,
        run: case_two,
    },
    Experiment {
        id: "case3-thresholds",
        description: "threshold roots of the cubic and quartic discriminants of <k^2+b>",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Decimals(4),
        tags: &["multseq", "roots"],
        ops: &["case3_thresholds", "isolate_roots", "discriminant"],
        report_only: false,
        run: case_three,
    },
    Experiment {
        id: "geom-disc",
        description: "degree-24 discriminant of the geometric transform of (1+x)^4",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["roots"],
        ops: &["discriminant", "classify_quartic"],
        report_only: false,
        run: geom_disc_run,
    },
    Experiment {
        id: "geom-sequences",
        description: "geometric sequences fail with witness (x+r)^4 unless |r| = 1",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["multseq"],
        ops: &["basis_ms_test"],
        report_only: false,
        run: geom_sequences,
    },
    Experiment {
        id: "diffop-reps",
        description: "differential-operator forms of three diagonal operators",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["diffop"],
        ops: &["to_diffop"],
        report_only: false,
        run: diffop_reps,
    },
    Experiment {
        id: "symbol-roots",
        description: "symbol of <k^2+k+b>, its roots in w, and the falsifier on b in [0, 1]",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["diffop"],
        ops: &["symbol", "quadratic_symbol_roots", "bb_falsify", "to_diffop"],
        report_only: false,
        run: symbol_roots,
    },
    Experiment {
        id: "structural-suite",
        description: "Legendre-passing sequences also pass Hermite, classical, Turan and monotonicity",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["multseq"],
        ops: &["structural_checks", "basis_ms_test", "classical_ms_test"],
        report_only: false,
        run: structural_suite,
    },
    Experiment {
        id: "basis-identities",
        description: "Rodrigues, ODE, orthogonality, interlacing, parity and the generating function for n <= 12",
        provenance: Provenance::Paper,
        tolerance: Tolerance::Exact,
        tags: &["bases"],
        ops: &[
            "rodrigues_check",
            "legendre_ode_residual",
            "orthogonality_integral",
            "interlace_check",
            "series_mul_truncate",
            "parity_reflect",
            "basis_poly",
        ],
        report_only: false,
        run: basis_identities,
    },
    Experiment {
        id: "ode-sign-check",
        description: "the Legendre equation with (x^2+1) and flipped signs is not an identity",
        provenance: Provenance::Derived,
        tolerance: Tolerance::Exact,
        tags: &["bases"],
        ops: &["legendre_ode_residual"],
        report_only: false,
        run: ode_sign_check,
    },
    Experiment {
        id: "max-b",
        description: "certified brackets for the largest b keeping Le_n + b Le_(n-2) real-rooted",
        provenance: Provenance::Derived,
        tolerance: Tolerance::Exact,
        tags: &["multseq"],
        ops: &["max_b_search", "is_real_rooted"],
        report_only: false,
        run: max_b,
    },
    Experiment {
        id: "roots-oracles",
        description: "root counting, isolation and classification on hand-checkable inputs",
        provenance: Provenance::Derived,
        tolerance: Tolerance::Exact,
        tags: &["roots"],
        ops: &[
            "sturm_count",
            "is_real_rooted",
            "isolate_roots",
            "interlace_check",
            "resultant",
            "discriminant",
            "classify_cubic",
            "classify_quartic",
        ],
        report_only: false,
        run: roots_oracles,
    },
    Experiment {
        id: "ff-not-legendre",
        description: "a certified witness that k(k-1) is not a Legendre multiplier sequence",
        provenance: Provenance::Derived,
        tolerance: Tolerance::Exact,
        tags: &["open-questions"],
        ops: &["basis_ms_test"],
        report_only: true,
        run: ff_not_legendre,
    },
    Experiment {
        id: "tri-factorial",
        description: "tri(n) for n <= 4 through the Legendre test at degree 10",
        provenance: Provenance::Derived,
        tolerance: Tolerance::Exact,
        tags: &["open-questions"],
        ops: &["basis_ms_test"],
        report_only: true,
        run: tri_factorial,
    },
    Experiment {
        id: "cubic-search",
        description: "monic cubics k^3+ak^2+bk+c, a, b, c in -3..3, through the Legendre test at degree 8",
        provenance: Provenance::Derived,
        tolerance: Tolerance::Exact,
        tags: &["open-questions"],
        ops: &["basis_ms_test"],
        report_only: true,
        run: cubic_search,
    },
];

fn px(s: &str) -> Poly<Rational> {
    parse_poly(s, "x").expect("valid literal")
}

fn seq(s: &str) -> SequenceSpec {
    s.parse().expect("valid sequence")
}

fn family(ctx: &RunContext) -> TestFamily {
    TestFamily::default().with_seed(ctx.seed)
}

fn list(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|q| q.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn verdict_text(v: &Verdict) -> String {
    match v.failure() {
        Some(e) => format!("fail: {} -> {} ({})", e.witness, e.transform, e.source),
        None if v.is_pass() => "pass".into(),
        None => "undecided".into(),
    }
}

fn verdict_kind(v: &Verdict) -> &'static str {
    if v.is_pass() {
        "pass"
    } else if v.is_fail() {
        "fail"
    } else {
        "undecided"
    }
}

fn arith_identities(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    out.exact("(x+1)(x-1)", px("x+1").times(&px("x-1")), px("x^2-1"));
    let half = px("1/2*(3*x^2-1)");
    out.exact("((3x^2-1)/2)^2", half.times(&half), px("1/4*(9*x^4-6*x^2+1)"));
    out.exact("0*p", Poly::<Rational>::zero().times(&half).degree().is_none(), true);
    out.exact("D[x^3]", px("x^3").derivative(), px("3*x^2"));
    out.exact("D[(x^2-1)x]", px("(x^2-1)*x").derivative(), px("3*x^2-1"));

    let vars = ["x", "r"];
    let f: Poly<Poly<Rational>> = parse_nested("x^2*r^3 + r*x - 4", &vars).expect("valid literal");
    let fr = f.derivative_at(1)?;
    let want: Poly<Poly<Rational>> = parse_nested("3*x^2*r^2 + x", &vars).expect("valid literal");
    out.exact("d/dr (x^2 r^3 + r x - 4)", format_poly(&fr, &vars), format_poly(&want, &vars));

    let (q, r) = px("x^2").divrem(&px("x-1"))?;
    out.exact("x^2 / (x-1)", format!("q = {q}, r = {r}"), format!("q = {}, r = 1", px("x+1")));
    let (q, r) = px("x^4-1").divrem(&px("x^2+1"))?;
    out.exact("(x^4-1) / (x^2+1)", format!("q = {q}, r = {r}"), format!("q = {}, r = 0", px("x^2-1")));

    out.exact("sqfree (x-1)^2(x+2)", px("(x-1)^2*(x+2)").squarefree_part()?, px("(x-1)*(x+2)"));
    out.exact("sqfree x^3", px("x^3").squarefree_part()?, px("x"));

    let table = BasisTable::build(&BasisKind::Legendre, 3)?;
    let s = TruncatedSeries2::new(3, table.members().to_vec());
    let lhs = TruncatedSeries2::new(3, vec![px("1"), px("-2*x"), px("1")]);
    let prod = lhs.mul_truncate(&s.mul_truncate(&s)?)?;
    out.exact("series t^0", prod.coeff(0), "1");
    out.exact("series t^1", prod.coeff(1), "0");
    out.exact("S*1", s.mul_truncate(&TruncatedSeries2::one(3))? == s, true);
    Ok(())
}

fn legendre_expansion(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let p = px("(1+x)^3");
    let c = expand_in_basis(&p, &BasisKind::Legendre)?;
    out.exact("coefficients", list(&c), "[2, 18/5, 2, 2/5]");
    let back = c.iter().enumerate().try_fold(Poly::zero(), |acc, (k, a)| {
        basis_poly(&BasisKind::Legendre, k).map(|q| acc.plus(&q.scale_rational(a)))
    })?;
    out.exact("resynthesized", back, p);
    Ok(())
}

fn linear_disc(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    type P1 = Poly<Rational>;
    let table = BasisTable::build(&BasisKind::Legendre, 3)?;
    let gammas: Vec<P1> = (0..=3).map(|k| Poly::new(vec![int(k), int(1)])).collect();
    let p: Poly<P1> = px("(1+x)^3").map(P1::from_rational);
    let f = apply_diagonal(&table, &gammas, &p)?;
    let d = discriminant(&f)?;
    let want = parse_poly("-108/125*(421 + 172*a + 20*a^2)", "a").expect("valid literal");
    out.exact("disc", format_poly(&d, &["a"]), format_poly(&want, &["a"]));
    out.exact(
        "disc real roots",
        sturm_count(&d, &Bound::NegInf, &Bound::PosInf)?,
        0,
    );
    out.exact("disc leading sign", d.leading().is_some_and(|c| c.is_negative()), true);
    out.exact(
        "disc sign on R",
        format!("{:?}", sign_on(&d, &Bound::NegInf, &Bound::PosInf)?),
        "Some(Less)",
    );
    for a in [-2, -1, 0, 1, 2, 10] {
        let op = DiagonalOperator::new(BasisKind::Legendre, SequenceSpec::poly(&format!("k + {a}"))?);
        let t = apply_operator(&op, &px("(1+x)^3"))?;
        out.exact(&format!("class a={a}"), format!("{:?}", classify_cubic(&t)?), format!("{:?}", CubicClass::OneRealPair));
    }
    Ok(())
}

fn identity_seq(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let p = px("(1+x)^5");
    for basis in [
        BasisKind::Standard,
        BasisKind::Legendre,
        BasisKind::Hermite,
        BasisKind::Laguerre(int(0)),
        BasisKind::Laguerre(rat(3, 2)),
    ] {
        let op = DiagonalOperator::new(basis.clone(), SequenceSpec::constant(int(1)));
        out.exact(&basis.to_string(), apply_operator(&op, &p)?, &p);
    }
    Ok(())
}

/// Degrees tried, in order, on outside points the degree-8 test misses.
const ESCALATION: [usize; 4] = [16, 32, 64, 128];

fn classical_region(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let grid: Vec<(Rational, Rational)> = (0..21)
        .flat_map(|i| (0..21).map(move |j| (int(-2) + rat(i, 4), rat(3 * j, 20))))
        .collect();
    let rows: Vec<(bool, Verdict)> = grid
        .par_iter()
        .map(|(a, b)| -> Result<_, ReproError> {
            let v = classical_ms_test(&SequenceSpec::quadratic(a, b), 8)?;
            Ok((quadratic_classical_region(a, b), v))
        })
        .collect::<Result<_, _>>()?;
    let inside = rows.iter().filter(|(r, _)| *r).count();
    let inside_pass = rows.iter().filter(|(r, v)| *r && v.is_pass()).count();
    let inside_fail = rows.iter().filter(|(r, v)| *r && v.is_fail()).count();
    let outside_fail = rows.iter().filter(|(r, v)| !*r && v.is_fail()).count();
    let missed: Vec<&(Rational, Rational)> = grid
        .iter()
        .zip(&rows)
        .filter(|(_, (r, v))| !*r && !v.is_fail())
        .map(|(g, _)| g)
        .collect();
    out.fact("grid points", grid.len());
    out.fact("inside region", inside);
    out.exact("inside and certified fail", inside_fail, 0);
    out.exact("inside and pass at degree 8", inside_pass, inside);
    out.fact("outside and certified fail at degree 8", outside_fail);
    // The degree-n Jensen polynomial is (1+x)^(n-2) times a quadratic whose
    // discriminant only turns negative for large n near the boundary.
    let escalated: Vec<String> = missed
        .par_iter()
        .map(|(a, b)| -> Result<String, ReproError> {
            let s = SequenceSpec::quadratic(a, b);
            for n in ESCALATION {
                if classical_ms_test(&s, n)?.is_fail() {
                    return Ok(format!("(a={a}, b={b}) fails at degree {n}"));
                }
            }
            Ok(format!("(a={a}, b={b}) not refuted through degree {}", ESCALATION[3]))
        })
        .collect::<Result<_, _>>()?;
    let unrefuted = escalated.iter().filter(|s| s.contains("not refuted")).count();
    out.fact("outside, missed at degree 8", escalated.join("; "));
    out.exact("outside and never refuted", unrefuted, 0);
    Ok(())
}

fn quadratic_legendre(ctx: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let fam = family(ctx);
    for b in [int(0), rat(1, 4), rat(1, 2), rat(3, 4), int(1)] {
        let s = SequenceSpec::quadratic(&int(1), &b);
        out.exact(&format!("classify(1, {b})"), classify_quadratic_legendre(&int(1), &b), true);
        let v = basis_ms_test(&s, &BasisKind::Legendre, 8, &fam)?;
        out.exact(&format!("test(1, {b})"), verdict_kind(&v), "pass");
    }
    for (a, b) in [(int(0), int(10)), (int(2), int(1)), (int(1), rat(3, 2)), (int(-1), int(0))] {
        let s = SequenceSpec::quadratic(&a, &b);
        out.exact(&format!("classify({a}, {b})"), classify_quadratic_legendre(&a, &b), false);
        let v = basis_ms_test(&s, &BasisKind::Legendre, 8, &fam)?;
        out.exact(&format!("test({a}, {b})"), verdict_kind(&v), "fail");
        out.fact(&format!("witness({a}, {b})"), verdict_text(&v));
        let op = DiagonalOperator::new(BasisKind::Legendre, s);
        out.exact(&format!("reverified({a}, {b})"), v.is_fail() && v.reverify(&op)?, true);
    }
    Ok(())
}

fn case_one(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    case12(NestedCase::One, out)
}

fn case_two(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    case12(NestedCase::Two, out)
}

fn case_three(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    case3(out)
}

fn geom_disc_run(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    geom_disc(out)
}

fn geom_sequences(ctx: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    for r in [int(2), int(-2), rat(3, 2)] {
        let w = Poly::shift(r.clone()).pow(4);
        let fam = family(ctx).with_explicit(vec![w.clone()]);
        let s = SequenceSpec::Geometric(r.clone());
        let v = basis_ms_test(&s, &BasisKind::Legendre, 10, &fam)?;
        out.exact(&format!("r={r}"), verdict_kind(&v), "fail");
        out.exact(
            &format!("witness r={r}"),
            v.witness().map_or("none".into(), |p| p.to_string()),
            w.to_string(),
        );
        let op = DiagonalOperator::new(BasisKind::Legendre, s);
        out.exact(&format!("reverified r={r}"), v.reverify(&op)?, true);
    }
    for r in [int(1), int(-1)] {
        let v = basis_ms_test(&SequenceSpec::Geometric(r.clone()), &BasisKind::Legendre, 10, &family(ctx))?;
        out.exact(&format!("r={r}"), verdict_kind(&v), "pass");
    }
    Ok(())
}

/// `p_n(x) Dⁿ + ... + p_0(x)`, top order first.
pub(crate) fn operator_text(rep: &DiffOpRep) -> String {
    let mut parts = Vec::new();
    for (k, p) in rep.coeffs.iter().enumerate().rev() {
        if p.is_zero() {
            continue;
        }
        let d = match k {
            0 => String::new(),
            1 => "D".into(),
            _ => format!("D^{k}"),
        };
        let c = p.to_string();
        let term = if k == 0 {
            c
        } else if p.is_one() {
            d
        } else if p.coeffs().iter().filter(|a| !a.is_zero()).count() > 1 {
            format!("({c})*{d}")
        } else {
            format!("{c}*{d}")
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn diffop_reps(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let cases = [
        (BasisKind::Standard, "k", 1, "x*D"),
        (BasisKind::Legendre, "k^2 + k", 2, "(x^2 - 1)*D^2 + 2*x*D"),
        (BasisKind::Legendre, "k^2 + k + 1", 2, "(x^2 - 1)*D^2 + 2*x*D + 1"),
    ];
    for (basis, s, order, want) in cases {
        let rep = to_diffop(&DiagonalOperator::new(basis.clone(), seq(s)), order)?;
        let key = format!("<{s}>/{basis}");
        out.exact(&key, operator_text(&rep), want);
        out.exact(&format!("{key} guard"), rep.is_exact(), true);
    }
    Ok(())
}

fn symbol_roots(ctx: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let op = DiagonalOperator::new(BasisKind::Legendre, seq("k^2 + k + 1"));
    let sym = symbol(&to_diffop(&op, 2)?);
    let vars = ["w", "x"];
    let want: Poly<Poly<Rational>> =
        parse_nested("(x*w)^2 - w^2 + 2*x*w + 1", &vars).expect("valid literal");
    out.exact("symbol", format_poly(sym.poly(), &vars), format_poly(&want, &vars));

    let mut agree = 0;
    let mut lower = 0;
    for i in 0..50 {
        let x0 = sample_point(ctx.seed, i);
        let one = crate::arith::GaussianRational::one();
        let expect = [
            one.try_div(&x0.minus(&one)).expect("x0 is not real"),
            one.try_div(&x0.plus(&one)).expect("x0 is not real"),
        ];
        if let SymbolRoots::Exact { roots } = quadratic_symbol_roots(&sym, &x0)? {
            let mut got = roots.clone();
            let mut want = expect.to_vec();
            got.sort_by_key(|z| z.to_string());
            want.sort_by_key(|z| z.to_string());
            if got == want {
                agree += 1;
            }
            if roots.iter().all(|w| w.im.is_negative()) {
                lower += 1;
            }
        }
    }
    out.exact("roots 1/(x-1), 1/(x+1) at 50 points", agree, 50);
    out.exact("roots with Im w < 0 at 50 points", lower, 50);

    let cfg = FalsifierConfig {
        seed: ctx.seed,
        precision_bits: ctx.precision_bits,
        ..FalsifierConfig::default()
    };
    for b in [int(0), rat(1, 4), rat(1, 2), rat(3, 4), int(1)] {
        let op = DiagonalOperator::new(BasisKind::Legendre, SequenceSpec::quadratic(&int(1), &b));
        let sym = symbol(&to_diffop(&op, 2)?);
        let r = bb_falsify(&sym, &cfg)?;
        let got = match &r.outcome {
            Outcome::NoZeroFound { samples, seed } => format!("no zero found ({samples} samples, seed {seed})"),
            Outcome::CounterexampleFound(c) => format!("counterexample at x = {}, w = {}", c.x0, c.w0),
        };
        out.exact(
            &format!("falsifier b={b}"),
            got,
            format!("no zero found ({} samples, seed {})", cfg.samples, cfg.seed),
        );
    }
    Ok(())
}

fn structural_corpus() -> Vec<SequenceSpec> {
    let mut corpus: Vec<SequenceSpec> = (0..=8)
        .map(|i| SequenceSpec::quadratic(&int(1), &rat(i, 8)))
        .collect();
    corpus.push(SequenceSpec::Geometric(int(1)));
    corpus.push(SequenceSpec::Geometric(int(-1)));
    corpus.push(SequenceSpec::constant(int(3)));
    corpus.push(SequenceSpec::constant(int(-2)));
    for (start, a, b) in [(0, int(1), int(1)), (3, int(2), int(-5)), (7, rat(1, 2), int(4))] {
        let mut v = vec![int(0); 17];
        v[start] = a;
        v[start + 1] = b;
        corpus.push(SequenceSpec::Explicit(v));
    }
    corpus
}

fn structural_suite(ctx: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    const DEGREE: usize = 8;
    const HORIZON: usize = 16;
    let fam = family(ctx);
    let rows: Vec<(String, String, bool)> = structural_corpus()
        .par_iter()
        .map(|s| -> Result<_, ReproError> {
            let leg = basis_ms_test(s, &BasisKind::Legendre, DEGREE, &fam)?;
            let herm = basis_ms_test(s, &BasisKind::Hermite, DEGREE, &fam)?;
            let class = classical_ms_test(s, DEGREE)?;
            let st = structural_checks(s, HORIZON)?;
            let check = |c: Check| match c {
                Check::Pass => "pass".to_string(),
                Check::NotApplicable => "n/a".to_string(),
                Check::Fail { index } => format!("fails at {index}"),
            };
            let text = format!(
                "legendre {}, hermite {}, classical {}, turan {}, monotone {}",
                verdict_kind(&leg),
                verdict_kind(&herm),
                verdict_kind(&class),
                check(st.turan),
                check(st.monotone_magnitude)
            );
            let ok = !leg.is_pass()
                || (herm.is_pass()
                    && class.is_pass()
                    && st.turan == Check::Pass
                    && st.monotone_magnitude.passed());
            Ok((s.to_string(), text, ok))
        })
        .collect::<Result<_, _>>()?;
    for (name, text, ok) in rows {
        out.check(&name, &text, "legendre pass implies all others pass", ok);
    }
    Ok(())
}

fn basis_identities(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    const N: usize = 12;
    let table = BasisTable::build(&BasisKind::Legendre, N + 1)?;
    let rod = (0..=N).filter(|&n| !rodrigues_check(n)).collect::<Vec<_>>();
    out.exact("rodrigues failures", format!("{rod:?}"), "[]");
    let ode = (0..=N).filter(|&n| !legendre_ode_residual(n).is_zero()).collect::<Vec<_>>();
    out.exact("ode residual failures", format!("{ode:?}"), "[]");
    let mut orth = Vec::new();
    for m in 0..=N {
        for n in 0..=N {
            let want = if m == n { rat(2, 2 * n as i64 + 1) } else { int(0) };
            if orthogonality_integral(m, n) != want {
                orth.push((m, n));
            }
        }
    }
    out.exact("orthogonality failures", format!("{orth:?}"), "[]");
    let mut inter = Vec::new();
    for n in 1..=N {
        if !interlace_check(table.member(n), table.member(n + 1))? {
            inter.push(n);
        }
    }
    out.exact("interlacing failures", format!("{inter:?}"), "[]");
    let parity = (0..=N)
        .filter(|&n| {
            let le = table.member(n);
            let want = if n % 2 == 0 { le.clone() } else { le.negate() };
            parity_reflect(le) != want
        })
        .collect::<Vec<_>>();
    out.exact("parity failures", format!("{parity:?}"), "[]");
    let mut gf = Vec::new();
    for order in 0..=N {
        let s = TruncatedSeries2::new(order, table.members()[..=order].to_vec());
        let lhs = TruncatedSeries2::new(order, vec![px("1"), px("-2*x"), px("1")]);
        if !lhs.mul_truncate(&s.mul_truncate(&s)?)?.is_one() {
            gf.push(order);
        }
    }
    out.exact("generating function failures", format!("{gf:?}"), "[]");
    Ok(())
}

fn ode_sign_check(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    out.exact("standard residual n=2", legendre_ode_residual(2), "0");
    out.exact("flipped residual n=2", sign_flipped_ode_residual(2), px("-12*x^2 + 6"));
    let zero_at = (2..=12).filter(|&n| sign_flipped_ode_residual(n).is_zero()).collect::<Vec<_>>();
    out.exact("flipped residual vanishes for n in 2..=12", format!("{zero_at:?}"), "[]");
    Ok(())
}

fn max_b(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let prec = rat(1, 1024);
    let table = BasisTable::build(&BasisKind::Legendre, 8)?;
    for n in 2..=8 {
        let (lo, hi) = max_b_search(n, &prec)?;
        let pair = |b: &Rational| table.member(n).plus(&table.member(n - 2).scale_rational(b));
        let certified = is_real_rooted(&pair(&lo))? && !is_real_rooted(&pair(&hi))? && &hi - &lo <= prec;
        out.fact(&format!("n={n} bracket"), format!("[{lo}, {hi}]"));
        out.exact(&format!("n={n} certified"), certified, true);
        if n == 2 {
            // Le_2 + b = (3x^2 - 1)/2 + b is real-rooted iff b <= 1/2
            out.exact("n=2 contains 1/2", lo <= rat(1, 2) && rat(1, 2) < hi, true);
        }
    }
    Ok(())
}

fn roots_oracles(_: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    out.exact(
        "sturm x^3-x on (-2, 2]",
        sturm_count(&px("x^3-x"), &Bound::At(int(-2)), &Bound::At(int(2)))?,
        3,
    );
    out.exact("real-rooted x^2+1", is_real_rooted(&px("x^2+1"))?, false);
    out.exact("real-rooted (x-1)^2(x+2)", is_real_rooted(&px("(x-1)^2*(x+2)"))?, true);
    let iso = isolate_roots(&px("(x-1)^2*(x+2)"), &rat(1, 100))?;
    out.exact("isolate (x-1)^2(x+2)", format!("{} distinct, {} total", iso.distinct(), iso.total()), "2 distinct, 3 total");
    let le3 = basis_poly(&BasisKind::Legendre, 3)?;
    let le4 = basis_poly(&BasisKind::Legendre, 4)?;
    out.exact("interlace Le3, Le4", interlace_check(&le3, &le4)?, true);
    out.exact("interlace x^2-1, x^3-4x", interlace_check(&px("x^2-1"), &px("x^3-4*x"))?, true);
    out.exact("Res(x^2+1, x^2-1)", resultant(&px("x^2+1"), &px("x^2-1"))?, 4);
    out.exact("disc x^2-4", discriminant(&px("x^2-4"))?, 16);
    out.exact("class x^3-x", format!("{:?}", classify_cubic(&px("x^3-x"))?), "AllReal");
    out.exact("class x^3+x", format!("{:?}", classify_cubic(&px("x^3+x"))?), "OneRealPair");
    out.exact("class x^4+1", format!("{:?}", classify_quartic(&px("x^4+1"))?.tag), "NoneReal");
    out.exact("class x^4-5x^2+4", format!("{:?}", classify_quartic(&px("x^4-5*x^2+4"))?.tag), "AllReal");
    Ok(())
}

fn ff_not_legendre(ctx: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let s = SequenceSpec::FallingFactorial(2);
    let v = basis_ms_test(&s, &BasisKind::Legendre, 8, &family(ctx))?;
    out.exact("verdict", verdict_kind(&v), "fail");
    out.fact("witness", verdict_text(&v));
    let op = DiagonalOperator::new(BasisKind::Legendre, s);
    out.exact("reverified", v.is_fail() && v.reverify(&op)?, true);
    Ok(())
}

fn tri_factorial(ctx: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let fam = family(ctx);
    let rows: Vec<(usize, Verdict)> = (1..=4)
        .into_par_iter()
        .map(|n| Ok((n, basis_ms_test(&SequenceSpec::TriangularFactorial(n), &BasisKind::Legendre, 10, &fam)?)))
        .collect::<Result<_, ReproError>>()?;
    for (n, v) in rows {
        out.exact(&format!("tri({n})"), verdict_text(&v), "pass");
    }
    Ok(())
}

fn cubic_search(ctx: &RunContext, out: &mut Findings) -> Result<(), ReproError> {
    let fam = family(ctx);
    let grid: Vec<(i64, i64, i64)> = (-3..=3)
        .flat_map(|a| (-3..=3).flat_map(move |b| (-3..=3).map(move |c| (a, b, c))))
        .collect();
    let survivors: Vec<String> = grid
        .par_iter()
        .map(|&(a, b, c)| -> Result<Option<String>, ReproError> {
            let s = SequenceSpec::PolynomialInK(Poly::new(vec![int(c), int(b), int(a), int(1)]));
            let v = basis_ms_test(&s, &BasisKind::Legendre, 8, &fam)?;
            Ok((!v.is_fail()).then(|| s.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    out.fact("cubics tested", grid.len());
    out.exact("survivors", survivors.len(), 0);
    if !survivors.is_empty() {
        out.fact("surviving cubics", survivors.join("; "));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_rendering() {
        let rep = DiffOpRep {
            order: 2,
            coeffs: vec![px("1"), px("2*x"), px("x^2-1")],
            checked_through: 2,
            first_mismatch: None,
        };
        assert_eq!(operator_text(&rep), "(x^2 - 1)*D^2 + 2*x*D + 1");
        let rep = DiffOpRep {
            coeffs: vec![px("0"), px("-1/2")],
            ..rep
        };
        assert_eq!(operator_text(&rep), "-1/2*D");
    }

    #[test]
    fn corpus_members_are_well_formed() {
        for s in structural_corpus() {
            assert!(s.terms(16).is_ok(), "{s}");
        }
    }
}

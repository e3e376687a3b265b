//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the summary is printed by a plain `cargo test`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Signed;
use mulseq_core::arith::text::{format_poly, parse_nested, parse_poly};
use mulseq_core::arith::{int, rat, transpose, GaussianRational, Poly, Rational, Ring, TruncatedSeries2};
use mulseq_core::bases::{
    basis_poly, expand_in_basis, legendre_ode_residual, orthogonality_integral, rodrigues_check,
    BasisKind, BasisTable,
};
use mulseq_core::diffop::{
    bb_falsify, quadratic_symbol_roots, sample_point, symbol, to_diffop, FalsifierConfig, Outcome,
    SymbolRoots,
};
use mulseq_core::multseq::{
    apply_diagonal, apply_operator, basis_ms_test, classical_ms_test, classify_quadratic_legendre,
    quadratic_classical_region, structural_checks, Check, DiagonalOperator, SequenceSpec,
    TestFamily,
};
use mulseq_core::repro::{
    case12_nested_discriminants, case3_discriminants, case3_thresholds, case_transform,
    geometric_transform, run_experiment, NestedCase, ReportStatus,
};
use mulseq_core::roots::{
    classify_cubic, discriminant, discriminant_inner, interlace_check, is_real_rooted,
    isolate_roots, sturm_count, Bound, CubicClass,
};

type P1 = Poly<Rational>;
type Checked = Result<String, String>;

struct Criterion {
    number: u32,
    name: &'static str,
    budget: Duration,
    report_only: bool,
    run: fn() -> Checked,
}

fn px(s: &str) -> P1 {
    parse_poly(s, "x").unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn legendre_expansion() -> Checked {
    let c = expand_in_basis(&px("(1+x)^3"), &BasisKind::Legendre).map_err(err)?;
    ensure(c == vec![int(2), rat(18, 5), int(2), rat(2, 5)], format!("got {c:?}"))?;
    Ok("[2, 18/5, 2, 2/5]".into())
}

fn linear_impossibility() -> Checked {
    let table = BasisTable::build(&BasisKind::Legendre, 3).map_err(err)?;
    let gammas: Vec<P1> = (0..=3).map(|k| Poly::new(vec![int(k), int(1)])).collect();
    let p: Poly<P1> = px("(1+x)^3").map(P1::from_rational);
    let d = discriminant(&apply_diagonal(&table, &gammas, &p).map_err(err)?).map_err(err)?;
    let want = parse_poly("-108/125*(421 + 172*a + 20*a^2)", "a").unwrap();
    ensure(d == want, format!("disc = {}", format_poly(&d, &["a"])))?;
    // 172^2 - 4*20*421 < 0 and the leading coefficient is negative
    ensure(sturm_count(&d, &Bound::NegInf, &Bound::PosInf).map_err(err)? == 0, "real root in alpha")?;
    ensure(d.leading().unwrap().is_negative(), "leading coefficient")?;
    for a in [-2, -1, 0, 1, 2, 10] {
        let op = DiagonalOperator::new(BasisKind::Legendre, SequenceSpec::poly(&format!("k + {a}")).unwrap());
        let t = apply_operator(&op, &px("(1+x)^3")).map_err(err)?;
        ensure(classify_cubic(&t).map_err(err)? == CubicClass::OneRealPair, format!("alpha = {a}"))?;
        ensure(d.eval(&int(a)) == discriminant(&t).map_err(err)?, format!("specialization at {a}"))?;
    }
    Ok("discriminant negative for all alpha".into())
}

/// `x² + (α+1)x + β` real-rooted with nonnegative coefficients.
fn lp_plus(a: &Rational, b: &Rational) -> bool {
    let a1 = a + int(1);
    let q = Poly::new(vec![b.clone(), a1.clone(), int(1)]);
    !a1.is_negative() && !b.is_negative() && is_real_rooted(&q).unwrap()
}

fn classical_region() -> Checked {
    let mut inside = 0;
    let mut missed = Vec::new();
    for i in 0..21 {
        for j in 0..21 {
            let (a, b) = (int(-2) + rat(i, 4), rat(3 * j, 20));
            let region = quadratic_classical_region(&a, &b);
            ensure(region == lp_plus(&a, &b), format!("predicate disagrees at ({a}, {b})"))?;
            let s = SequenceSpec::quadratic(&a, &b);
            let v = classical_ms_test(&s, 8).map_err(err)?;
            if region {
                inside += 1;
                ensure(v.is_pass(), format!("inside point ({a}, {b}) not passed"))?;
            } else if !v.is_fail() {
                missed.push((a, b));
            }
        }
    }
    let mut late = Vec::new();
    for (a, b) in &missed {
        let s = SequenceSpec::quadratic(a, b);
        let n = [16, 32, 64]
            .into_iter()
            .find(|&n| classical_ms_test(&s, n).is_ok_and(|v| v.is_fail()))
            .ok_or_else(|| format!("({a}, {b}) never refuted"))?;
        late.push(n);
    }
    Ok(format!(
        "{inside} inside pass, {} outside fail at degree 8, {} more by degree {}",
        441 - inside - missed.len(),
        missed.len(),
        late.iter().max().copied().unwrap_or(8)
    ))
}

fn quadratic_legendre() -> Checked {
    let fam = TestFamily::default();
    for b in [int(0), rat(1, 4), rat(1, 2), rat(3, 4), int(1)] {
        ensure(classify_quadratic_legendre(&int(1), &b), format!("classify(1, {b})"))?;
        let v = basis_ms_test(&SequenceSpec::quadratic(&int(1), &b), &BasisKind::Legendre, 8, &fam).map_err(err)?;
        ensure(v.is_pass(), format!("(1, {b}) not passed"))?;
    }
    let mut witnesses = Vec::new();
    for (a, b) in [(int(0), int(10)), (int(2), int(1)), (int(1), rat(3, 2)), (int(-1), int(0))] {
        ensure(!classify_quadratic_legendre(&a, &b), format!("classify({a}, {b})"))?;
        let s = SequenceSpec::quadratic(&a, &b);
        let v = basis_ms_test(&s, &BasisKind::Legendre, 8, &fam).map_err(err)?;
        let e = v.failure().ok_or_else(|| format!("({a}, {b}) not refuted"))?;
        let op = DiagonalOperator::new(BasisKind::Legendre, s);
        ensure(apply_operator(&op, &e.witness).map_err(err)? == e.transform, "transform mismatch")?;
        ensure(is_real_rooted(&e.witness).map_err(err)?, "witness not real-rooted")?;
        ensure(!is_real_rooted(&e.transform).map_err(err)?, "transform real-rooted")?;
        witnesses.push(e.witness.to_string());
    }
    Ok(format!("witnesses {}", witnesses.join(", ")))
}

/// `Δ_r ∂_r Δ_x f` at a fixed α, specializing α before any discriminant.
fn delta_r_at(case: NestedCase, a: &Rational) -> Result<Rational, String> {
    let f = case_transform(case).map_err(err)?;
    // (x, α, r) becomes (x, r)
    let fa: Poly<P1> = Poly::new(
        f.coeffs()
            .iter()
            .map(|c| Poly::new(transpose(c).coeffs().iter().map(|p| p.eval(a)).collect()))
            .collect(),
    );
    let dx = discriminant(&fa).map_err(err)?;
    discriminant(&dx.derivative()).map_err(err)
}

fn nested_discriminants() -> Checked {
    for (case, samples) in [
        (NestedCase::One, vec![int(-1), rat(-1, 2), int(0), rat(1, 2), rat(3, 2), int(3), int(20)]),
        (NestedCase::Two, vec![rat(1, 10), rat(1, 3), rat(1, 2), rat(9, 10)]),
    ] {
        let report = case12_nested_discriminants(case);
        ensure(report.status == ReportStatus::Match, format!("{case:?}: {:?}", report.mismatched))?;
        let f = case_transform(case).map_err(err)?;
        let d_r = discriminant(&f).map_err(err)?.derivative_at(1).map_err(err)?;
        let delta_r = discriminant_inner(&d_r).map_err(err)?;
        for a in &samples {
            let direct = delta_r_at(case, a)?;
            ensure(direct == delta_r.eval(a), format!("{case:?}: specialization at {a}"))?;
            ensure(direct.is_negative(), format!("{case:?}: delta_r at {a} = {direct}"))?;
        }
    }
    Ok("both cases certified; specialization agrees".into())
}

fn case3() -> Checked {
    let report = case3_thresholds();
    ensure(report.status == ReportStatus::Match, format!("{:?}", report.mismatched))?;
    let (d3, d4) = case3_discriminants().map_err(err)?;
    let width = rat(1, 1_000_000);
    let r3 = isolate_roots(&d3, &width).map_err(err)?.intervals.last().cloned().ok_or("no root")?;
    let r4 = isolate_roots(&d4, &width).map_err(err)?.intervals.last().cloned().ok_or("no root")?;
    let tol = rat(5, 10_000);
    for (iv, t) in [(&r3, rat(98149, 10_000)), (&r4, rat(117649, 10_000))] {
        ensure((&iv.lo - &t).abs() <= tol && (&iv.hi - &t).abs() <= tol, format!("root near {t}"))?;
    }
    ensure(r3.hi < r4.lo, "thresholds do not overlap")?;
    Ok(format!(
        "roots {:.6}, {:.6}",
        mulseq_core::arith::to_f64(&r3.midpoint()),
        mulseq_core::arith::to_f64(&r4.midpoint())
    ))
}

const GEOM_DISC: &str = "16384/10504375*(44044*r^12 - 147576*r^14 + 180624*r^16 - 96991*r^18 \
    + 22329*r^20 - 2565*r^22 + 135*r^24)";

fn geometric() -> Checked {
    let d = discriminant(&geometric_transform().map_err(err)?).map_err(err)?;
    let want: P1 = parse_nested(GEOM_DISC, &["r"]).unwrap();
    ensure(d.degree() == Some(24), "degree")?;
    ensure(d == want, format!("disc = {}", format_poly(&d, &["r"])))?;
    for r in [int(2), int(-2), rat(3, 2)] {
        let w = Poly::shift(r.clone()).pow(4);
        let fam = TestFamily::default().with_explicit(vec![w.clone()]);
        let s = SequenceSpec::Geometric(r.clone());
        let v = basis_ms_test(&s, &BasisKind::Legendre, 10, &fam).map_err(err)?;
        ensure(v.witness() == Some(&w), format!("r = {r}: {:?}", v.witness().map(|p| p.to_string())))?;
        let op = DiagonalOperator::new(BasisKind::Legendre, s);
        ensure(v.reverify(&op).map_err(err)?, format!("r = {r} reverify"))?;
    }
    for r in [int(1), int(-1)] {
        let v = basis_ms_test(&SequenceSpec::Geometric(r.clone()), &BasisKind::Legendre, 10, &TestFamily::default())
            .map_err(err)?;
        ensure(v.is_pass(), format!("r = {r} not passed"))?;
    }
    Ok("24 coefficients match; r = 2, -2, 3/2 fail; r = 1, -1 pass".into())
}

fn representations() -> Checked {
    for (basis, s, order, want) in [
        (BasisKind::Standard, "k", 1, vec!["0", "x"]),
        (BasisKind::Legendre, "k^2+k", 2, vec!["0", "2*x", "x^2-1"]),
        (BasisKind::Legendre, "k^2+k+1", 2, vec!["1", "2*x", "x^2-1"]),
    ] {
        let rep = to_diffop(&DiagonalOperator::new(basis.clone(), s.parse().unwrap()), order).map_err(err)?;
        let want: Vec<P1> = want.into_iter().map(px).collect();
        ensure(rep.coeffs == want && rep.is_exact(), format!("<{s}> in {basis}"))?;
    }
    Ok("xD, (x^2-1)D^2+2xD, (x^2-1)D^2+2xD+1".into())
}

fn symbol_falsifier() -> Checked {
    let sym_of = |b: &Rational| {
        let op = DiagonalOperator::new(BasisKind::Legendre, SequenceSpec::quadratic(&int(1), b));
        to_diffop(&op, 2).map(|r| symbol(&r)).map_err(err)
    };
    let sym = sym_of(&int(1))?;
    let want: Poly<P1> = parse_nested("(x*w)^2 - w^2 + 2*x*w + 1", &["w", "x"]).unwrap();
    ensure(sym.poly() == &want, format!("symbol {sym}"))?;
    let one = GaussianRational::one();
    for i in 0..50 {
        let x0 = sample_point(42, i);
        let SymbolRoots::Exact { roots } = quadratic_symbol_roots(&sym, &x0).map_err(err)? else {
            return Err(format!("no closed form at {x0}"));
        };
        for w in &roots {
            let hit = w.times(&x0.plus(&one)) == one || w.times(&x0.minus(&one)) == one;
            ensure(hit && w.im.is_negative(), format!("root {w} at {x0}"))?;
        }
    }
    for b in [int(0), rat(1, 4), rat(1, 2), rat(3, 4), int(1)] {
        let r = bb_falsify(&sym_of(&b)?, &FalsifierConfig::default()).map_err(err)?;
        ensure(
            r.outcome == Outcome::NoZeroFound { samples: 500, seed: 42 },
            format!("beta = {b}: {:?}", r.outcome),
        )?;
    }
    Ok("roots 1/(x+-1) at 50 points; no zero in 5 x 500 samples".into())
}

fn structural_suite() -> Checked {
    let mut corpus: Vec<SequenceSpec> = (0..=8).map(|i| SequenceSpec::quadratic(&int(1), &rat(i, 8))).collect();
    corpus.push(SequenceSpec::Geometric(int(1)));
    corpus.push(SequenceSpec::Geometric(int(-1)));
    corpus.push(SequenceSpec::constant(int(5)));
    for (start, a, b) in [(0, 1, 1), (2, -3, 2), (6, 1, 4)] {
        let mut v = vec![int(0); 17];
        v[start] = int(a);
        v[start + 1] = int(b);
        corpus.push(SequenceSpec::Explicit(v));
    }
    let fam = TestFamily::default();
    let mut passed = 0;
    for s in &corpus {
        let leg = basis_ms_test(s, &BasisKind::Legendre, 8, &fam).map_err(err)?;
        if !leg.is_pass() {
            continue;
        }
        passed += 1;
        let herm = basis_ms_test(s, &BasisKind::Hermite, 8, &fam).map_err(err)?;
        ensure(herm.is_pass(), format!("{s}: hermite"))?;
        ensure(classical_ms_test(s, 8).map_err(err)?.is_pass(), format!("{s}: classical"))?;
        let st = structural_checks(s, 16).map_err(err)?;
        ensure(st.turan == Check::Pass, format!("{s}: turan"))?;
        ensure(st.monotone_magnitude.passed(), format!("{s}: monotone"))?;
    }
    ensure(passed == corpus.len(), format!("only {passed} of {} passed Legendre", corpus.len()))?;
    Ok(format!("{passed} sequences"))
}

fn identities() -> Checked {
    const N: usize = 12;
    let table = BasisTable::build(&BasisKind::Legendre, N + 1).map_err(err)?;
    for n in 0..=N {
        ensure(rodrigues_check(n), format!("rodrigues {n}"))?;
        ensure(legendre_ode_residual(n).is_zero(), format!("ode {n}"))?;
        ensure(orthogonality_integral(n, n) == rat(2, 2 * n as i64 + 1), format!("norm {n}"))?;
        for m in 0..n {
            ensure(orthogonality_integral(m, n).is_zero(), format!("orthogonality {m} {n}"))?;
        }
        if n >= 1 {
            ensure(interlace_check(table.member(n), table.member(n + 1)).map_err(err)?, format!("interlace {n}"))?;
        }
        ensure(basis_poly(&BasisKind::Legendre, n).map_err(err)? == *table.member(n), "table")?;
        let s = TruncatedSeries2::new(n, table.members()[..=n].to_vec());
        let lhs = TruncatedSeries2::new(n, vec![px("1"), px("-2*x"), px("1")]);
        let prod = lhs.mul_truncate(&s.mul_truncate(&s).map_err(err)?).map_err(err)?;
        ensure(prod.is_one(), format!("generating function to order {n}"))?;
    }
    Ok(format!("n <= {N}"))
}

fn open_questions() -> Checked {
    let mut parts = Vec::new();
    for id in ["ff-not-legendre", "tri-factorial", "cubic-search"] {
        let r = run_experiment(id, 42).map_err(err)?;
        parts.push(format!("{id} {}", r.status));
    }
    let text = parts.join(", ");
    if text.contains("mismatch") || text.contains("error") {
        Err(text)
    } else {
        Ok(text)
    }
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, name: "Legendre expansion of (1+x)^3", budget: Duration::from_secs(1), report_only: false, run: legendre_expansion },
    Criterion { number: 2, name: "linear sequences", budget: Duration::from_secs(5), report_only: false, run: linear_impossibility },
    Criterion { number: 3, name: "classical quadratic region", budget: Duration::from_secs(30), report_only: false, run: classical_region },
    Criterion { number: 4, name: "quadratic Legendre sequences", budget: Duration::from_secs(120), report_only: false, run: quadratic_legendre },
    Criterion { number: 5, name: "nested discriminants", budget: Duration::from_secs(120), report_only: false, run: nested_discriminants },
    Criterion { number: 6, name: "k^2+b thresholds", budget: Duration::from_secs(30), report_only: false, run: case3 },
    Criterion { number: 7, name: "geometric sequences", budget: Duration::from_secs(60), report_only: false, run: geometric },
    Criterion { number: 8, name: "differential representations", budget: Duration::from_secs(1), report_only: false, run: representations },
    Criterion { number: 9, name: "symbol and falsifier", budget: Duration::from_secs(60), report_only: false, run: symbol_falsifier },
    Criterion { number: 10, name: "structural properties", budget: Duration::from_secs(120), report_only: false, run: structural_suite },
    Criterion { number: 11, name: "basis identities", budget: Duration::from_secs(30), report_only: false, run: identities },
    Criterion { number: 12, name: "open questions", budget: Duration::from_secs(600), report_only: true, run: open_questions },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let slow = elapsed > c.budget;
        let ok = result.is_ok() && !slow;
        let tag = match (ok, c.report_only) {
            (true, _) => "PASS",
            (false, true) => "FAIL (report only)",
            (false, false) => "FAIL",
        };
        let detail = match &result {
            Ok(s) => s.clone(),
            Err(e) => e.clone(),
        };
        let budget = if slow { " over budget" } else { "" };
        println!(
            "criterion {:>2} {tag:<4} {:<30} {:>8.2}s / {}s{budget}  {detail}",
            c.number,
            c.name,
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        if !ok && !c.report_only {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

use std::fmt::Display;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mulseq_core::arith::text::{format_poly, parse_multi, parse_nested, parse_poly};
use mulseq_core::arith::{parse_rational, Poly, Rational};
use mulseq_core::bases::{basis_poly, BasisKind};
use mulseq_core::diffop::{
    bb_falsify, default_order, symbol, to_diffop, FalsifierConfig, Orientation, Outcome,
    DEFAULT_PRECISION_BITS,
};
use mulseq_core::multseq::{basis_ms_test, DiagonalOperator, SequenceSpec, TestFamily};
use mulseq_core::repro::{
    find_experiment, run_experiment_with, run_suite_with, Report, ReportStatus, RunContext,
    DEFAULT_SEED, REGISTRY,
};
use mulseq_core::roots::{
    classify_cubic, classify_quartic, discriminant, isolate_roots, sturm_count, Bound,
};

const PRECISION_ENV: &str = "MULSEQ_PRECISION_BITS";

#[derive(Parser)]
#[command(name = "mulseq", version, about = "Exact tools for multiplier sequences over polynomial bases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a basis polynomial.
    Basis {
        #[arg(long, default_value = "legendre")]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Laguerre parameter.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Real-root counting, isolation and classification.
    Roots {
        #[command(subcommand)]
        action: RootsAction,
    },
    /// Discriminant with respect to one variable.
    Disc {
        poly: String,
        #[arg(long, default_value = "x", value_parser = ["x", "a", "r"])]
        var: String,
    },
    /// Finite multiplier-sequence test.
    Check {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        /// Seed for the random part of the test family.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Differential-operator representation.
    Diffop {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Search for zeros of the operator symbol in the upper half-planes.
    BbFalsify {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Exponent::Negative)]
        exponent: Exponent,
        #[arg(long)]
        json: bool,
    },
    /// Run reproduction experiments.
    Repro {
        /// Experiment id.
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// Tags, ids or provenance names; repeatable or comma-separated.
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this path.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// List registered experiments.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum RootsAction {
    /// Distinct real roots in (lo, hi].
    Count {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<String>,
    },
    /// Isolating intervals with multiplicities.
    Isolate {
        poly: String,
        #[arg(long, default_value = "1/1024")]
        width: String,
    },
    /// Root structure of a cubic or quartic.
    Classify { poly: String },
}

#[derive(Args)]
struct OperatorArgs {
    #[arg(long, default_value = "legendre")]
    basis: String,
    #[arg(long)]
    seq: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Exponent {
    /// T[e^(-xw)]
    Negative,
    /// T[e^(xw)]
    Positive,
}

type CliResult = Result<ExitCode, String>;

fn err(e: impl Display) -> String {
    e.to_string()
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| format!("bad rational `{s}`: {e}"))
}

fn poly_x(s: &str) -> Result<Poly<Rational>, String> {
    parse_poly(s, "x").map_err(err)
}

fn operator(args: &OperatorArgs) -> Result<DiagonalOperator, String> {
    let basis: BasisKind = args.basis.parse().map_err(err)?;
    let seq: SequenceSpec = args.seq.parse().map_err(err)?;
    Ok(DiagonalOperator::new(basis, seq))
}

fn print_json(v: &impl serde::Serialize) -> Result<(), String> {
    println!("{}", serde_json::to_string_pretty(v).map_err(err)?);
    Ok(())
}

fn basis(kind: &str, n: usize, alpha: Option<&str>) -> CliResult {
    let kind: BasisKind = match alpha {
        Some(a) if kind.eq_ignore_ascii_case("laguerre") => {
            BasisKind::laguerre(rational(a)?).map_err(err)?
        }
        Some(_) => return Err("--alpha only applies to laguerre".into()),
        None => kind.parse().map_err(err)?,
    };
    println!("{}", basis_poly(&kind, n).map_err(err)?);
    Ok(ExitCode::SUCCESS)
}

fn bound(s: Option<&str>, default: Bound) -> Result<Bound, String> {
    match s {
        None => Ok(default),
        Some("-inf") => Ok(Bound::NegInf),
        Some("inf" | "+inf") => Ok(Bound::PosInf),
        Some(q) => Ok(Bound::At(rational(q)?)),
    }
}

fn roots(action: &RootsAction) -> CliResult {
    match action {
        RootsAction::Count { poly, lo, hi } => {
            let p = poly_x(poly)?;
            let lo = bound(lo.as_deref(), Bound::NegInf)?;
            let hi = bound(hi.as_deref(), Bound::PosInf)?;
            println!("{}", sturm_count(&p, &lo, &hi).map_err(err)?);
        }
        RootsAction::Isolate { poly, width } => {
            let iso = isolate_roots(&poly_x(poly)?, &rational(width)?).map_err(err)?;
            for iv in &iso.intervals {
                println!("({}, {}]  multiplicity {}", iv.lo, iv.hi, iv.multiplicity);
            }
        }
        RootsAction::Classify { poly } => {
            let p = poly_x(poly)?;
            match p.degree() {
                Some(3) => println!("{}", classify_cubic(&p).map_err(err)?),
                Some(4) => print_json(&classify_quartic(&p).map_err(err)?)?,
                d => return Err(format!("classify needs a cubic or quartic, got degree {d:?}")),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn disc(poly: &str, var: &str) -> CliResult {
    let all = ["x", "a", "r"];
    let m = parse_multi(poly, &all).map_err(err)?;
    let mut vars = vec![var];
    vars.extend(m.used_vars().into_iter().map(|i| all[i]).filter(|v| *v != var));
    let text = match vars.len() {
        1 => discriminant(&parse_nested::<Poly<Rational>>(poly, &vars).map_err(err)?)
            .map_err(err)?
            .to_string(),
        2 => {
            let p: Poly<Poly<Rational>> = parse_nested(poly, &vars).map_err(err)?;
            format_poly(&discriminant(&p).map_err(err)?, &vars[1..])
        }
        _ => {
            let p: Poly<Poly<Poly<Rational>>> = parse_nested(poly, &vars).map_err(err)?;
            format_poly(&discriminant(&p).map_err(err)?, &vars[1..])
        }
    };
    println!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn check(op: &OperatorArgs, max_degree: usize, seed: u64, json: bool) -> CliResult {
    let op = operator(op)?;
    let family = TestFamily::default().with_seed(seed);
    let v = basis_ms_test(&op.seq, &op.basis, max_degree, &family).map_err(err)?;
    if json {
        print_json(&v)?;
    } else {
        match v.failure() {
            Some(e) => {
                println!("certified fail ({})", e.source);
                println!("witness:   {}", e.witness);
                println!("transform: {}", e.transform);
                println!(
                    "square-free degree {}, distinct real roots {}",
                    e.evidence.squarefree_degree, e.evidence.distinct_real_roots
                );
            }
            None if v.is_pass() => println!("pass through degree {}", op.seq.clip(max_degree)),
            None => println!("undecided"),
        }
        for n in &v.notes {
            println!("note: {n}");
        }
    }
    Ok(if v.is_fail() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn diffop(op: &OperatorArgs, order: Option<usize>, json: bool) -> CliResult {
    let op = operator(op)?;
    let order = order.unwrap_or_else(|| default_order(&op));
    let rep = to_diffop(&op, order).map_err(err)?;
    if json {
        print_json(&rep)?;
    } else {
        for (k, p) in rep.coeffs.iter().enumerate() {
            println!("p_{k} = {p}");
        }
        match rep.first_mismatch {
            None => println!("exact through degree {}", rep.checked_through),
            Some(n) => println!("truncated: differs from the operator on x^{n}"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn precision_bits() -> Result<usize, String> {
    match std::env::var(PRECISION_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|b| *b >= 64)
            .ok_or_else(|| format!("{PRECISION_ENV} must be an integer >= 64, got `{v}`")),
        Err(_) => Ok(DEFAULT_PRECISION_BITS),
    }
}

fn falsify(
    op: &OperatorArgs,
    order: Option<usize>,
    samples: usize,
    seed: u64,
    exponent: Exponent,
    json: bool,
) -> CliResult {
    let op = operator(op)?;
    let order = order.unwrap_or_else(|| default_order(&op));
    let orientation = match exponent {
        Exponent::Negative => Orientation::NegativeExponent,
        Exponent::Positive => Orientation::PositiveExponent,
    };
    let sym = symbol(&to_diffop(&op, order).map_err(err)?).with_orientation(orientation);
    let cfg = FalsifierConfig {
        samples,
        seed,
        precision_bits: precision_bits()?,
        ..FalsifierConfig::default()
    };
    let r = bb_falsify(&sym, &cfg).map_err(err)?;
    if json {
        print_json(&r)?;
    } else {
        println!("symbol: {sym}  (tested against {orientation})");
        match &r.outcome {
            Outcome::CounterexampleFound(c) => {
                println!("counterexample at sample {}", c.sample);
                println!("x0 = {}", c.x0);
                println!("w0 = {}", c.w0);
            }
            Outcome::NoZeroFound { samples, seed } => {
                println!("no zero found in {samples} samples (seed {seed}); not a proof of stability")
            }
        }
    }
    Ok(if r.found() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn print_report(r: &Report) {
    let tag = if r.report_only { " (report only)" } else { "" };
    println!("{:<20} {}{}  [{} ms]", r.id, r.status, tag, r.ms);
    for key in &r.mismatched {
        println!("    {key}");
        println!("      computed: {}", r.computed.get(key).map_or("", String::as_str));
        println!("      expected: {}", r.expected.get(key).map_or("", String::as_str));
    }
    if let Some(e) = &r.error {
        println!("    error: {e}");
    }
}

fn status_code(statuses: impl Iterator<Item = ReportStatus>) -> ExitCode {
    let mut code = 0;
    for s in statuses {
        code = code.max(match s {
            ReportStatus::Match => 0,
            ReportStatus::Mismatch => 1,
            ReportStatus::Error => 2,
        });
    }
    ExitCode::from(code)
}

#[allow(clippy::too_many_arguments)]
fn repro(
    id: Option<&str>,
    all: bool,
    filter: &[String],
    seed: u64,
    json: bool,
    out: Option<&std::path::Path>,
    list: bool,
) -> CliResult {
    if list {
        for e in REGISTRY {
            let tag = if e.report_only { " (report only)" } else { "" };
            println!("{:<20} [{}]{} {}", e.id, e.provenance.tag(), tag, e.description);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let ctx = RunContext::new(seed).with_precision(precision_bits()?);
    let write = |text: &str| -> Result<(), String> {
        if let Some(path) = out {
            std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        Ok(())
    };
    if let Some(id) = id {
        if find_experiment(id).is_none() {
            return Err(format!("unknown experiment `{id}`; try --list"));
        }
        let r = run_experiment_with(id, &ctx).map_err(err)?;
        let text = serde_json::to_string_pretty(&r).map_err(err)?;
        write(&text)?;
        if json {
            println!("{text}");
        } else {
            print_report(&r);
        }
        let gating = (!r.report_only).then_some(r.status);
        return Ok(status_code(gating.into_iter()));
    }
    if !all && filter.is_empty() {
        return Err("give an experiment id, --all or --filter".into());
    }
    let suite = run_suite_with(filter, &ctx);
    let text = serde_json::to_string_pretty(&suite).map_err(err)?;
    write(&text)?;
    if json {
        println!("{text}");
    } else {
        for r in &suite.reports {
            print_report(r);
        }
        let t = &suite.totals;
        println!(
            "{} experiments: {} match, {} mismatch, {} error ({} report only)",
            t.experiments, t.matched, t.mismatched, t.errors, t.report_only
        );
    }
    Ok(status_code(
        suite.reports.iter().filter(|r| r.gates()).map(|r| r.status),
    ))
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Basis { kind, n, alpha } => basis(kind, *n, alpha.as_deref()),
        Command::Roots { action } => roots(action),
        Command::Disc { poly, var } => disc(poly, var),
        Command::Check {
            op,
            max_degree,
            seed,
            json,
        } => check(op, *max_degree, *seed, *json),
        Command::Diffop { op, order, json } => diffop(op, *order, *json),
        Command::BbFalsify {
            op,
            order,
            samples,
            seed,
            exponent,
            json,
        } => falsify(op, *order, *samples, *seed, *exponent, *json),
        Command::Repro {
            id,
            all,
            filter,
            seed,
            json,
            out,
            list,
        } => repro(id.as_deref(), *all, filter, *seed, *json, out.as_deref(), *list),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end. Parsing lives here so the commands are callable
//! (and testable) as plain functions; `main` only dispatches and maps errors
//! to exit codes: 0 success, 2 validation, 3 internal invariant violation.
//!
//! The solve report defaults to JSON with every potentially large integer
//! serialized as a decimal string; the line-oriented commands default to
//! plain TSV lines and accept `--format json`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use std::str::FromStr;

use crate::arith::DEFAULT_SEGMENT_LEN;
use crate::error::{Error, Result};
use crate::lucas::{
    check_catalan, check_lucas_relation, check_parity_identity, lucas_u, lucas_v, LucasParams,
    LucasRelation, ParityVariant, RecurrenceSeed,
};
use crate::pell::{classify, solve_pm4, Rhs};
use crate::sigma3::{conjecture_scan, scan_pq_alpha};
use crate::solver::{solve, EquationInstance, SolutionReport, SolveConfig};

/// Environment variable overriding the default sieve segment length.
pub const SEGMENT_LEN_ENV: &str = "PELLUCAS_SEGMENT_LEN";

#[derive(Debug, Parser)]
#[command(
    name = "pellucas",
    about = "Exact solver for sigma_2(n) - n^2 = A*n + B via Lucas sequences",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve sigma_2(n) - n^2 = A*n + B: sporadic scan, semiprime search,
    /// pattern recognition, and solution families.
    Solve(SolveArgs),
    /// Evaluate U_k(P, Q) or V_k(P, Q).
    Lucas(LucasArgs),
    /// List solutions of x^2 - D*y^2 = +/-4.
    Pell(PellArgs),
    /// Sweep the recurrence identities and report failures, if any.
    VerifyIdentities(VerifyArgs),
    /// Scan for n with two distinct prime factors dividing sigma_3(n).
    Sigma3(Sigma3Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Coefficient A (any integer, arbitrary size).
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Coefficient B (any integer, arbitrary size).
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    /// Cap on the sporadic brute-force scan.
    #[arg(long, default_value_t = 10_000_000)]
    pub brute_cap: u64,
    /// Largest prime tried as the bigger factor in the semiprime search.
    #[arg(long, default_value_t = 1_000_000)]
    pub q_limit: u64,
    /// Largest P tried by pattern recognition.
    #[arg(long, default_value_t = 10)]
    pub p_limit: u32,
    /// Largest m tried by pattern recognition.
    #[arg(long, default_value_t = 10)]
    pub m_limit: u32,
    /// Largest family index k.
    #[arg(long, default_value_t = 64)]
    pub k_limit: u32,
    /// Sieve segment length (also via PELLUCAS_SEGMENT_LEN).
    #[arg(long)]
    pub segment_len: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LucasArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub p: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub q: i64,
    /// Which sequence: u (first kind) or v (second kind).
    #[arg(long, value_enum)]
    pub kind: SequenceChoice,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceChoice {
    U,
    V,
}

#[derive(Debug, Args)]
pub struct PellArgs {
    /// Discriminant D; must be P^2 + 4 or P^2 - 4 for some P.
    #[arg(long)]
    pub d: u64,
    /// Right-hand side, 4 or -4.
    #[arg(long, allow_hyphen_values = true)]
    pub rhs: i64,
    /// How many solutions to list.
    #[arg(long, default_value_t = 5)]
    pub count: usize,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check a single identity instance instead of sweeping:
    /// 21 (product identity), 3/4/5 (squared-term identities),
    /// 26 (U/V relations).
    #[arg(long)]
    pub lemma: Option<u8>,
    /// Relation id 1..=6 (with --lemma 26).
    #[arg(long)]
    pub relation: Option<u8>,
    /// Sequence parameter P (with --lemma 26).
    #[arg(long, allow_hyphen_values = true)]
    pub pp: Option<i64>,
    /// Sequence parameter Q (with --lemma 26).
    #[arg(long, allow_hyphen_values = true)]
    pub qq: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub l: i64,
    /// Seed A0 (with --lemma 21/3/4/5).
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub a0: i64,
    /// Seed A1 (with --lemma 21/3/4/5).
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    pub a1: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<i64>,
    /// Which sweeps to run when no --lemma is given.
    #[arg(long, value_enum, default_value = "all")]
    pub scope: SweepScope,
    /// Upper n for the product-identity sweep.
    #[arg(long, default_value_t = 20)]
    pub catalan_n: i64,
    /// Upper n for the squared-term sweeps.
    #[arg(long, default_value_t = 15)]
    pub parity_n: i64,
    /// Index range half-width for the relation sweep.
    #[arg(long, default_value_t = 10)]
    pub relation_k: i64,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepScope {
    All,
    Catalan,
    Parity,
    Relations,
}

#[derive(Debug, Args)]
pub struct Sigma3Args {
    #[arg(long)]
    pub bound: u64,
    #[arg(long, value_enum, default_value = "theorem")]
    pub mode: Sigma3Mode,
    /// Drop the q mod 3 != 1 restriction (theorem mode only).
    #[arg(long, default_value_t = false)]
    pub all_q: bool,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sigma3Mode {
    /// n = p * q^alpha with p of exponent one.
    Theorem,
    /// Any exponents on both primes.
    Conjecture,
}

/// What a command produced: the stdout payload, optional stderr notes, and
/// whether an identity check failed (mapped to exit code 3).
#[derive(Debug, Default)]
pub struct CmdOutput {
    pub stdout: String,
    pub notes: Vec<String>,
    pub invariant_failed: bool,
}

pub fn execute(cli: Cli) -> Result<CmdOutput> {
    match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Lucas(args) => cmd_lucas(args),
        Command::Pell(args) => cmd_pell(args),
        Command::VerifyIdentities(args) => cmd_verify_identities(args),
        Command::Sigma3(args) => cmd_sigma3(args),
    }
}

fn parse_bigint(text: &str, flag: &str) -> Result<BigInt> {
    BigInt::from_str(text.trim()).map_err(|_| Error::InvalidArgument {
        flag: flag.into(),
        reason: format!("{text:?} is not an integer"),
    })
}

// ---------------------------------------------------------------------------
// solve

#[derive(Serialize)]
struct InstanceDto {
    a: String,
    b: String,
    sporadic_bound: String,
}

#[derive(Serialize)]
struct LimitsDto {
    brute_cap: u64,
    q_limit: u64,
    p_limit: u32,
    m_limit: u32,
    k_limit: u32,
    segment_len: u64,
}

#[derive(Serialize)]
struct PairDto {
    p: String,
    q: String,
}

#[derive(Serialize)]
struct PatternDto {
    id: String,
    p: i64,
    m: u32,
}

#[derive(Serialize)]
struct FamilyDto {
    pattern: String,
    pattern_p: i64,
    pattern_m: u32,
    n: String,
    p: String,
    q: String,
    indices: [i64; 2],
    probable_prime: bool,
}

#[derive(Serialize)]
struct ReportDto {
    instance: InstanceDto,
    limits: LimitsDto,
    sporadic: Vec<String>,
    sporadic_scanned_to: String,
    sporadic_complete: bool,
    semiprime: Vec<PairDto>,
    patterns: Vec<PatternDto>,
    families: Vec<FamilyDto>,
    diagnostics: Vec<String>,
}

impl ReportDto {
    fn from_report(report: &SolutionReport) -> Self {
        ReportDto {
            instance: InstanceDto {
                a: report.a.to_string(),
                b: report.b.to_string(),
                sporadic_bound: report.sporadic_bound.to_string(),
            },
            limits: LimitsDto {
                brute_cap: report.config.brute_cap,
                q_limit: report.config.q_limit,
                p_limit: report.config.p_limit,
                m_limit: report.config.m_limit,
                k_limit: report.config.k_limit,
                segment_len: report.config.segment_len,
            },
            sporadic: report.sporadic.iter().map(u64::to_string).collect(),
            sporadic_scanned_to: report.sporadic_scanned_to.to_string(),
            sporadic_complete: report.sporadic_complete,
            semiprime: report
                .semiprime
                .iter()
                .map(|(p, q)| PairDto { p: p.to_string(), q: q.to_string() })
                .collect(),
            patterns: report
                .patterns
                .iter()
                .map(|pat| PatternDto { id: pat.id.tag().into(), p: pat.p, m: pat.m })
                .collect(),
            families: report
                .families
                .iter()
                .map(|f| FamilyDto {
                    pattern: f.pattern.id.tag().into(),
                    pattern_p: f.pattern.p,
                    pattern_m: f.pattern.m,
                    n: f.n.to_string(),
                    p: f.p.to_string(),
                    q: f.q.to_string(),
                    indices: f.indices,
                    probable_prime: f.probable_prime,
                })
                .collect(),
            diagnostics: report.diagnostics.clone(),
        }
    }
}

fn cmd_solve(args: SolveArgs) -> Result<CmdOutput> {
    let a = parse_bigint(&args.a, "--a")?;
    let b = parse_bigint(&args.b, "--b")?;
    let instance = EquationInstance::new(a, b)?;
    let segment_len = args
        .segment_len
        .or_else(|| std::env::var(SEGMENT_LEN_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_SEGMENT_LEN);
    let config = SolveConfig {
        brute_cap: args.brute_cap,
        q_limit: args.q_limit,
        p_limit: args.p_limit,
        m_limit: args.m_limit,
        k_limit: args.k_limit,
        segment_len,
    };
    let report = solve(&instance, &config)?;
    let stdout = match args.format {
        Format::Json => {
            serde_json::to_string_pretty(&ReportDto::from_report(&report)).expect("serializable")
        }
        Format::Tsv => render_report_tsv(&report),
    };
    Ok(CmdOutput { stdout, ..CmdOutput::default() })
}

fn render_report_tsv(report: &SolutionReport) -> String {
    let mut lines = Vec::new();
    lines.push(format!(
        "instance\t{}\t{}\t{}",
        report.a, report.b, report.sporadic_bound
    ));
    lines.push(format!(
        "scan\t{}\t{}",
        report.sporadic_scanned_to,
        if report.sporadic_complete { "complete" } else { "truncated" }
    ));
    for n in &report.sporadic {
        lines.push(format!("sporadic\t{n}"));
    }
    for (p, q) in &report.semiprime {
        lines.push(format!("semiprime\t{p}\t{q}"));
    }
    for pat in &report.patterns {
        lines.push(format!("pattern\t{}\t{}\t{}", pat.id.tag(), pat.p, pat.m));
    }
    for f in &report.families {
        lines.push(format!(
            "family\t{}\t{}\t{}\t{}\t{},{}\t{}",
            f.pattern.id.tag(),
            f.n,
            f.p,
            f.q,
            f.indices[0],
            f.indices[1],
            if f.probable_prime { "probable" } else { "exact" }
        ));
    }
    for d in &report.diagnostics {
        lines.push(format!("diagnostic\t{d}"));
    }
    lines.join("\n")
}

// ---------------------------------------------------------------------------
// lucas / pell

fn cmd_lucas(args: LucasArgs) -> Result<CmdOutput> {
    let params = LucasParams::new(args.p, args.q);
    let value = match args.kind {
        SequenceChoice::U => lucas_u(params, args.k)?,
        SequenceChoice::V => lucas_v(params, args.k)?,
    };
    let stdout = match args.format {
        Format::Tsv => value.to_string(),
        Format::Json => serde_json::json!({ "value": value.to_string() }).to_string(),
    };
    Ok(CmdOutput { stdout, ..CmdOutput::default() })
}

fn cmd_pell(args: PellArgs) -> Result<CmdOutput> {
    let rhs = match args.rhs {
        4 => Rhs::Plus4,
        -4 => Rhs::Minus4,
        other => {
            return Err(Error::InvalidArgument {
                flag: "--rhs".into(),
                reason: format!("must be 4 or -4, got {other}"),
            })
        }
    };
    let shape = classify(args.d)?;
    let solutions = solve_pm4(&shape, rhs, args.count)?;
    let stdout = match args.format {
        Format::Tsv => solutions
            .iter()
            .map(|s| format!("{}\t{}\t{}", s.x, s.y, s.index))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let rows: Vec<_> = solutions
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "x": s.x.to_string(),
                        "y": s.y.to_string(),
                        "index": s.index,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("serializable")
        }
    };
    Ok(CmdOutput { stdout, ..CmdOutput::default() })
}

// ---------------------------------------------------------------------------
// verify-identities

struct SweepReport {
    checked: u64,
    failures: Vec<String>,
    single: Option<(BigInt, BigInt)>,
}

fn cmd_verify_identities(args: VerifyArgs) -> Result<CmdOutput> {
    let report = match args.lemma {
        Some(lemma) => verify_single(lemma, &args)?,
        None => verify_sweep(&args),
    };
    let mut lines = Vec::new();
    let failed = !report.failures.is_empty();
    match args.format {
        Format::Tsv => {
            lines.push(format!("checked\t{}", report.checked));
            lines.push(format!("failures\t{}", report.failures.len()));
            if let Some((lhs, rhs)) = &report.single {
                lines.push(format!("lhs\t{lhs}"));
                lines.push(format!("rhs\t{rhs}"));
            }
            for f in &report.failures {
                lines.push(format!("FAIL\t{f}"));
            }
        }
        Format::Json => {
            let value = serde_json::json!({
                "checked": report.checked,
                "failures": report.failures,
                "lhs": report.single.as_ref().map(|(l, _)| l.to_string()),
                "rhs": report.single.as_ref().map(|(_, r)| r.to_string()),
            });
            lines.push(serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
    Ok(CmdOutput { stdout: lines.join("\n"), notes: Vec::new(), invariant_failed: failed })
}

fn missing(flag: &str) -> Error {
    Error::InvalidArgument { flag: flag.into(), reason: "required for this --lemma".into() }
}

fn verify_single(lemma: u8, args: &VerifyArgs) -> Result<SweepReport> {
    let pair = match lemma {
        21 => {
            let seed = RecurrenceSeed {
                a0: args.a0,
                a1: args.a1,
                u: args.u.ok_or_else(|| missing("--u"))?,
                v: args.v.ok_or_else(|| missing("--v"))?,
            };
            let n = args.n.ok_or_else(|| missing("--n"))?;
            let r = args.r.ok_or_else(|| missing("--r"))?;
            check_catalan(seed, n, r)?
        }
        3..=5 => {
            let variant = match lemma {
                3 => ParityVariant::EvenV1,
                4 => ParityVariant::OddV1,
                _ => ParityVariant::VMinus1,
            };
            let v = args.v.unwrap_or(if lemma == 5 { -1 } else { 1 });
            let seed = RecurrenceSeed {
                a0: args.a0,
                a1: args.a1,
                u: args.u.ok_or_else(|| missing("--u"))?,
                v,
            };
            check_parity_identity(variant, seed, args.n.ok_or_else(|| missing("--n"))?)?
        }
        26 => {
            let relation = LucasRelation::try_from(args.relation.ok_or_else(|| missing("--relation"))?)?;
            let params = LucasParams::new(
                args.pp.ok_or_else(|| missing("--pp"))?,
                args.qq.ok_or_else(|| missing("--qq"))?,
            );
            check_lucas_relation(relation, params, args.k.ok_or_else(|| missing("--k"))?, args.l)?
        }
        other => {
            return Err(Error::InvalidArgument {
                flag: "--lemma".into(),
                reason: format!("must be one of 21, 3, 4, 5, 26, got {other}"),
            })
        }
    };
    let failures = if pair.0 == pair.1 {
        Vec::new()
    } else {
        vec![format!("single instance: lhs {} != rhs {}", pair.0, pair.1)]
    };
    Ok(SweepReport { checked: 1, failures, single: Some(pair) })
}

fn verify_sweep(args: &VerifyArgs) -> SweepReport {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    let scope = args.scope;

    if matches!(scope, SweepScope::All | SweepScope::Catalan) {
        for u in -3..=3 {
            for v in -3..=3 {
                for a0 in -2..=2 {
                    for a1 in -2..=2 {
                        let seed = RecurrenceSeed { a0, a1, u, v };
                        for n in 1..=args.catalan_n {
                            for r in 1..=n {
                                let (lhs, rhs) = check_catalan(seed, n, r)
                                    .expect("in-range product identity");
                                checked += 1;
                                if lhs != rhs {
                                    failures.push(format!(
                                        "catalan u={u} v={v} A0={a0} A1={a1} n={n} r={r}: {lhs} != {rhs}"
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    if matches!(scope, SweepScope::All | SweepScope::Parity) {
        for u in -4..=4 {
            for a0 in -2..=2 {
                for a1 in -2..=2 {
                    for n in 0..=args.parity_n {
                        let cases = [
                            (ParityVariant::EvenV1, 1, n >= 0),
                            (ParityVariant::OddV1, 1, n >= 1),
                            (ParityVariant::VMinus1, -1, n >= 1),
                        ];
                        for (variant, v, runnable) in cases {
                            if !runnable {
                                continue;
                            }
                            let seed = RecurrenceSeed { a0, a1, u, v };
                            let (lhs, rhs) = check_parity_identity(variant, seed, n)
                                .expect("v matches variant");
                            checked += 1;
                            if lhs != rhs {
                                failures.push(format!(
                                    "parity {variant:?} u={u} A0={a0} A1={a1} n={n}: {lhs} != {rhs}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }

    if matches!(scope, SweepScope::All | SweepScope::Relations) {
        for p in -5..=5 {
            for q in [1i64, -1] {
                let params = LucasParams::new(p, q);
                for k in -args.relation_k..=args.relation_k {
                    for l in -args.relation_k..=args.relation_k {
                        for id in 1..=6u8 {
                            let relation = LucasRelation::try_from(id).expect("1..=6");
                            let (lhs, rhs) = check_lucas_relation(relation, params, k, l)
                                .expect("|Q| = 1 so all indices are evaluable");
                            checked += 1;
                            if lhs != rhs {
                                failures.push(format!(
                                    "relation {id} P={p} Q={q} k={k} l={l}: {lhs} != {rhs}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }

    SweepReport { checked, failures, single: None }
}

// ---------------------------------------------------------------------------
// sigma3

fn cmd_sigma3(args: Sigma3Args) -> Result<CmdOutput> {
    let mut notes = Vec::new();
    let stdout = match args.mode {
        Sigma3Mode::Theorem => {
            let hits = scan_pq_alpha(args.bound, !args.all_q);
            for h in hits.iter().filter(|h| !h.even_perfect) {
                notes.push(format!(
                    "counterexample candidate: {} = {} * {}^{} divides sigma_3 but is not an even perfect number",
                    h.n, h.p, h.q, h.alpha
                ));
            }
            match args.format {
                Format::Tsv => hits
                    .iter()
                    .map(|h| {
                        format!(
                            "{}\t{}\t{}\t{}\t{}",
                            h.n,
                            h.p,
                            h.q,
                            h.alpha,
                            if h.even_perfect { "perfect" } else { "NOT_PERFECT" }
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => {
                    let rows: Vec<_> = hits
                        .iter()
                        .map(|h| {
                            serde_json::json!({
                                "n": h.n.to_string(),
                                "p": h.p.to_string(),
                                "q": h.q.to_string(),
                                "alpha": h.alpha,
                                "even_perfect": h.even_perfect,
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&rows).expect("serializable")
                }
            }
        }
        Sigma3Mode::Conjecture => {
            let hits = conjecture_scan(args.bound);
            for (n, _) in hits.iter().filter(|(_, perfect)| !perfect) {
                notes.push(format!(
                    "counterexample candidate: {n} divides sigma_3 but is not an even perfect number"
                ));
            }
            match args.format {
                Format::Tsv => hits
                    .iter()
                    .map(|(n, perfect)| {
                        format!("{n}\t{}", if *perfect { "perfect" } else { "NOT_PERFECT" })
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => {
                    let rows: Vec<_> = hits
                        .iter()
                        .map(|(n, perfect)| {
                            serde_json::json!({ "n": n.to_string(), "even_perfect": perfect })
                        })
                        .collect();
                    serde_json::to_string_pretty(&rows).expect("serializable")
                }
            }
        }
    };
    Ok(CmdOutput { stdout, notes, invariant_failed: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run(argv: &[&str]) -> Result<CmdOutput> {
        execute(Cli::parse_from(argv))
    }

    #[test]
    fn lucas_command_prints_value() {
        let out = run(&["pellucas", "lucas", "--p", "1", "--q", "-1", "--kind", "u", "--k", "10"])
            .unwrap();
        assert_eq!(out.stdout, "55");
        let out = run(&["pellucas", "lucas", "--p", "1", "--q", "-1", "--kind", "v", "--k", "0"])
            .unwrap();
        assert_eq!(out.stdout, "2");
        let err =
            run(&["pellucas", "lucas", "--p", "2", "--q", "3", "--kind", "u", "--k", "-1"]);
        assert!(matches!(err, Err(Error::NegativeIndex { .. })));
    }

    #[test]
    fn pell_command_lists_solutions() {
        let out =
            run(&["pellucas", "pell", "--d", "5", "--rhs", "-4", "--count", "3"]).unwrap();
        assert_eq!(out.stdout, "1\t1\t1\n4\t2\t3\n11\t5\t5");
        let out = run(&["pellucas", "pell", "--d", "5", "--rhs", "4", "--count", "1"]).unwrap();
        assert_eq!(out.stdout, "2\t0\t0");
        assert!(matches!(
            run(&["pellucas", "pell", "--d", "7", "--rhs", "4", "--count", "1"]),
            Err(Error::UnsupportedShape { d: 7 })
        ));
    }

    #[test]
    fn verify_single_instance() {
        let out = run(&[
            "pellucas", "verify-identities", "--lemma", "26", "--relation", "3", "--pp", "1",
            "--qq", "-1", "--k", "2", "--l", "3",
        ])
        .unwrap();
        assert!(out.stdout.contains("lhs\t10"));
        assert!(out.stdout.contains("rhs\t10"));
        assert!(!out.invariant_failed);
    }

    #[test]
    fn verify_empty_range() {
        let out = run(&[
            "pellucas", "verify-identities", "--scope", "catalan", "--catalan-n", "0",
        ])
        .unwrap();
        assert!(out.stdout.contains("checked\t0"));
        assert!(!out.invariant_failed);
    }

    #[test]
    fn solve_rejects_excluded_pair() {
        let err = run(&["pellucas", "solve", "--a", "0", "--b", "1"]);
        match err {
            Err(Error::ExcludedInstance { a, b, .. }) => {
                assert_eq!((a.as_str(), b.as_str()), ("0", "1"));
            }
            other => panic!("expected exclusion, got {other:?}"),
        }
    }

    #[test]
    fn solve_json_shape() {
        let out = run(&[
            "pellucas", "solve", "--a", "3", "--b", "0", "--q-limit", "100", "--k-limit", "8",
        ])
        .unwrap();
        let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(value["instance"]["a"], "3");
        assert_eq!(value["sporadic"], serde_json::json!(["10"]));
        assert_eq!(value["sporadic_complete"], serde_json::json!(true));
        let first_pair = &value["semiprime"][0];
        assert_eq!(first_pair["p"], "2");
        assert_eq!(first_pair["q"], "5");
    }

    #[test]
    fn sigma3_empty_bound() {
        let out = run(&["pellucas", "sigma3", "--bound", "5"]).unwrap();
        assert_eq!(out.stdout, "");
    }
}

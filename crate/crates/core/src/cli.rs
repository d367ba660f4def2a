//! Command-line interface: exposes the Dedekind-sum evaluators, the
//! Casson–Walker surgery formulas, the obstruction ladder, the certificate
//! engine, and the cosmetic-crossing pipeline as `cwsurgery` subcommands.
//!
//! Conventions shared by every subcommand:
//!
//! * `--output json|text` selects the rendering; JSON output is a single
//!   line `{"command": ..., "result": ...}` with rationals as `"num/den"`
//!   strings.
//! * `--approx` adds clearly marked decimal approximations next to exact
//!   values (text: `(~ 0.25)`; JSON: an extra `approx` field).
//! * stdout is byte-deterministic for a given input; `--timing` writes the
//!   wall-clock runtime to stderr, never stdout.
//! * exit codes: `0` success (obstructed / certified / confirmed), `1`
//!   negative decision (inconclusive / refused / open), `2` invalid input
//!   or hypothesis violation.
//! * `CW_SURGERY_THREADS` caps the worker pool used by the scans.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::casson_walker::{
    lambda_knot, lambda_link_breakdown, FramedKnotSurgery, LambdaLinkBreakdown, Slope,
    TwoComponentLinkData,
};
use crate::cosmetic::{
    cosmetic_verdict, load_knot_table, reproduce_cor_ten, CorTenReport, CosmeticReport,
    CosmeticVerdict,
};
use crate::dedekind::{dedekind_sum, dedekind_sum_naive, dedekind_symbol};
use crate::error::{Error, Result};
use crate::obstruction::{
    certify_complement, obstruct_slope, theorem_main_scan, CaseOutcome, Certificate,
    CongruenceOutcome, ManifoldClass, ObstructionReport, ObstructionVerdict, ScanReport,
};
use crate::rational::Rational;

/// Number of decimal digits used by `--approx`.
const APPROX_DIGITS: u32 = 6;

/// Exact Casson-Walker invariants of Dehn surgeries and the associated
/// obstruction and certification pipelines.
#[derive(Debug, Parser)]
#[command(name = "cwsurgery", version, max_term_width = 100)]
pub struct Cli {
    /// Subcommand to run.
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,

    /// Add decimal approximations next to exact rational values.
    #[arg(long, global = true)]
    pub approx: bool,

    /// Report wall-clock runtime on stderr.
    #[arg(long, global = true)]
    pub timing: bool,
}

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Human-readable text.
    Text,
    /// One-line JSON report.
    Json,
}

/// Top-level subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dedekind sums and the Dedekind symbol.
    #[command(subcommand)]
    Dedekind(DedekindCommand),
    /// Casson-Walker invariants of surgeries.
    #[command(subcommand)]
    Lambda(LambdaCommand),
    /// The per-slope obstruction ladder and the exhaustive slope scan.
    #[command(subcommand)]
    Obstruct(ObstructCommand),
    /// Knot-complement certificates for a manifold class.
    Certify(CertifyArgs),
    /// The cosmetic-crossing pipeline over a knot table.
    Cosmetic(CosmeticArgs),
}

/// Dedekind-sum subcommands.
#[derive(Debug, Subcommand)]
pub enum DedekindCommand {
    /// Evaluate the Dedekind sum s(p, q).
    Sum {
        /// Numerator parameter.
        #[arg(long)]
        p: i64,
        /// Modulus parameter (nonzero, coprime to p).
        #[arg(long)]
        q: i64,
        /// Use the defining summation instead of reciprocity descent.
        #[arg(long)]
        naive: bool,
    },
    /// Evaluate the symbol S(p/q) = 12·s(p, q) for a surgery slope.
    Symbol {
        /// The slope P/Q.
        #[arg(long)]
        slope: Slope,
    },
}

/// Invariant subcommands.
#[derive(Debug, Subcommand)]
pub enum LambdaCommand {
    /// Casson-Walker invariant of P/Q-surgery on a knot.
    Knot {
        /// The knot's second Conway coefficient.
        #[arg(long)]
        a2: i64,
        /// The surgery slope P/Q (P nonzero).
        #[arg(long)]
        slope: Slope,
    },
    /// Casson-Walker invariant of surgery on a two-component link,
    /// described by a JSON file.
    Link {
        /// Path to the link description (`-` for stdin); fields: a2x, a2y,
        /// a3 ("num/den"), lk, fx ("P/Q"), fy ("P/Q").
        #[arg(long)]
        input: PathBuf,
        /// Also print every summand of the surgery formula.
        #[arg(long)]
        breakdown: bool,
    },
}

/// Obstruction subcommands.
#[derive(Debug, Subcommand)]
pub enum ObstructCommand {
    /// Run the obstruction ladder on one candidate slope.
    Slope {
        /// Surgery order p (positive).
        #[arg(long)]
        p: i64,
        /// Surgery coefficient parameter q (coprime to p).
        #[arg(long)]
        q: i64,
        /// Slope distance n (positive).
        #[arg(long)]
        n: i64,
        /// Linking number l.
        #[arg(long)]
        l: i64,
    },
    /// Scan every distance-1 slope residue for p/q-surgery.
    Scan {
        /// Surgery order p = d^2 p' with d in {1, 2, 3, 6}.
        #[arg(long)]
        p: i64,
        /// Surgery coefficient parameter q (positive, coprime to p).
        #[arg(long)]
        q: i64,
    },
}

/// Arguments of `certify`.
#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Surgery order p (positive).
    #[arg(long)]
    pub p: i64,
    /// Surgery coefficient parameter q (nonzero, coprime to p).
    #[arg(long)]
    pub q: i64,
    /// Manifold class whose hypotheses are validated.
    #[arg(long, value_enum)]
    pub class: ClassArg,
}

/// Manifold classes accepted by `certify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    /// Reducible L-space.
    Reducible,
    /// Lens space.
    Lens,
    /// Finite fundamental group.
    Finite,
    /// Small Seifert fibered L-space.
    Ssfs,
}

impl From<ClassArg> for ManifoldClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Reducible => ManifoldClass::Reducible,
            ClassArg::Lens => ManifoldClass::Lens,
            ClassArg::Finite => ManifoldClass::FinitePi1,
            ClassArg::Ssfs => ManifoldClass::SmallSFSLSpace,
        }
    }
}

/// Arguments of `cosmetic`.
#[derive(Debug, Args)]
pub struct CosmeticArgs {
    /// Knot table (CSV) to evaluate.
    #[arg(long, conflicts_with = "reproduce_cor_ten")]
    pub table: Option<PathBuf>,
    /// Restrict the evaluation to one knot of the table.
    #[arg(long, requires = "table")]
    pub name: Option<String>,
    /// Run the bundled ten-knot reproduction and print the partition.
    #[arg(long, conflicts_with = "table")]
    pub reproduce_cor_ten: bool,
}

#[derive(Serialize)]
struct RunReport<'a, T: Serialize> {
    command: &'a str,
    result: T,
}

#[derive(Serialize)]
struct DedekindSumResult {
    p: i64,
    q: i64,
    evaluator: &'static str,
    value: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<String>,
}

#[derive(Serialize)]
struct DedekindSymbolResult {
    slope: Slope,
    value: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<String>,
}

#[derive(Serialize)]
struct LambdaKnotResult {
    a2: i64,
    slope: Slope,
    lambda: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<String>,
}

#[derive(Serialize)]
struct LambdaLinkResult {
    input: TwoComponentLinkData,
    lambda: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    breakdown: Option<LambdaLinkBreakdown>,
}

#[derive(Serialize)]
struct CosmeticTableResult {
    table: String,
    reports: Vec<CosmeticReport>,
}

fn approx_of(value: &Rational, wanted: bool) -> Option<String> {
    wanted.then(|| value.to_decimal(APPROX_DIGITS))
}

/// Entry point used by `main`: parses `std::env::args`, runs the command,
/// and returns the process exit code.
pub fn main_entry() -> i32 {
    init_thread_pool();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(cli, &mut stdout.lock(), &mut stderr.lock())
}

/// Honors `CW_SURGERY_THREADS` by capping the global worker pool. Invalid
/// or absent values leave the default pool untouched.
fn init_thread_pool() {
    if let Ok(v) = std::env::var("CW_SURGERY_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

/// Runs a parsed command against the given output sinks and returns the
/// exit code (`0` success, `1` negative decision, `2` error).
pub fn run<O: Write, E: Write>(cli: Cli, out: &mut O, err: &mut E) -> i32 {
    let start = Instant::now();
    let code = match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    };
    if cli.timing {
        let _ = writeln!(err, "timing: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    code
}

fn dispatch<O: Write>(cli: &Cli, out: &mut O) -> Result<i32> {
    match &cli.command {
        Command::Dedekind(DedekindCommand::Sum { p, q, naive }) => {
            let (value, evaluator) = if *naive {
                (dedekind_sum_naive(*p, *q)?, "naive")
            } else {
                (dedekind_sum(*p, *q)?, "recursive")
            };
            let result = DedekindSumResult {
                p: *p,
                q: *q,
                evaluator,
                approx: approx_of(&value, cli.approx),
                value,
            };
            match cli.output {
                OutputFormat::Json => emit_json(out, "dedekind sum", &result)?,
                OutputFormat::Text => {
                    let mut line = format!("s({}, {}) = {}", result.p, result.q, result.value);
                    if let Some(a) = &result.approx {
                        line.push_str(&format!(" (~ {a})"));
                    }
                    if *naive {
                        line.push_str("  [naive evaluator]");
                    }
                    writeln!(out, "{line}")?;
                }
            }
            Ok(0)
        }
        Command::Dedekind(DedekindCommand::Symbol { slope }) => {
            let value = dedekind_symbol(slope);
            let result = DedekindSymbolResult {
                slope: *slope,
                approx: approx_of(&value, cli.approx),
                value,
            };
            match cli.output {
                OutputFormat::Json => emit_json(out, "dedekind symbol", &result)?,
                OutputFormat::Text => {
                    let mut line = format!("S({}) = {}", result.slope, result.value);
                    if let Some(a) = &result.approx {
                        line.push_str(&format!(" (~ {a})"));
                    }
                    writeln!(out, "{line}")?;
                }
            }
            Ok(0)
        }
        Command::Lambda(LambdaCommand::Knot { a2, slope }) => {
            let surgery = FramedKnotSurgery::new(*a2, *slope)?;
            let lambda = lambda_knot(&surgery);
            let result = LambdaKnotResult {
                a2: *a2,
                slope: *slope,
                approx: approx_of(&lambda, cli.approx),
                lambda,
            };
            match cli.output {
                OutputFormat::Json => emit_json(out, "lambda knot", &result)?,
                OutputFormat::Text => {
                    let mut line = format!(
                        "lambda({} surgery, a2 = {}) = {}",
                        result.slope, result.a2, result.lambda
                    );
                    if let Some(a) = &result.approx {
                        line.push_str(&format!(" (~ {a})"));
                    }
                    writeln!(out, "{line}")?;
                }
            }
            Ok(0)
        }
        Command::Lambda(LambdaCommand::Link { input, breakdown }) => {
            let data = read_link_input(input)?;
            let full = lambda_link_breakdown(&data)?;
            let result = LambdaLinkResult {
                approx: approx_of(&full.lambda, cli.approx),
                lambda: full.lambda.clone(),
                breakdown: breakdown.then_some(full),
                input: data,
            };
            match cli.output {
                OutputFormat::Json => emit_json(out, "lambda link", &result)?,
                OutputFormat::Text => {
                    let mut line = format!("lambda = {}", result.lambda);
                    if let Some(a) = &result.approx {
                        line.push_str(&format!(" (~ {a})"));
                    }
                    writeln!(out, "{line}")?;
                    if let Some(b) = &result.breakdown {
                        write_breakdown_text(out, b)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Obstruct(ObstructCommand::Slope { p, q, n, l }) => {
            let report = obstruct_slope(*p, *q, *n, *l)?;
            match cli.output {
                OutputFormat::Json => emit_json(out, "obstruct slope", &report)?,
                OutputFormat::Text => write_obstruction_text(out, &report)?,
            }
            Ok(if report.verdict.is_obstructed() { 0 } else { 1 })
        }
        Command::Obstruct(ObstructCommand::Scan { p, q }) => {
            let report = theorem_main_scan(*p, *q)?;
            match cli.output {
                OutputFormat::Json => emit_json(out, "obstruct scan", &report)?,
                OutputFormat::Text => write_scan_text(out, &report)?,
            }
            Ok(if report.all_obstructed { 0 } else { 1 })
        }
        Command::Certify(args) => {
            let cert = certify_complement(args.p, args.q, args.class.into())?;
            match cli.output {
                OutputFormat::Json => emit_json(out, "certify", &cert)?,
                OutputFormat::Text => write_certificate_text(out, &cert)?,
            }
            Ok(if cert.issued { 0 } else { 1 })
        }
        Command::Cosmetic(args) => run_cosmetic(cli, args, out),
    }
}

fn run_cosmetic<O: Write>(cli: &Cli, args: &CosmeticArgs, out: &mut O) -> Result<i32> {
    if args.reproduce_cor_ten {
        let report = reproduce_cor_ten()?;
        match cli.output {
            OutputFormat::Json => emit_json(out, "cosmetic reproduce-cor-ten", &report)?,
            OutputFormat::Text => write_cor_ten_text(out, &report)?,
        }
        return Ok(0);
    }
    let Some(table_path) = &args.table else {
        return Err(Error::Parse(
            "cosmetic requires either --table <CSV> or --reproduce-cor-ten".into(),
        ));
    };
    let table = load_knot_table(table_path)?;
    let records: Vec<_> = match &args.name {
        Some(name) => {
            let rec = table.iter().find(|r| &r.name == name).ok_or_else(|| {
                Error::Parse(format!(
                    "knot {name:?} not found in {}",
                    table_path.display()
                ))
            })?;
            vec![rec.clone()]
        }
        None => table,
    };
    let reports: Vec<CosmeticReport> = records
        .iter()
        .map(cosmetic_verdict)
        .collect::<Result<_>>()?;
    let all_confirmed = reports.iter().all(|r| r.verdict != CosmeticVerdict::Open);
    let single = args.name.is_some();
    let result = CosmeticTableResult {
        table: table_path.display().to_string(),
        reports,
    };
    match cli.output {
        OutputFormat::Json => emit_json(out, "cosmetic", &result)?,
        OutputFormat::Text => {
            for report in &result.reports {
                write_cosmetic_text(out, report)?;
            }
        }
    }
    // A full-table listing is a successful enumeration; a single-knot
    // query is a decision and reports "open" through the exit code.
    Ok(if single && !all_confirmed { 1 } else { 0 })
}

fn read_link_input(path: &Path) -> Result<TwoComponentLinkData> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
    };
    Ok(serde_json::from_str(&text)?)
}

fn emit_json<O: Write, T: Serialize>(out: &mut O, command: &str, result: &T) -> Result<()> {
    let report = RunReport { command, result };
    let line = serde_json::to_string(&report)?;
    writeln!(out, "{line}")?;
    Ok(())
}

fn verdict_name(v: &ObstructionVerdict) -> &'static str {
    match v {
        ObstructionVerdict::ObstructedByHomology => "ObstructedByHomology",
        ObstructionVerdict::ObstructedByKey => "ObstructedByKey",
        ObstructionVerdict::ObstructedByDedekindCongruence => "ObstructedByDedekindCongruence",
        ObstructionVerdict::ObstructedByCaseAnalysis => "ObstructedByCaseAnalysis",
        ObstructionVerdict::Inconclusive => "Inconclusive",
    }
}

fn write_breakdown_text<O: Write>(out: &mut O, b: &LambdaLinkBreakdown) -> Result<()> {
    writeln!(out, "breakdown:")?;
    writeln!(out, "  a2x_fy        = {}", b.a2x_fy)?;
    writeln!(out, "  neg_fy_24     = {}", b.neg_fy_24)?;
    writeln!(out, "  neg_fy_24qx2  = {}", b.neg_fy_24qx2)?;
    writeln!(out, "  fy_l2_24      = {}", b.fy_l2_24)?;
    writeln!(out, "  a2y_fx        = {}", b.a2y_fx)?;
    writeln!(out, "  neg_fx_24     = {}", b.neg_fx_24)?;
    writeln!(out, "  neg_fx_24qy2  = {}", b.neg_fx_24qy2)?;
    writeln!(out, "  fx_l2_24      = {}", b.fx_l2_24)?;
    writeln!(out, "  two_v3        = {}", b.two_v3)?;
    writeln!(out, "  dedekind_x    = {}", b.dedekind_x)?;
    writeln!(out, "  dedekind_y    = {}", b.dedekind_y)?;
    writeln!(out, "  rhs           = {}", b.rhs)?;
    writeln!(out, "  det           = {}", b.det)?;
    writeln!(out, "  signature     = {}", b.signature)?;
    Ok(())
}

fn write_obstruction_text<O: Write>(out: &mut O, r: &ObstructionReport) -> Result<()> {
    writeln!(
        out,
        "surgery {}/{}  candidate distance n = {}  linking l = {}",
        r.p, r.q, r.n, r.l
    )?;
    writeln!(out, "reduced: c = {}, p0 = {}, n0 = {}", r.c, r.p0, r.n0)?;
    if r.candidates.is_empty() {
        writeln!(out, "candidates: none")?;
    } else {
        writeln!(out, "candidates:")?;
        for c in &r.candidates {
            let cong = match &c.congruence {
                CongruenceOutcome::Pass { value } => format!("congruence pass ({value})"),
                CongruenceOutcome::FailNotIntegral { value } => {
                    format!("congruence fails: {value} is not integral")
                }
                CongruenceOutcome::FailCongruence { value } => {
                    format!("congruence fails: {value} is not divisible by p0")
                }
            };
            let fate = if c.survives { "survives" } else { "eliminated" };
            writeln!(
                out,
                "  m/n = {}/{} (eps = {}): {cong}, {fate}",
                c.m, r.n, c.eps
            )?;
        }
    }
    if !r.fired_rules.is_empty() {
        writeln!(out, "fired rules:")?;
        for rule in &r.fired_rules {
            writeln!(out, "  {}: {}", rule.rule, rule.reason)?;
        }
    }
    writeln!(out, "verdict: {}", verdict_name(&r.verdict))?;
    Ok(())
}

fn write_scan_text<O: Write>(out: &mut O, r: &ScanReport) -> Result<()> {
    writeln!(
        out,
        "p = {} (d = {}, p' = {}), q = {}",
        r.p, r.d, r.p_prime, r.q
    )?;
    writeln!(
        out,
        "scanned {} slope residues, {} obstructed",
        r.total, r.obstructed
    )?;
    let mut homology = 0usize;
    let mut key = 0usize;
    let mut congruence = 0usize;
    let mut other = 0usize;
    for e in &r.entries {
        match e.verdict {
            ObstructionVerdict::ObstructedByHomology => homology += 1,
            ObstructionVerdict::ObstructedByKey => key += 1,
            ObstructionVerdict::ObstructedByDedekindCongruence => congruence += 1,
            _ => other += 1,
        }
    }
    writeln!(
        out,
        "by rule: homology {homology}, key {key}, congruence {congruence}, other {other}"
    )?;
    if r.surviving.is_empty() {
        writeln!(out, "all obstructed: true")?;
    } else {
        let list: Vec<String> = r.surviving.iter().map(|l| l.to_string()).collect();
        writeln!(
            out,
            "all obstructed: false (surviving l: {})",
            list.join(", ")
        )?;
    }
    Ok(())
}

fn write_certificate_text<O: Write>(out: &mut O, c: &Certificate) -> Result<()> {
    let class = match c.class {
        ManifoldClass::Reducible => "reducible L-space",
        ManifoldClass::Lens => "lens space",
        ManifoldClass::FinitePi1 => "finite fundamental group",
        ManifoldClass::SmallSFSLSpace => "small Seifert fibered L-space",
    };
    writeln!(out, "class: {class}")?;
    writeln!(
        out,
        "p = {} (d = {}, p' = {}), q = {}",
        c.p, c.d, c.p_prime, c.q
    )?;
    writeln!(out, "slope distances checked: 1..={}", c.delta_bound)?;
    writeln!(out, "cases:")?;
    for row in &c.cases {
        let outcome = match &row.case {
            CaseOutcome::Eliminated { reason } => {
                format!("eliminated [{reason}] -> {}", verdict_name(&row.verdict))
            }
            CaseOutcome::Survives { witness } => format!("survives: {witness}"),
            CaseOutcome::NotApplicable { detail } => format!("not applicable: {detail}"),
        };
        writeln!(out, "  n = {} (c = {}): {outcome}", row.n, row.c)?;
    }
    if c.issued {
        writeln!(out, "certificate issued: every case is eliminated")?;
    } else {
        let list: Vec<String> = c.surviving.iter().map(|n| n.to_string()).collect();
        writeln!(
            out,
            "certificate refused: surviving distances n = {}",
            list.join(", ")
        )?;
    }
    Ok(())
}

fn write_cosmetic_text<O: Write>(out: &mut O, r: &CosmeticReport) -> Result<()> {
    let verdict = match r.verdict {
        CosmeticVerdict::ConfirmedByThm110 => "ConfirmedByThm110",
        CosmeticVerdict::ConfirmedByCor111 => "ConfirmedByCor111",
        CosmeticVerdict::Open => "Open",
    };
    writeln!(out, "{} (det {}): {verdict}", r.name, r.det)?;
    for reason in &r.reasons {
        writeln!(out, "  {reason}")?;
    }
    Ok(())
}

fn write_cor_ten_text<O: Write>(out: &mut O, report: &CorTenReport) -> Result<()> {
    for r in &report.reports {
        write_cosmetic_text(out, r)?;
    }
    writeln!(out, "resolved: {}", report.partition.resolved.join(", "))?;
    writeln!(out, "open: {}", report.partition.open.join(", "))?;
    Ok(())
}

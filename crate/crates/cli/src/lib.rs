//! Command implementations behind the `hooktab` binary. Each command returns
//! its output text and exit code so it can be driven without a process.

pub mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hooktab::qseries::{schur_by_enumeration, schur_hcf};
use hooktab::verifier::{self, run_check, verify_frame, Check, CheckTally};
use hooktab::{Cell, Frame, FramedPartition, NatMultiset, Partition, TableauKind, VerifyReport};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Largest frame side swept by `verify --all` without `--large`.
pub const SWEEP_SIDE: u32 = 8;
/// Largest frame side for tableau-enumerating checks in a sweep without `--large`.
pub const TABLEAU_SWEEP_SIDE: u32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "hooktab",
    version,
    about = "Hook/distance tableaux and their multisets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a tableau filling the whole frame.
    Render(RenderArgs),
    /// Check the multiset identity and its supporting lemmas.
    Verify(VerifyArgs),
    /// Principal specialization of a Schur polynomial.
    Schur(SchurArgs),
    /// Complement of a partition in its frame, rotated half a turn.
    Complement(ComplementArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    HookDistance,
    DistanceHook,
    HookHook,
}

impl From<Which> for TableauKind {
    fn from(w: Which) -> Self {
        match w {
            Which::HookDistance => TableauKind::HookDistance,
            Which::DistanceHook => TableauKind::DistanceHook,
            Which::HookHook => TableauKind::HookHook,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Ascii,
    Latex,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Ascii,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Method {
    Enum,
    #[default]
    Hcf,
    Both,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Comma-separated parts; "" for the empty partition.
    #[arg(short, long, value_parser = parse_partition, allow_hyphen_values = true)]
    pub partition: Partition,
    /// Frame as RxC.
    #[arg(short, long, value_parser = parse_frame)]
    pub frame: Frame,
    #[arg(long, value_enum, default_value_t = Which::HookDistance)]
    pub which: Which,
    /// Box added for the hook-hook tableau, as ROW,COL.
    #[arg(long, value_parser = parse_cell, required_if_eq("which", "hook-hook"))]
    pub addbox: Option<Cell>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(short, long, value_parser = parse_partition, required_unless_present = "all", conflicts_with = "all", allow_hyphen_values = true)]
    pub partition: Option<Partition>,
    /// Sweep every partition that fits the frame.
    #[arg(long)]
    pub all: bool,
    #[arg(short, long, value_parser = parse_frame)]
    pub frame: Frame,
    /// Comma-separated checks: theorem, lemma2, inductive, bijection, hcf, schur.
    #[arg(long, value_delimiter = ',', default_value = "theorem")]
    pub checks: Vec<Check>,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
    /// Worker threads for sweeps; 0 or unset uses every processor.
    #[arg(long, env = "HOOKTAB_JOBS")]
    pub jobs: Option<usize>,
    /// Allow sweeps beyond the default frame sizes.
    #[arg(long)]
    pub large: bool,
}

#[derive(Debug, Args)]
pub struct SchurArgs {
    #[arg(short, long, value_parser = parse_partition, allow_hyphen_values = true)]
    pub partition: Partition,
    /// Number of variables.
    #[arg(short)]
    pub r: u32,
    #[arg(long, value_enum, default_value_t)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct ComplementArgs {
    #[arg(short, long, value_parser = parse_partition, allow_hyphen_values = true)]
    pub partition: Partition,
    #[arg(short, long, value_parser = parse_frame)]
    pub frame: Frame,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: hooktab::Error| e.to_string())
}

fn parse_frame(s: &str) -> Result<Frame, String> {
    s.parse().map_err(|e: hooktab::Error| e.to_string())
}

fn parse_cell(s: &str) -> Result<Cell, String> {
    let bad = || format!("expected ROW,COL, got {s:?}");
    let (a, b) = s
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split_once(',')
        .ok_or_else(bad)?;
    let row = a.trim().parse().map_err(|_| bad())?;
    let col = b.trim().parse().map_err(|_| bad())?;
    Ok(Cell::new(row, col))
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn with_code(stdout: String, code: i32) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn domain(msg: impl std::fmt::Display) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_DOMAIN,
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Render(a) => cmd_render(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Schur(a) => cmd_schur(&a),
        Command::Complement(a) => cmd_complement(&a),
    }
}

fn framed(partition: &Partition, frame: Frame) -> Result<FramedPartition, Outcome> {
    FramedPartition::new(partition.clone(), frame).map_err(Outcome::domain)
}

pub fn cmd_render(a: &RenderArgs) -> Outcome {
    let fp = match framed(&a.partition, a.frame) {
        Ok(fp) => fp,
        Err(o) => return o,
    };
    let kind = TableauKind::from(a.which);
    let t = match fp.tableau(kind, a.addbox) {
        Ok(t) => t,
        Err(e) => return Outcome::domain(e),
    };
    Outcome::ok(match a.format {
        OutputFormat::Ascii => render::ascii(&t),
        OutputFormat::Latex => render::latex(&t, &a.partition, kind),
        OutputFormat::Json => render::json(&t, &a.partition, kind),
    })
}

fn dedup_checks(checks: &[Check]) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for &c in checks {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn report_json(r: &VerifyReport) -> Value {
    json!({ "subject": r.subject, "passed": r.passed, "details": r.details })
}

fn multiset_json(m: &NatMultiset) -> Value {
    Value::Array(m.iter().map(|(v, n)| json!([v, n])).collect())
}

fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let checks = dedup_checks(&a.checks);
    match &a.partition {
        Some(p) => verify_one(p, a.frame, &checks, a.format),
        None => verify_all(a, &checks),
    }
}

fn verify_one(p: &Partition, frame: Frame, checks: &[Check], format: ReportFormat) -> Outcome {
    let fp = match framed(p, frame) {
        Ok(fp) => fp,
        Err(o) => return o,
    };
    let results: Vec<(Check, Vec<VerifyReport>)> =
        checks.iter().map(|&c| (c, run_check(&fp, c))).collect();
    let passed = results.iter().all(|(_, rs)| rs.iter().all(|r| r.passed));
    let regions = verifier::region_multisets(&fp);
    let shared = regions.hook_distance();
    let shared = (shared == regions.distance_hook()).then_some(shared);

    let out = match format {
        ReportFormat::Ascii => {
            let mut out = String::new();
            for (check, reports) in &results {
                if reports.is_empty() {
                    out.push_str(&format!("{check} for ({p}) in {frame}: no addable boxes\n"));
                }
                for r in reports {
                    out.push_str(&format!("{r}\n"));
                }
            }
            if let (true, Some(m)) = (passed, &shared) {
                out.push_str(&format!("shared multiset: {m}\n"));
                let max = m.max().expect("frames are nonempty");
                out.push_str(&format!(
                    "entries: {}, max {max} x{}\n",
                    m.len(),
                    m.count(max)
                ));
            }
            out.push_str(if passed { "PASS\n" } else { "FAIL\n" });
            out
        }
        ReportFormat::Json => {
            let checks: Vec<Value> = results
                .iter()
                .map(|(c, rs)| json!({ "check": c.name(), "reports": rs.iter().map(report_json).collect::<Vec<_>>() }))
                .collect();
            let shared = match (passed, &shared) {
                (true, Some(m)) => multiset_json(m),
                _ => Value::Null,
            };
            to_line(&json!({
                "frame": render::FrameJson::from(frame),
                "partition": p.parts(),
                "passed": passed,
                "checks": checks,
                "shared_multiset": shared,
            }))
        }
    };
    Outcome::with_code(out, if passed { EXIT_OK } else { EXIT_FAILED })
}

fn sweep_limit_error(a: &VerifyArgs, checks: &[Check]) -> Option<String> {
    let side = a.frame.rows().max(a.frame.cols());
    if a.large {
        return None;
    }
    if side > SWEEP_SIDE {
        return Some(format!(
            "sweeps beyond {SWEEP_SIDE}x{SWEEP_SIDE} need --large"
        ));
    }
    let heavy: Vec<&str> = checks
        .iter()
        .filter(|c| c.enumerates_tableaux())
        .map(|c| c.name())
        .collect();
    if side > TABLEAU_SWEEP_SIDE && !heavy.is_empty() {
        return Some(format!(
            "{} sweeps beyond {TABLEAU_SWEEP_SIDE}x{TABLEAU_SWEEP_SIDE} need --large",
            heavy.join(", ")
        ));
    }
    None
}

fn verify_all(a: &VerifyArgs, checks: &[Check]) -> Outcome {
    if let Some(msg) = sweep_limit_error(a, checks) {
        return Outcome::domain(msg);
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => return Outcome::domain(e),
    };
    let report = pool.install(|| verify_frame(a.frame, checks));
    let passed = report.passed();
    let ordered: Vec<(Check, &CheckTally)> =
        checks.iter().map(|c| (*c, &report.tallies[c])).collect();

    let out = match a.format {
        ReportFormat::Ascii => {
            let mut out = format!("frame {}: {} partitions\n", report.frame, report.partitions);
            for (check, t) in &ordered {
                let verdict = if t.all_passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!("{check}: {}/{} {verdict}\n", t.passed, t.run));
                if let Some(f) = &t.first_failure {
                    out.push_str(&format!(
                        "  first failure: {}\n",
                        f.to_string().replace('\n', "\n  ")
                    ));
                }
            }
            out.push_str(if passed { "PASS\n" } else { "FAIL\n" });
            out
        }
        ReportFormat::Json => {
            let checks: Vec<Value> = ordered
                .iter()
                .map(|(c, t)| {
                    json!({
                        "check": c.name(),
                        "run": t.run,
                        "passed": t.passed,
                        "first_failure": t.first_failure.as_ref().map(report_json),
                    })
                })
                .collect();
            to_line(&json!({
                "frame": render::FrameJson::from(report.frame),
                "partitions": report.partitions,
                "passed": passed,
                "checks": checks,
            }))
        }
    };
    Outcome::with_code(out, if passed { EXIT_OK } else { EXIT_FAILED })
}

pub fn cmd_schur(a: &SchurArgs) -> Outcome {
    let by_enum = matches!(a.method, Method::Enum | Method::Both)
        .then(|| schur_by_enumeration(&a.partition, a.r));
    let by_hcf = match a.method {
        Method::Enum => None,
        _ => match schur_hcf(&a.partition, a.r) {
            Ok(p) => Some(p),
            Err(e) => return Outcome::domain(e),
        },
    };
    let matched = match (&by_enum, &by_hcf) {
        (Some(x), Some(y)) => Some(x == y),
        _ => None,
    };
    let out = match a.format {
        ReportFormat::Ascii => match (&by_enum, &by_hcf, matched) {
            (Some(x), Some(y), Some(m)) => {
                format!(
                    "enum: {x}\nhcf: {y}\n{}\n",
                    if m { "MATCH" } else { "MISMATCH" }
                )
            }
            (Some(x), None, _) | (None, Some(x), _) => format!("{x}\n"),
            _ => unreachable!("at least one method runs"),
        },
        ReportFormat::Json => {
            let mut v = json!({ "partition": a.partition.parts(), "r": a.r });
            if let Some(x) = &by_enum {
                v["enum"] = json!(x.to_string());
            }
            if let Some(y) = &by_hcf {
                v["hcf"] = json!(y.to_string());
            }
            if let Some(m) = matched {
                v["match"] = json!(m);
            }
            to_line(&v)
        }
    };
    Outcome::with_code(
        out,
        if matched == Some(false) {
            EXIT_FAILED
        } else {
            EXIT_OK
        },
    )
}

pub fn cmd_complement(a: &ComplementArgs) -> Outcome {
    match framed(&a.partition, a.frame) {
        Ok(fp) => Outcome::ok(format!("{}\n", fp.complement().partition())),
        Err(o) => o,
    }
}

//! Argument definitions and the command implementations.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weaving_core::combinat::{whitney_c_chebyshev_row, CoeffRow};
use weaving_core::weaving::{
    alexander_weaving, alexander_weaving_division, alexander_weaving_recurrence_rows, det_weaving,
    jones_weaving, jones_weaving_coeffs,
};
use weaving_core::zeros::{cross_validate_zeros_report, hoste_check, zeros_closed_form};
use weaving_core::{
    alexander, determinant, jones, jones_preferred, trapezoid_check, AlexanderRoute, BigInt, BraidWord3, Error,
    Variable, WeavingSpec,
};

use crate::record::{Format, Kind, OutputRecord};
use crate::verify::{run_verify, Suite, VerifyConfig, DEFAULT_TOL};

#[derive(Debug, Parser)]
#[command(name = "weave", version, about = "Alexander and Jones polynomials of closed 3-braids and weaving links")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander coefficients of W(3,n,m) in s = -t.
    Alexander(AlexanderArgs),
    /// Jones polynomial of W(3,n,m) in s = -t.
    Jones(JonesArgs),
    /// An invariant of the closure of an arbitrary 3-braid word.
    Braid(BraidArgs),
    /// Determinant of W(3,n,m) or of a braid closure.
    Det(DetArgs),
    /// Coefficient triangles, one CSV row per n.
    Table(TableArgs),
    /// Closed-form zeros of the Alexander polynomial of W(3,n).
    Zeros(ZerosArgs),
    /// Run the identity battery.
    Verify(VerifyArgs),
}

fn positive() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

fn parse_route(s: &str) -> Result<AlexanderRoute, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_word(s: &str) -> Result<BraidWord3, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("tolerance must be a positive number (got {s})"))
    }
}

#[derive(Debug, Args)]
pub struct AlexanderArgs {
    #[arg(long, value_parser = positive())]
    pub n: u32,
    #[arg(long, value_parser = positive(), default_value_t = 1)]
    pub m: u32,
    /// explicit, division, recurrence or oracle (oracle is the only route for m > 1).
    #[arg(long, value_parser = parse_route)]
    pub route: Option<AlexanderRoute>,
    /// Compute every available route and fail on disagreement.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Args)]
pub struct JonesArgs {
    #[arg(long, value_parser = positive())]
    pub n: u32,
    #[arg(long, value_parser = positive(), default_value_t = 1)]
    pub m: u32,
    /// Compare against the Burau-matrix computation.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Invariant {
    Alexander,
    Jones,
    Det,
}

#[derive(Debug, Args)]
pub struct BraidArgs {
    /// Space-separated signed generator indices, e.g. "1 -2 1 -2".
    #[arg(long, value_parser = parse_word, allow_hyphen_values = true)]
    pub word: BraidWord3,
    #[arg(long, value_enum, default_value_t = Invariant::Alexander)]
    pub invariant: Invariant,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[arg(long, value_parser = positive(), required_unless_present = "word", conflicts_with = "word")]
    pub n: Option<u32>,
    #[arg(long, value_parser = positive(), conflicts_with = "word")]
    pub m: Option<u32>,
    #[arg(long, value_parser = parse_word, allow_hyphen_values = true)]
    pub word: Option<BraidWord3>,
    /// With --n, compare the closed form against the braid closure.
    #[arg(long)]
    pub check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Alexander,
    Whitney,
    Jones,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = Family::Alexander)]
    pub family: Family,
    #[arg(long, value_parser = positive())]
    pub max_n: u32,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, value_parser = positive())]
    pub n: u32,
    #[arg(long, value_parser = parse_tol, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteSelector {
    All,
    Trace,
    Jones,
    Alexander,
    Whitney,
    Determinant,
    Zeros,
    Shape,
    Series,
}

impl SuiteSelector {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteSelector::All => Suite::ALL.to_vec(),
            SuiteSelector::Trace => vec![Suite::Trace],
            SuiteSelector::Jones => vec![Suite::Jones],
            SuiteSelector::Alexander => vec![Suite::Alexander],
            SuiteSelector::Whitney => vec![Suite::Whitney],
            SuiteSelector::Determinant => vec![Suite::Determinant],
            SuiteSelector::Zeros => vec![Suite::Zeros],
            SuiteSelector::Shape => vec![Suite::Shape],
            SuiteSelector::Series => vec![Suite::Series],
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteSelector::All)]
    pub suite: SuiteSelector,
    #[arg(long, value_parser = positive(), default_value_t = 30)]
    pub max_n: u32,
    #[arg(long, value_parser = positive(), default_value_t = 4)]
    pub max_m: u32,
}

/// How a command ended, short of a usage error.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub records: Vec<OutputRecord>,
    /// A `--check`, cross-validation or verification failed.
    pub failed: bool,
}

impl Outcome {
    fn ok(record: OutputRecord) -> Self {
        Outcome { records: vec![record], failed: false }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            1
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments; exit 2.
    Usage(String),
    /// A computation disagreed with itself; exit 1.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::InvalidGenerator(_) | Error::Parse(_) | Error::ZeroExponent => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Failure(other.to_string()),
        }
    }
}

pub type CmdResult = Result<Outcome, CliError>;

fn row_record(kind: Kind, variable: Variable, offset: i64, row: &CoeffRow) -> OutputRecord {
    OutputRecord::new(kind, variable, offset, &row.values)
        .with("polynomial", row.to_poly(offset).display_in(variable))
}

fn shape_extras(row: &CoeffRow) -> Value {
    let rep = trapezoid_check(row);
    json!({
        "positive": rep.is_positive,
        "trapezoidal": rep.is_trapezoidal,
        "plateau": rep.plateau,
        "r": rep.r,
        "log_concave": rep.is_log_concave,
    })
}

pub fn cmd_alexander(args: &AlexanderArgs) -> CmdResult {
    let spec = WeavingSpec::new(args.n, args.m)?;
    let route = args.route.unwrap_or(if args.m == 1 { AlexanderRoute::Explicit } else { AlexanderRoute::Oracle });
    if !route.supports(args.m) {
        return Err(CliError::Usage(format!("route {route} is only defined for m = 1; use --route oracle")));
    }
    let row = alexander_weaving(spec, route)?;
    let mut record = row_record(Kind::Alexander, Variable::S, 0, &row)
        .with("n", args.n)
        .with("m", args.m)
        .with("route", route.name())
        .with("shape", shape_extras(&row));
    let mut failed = false;
    if args.check {
        let mut checked = Vec::new();
        let mut mismatches = Vec::new();
        for other in AlexanderRoute::ALL.into_iter().filter(|r| r.supports(args.m)) {
            let other_row = alexander_weaving(spec, other)?;
            checked.push(other.name());
            if other_row.values != row.values {
                mismatches.push(other.name());
            }
        }
        failed = !mismatches.is_empty();
        record = record.with("check", json!({ "routes": checked, "mismatches": mismatches, "passed": !failed }));
    }
    Ok(Outcome { records: vec![record], failed })
}

pub fn cmd_jones(args: &JonesArgs) -> CmdResult {
    let spec = WeavingSpec::new(args.n, args.m)?;
    let poly = jones_weaving(spec);
    let mut record = OutputRecord::from_poly(Kind::Jones, Variable::S, &poly).with("n", args.n).with("m", args.m);
    let mut failed = false;
    if args.check {
        let oracle = jones(&spec.braid_word()).to_s()?;
        failed = oracle.poly != poly;
        record = record.with("check", json!({ "oracle": oracle.poly.display_in(Variable::S), "passed": !failed }));
    }
    Ok(Outcome { records: vec![record], failed })
}

pub fn cmd_braid(args: &BraidArgs) -> CmdResult {
    let w = &args.word;
    let record = match args.invariant {
        Invariant::Alexander => {
            let a = alexander(w)?;
            OutputRecord::from_poly(Kind::Alexander, a.variable, &a.poly).with("normalized", a.normalized)
        }
        Invariant::Jones => {
            let v = jones_preferred(w);
            OutputRecord::from_poly(Kind::Jones, v.variable, &v.poly)
        }
        Invariant::Det => {
            let d = determinant(w)?;
            OutputRecord::new(Kind::Determinant, Variable::T, 0, std::slice::from_ref(&d)).with("value", d.to_string())
        }
    };
    Ok(Outcome::ok(record.with("word", w.to_string()).with("exponent_sum", w.exponent_sum())))
}

pub fn cmd_det(args: &DetArgs) -> CmdResult {
    if let Some(w) = &args.word {
        let d = determinant(w)?;
        let record = OutputRecord::new(Kind::Determinant, Variable::T, 0, std::slice::from_ref(&d))
            .with("value", d.to_string())
            .with("word", w.to_string())
            .with("route", "braid");
        return Ok(Outcome::ok(record));
    }
    let n = args.n.ok_or_else(|| CliError::Usage("either --n or --word is required".into()))?;
    let m = args.m.unwrap_or(1);
    let spec = WeavingSpec::new(n, m)?;
    let d = det_weaving(spec);
    let mut record = OutputRecord::new(Kind::Determinant, Variable::T, 0, std::slice::from_ref(&d))
        .with("value", d.to_string())
        .with("n", n)
        .with("m", m)
        .with("route", "lucas");
    let mut failed = false;
    if args.check {
        let oracle = determinant(&spec.braid_word())?;
        failed = oracle != d;
        record = record.with("check", json!({ "oracle": oracle.to_string(), "passed": !failed }));
    }
    Ok(Outcome { records: vec![record], failed })
}

pub fn cmd_table(args: &TableArgs) -> CmdResult {
    let family = match args.family {
        Family::Alexander => "alexander",
        Family::Whitney => "whitney",
        Family::Jones => "jones",
    };
    let tag = |r: OutputRecord, n: u32| r.with("n", n).with("family", family);
    let records = match args.family {
        Family::Alexander => alexander_weaving_recurrence_rows(args.max_n)
            .iter()
            .map(|row| tag(OutputRecord::new(Kind::Table, Variable::S, 0, &row.values), row.n))
            .collect(),
        Family::Whitney => (0..=args.max_n)
            .map(|n| tag(OutputRecord::new(Kind::Table, Variable::S, 0, &whitney_c_chebyshev_row(n).values), n))
            .collect(),
        Family::Jones => (1..=args.max_n)
            .map(|n| {
                let row = jones_weaving_coeffs(n)?;
                Ok(tag(OutputRecord::new(Kind::Table, Variable::S, -(n as i64), &row.values), n))
            })
            .collect::<Result<Vec<_>, CliError>>()?,
    };
    Ok(Outcome { records, failed: false })
}

pub fn cmd_zeros(args: &ZerosArgs) -> CmdResult {
    let n = args.n;
    let zs = zeros_closed_form(n)?;
    let hoste = hoste_check(&zs, args.tol)?;
    let report = cross_validate_zeros_report(n, args.tol)?;
    let t_poly = alexander_weaving_division(n)?.to_poly(0).substitute_negate();

    let zeros: Vec<Value> = zs
        .entries
        .iter()
        .zip(&report.residuals)
        .map(|(e, res)| {
            json!({
                "k": e.k,
                "branch": e.branch.to_string(),
                "re": e.value.re,
                "im": e.value.im,
                "real": e.is_real,
                "modulus": e.value.norm(),
                "residual": res,
            })
        })
        .collect();
    let unit_modulus = zs.entries.iter().filter(|e| !e.is_real).all(|e| (e.value.norm() - 1.0).abs() < args.tol);
    let clusters: Vec<Value> = report
        .clusters
        .iter()
        .map(|c| {
            json!({
                "re": c.value.re,
                "im": c.value.im,
                "multiplicity": c.multiplicity,
                "max_deviation": c.max_deviation,
                "radius": c.radius,
            })
        })
        .collect();
    let record = OutputRecord::from_poly(Kind::Zeros, Variable::T, &t_poly)
        .with("n", n)
        .with("tol", args.tol)
        .with("zeros", zeros)
        .with("hoste", hoste)
        .with("unit_modulus", unit_modulus)
        .with(
            "cross_validation",
            json!({
                "passed": report.passed,
                "residuals_ok": report.residuals_ok,
                "residual_scale": report.residual_scale,
                "clusters_ok": report.clusters_ok,
                "total_multiplicity": report.total_multiplicity,
                "degree": report.degree,
                "clusters": clusters,
            }),
        );
    Ok(Outcome { records: vec![record], failed: !report.passed })
}

/// `WEAVE_THREADS`; unset, empty, unparsable or 0 means the default pool.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("WEAVE_THREADS").ok().and_then(|v| v.trim().parse().ok()).filter(|&t| t > 0)
}

pub fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let mut config = VerifyConfig::new(args.max_n, args.max_m, args.suite.suites());
    config.threads = threads_from_env();
    run_verify_config(&config)
}

pub fn run_verify_config(config: &VerifyConfig) -> CmdResult {
    let report = run_verify(config);
    Ok(Outcome { records: vec![report.to_record(config)], failed: !report.passed })
}

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Alexander(a) => cmd_alexander(a),
        Command::Jones(a) => cmd_jones(a),
        Command::Braid(a) => cmd_braid(a),
        Command::Det(a) => cmd_det(a),
        Command::Table(a) => cmd_table(a),
        Command::Zeros(a) => cmd_zeros(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// The first coefficient row of an outcome as integers, for tests and scripting.
pub fn first_row(outcome: &Outcome) -> Option<Vec<BigInt>> {
    outcome.records.first().and_then(|r| r.coefficient_values().ok())
}

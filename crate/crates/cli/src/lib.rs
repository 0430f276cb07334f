//! The `firlab` command line: argument parsing, dispatch and report
//! rendering. [`run`] never exits the process, so tests can drive it directly.

mod commands;
mod suite;

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use firlab::{Error, SkewRing, TwistedField};
use serde_json::{json, Value};

/// Bumped whenever a field is renamed or removed from any JSON report.
pub const SCHEMA_VERSION: u32 = 1;

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "firlab", version, about = "Factorization in skew polynomial rings and 2-firs")]
pub struct Cli {
    /// Coefficient field: gf(p,e[,frob=k][,der=c]), funfield(p) or rationals.
    #[arg(long, global = true, default_value = "gf(2,2)")]
    pub field: String,
    /// Largest degree any enumeration may reach.
    #[arg(long, global = true, default_value_t = 6, value_parser = positive)]
    pub max_degree: usize,
    /// Degree bound for idealizer, two-sided-sum and right-algebraic searches.
    #[arg(long, global = true, default_value_t = 4, value_parser = positive)]
    pub bound: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random instances per suite run.
    #[arg(long, global = true, default_value_t = 100, value_parser = positive)]
    pub samples: usize,
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for batch commands (default: all cores).
    #[arg(long, global = true, value_parser = positive)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product a·b.
    Mul { a: String, b: String },
    /// Right division: f = q·g + r.
    Divr { f: String, g: String },
    /// Left division: f = g·q + r.
    Divl { f: String, g: String },
    /// Monic d with Rd = Ra + Rb, and a Bezout pair.
    Rgcd { a: String, b: String },
    /// Monic generator of Ra ∩ Rb.
    Llcm { a: String, b: String },
    /// The conjugate a^b.
    Conj { a: String, b: String },
    /// A factorization into monic atoms.
    Factor { f: String },
    /// Every monic atom of the given degree.
    Atoms {
        #[arg(default_value_t = 1)]
        degree: usize,
    },
    /// Decide similarity, with a witness.
    Similar { f: String, g: String },
    /// The eigenring End(R/Rp) of an atom.
    Eigenring { p: String },
    /// Dimension of the kernel of x + Rp ↦ fx + Rp over the eigenring.
    LambdaDim { f: String, p: String },
    /// The atomic right divisors of f.
    Vset { f: String },
    /// Rank of an algebraic set of atoms.
    Rank {
        #[arg(required = true)]
        elems: Vec<String>,
    },
    /// A greedy basis of an algebraic set.
    Basis {
        #[arg(required = true)]
        elems: Vec<String>,
    },
    /// The closure of an algebraic set.
    Closure {
        #[arg(required = true)]
        elems: Vec<String>,
    },
    /// Similarity classes of an algebraic set with their ranks.
    Classes {
        #[arg(required = true)]
        elems: Vec<String>,
    },
    /// Rank identities for two comma-separated sets of atoms.
    CheckRankTheorems { delta: String, gamma: String },
    /// All characterizations of full reducibility.
    Wedderburn { f: String },
    /// Check the characterizations on every monic element of one degree.
    WedderburnSuite {
        #[arg(long, default_value_t = 2, value_parser = positive)]
        degree: usize,
    },
    /// Characterizations of the product ab being fully reducible.
    ProductCheck { a: String, b: String },
    /// Sum of the principal ideals generated by two series.
    SeriesSum { a: String, b: String },
    /// Intersection of the principal ideals generated by two series.
    SeriesIntersect { a: String, b: String },
    /// The factorization x = 2^n · (x/2^n).
    SeriesWitness { n: u32 },
    /// Seeded random checks of every identity, aggregated.
    Suite,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Mul { .. } => "mul",
            Command::Divr { .. } => "divr",
            Command::Divl { .. } => "divl",
            Command::Rgcd { .. } => "rgcd",
            Command::Llcm { .. } => "llcm",
            Command::Conj { .. } => "conj",
            Command::Factor { .. } => "factor",
            Command::Atoms { .. } => "atoms",
            Command::Similar { .. } => "similar",
            Command::Eigenring { .. } => "eigenring",
            Command::LambdaDim { .. } => "lambda-dim",
            Command::Vset { .. } => "vset",
            Command::Rank { .. } => "rank",
            Command::Basis { .. } => "basis",
            Command::Closure { .. } => "closure",
            Command::Classes { .. } => "classes",
            Command::CheckRankTheorems { .. } => "check-rank-theorems",
            Command::Wedderburn { .. } => "wedderburn",
            Command::WedderburnSuite { .. } => "wedderburn-suite",
            Command::ProductCheck { .. } => "product-check",
            Command::SeriesSum { .. } => "series-sum",
            Command::SeriesIntersect { .. } => "series-intersect",
            Command::SeriesWitness { .. } => "series-witness",
            Command::Suite => "suite",
        }
    }
}

/// What a command computed: the text rendering, the JSON payload and
/// whether every identity it checked held.
pub(crate) struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    pub fn ok(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub(crate) struct Ctx<'a> {
    pub cli: &'a Cli,
    pub ring: SkewRing,
}

/// Parse `argv` (including the program name) and execute it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), rendered) } else { (rendered, String::new()) };
            return Outcome { code, stdout, stderr };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let name = cli.command.name();
    let result = cli
        .field
        .parse::<TwistedField>()
        .map(|f| SkewRing::new(f).with_max_degree(cli.max_degree))
        .and_then(|ring| commands::dispatch(&Ctx { cli, ring }));
    match result {
        Ok(report) => {
            let stdout = if cli.json {
                let status = if report.ok { "ok" } else { "violation" };
                line(json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": name,
                    "field": cli.field,
                    "status": status,
                    "result": report.json,
                }))
            } else {
                report.text
            };
            Outcome {
                code: if report.ok { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            // internal inconsistencies are theorem violations, everything
            // else is bad input
            let code = if matches!(e, Error::Invariant(_)) { 1 } else { 2 };
            if cli.json {
                Outcome {
                    code,
                    stdout: line(json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": name,
                        "field": cli.field,
                        "status": "error",
                        "error": error_json(&e),
                    })),
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                }
            }
        }
    }
}

fn error_json(e: &Error) -> Value {
    match e {
        Error::Parse { message, position, token } => json!({
            "message": e.to_string(),
            "reason": message,
            "position": position,
            "token": token,
        }),
        _ => json!({ "message": e.to_string() }),
    }
}

fn line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

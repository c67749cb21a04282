mod commands;
mod input;

use std::fmt;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use fliess_core::verify::DEFAULT_SEED;
use serde_json::{json, Value};

/// Exact computations with truncated Chen-Fliess series, the affine
/// feedback group and its Hopf algebra of coordinate maps.
///
/// Series use the grammar `1 - x1 + 3*x1x1` (`e` is the empty word), pairs
/// are written `(left, right)`. Any structured argument may instead be inline
/// JSON or `@file`.
#[derive(Parser)]
#[command(name = "fliess", version)]
struct Cli {
    /// Truncation degree: words longer than N are dropped.
    #[arg(long, global = true, default_value_t = 6, value_name = "N")]
    trunc: usize,

    /// Emit `{"ok", "result", "diagnostics"}` JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shuffle product `a ш b`.
    Shuffle { a: String, b: String },
    /// Shuffle inverse of a series with nonzero constant term.
    ShuffleInv { c: String },
    /// Unshuffle coproduct of a word.
    Unshuffle { word: String },
    /// Mixed composition `c ∘̃ d` of a series with a pair.
    MixedCompose { c: String, d: String },
    /// Cascade composition `c ∘ d` of two series.
    Compose { c: String, d: String },
    /// Group product of two pairs.
    GroupCompose { c: String, d: String },
    /// Group inverse of a pair.
    Invert {
        c: String,
        #[arg(long, value_enum, default_value_t = Method::FixedPoint)]
        method: Method,
    },
    /// Feedback product `c @ d`.
    Feedback { c: String, d: String },
    /// Antipode of a coordinate map such as `a:x0` or `b[x1x1]`.
    Antipode {
        #[arg(long)]
        coord: String,
    },
    /// Coproducts of a coordinate map.
    Coproduct {
        #[arg(long, value_enum, default_value_t = Which::Full)]
        which: Which,
        #[arg(long)]
        coord: String,
        /// Kind of the right legs for `--which shuffle`; defaults to the
        /// kind of the coordinate.
        #[arg(long, value_enum)]
        right_kind: Option<KindArg>,
    },
    /// Graded dimensions of the Hopf algebra.
    Hilbert {
        #[arg(long, default_value_t = 9)]
        max_degree: usize,
    },
    /// Relative degree of a series.
    Reldeg { c: String },
    /// Linearizing group element, its inverse and the normal form.
    Linearize { c: String },
    /// Lie bracket `[v1, v2] = v2 • v1 - v1 • v2` of tangent vectors.
    Bracket { v1: String, v2: String },
    /// Checks the right pre-Lie identity on three tangent vectors.
    PrelieCheck { v1: String, v2: String, v3: String },
    /// Evaluates a Fliess operator on a piecewise-constant input.
    #[command(group(ArgGroup::new("target").required(true).args(["series", "pair", "word"])))]
    Simulate {
        #[arg(long)]
        series: Option<String>,
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        word: Option<String>,
        /// Signal JSON, e.g. `{"breakpoints":["0","1"],"values":["1"]}`.
        #[arg(long)]
        signal: String,
        /// Evaluation time; defaults to the end of the signal.
        #[arg(long)]
        at: Option<String>,
    },
    /// Compares a sampled simulation of `F_c ∘ F_d` with `F_{c ∘̃ d}`, or
    /// a closed loop with `F_{c @ d}` under `--feedback`.
    OracleCheck {
        c: String,
        d: String,
        #[arg(long)]
        signal: String,
        #[arg(long)]
        at: Option<String>,
        #[arg(long, value_delimiter = ',', default_value = "64,128,256,512")]
        refinement: Vec<usize>,
        /// Read `d` as a feedback series and simulate the closed loop.
        #[arg(long)]
        feedback: bool,
        /// Picard sweeps for `--feedback`; defaults to N + 2.
        #[arg(long)]
        iterations: Option<usize>,
        /// Fail (exit 4) when the finest residual exceeds this rational.
        #[arg(long)]
        tolerance: Option<String>,
    },
    /// Runs the acceptance suite.
    Check {
        /// Run a single criterion `1..=8`.
        #[arg(long)]
        criterion: Option<u8>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Include wall-clock times, which makes output vary between runs.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    FixedPoint,
    Antipode,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Shuffle,
    Tilde,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    A,
    B,
}

/// What a verb produced: a text rendering, a JSON value, and whether a
/// property it checked failed.
pub struct Outcome {
    text: String,
    result: Value,
    diagnostics: Vec<String>,
    property_failed: bool,
}

impl Outcome {
    fn new(text: impl Into<String>, result: Value) -> Self {
        Outcome {
            text: text.into(),
            result,
            diagnostics: vec![],
            property_failed: false,
        }
    }

    fn diagnostic(mut self, msg: impl Into<String>) -> Self {
        self.diagnostics.push(msg.into());
        self
    }

    fn failed_if(mut self, failed: bool) -> Self {
        self.property_failed = failed;
        self
    }
}

#[derive(Debug)]
pub struct CliError {
    code: &'static str,
    message: String,
    exit: u8,
}

impl CliError {
    fn io(path: &str, e: std::io::Error) -> Self {
        CliError { code: "io", message: format!("{path}: {e}"), exit: 2 }
    }

    fn json(e: serde_json::Error) -> Self {
        CliError { code: "parse", message: format!("invalid JSON: {e}"), exit: 2 }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError { code: "usage", message: message.into(), exit: 2 }
    }
}

impl From<fliess_core::Error> for CliError {
    fn from(e: fliess_core::Error) -> Self {
        CliError {
            code: e.code(),
            message: e.to_string(),
            exit: if e.is_parse() { 2 } else { 3 },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match commands::run(cli.command, cli.trunc) {
        Ok(out) => {
            if json {
                let doc = json!({
                    "ok": !out.property_failed,
                    "result": out.result,
                    "diagnostics": out.diagnostics,
                });
                println!("{doc}");
            } else {
                println!("{}", out.text);
                for d in &out.diagnostics {
                    eprintln!("note: {d}");
                }
            }
            ExitCode::from(if out.property_failed { 4 } else { 0 })
        }
        Err(e) => {
            if json {
                let doc = json!({
                    "ok": false,
                    "result": null,
                    "diagnostics": [e.message],
                    "error": e.code,
                });
                println!("{doc}");
            } else {
                eprintln!("{e}");
            }
            ExitCode::from(e.exit)
        }
    }
}

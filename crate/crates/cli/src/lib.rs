//! Command-line front end for the `biorder` oracles.
//!
//! Exit codes: 0 success or "true", 1 "false" or a counterexample, 2 bad
//! input, 3 an unmet precondition (such as an uncertified monodromy).

use std::cmp::Ordering;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use biorder::lattice::levitt_check;
use biorder::laws::Law;
use biorder::order::{Decision, Invariance, OrderError};

pub mod context;
pub mod fuzz;

pub use context::{Context, Selector};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) | CliError::Order(_) | CliError::Io(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "biorder",
    version,
    about = "Compare, sort and fuzz elements of orderable groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct GroupArgs {
    /// free2-lex, free-indexed-lex, z2-lex, z2-eigen, klein, surf3p2,
    /// bundle or bundle:figure8. The figure-eight preset uses φ: a ↦ a b,
    /// b ↦ b a b, whose matrix [[1,1],[1,2]] is conjugate to [[2,1],[1,1]].
    #[arg(long)]
    pub group: String,
    /// Matrix for z2-eigen, as "a,b;c,d".
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
    /// Monodromy for bundle, as "φ(a);φ(b);φ⁻¹(a);φ⁻¹(b)".
    #[arg(long, allow_hyphen_values = true)]
    pub monodromy: Option<String>,
}

impl GroupArgs {
    pub fn context(&self) -> Result<Context, CliError> {
        Context::new(Selector::resolve(
            &self.group,
            self.matrix.as_deref(),
            self.monodromy.as_deref(),
        )?)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print LT, EQ or GT for two elements.
    Compare {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Decide whether a 2×2 integer matrix preserves a bi-ordering of Z².
    Levitt {
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Sort the elements in a file, one per line ("-" for stdin).
    Sort {
        #[command(flatten)]
        group: GroupArgs,
        file: String,
    },
    /// Check order laws on seeded random samples.
    Fuzz {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 300)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of trichotomy, transitivity, left-inv,
        /// right-inv, conj-inv, endo-inv. Defaults to every law the
        /// context claims.
        #[arg(long, value_delimiter = ',')]
        laws: Option<Vec<String>>,
    },
}

/// Runs a parsed command, writing the report to `out` and errors to
/// `err`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Compare {
            group,
            json,
            left,
            right,
        } => cmd_compare(&group.context()?, left, right, *json, out),
        Command::Levitt { json, matrix } => cmd_levitt(matrix, *json, out),
        Command::Sort { group, file } => {
            let text = if file == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(file)
                    .map_err(|e| CliError::Precondition(format!("cannot read {file}: {e}")))?
            };
            cmd_sort(&group.context()?, &text, out)
        }
        Command::Fuzz {
            group,
            samples,
            seed,
            laws,
        } => {
            let ctx = group.context()?;
            let laws = match laws {
                Some(names) => names
                    .iter()
                    .map(|s| s.trim().parse::<Law>().map_err(CliError::Parse))
                    .collect::<Result<Vec<_>, _>>()?,
                None => ctx.default_laws(),
            };
            cmd_fuzz(&ctx, &laws, *samples, *seed, out)
        }
    }
}

fn verdict(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn int_json(n: &BigInt) -> Value {
    n.to_i64()
        .map_or_else(|| Value::String(n.to_string()), Value::from)
}

fn decision_details(d: &Decision) -> Value {
    let mut details = json!({ "delta_sign": d.sign.to_string() });
    if let Some(w) = &d.witness {
        details["magnus_degree"] = json!(w.degree);
        details["lowest_monomial"] = json!(w.monomial.to_string());
        details["coefficient"] = int_json(&w.coefficient);
    }
    details
}

pub fn cmd_compare(
    ctx: &Context,
    left: &str,
    right: &str,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (u, v) = (ctx.parse(left)?, ctx.parse(right)?);
    let (ord, d) = ctx.compare(&u, &v)?;
    if as_json {
        let report = json!({
            "verdict": verdict(ord),
            "stage": d.stage,
            "details": decision_details(&d),
        });
        writeln!(out, "{report}")?;
    } else {
        writeln!(out, "{}", verdict(ord))?;
    }
    Ok(0)
}

pub fn cmd_levitt(matrix: &str, as_json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let m = context::parse_matrix(matrix)?;
    let r = levitt_check(&m).map_err(|e| CliError::Parse(format!("bad matrix `{matrix}`: {e}")))?;
    let verdict = if r.preserves() {
        "preserves"
    } else {
        "does-not-preserve"
    };
    if as_json {
        let report = json!({
            "verdict": verdict,
            "trace": int_json(&r.trace),
            "det": int_json(&r.det),
            "classification": r.classification.to_string(),
        });
        writeln!(out, "{report}")?;
    } else {
        writeln!(out, "matrix: {m}")?;
        writeln!(out, "trace: {}", r.trace)?;
        writeln!(out, "det: {}", r.det)?;
        writeln!(out, "discriminant: {}", r.discriminant)?;
        writeln!(out, "classification: {}", r.classification)?;
        writeln!(out, "verdict: {verdict}")?;
        if let Some(o) = &r.order {
            writeln!(out, "invariant order: {o}")?;
        }
    }
    Ok(if r.preserves() { 0 } else { 1 })
}

/// Sorts nonblank lines ascending; equal elements keep their input order.
pub fn cmd_sort(ctx: &Context, text: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut items = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let w = ctx.parse(line).map_err(|e| match e {
            CliError::Parse(m) => CliError::Parse(format!("line {}: {m}", n + 1)),
            other => other,
        })?;
        items.push((line, w));
    }
    let mut failure = None;
    items.sort_by(|(_, u), (_, v)| match ctx.compare(u, v) {
        Ok((o, _)) => o,
        Err(e) => {
            failure.get_or_insert(e);
            Ordering::Equal
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    for (line, _) in items {
        writeln!(out, "{line}")?;
    }
    Ok(0)
}

pub fn cmd_fuzz(
    ctx: &Context,
    laws: &[Law],
    samples: usize,
    seed: u64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    writeln!(
        out,
        "fuzz {} ({}): {samples} samples, seed {seed}",
        ctx.name(),
        ctx.invariance()
    )?;
    let outcomes = fuzz::fuzz(ctx, laws, samples, seed)?;
    let mut failed = false;
    for o in &outcomes {
        match &o.failure {
            None => writeln!(out, "  {:<13} pass", o.law.to_string())?,
            Some(c) => {
                failed = true;
                writeln!(
                    out,
                    "  {:<13} FAIL at sample {}",
                    o.law.to_string(),
                    c.sample
                )?;
                for (name, w) in ["a", "b", "c"].iter().zip(&c.triple) {
                    writeln!(out, "    {name} = {w}")?;
                }
                writeln!(out, "    {}", c.reason)?;
                if o.law.needs_bi() && ctx.invariance() == Invariance::Left {
                    writeln!(
                        out,
                        "    expected: the {} order is only left-invariant",
                        ctx.name()
                    )?;
                }
            }
        }
    }
    writeln!(out, "{}", if failed { "FAIL" } else { "PASS" })?;
    Ok(if failed { 1 } else { 0 })
}

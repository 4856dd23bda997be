//! Command-line definitions and command handlers.

use std::io::Write;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use lcd2_core::family::{delta, enumerate_optimal_b};
use lcd2_core::{dmax, EquivClass, LinearCode, VerificationReport};
use serde::Serialize;

use crate::parallel::Runner;
use crate::records::{write_classes_csv, write_report_csv, ClassRecord, ReportRecord};
use crate::text::{format_atuple, format_matrix, parse_atuple, parse_matrix};

/// Codes with more rows than this are rejected by `check`, since their
/// weight enumerator is computed by listing all `4^k` codewords.
pub const MAX_CHECK_DIMENSION: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "lcd2", version, about = "Optimal quaternary Hermitian LCD codes of dimension 2")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for census-based commands (default: available cores).
    #[arg(long, global = true, env = "LCD2_JOBS")]
    pub jobs: Option<usize>,
    /// Shuffles the census shard order; results do not depend on it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    All,
    Lcd,
    #[value(name = "optimal_lcd", alias = "optimal-lcd")]
    OptimalLcd,
}

impl From<Filter> for lcd2_core::CensusFilter {
    fn from(f: Filter) -> Self {
        match f {
            Filter::All => Self::All,
            Filter::Lcd => Self::Lcd,
            Filter::OptimalLcd => Self::OptimalLcd,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Largest minimum distance of a Hermitian LCD [n, 2] code.
    Bound { n: usize },
    /// Parameters of the code spanned by a generator matrix such as "1,0,1;0,1,w".
    Check { matrix: String },
    /// Generator matrix of C(a) for a tuple such as "1,1,1,1,1" or "a0=1;1,0,2,1,1".
    Construct { tuple: String },
    /// All tuples of optimal Hermitian LCD codes of length n.
    Enumerate { n: usize },
    /// Equivalence classes of optimal Hermitian LCD [n, 2] codes.
    Classify {
        n: usize,
        #[arg(long)]
        include_zero_columns: bool,
    },
    /// Equivalence classes of [n, 2] codes passing a filter.
    Census {
        n: usize,
        #[arg(long, value_enum, default_value_t = Filter::OptimalLcd)]
        filter: Filter,
        #[arg(long)]
        include_zero_columns: bool,
    },
    /// Cross-checks the family tables against the census for 2 <= n <= N.
    Verify {
        #[arg(long, default_value_t = 32)]
        n_max: usize,
    },
}

/// How a successful invocation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    ChecksFailed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::ChecksFailed => 1,
        }
    }
}

#[derive(Serialize)]
struct BoundRecord {
    n: usize,
    dmax: usize,
    delta: i64,
}

#[derive(Serialize)]
struct CodeRecord {
    generator: String,
    n: usize,
    k: usize,
    d: Option<usize>,
    hull_dimension: usize,
    lcd: bool,
    weight_enumerator: std::collections::BTreeMap<usize, u64>,
}

#[derive(Serialize)]
struct EnumerationRecord {
    n: usize,
    d: usize,
    tuples: Vec<[u32; 5]>,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    let runner = || Runner::new(cli.jobs.unwrap_or(0), cli.seed);
    match &cli.command {
        Command::Bound { n } => bound(*n, cli.format, out)?,
        Command::Check { matrix } => {
            let gen = parse_matrix(matrix).context("invalid generator matrix")?;
            let code = LinearCode::new(gen).context("generator matrix rejected")?;
            describe_code(&code, cli.format, out)?;
        }
        Command::Construct { tuple } => {
            let a = parse_atuple(tuple).context("invalid tuple")?;
            let code = a.code();
            if cli.format == Format::Text {
                writeln!(out, "tuple={}", format_atuple(&a))?;
            }
            describe_code(&code, cli.format, out)?;
        }
        Command::Enumerate { n } => {
            let d = dmax(*n)?;
            let tuples = enumerate_optimal_b(*n)?;
            match cli.format {
                Format::Text => {
                    writeln!(out, "n={n} d={d} count={}", tuples.len())?;
                    for a in &tuples {
                        writeln!(out, "{}", format_atuple(a))?;
                    }
                }
                Format::Json => {
                    let rec = EnumerationRecord {
                        n: *n,
                        d,
                        tuples: tuples.iter().map(|a| a.a).collect(),
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&rec)?)?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["a1", "a2", "a3", "a4", "a5"])?;
                    for a in &tuples {
                        w.write_record(a.a.iter().map(|x| x.to_string()))?;
                    }
                    w.flush()?;
                }
            }
        }
        Command::Classify { n, include_zero_columns } => {
            let classes = runner()?.classify(*n, *include_zero_columns)?;
            write_classes(&classes, cli.format, out)?;
        }
        Command::Census { n, filter, include_zero_columns } => {
            let classes = runner()?.census(*n, (*filter).into(), *include_zero_columns)?;
            write_classes(&classes, cli.format, out)?;
        }
        Command::Verify { n_max } => {
            let report = runner()?.verify(*n_max)?;
            write_report(&report, cli.format, out)?;
            if !report.passed() {
                return Ok(Outcome::ChecksFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn bound(n: usize, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
    let d = dmax(n)?;
    let rec = BoundRecord { n, dmax: d, delta: delta(n as i64, d as i64) };
    match format {
        Format::Text => writeln!(out, "n={} dmax={} delta={}", rec.n, rec.dmax, rec.delta)?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rec)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.serialize(&rec)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn describe_code(code: &LinearCode, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
    if code.dimension() > MAX_CHECK_DIMENSION {
        bail!(
            "dimension {} is too large to list all codewords (limit {MAX_CHECK_DIMENSION})",
            code.dimension()
        );
    }
    let we = code.weight_enumerator();
    let rec = CodeRecord {
        generator: format_matrix(code.generator()),
        n: code.length(),
        k: code.dimension(),
        d: code.min_weight(),
        hull_dimension: code.hull_dimension(),
        lcd: code.is_hermitian_lcd(),
        weight_enumerator: we.terms().collect(),
    };
    match format {
        Format::Text => {
            writeln!(out, "generator={}", rec.generator)?;
            writeln!(out, "n={} k={}", rec.n, rec.k)?;
            match rec.d {
                Some(d) => writeln!(out, "d={d}")?,
                None => writeln!(out, "d=none")?,
            }
            writeln!(out, "hull_dimension={}", rec.hull_dimension)?;
            writeln!(out, "lcd={}", rec.lcd)?;
            writeln!(out, "weight_enumerator={}", we.to_polynomial())?;
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rec)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "generator",
                "n",
                "k",
                "d",
                "hull_dimension",
                "lcd",
                "weight_enumerator",
            ])?;
            w.write_record([
                rec.generator.clone(),
                rec.n.to_string(),
                rec.k.to_string(),
                rec.d.map(|d| d.to_string()).unwrap_or_default(),
                rec.hull_dimension.to_string(),
                rec.lcd.to_string(),
                we.to_polynomial(),
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

fn write_classes(
    classes: &[EquivClass],
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<()> {
    match format {
        Format::Text => {
            writeln!(out, "{} classes", classes.len())?;
            for c in classes {
                writeln!(
                    out,
                    "m0={} mp={:?} d={} label={} we={}",
                    c.canon.m0,
                    c.canon.mp,
                    c.d,
                    c.label.as_deref().unwrap_or("-"),
                    c.weight_enumerator.to_polynomial()
                )?;
            }
        }
        Format::Json => {
            let recs: Vec<ClassRecord> = classes.iter().map(ClassRecord::from).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&recs)?)?;
        }
        Format::Csv => write_classes_csv(out, classes)?,
    }
    Ok(())
}

fn write_report(
    report: &VerificationReport,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<()> {
    match format {
        Format::Text => {
            for c in &report.checks {
                let verdict = if c.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {} n={}: {}", c.id, c.n, c.detail)?;
            }
            let failed = report.failures().count();
            writeln!(out, "{} checks, {failed} failed", report.checks.len())?;
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&ReportRecord::from(report))?)?
        }
        Format::Csv => write_report_csv(out, report)?,
    }
    Ok(())
}

//! The `charvar` command line.
//!
//! ```text
//! charvar class surface:g=1                 # q^2 + 1
//! charvar eval free:n=3 --q 5
//! charvar verify free:n=2 --q 3 --json
//! charvar identities
//! charvar table free --n 1..3 --format csv
//! ```
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification or identity check finds a mismatch.

mod identities;
mod table;

use std::io::Write;

use charvar::catalog::{
    self, character_variety_class, character_variety_via_strata, representation_variety_class,
    stratum_class, CatalogError, StratumId, VarietySpec,
};
use charvar::motive::MotiveError;
use charvar::oracle::{self, CountOptions, CountReport, OracleError, DEFAULT_BUDGET};
use charvar::ring::{LaurentPoly, RingError};
use clap::{Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

pub use identities::{run_identities, IdentityRanges, IdentityResult, Status};
pub use table::{emit_table, parse_range, TableRanges};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Motive(#[from] MotiveError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "charvar",
    version,
    about = "Classes of SL2 representation and character varieties, checked by point counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the class of the character variety, a stratum, or the representation variety.
    Class {
        spec: String,
        /// One of iota, upsilon, delta, varrho, irr, red.
        #[arg(long)]
        stratum: Option<String>,
        /// Print the representation variety instead.
        #[arg(long)]
        rep: bool,
        /// Print the evaluation trace of the assembled expression.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a class at an integer q.
    Eval {
        spec: String,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long)]
        rep: bool,
        #[arg(long)]
        json: bool,
    },
    /// Count points over F_q by brute force and compare with the catalog.
    Verify {
        spec: String,
        #[arg(long, default_value_t = 3)]
        q: u32,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        threads: Option<usize>,
        /// Permit q = 2 for whole-variety counts of free specs.
        #[arg(long)]
        allow_char2: bool,
        /// Maximum number of enumerated tuples.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run the symbolic identity suite.
    Identities {
        #[arg(long, default_value_t = 6)]
        free_n: u32,
        #[arg(long, default_value_t = 4)]
        surface_g: u32,
        #[arg(long, default_value_t = 4)]
        parabolic_n: u32,
        #[arg(long, default_value_t = 3)]
        parabolic_g: u32,
        #[arg(long, default_value_t = 4)]
        s: u32,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate character-variety classes over parameter ranges.
    Table {
        /// free, surface, free-parabolic, surface-parabolic, twisted, abelian-sl2 or abelian-gl2.
        family: String,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        r: Option<String>,
        /// json, csv or latex.
        #[arg(long, default_value = "csv")]
        format: String,
    },
}

/// Runs the command line `argv` (program name first) and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_spec(s: &str) -> Result<VarietySpec, CliError> {
    Ok(s.parse()?)
}

fn write_notes(spec: &VarietySpec, err: &mut dyn Write) -> Result<(), CliError> {
    for note in catalog::notes(spec) {
        writeln!(err, "note: {}", note.message)?;
    }
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Class {
            spec,
            stratum,
            rep,
            trace,
            json,
        } => {
            let spec = parse_spec(&spec)?;
            class(&spec, stratum.as_deref(), rep, trace, json, out, err)
        }
        Command::Eval { spec, q, rep, json } => {
            let spec = parse_spec(&spec)?;
            let poly = if rep {
                representation_variety_class(&spec)?
            } else {
                character_variety_class(&spec)?
            };
            let value = poly.evaluate_at_int(q)?;
            if json {
                let doc = json!({"spec": spec, "q": q, "class": poly, "value": value.to_string()});
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
            } else {
                writeln!(out, "{value}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            spec,
            q,
            json,
            threads,
            allow_char2,
            budget,
        } => {
            let spec = parse_spec(&spec)?;
            if threads == Some(0) {
                return Err(CliError::Usage("--threads must be positive".into()));
            }
            let opts = CountOptions {
                threads,
                budget,
                allow_char2,
            };
            let report = oracle::verify(&spec, q, &opts)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write_report(&report, out)?;
            }
            for d in &report.diagnostics {
                writeln!(
                    err,
                    "{}: {d}",
                    if report.total_match {
                        "note"
                    } else {
                        "mismatch"
                    }
                )?;
            }
            Ok(if report.total_match {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Identities {
            free_n,
            surface_g,
            parabolic_n,
            parabolic_g,
            s,
            json,
        } => {
            let ranges = IdentityRanges {
                free_n,
                surface_g,
                parabolic_n,
                parabolic_g,
                s,
            };
            let results = run_identities(&ranges)?;
            let failed = results
                .iter()
                .filter(|r| r.status == Status::Failed)
                .count();
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&results).expect("json")
                )?;
            } else {
                for r in &results {
                    writeln!(out, "{:<7} {:<22} {}", r.status.label(), r.check, r.subject)?;
                }
                let count = |s| results.iter().filter(|r| r.status == s).count();
                writeln!(
                    out,
                    "identities: {} passed, {} failed, {} skipped",
                    count(Status::Passed),
                    failed,
                    count(Status::Skipped)
                )?;
            }
            for r in results.iter().filter(|r| r.status != Status::Passed) {
                if let Some(detail) = &r.detail {
                    writeln!(
                        err,
                        "{}: {} {}: {detail}",
                        r.status.label(),
                        r.check,
                        r.subject
                    )?;
                }
            }
            Ok(if failed > 0 { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Table {
            family,
            n,
            g,
            s,
            r,
            format,
        } => {
            let ranges = TableRanges {
                n: n.as_deref().map(parse_range).transpose()?,
                g: g.as_deref().map(parse_range).transpose()?,
                s: s.as_deref().map(parse_range).transpose()?,
                r: r.as_deref().map(parse_range).transpose()?,
            };
            write!(out, "{}", emit_table(&family, &ranges, &format)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn class(
    spec: &VarietySpec,
    stratum: Option<&str>,
    rep: bool,
    trace: bool,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let value: LaurentPoly = match (stratum, rep) {
        (Some(_), true) => {
            return Err(CliError::Usage(
                "give at most one of --stratum and --rep".into(),
            ))
        }
        (Some(s), false) => stratum_class(spec, s.parse::<StratumId>()?)?,
        (None, true) => representation_variety_class(spec)?,
        (None, false) => character_variety_class(spec)?,
    };
    if json {
        let mut doc = json!({
            "spec": spec,
            "class": value,
            "notes": catalog::notes(spec),
        });
        if let Ok(r) = representation_variety_class(spec) {
            doc["representation_variety"] = json!(r);
            let strata: serde_json::Map<String, serde_json::Value> = StratumId::FIVE
                .iter()
                .filter_map(|&s| {
                    stratum_class(spec, s)
                        .ok()
                        .map(|v| (s.to_string(), json!(v)))
                })
                .collect();
            doc["strata"] = serde_json::Value::Object(strata);
        }
        if trace {
            let (_, t) = character_variety_via_strata(spec)?;
            doc["trace"] = serde_json::to_value(&t).expect("json");
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
    } else {
        writeln!(out, "{value}")?;
        if trace {
            let (_, t) = character_variety_via_strata(spec)?;
            for e in &t.entries {
                let label = e.label.as_deref().unwrap_or("");
                writeln!(
                    out,
                    "  [{}] {:<18} {:<40} {}",
                    e.node,
                    e.rule.name(),
                    label,
                    e.value
                )?;
            }
        }
    }
    write_notes(spec, err)?;
    Ok(EXIT_OK)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn write_report(r: &CountReport, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(out, "{}  over F_{}  ({} ms)", r.spec, r.q, r.elapsed_ms)?;
    writeln!(
        out,
        "{:<12} {:>12} {:>12}  match",
        "stratum", "count", "expected"
    )?;
    for (s, c) in &r.counts {
        writeln!(
            out,
            "{:<12} {:>12} {:>12}  {}",
            s.to_string(),
            c,
            r.expected[s],
            yes(r.matches[s])
        )?;
    }
    writeln!(
        out,
        "{:<12} {:>12} {:>12}  {}",
        "total",
        r.total,
        r.expected_total,
        yes(r.expected_total == r.total.to_string())
    )?;
    if let Some(qc) = &r.quotient {
        writeln!(
            out,
            "{:<12} {:>12} {:>12}  {}",
            "quotient",
            qc.count,
            qc.expected,
            yes(qc.matches)
        )?;
    }
    writeln!(out, "total_match: {}", r.total_match)?;
    Ok(())
}

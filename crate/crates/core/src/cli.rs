//! Command-line front end.
//!
//! Exit codes: 0 success, 1 mathematical mismatch, 2 input error,
//! 3 enumeration budget exceeded.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::combinatorics::ratio_string;
use crate::engine::{default_workers, guard_from_env, CorrelationTable, Engine, GUARD_ENV};
use crate::error::{Error, Result};
use crate::formulas::{GammaVariant, Registry, RhoVariant};
use crate::queue::{bully_project, bully_project_discrete, DiscreteMlq, Placement, ProjectionResult};
use crate::verify::{self, Suite, TableKind, TableRow, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest `n` for direct enumeration unless the guard is set explicitly.
pub const DIRECT_DEFAULT_MAX_N: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "mlq", version, about = "Exact enumeration of continuous multiline queues")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Projection,
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Theorems,
    Lemmas,
    Conjectures,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableArg {
    N13,
    Beta13,
    Rho23,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GammaArg {
    Statement,
    ProofBounds,
    ProofShapes,
    Reconciled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RhoArg {
    Statement,
    Proof,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct Variants {
    /// Reading of the printed gamma triple sum.
    #[arg(long, value_enum, default_value_t = GammaArg::Reconciled)]
    gamma_variant: GammaArg,
    /// Reading of the printed rho triple sum.
    #[arg(long, value_enum, default_value_t = RhoArg::Proof)]
    rho_variant: RhoArg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Project a placement (or a discrete queue) and print the word and paths.
    Project {
        file: PathBuf,
        /// Read a discrete queue: one row per line, `x` occupied, `.` empty.
        #[arg(long)]
        discrete: bool,
    },
    /// Regenerate a table by enumeration and by formula.
    Tables {
        #[arg(value_enum)]
        which: TableArg,
        /// Range of n, as `A..B`, `A..=B` or a single value.
        #[arg(long = "n", value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        variants: Variants,
    },
    /// Two-point correlations c_{i,j}(n).
    Correlations {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Largest N in the enumeration grids.
        #[arg(long = "max-N", default_value_t = verify::DEFAULT_MAX_TOTAL)]
        max_total: usize,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        variants: Variants,
        /// Corrupt the named formula (for testing the failure path).
        #[arg(long, hide = true)]
        inject_fault: Vec<String>,
    },
}

fn parse_range(text: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let text = text.trim();
    let (a, b) = if let Some((a, b)) = text.split_once("..=") {
        (a, b)
    } else if let Some((a, b)) = text.split_once("..") {
        (a, b)
    } else {
        (text, text)
    };
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in {text:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in {text:?}"))?;
    if a > b {
        return Err(format!("empty range {text:?}"));
    }
    Ok(a..=b)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn engine_for(common: &Common) -> Engine {
    let workers = common.workers.map_or_else(default_workers, |w| w as usize);
    Engine::new(workers, guard_from_env())
}

fn emit(common: &Common, text: &str, out: &mut dyn Write) -> Result<()> {
    match &common.output {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Error::Io(format!("cannot write output: {e}"))),
    }
}

fn registry(variants: &Variants, faults: &[String]) -> Result<Registry> {
    let mut reg = Registry::new();
    reg.gamma_variant = match variants.gamma_variant {
        GammaArg::Statement => GammaVariant::Statement,
        GammaArg::ProofBounds => GammaVariant::ProofBounds,
        GammaArg::ProofShapes => GammaVariant::ProofShapes,
        GammaArg::Reconciled => GammaVariant::Reconciled,
    };
    reg.rho_variant = match variants.rho_variant {
        RhoArg::Statement => RhoVariant::Statement,
        RhoArg::Proof => RhoVariant::Proof,
    };
    for f in faults {
        reg = reg.with_fault(f)?;
    }
    Ok(reg)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Project { file, discrete } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| Error::Io(format!("cannot read {}: {e}", file.display())))?;
            let rendered = if discrete {
                let q = DiscreteMlq::parse(&text)?;
                render_projection(&bully_project_discrete(&q), "site")
            } else {
                let p = Placement::parse(&text)?;
                render_projection(&bully_project(&p), "value")
            };
            out.write_all(rendered.as_bytes())
                .map_err(|e| Error::Io(format!("cannot write output: {e}")))?;
            Ok(EXIT_OK)
        }
        Command::Tables { which, n, common, variants } => {
            let engine = engine_for(&common);
            let reg = registry(&variants, &[])?;
            let kind = match which {
                TableArg::N13 => TableKind::N13,
                TableArg::Beta13 => TableKind::Beta13,
                TableArg::Rho23 => TableKind::Rho23,
            };
            let rows = verify::table(&engine, &reg, kind, n)?;
            emit(&common, &render_table(kind, &rows, common.format), out)?;
            // Conjecture columns are informational only.
            let agree = rows.iter().all(|r| {
                r.enumerated == r.formula && r.published.as_ref().is_none_or(|p| *p == r.enumerated)
            });
            Ok(if agree { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Correlations { n, method, common } => {
            let engine = engine_for(&common);
            let table = match method {
                Method::Direct => {
                    if n > DIRECT_DEFAULT_MAX_N && std::env::var_os(GUARD_ENV).is_none() {
                        return Err(Error::GuardExceeded {
                            total: n * (n + 1) / 2,
                            guard: DIRECT_DEFAULT_MAX_N * (DIRECT_DEFAULT_MAX_N + 1) / 2,
                            placements: crate::engine::placement_count(&crate::queue::TypeVector::ones(n)?).to_string(),
                        });
                    }
                    engine.correlations_direct(n)?
                }
                Method::Projection => engine.correlations_via_projection(n)?,
                Method::Closed => verify::correlations_closed(n)?,
            };
            let name = match method {
                Method::Direct => "direct",
                Method::Projection => "projection",
                Method::Closed => "closed",
            };
            emit(&common, &render_correlations(&table, name, common.format), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, max_total, common, variants, inject_fault } => {
            let engine = engine_for(&common);
            let config = VerifyConfig {
                suite: match suite {
                    SuiteArg::Theorems => Suite::Theorems,
                    SuiteArg::Lemmas => Suite::Lemmas,
                    SuiteArg::Conjectures => Suite::Conjectures,
                    SuiteArg::All => Suite::All,
                },
                max_total,
                registry: registry(&variants, &inject_fault)?,
            };
            let report = verify::run(&engine, &config)?;
            let text = match common.format {
                Format::Plain => report.to_plain(),
                Format::Csv => report.to_csv(),
                Format::Json => format!("{:#}\n", report.to_json()),
            };
            emit(&common, &text, out)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn render_projection(res: &ProjectionResult, unit: &str) -> String {
    let mut s = format!("word: {}\n", res.word_string());
    for p in &res.paths {
        let nodes: Vec<String> = p.nodes.iter().map(|n| format!("({},{})", n.row + 1, n.value)).collect();
        s.push_str(&format!("path {}: {}\n", p.label, nodes.join(" -> ")));
    }
    for w in &res.wraps {
        s.push_str(&format!(
            "wrap: row {} {unit} {} -> row {} {unit} {}\n",
            w.from_row + 1,
            w.value,
            w.from_row + 2,
            w.target
        ));
    }
    s
}

fn opt_string<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(String::new, |x| x.to_string())
}

fn render_table(kind: TableKind, rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Plain => {
            let mut s = format!("{}: enumeration against {}\n", kind.name(), rows.first().map_or("", |r| r.formula_id));
            let conj = rows.iter().any(|r| r.conjecture.is_some());
            s.push_str(&format!(
                "{:>3} {:>3} {:>3} {:>14} {:>14}{} {:>14} {:>5}\n",
                "s",
                "t",
                "n",
                "enumerated",
                "formula",
                if conj { format!(" {:>14}", "conjecture") } else { String::new() },
                "published",
                "match"
            ));
            for r in rows {
                s.push_str(&format!(
                    "{:>3} {:>3} {:>3} {:>14} {:>14}{} {:>14} {:>5}\n",
                    r.s,
                    opt_string(&r.t),
                    r.n,
                    r.enumerated,
                    r.formula,
                    if conj { format!(" {:>14}", opt_string(&r.conjecture)) } else { String::new() },
                    opt_string(&r.published),
                    if r.matches() { "yes" } else { "no" }
                ));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("table,s,t,n,enumerated,formula,formula_id,conjecture,published,match\n");
            for r in rows {
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    kind.name(),
                    r.s,
                    opt_string(&r.t),
                    r.n,
                    r.enumerated,
                    r.formula,
                    r.formula_id,
                    opt_string(&r.conjecture),
                    opt_string(&r.published),
                    r.matches()
                ));
            }
            s
        }
        Format::Json => {
            let cells: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "s": r.s,
                        "t": r.t,
                        "n": r.n,
                        "enumerated": r.enumerated.to_string(),
                        "formula": r.formula.to_string(),
                        "formula_id": r.formula_id,
                        "conjecture": r.conjecture.as_ref().map(|c| c.to_string()),
                        "published": r.published.as_ref().map(|c| c.to_string()),
                        "match": r.matches(),
                    })
                })
                .collect();
            format!("{:#}\n", json!({ "table": kind.name(), "cells": cells }))
        }
    }
}

fn render_correlations(table: &CorrelationTable, method: &str, format: Format) -> String {
    match format {
        Format::Plain => {
            let mut s = format!("c_ij(n) for n = {} ({method})\n", table.n);
            for ((i, j), v) in &table.entries {
                s.push_str(&format!("{i} {j} {}\n", ratio_string(v)));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("i,j,value\n");
            for ((i, j), v) in &table.entries {
                s.push_str(&format!("{i},{j},{}\n", ratio_string(v)));
            }
            s
        }
        Format::Json => {
            let entries: Vec<_> = table
                .entries
                .iter()
                .map(|((i, j), v)| {
                    json!({
                        "i": i,
                        "j": j,
                        "num": v.numer().to_string(),
                        "den": v.denom().to_string(),
                        "value": ratio_string(v),
                    })
                })
                .collect();
            format!("{:#}\n", json!({ "n": table.n, "method": method, "entries": entries }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("mlq").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5..6").unwrap(), 5..=6);
        assert_eq!(parse_range("5..=6").unwrap(), 5..=6);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("6..5").is_err());
        assert!(parse_range("a..5").is_err());
    }

    #[test]
    fn closed_correlations_n2() {
        let (code, out, _) = call(&["correlations", "--n", "2", "--method", "closed"]);
        assert_eq!(code, 0);
        assert!(out.contains("1 2 1/1") && out.contains("2 1 1/1"), "{out}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["tables", "n13"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}

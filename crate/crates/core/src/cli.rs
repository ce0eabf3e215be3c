//! Command-line surface. [`run`] parses arguments, does the work and returns
//! the process exit code; the binary only forwards to it.
//!
//! Exit codes: 0 success, 1 negative result, 2 usage or file error,
//! 3 infeasible parameters, 4 search budget exhausted.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::construct::{audit, feasibility, ConstructError, Construction, FeasibilityReason};
use crate::engine::{self, EngineError, Extension, SearchBudget};
use crate::graph::Graph;
use crate::io::{self, IoError};
use crate::repro::{self, ReproError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "defset", version, about = "Regular k-chromatic graphs with defining number k-1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Glk,
    T1,
    T2,
    T3,
    T4,
}

#[derive(Debug, clap::Args)]
struct BudgetArgs {
    /// Maximum number of search nodes.
    #[arg(long, default_value_t = 500_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    node_limit: u64,
    /// Maximum wall-clock seconds.
    #[arg(long, default_value_t = 600, value_parser = clap::value_parser!(u64).range(1..))]
    time_limit: u64,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget::new(self.node_limit, Duration::from_secs(self.time_limit))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family member and write it as graph JSON.
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Graph output (`.g6` selects graph6, anything else JSON).
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the defining set as a coloring file.
        #[arg(long)]
        defining: Option<PathBuf>,
        /// Write the full canonical coloring.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Exact chromatic number.
    Chi {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Does the partial coloring extend to exactly one proper chi-coloring?
    VerifyDefining {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// Number of colors; computed when omitted.
        #[arg(long)]
        chi: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Exact defining number with a witness.
    DefiningNumber {
        #[arg(long)]
        graph: PathBuf,
        /// Write the witness as a coloring file.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Necessary conditions for an r-regular k-chromatic graph on n vertices.
    Feasible {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
    },
    /// Compare the deletions of the k=7 (table 1) or k=8 (table 2) construction with the reference.
    Repro {
        #[arg(long)]
        table: usize,
    },
    /// Build and fully verify every family member with k <= kmax.
    Audit {
        #[arg(long)]
        kmax: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

/// Outcome of a command: exit code plus message for standard error.
struct Failure(i32, String);

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::BudgetExhausted { .. } => Failure(EXIT_BUDGET, e.to_string()),
            _ => Failure(EXIT_USAGE, e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

/// Runs the command line `args` (first item is the program name), writing
/// reports to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, IoError> {
    if path.extension().is_some_and(|e| e == "g6") {
        io::read_graph6(path)
    } else {
        io::read_graph(path)
    }
}

fn save_graph(path: &Path, g: &Graph) -> Result<(), IoError> {
    if path.extension().is_some_and(|e| e == "g6") {
        io::write_graph6(path, g)
    } else {
        io::write_graph(path, g)
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure(EXIT_USAGE, format!("cannot write {}: {e}", path.display())))
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Construct { family, k, l, s, t, out: path, trace, dot, defining, coloring } => {
            let need = |v: Option<usize>, name: &str| {
                v.ok_or_else(|| Failure(EXIT_USAGE, format!("family {family:?} needs --{name}")))
            };
            let c = match family {
                FamilyArg::Glk => Construction::Glk { l: need(l, "l")?, k },
                FamilyArg::T1 => Construction::T1 { k, t: need(t, "t")? },
                FamilyArg::T2 => Construction::T2 { k, s: need(s, "s")? },
                FamilyArg::T3 => Construction::T3 { k, s: need(s, "s")? },
                FamilyArg::T4 => Construction::T4 { k, s: need(s, "s")?, t: need(t, "t")? },
            };
            let (n, r, kk) = c.target();
            let verdict = feasibility(n, r, kk);
            if !verdict.feasible {
                return Err(Failure(
                    EXIT_INFEASIBLE,
                    format!("infeasible: reason={} n={n} r={r} k={kk}", verdict.reason),
                ));
            }
            let res = match c.build() {
                Ok(res) => res,
                Err(e @ (ConstructError::ParamOutOfRange(_) | ConstructError::ParityViolation(_))) => {
                    return Err(Failure(
                        EXIT_INFEASIBLE,
                        format!("infeasible: reason={} ({e})", FeasibilityReason::ParamOutOfRange),
                    ))
                }
                Err(e @ ConstructError::TEqualsKMinus2 { .. }) => {
                    return Err(Failure(
                        EXIT_INFEASIBLE,
                        format!("infeasible: reason={} ({e})", FeasibilityReason::TEqualsKMinus2),
                    ))
                }
                Err(e @ ConstructError::Engine(EngineError::BudgetExhausted { .. })) => {
                    return Err(Failure(EXIT_BUDGET, e.to_string()))
                }
                Err(e) => return Err(Failure(EXIT_NEGATIVE, e.to_string())),
            };
            save_graph(&path, &res.graph)?;
            if let Some(p) = trace {
                write_text(&p, &res.trace.to_json())?;
            }
            if let Some(p) = dot {
                let s: BTreeSet<_> = res.defining_set.vertices().collect();
                write_text(&p, &io::export_dot(&res.graph, &res.canonical_coloring, &s))?;
            }
            if let Some(p) = defining {
                io::write_coloring(&p, &res.graph, &res.defining_set)?;
            }
            if let Some(p) = coloring {
                io::write_coloring(&p, &res.graph, &res.canonical_coloring)?;
            }
            writeln!(
                out,
                "n={} r={} k={} |S|={}",
                res.graph.n(),
                res.claimed_r,
                res.claimed_k,
                res.defining_set.len()
            )?;
            Ok(EXIT_OK)
        }
        Command::Chi { graph, budget } => {
            let g = load_graph(&graph)?;
            let chi = engine::chromatic_number(&g, &budget.budget())?;
            writeln!(out, "chi={chi}")?;
            Ok(EXIT_OK)
        }
        Command::VerifyDefining { graph, coloring, chi, budget } => {
            let g = load_graph(&graph)?;
            let partial = io::read_coloring(&coloring, &g)?;
            let chi = match chi {
                Some(c) => c,
                None => engine::chromatic_number(&g, &budget.budget())?,
            };
            if partial.max_color() as usize > chi {
                return Err(Failure(EXIT_USAGE, format!("coloring uses color {} but chi={chi}", partial.max_color())));
            }
            let outcome = match engine::extend(&g, &partial, chi) {
                Ok(v) => v.outcome,
                Err(EngineError::ImproperPartial(..)) => Extension::None,
                Err(e) => return Err(e.into()),
            };
            let (word, code) = match outcome {
                Extension::Unique => ("UNIQUE", EXIT_OK),
                Extension::Multiple => ("MULTIPLE", EXIT_NEGATIVE),
                Extension::None => ("NONE", EXIT_NEGATIVE),
            };
            writeln!(out, "{word} chi={chi} |S|={}", partial.len())?;
            Ok(code)
        }
        Command::DefiningNumber { graph, witness, budget } => {
            let g = load_graph(&graph)?;
            let d = engine::defining_number(&g, &budget.budget())?;
            let cells: Vec<String> = d.witness.iter().map(|(v, c)| format!("{}:{c}", g.label(v))).collect();
            writeln!(out, "d={} chi={} witness={}", d.value, d.chi, cells.join(","))?;
            if let Some(p) = witness {
                io::write_coloring(&p, &g, &d.witness)?;
            }
            Ok(EXIT_OK)
        }
        Command::Feasible { n, r, k } => {
            let v = feasibility(n, r, k);
            writeln!(out, "feasible={} reason={}", v.feasible, v.reason)?;
            Ok(if v.feasible { EXIT_OK } else { EXIT_INFEASIBLE })
        }
        Command::Repro { table } => match repro::reproduce(table) {
            Ok(report) => {
                write!(out, "{}", report.render())?;
                Ok(if report.matches() { EXIT_OK } else { EXIT_NEGATIVE })
            }
            Err(e @ ReproError::UnknownTable(_)) => Err(Failure(EXIT_USAGE, e.to_string())),
            Err(e) => Err(Failure(EXIT_NEGATIVE, e.to_string())),
        },
        Command::Audit { kmax, budget } => {
            if kmax < 3 {
                return Err(Failure(EXIT_USAGE, format!("--kmax must be at least 3, got {kmax}")));
            }
            let budget = budget.budget();
            let rows = audit_sweep(kmax, &budget);
            let mut first_failure = None;
            for row in &rows {
                writeln!(out, "{row}")?;
                if !row.passed() && first_failure.is_none() {
                    first_failure = Some(row.instance);
                }
            }
            let passed = rows.iter().filter(|r| r.passed()).count();
            writeln!(out, "audited={} passed={} failed={}", rows.len(), passed, rows.len() - passed)?;
            match first_failure {
                None => Ok(EXIT_OK),
                Some(c) => {
                    writeln!(out, "first_failure={c}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}

/// One line of the audit report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRow {
    pub instance: Construction,
    pub result: Result<(usize, usize, usize), String>,
}

impl AuditRow {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

impl std::fmt::Display for AuditRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.result {
            Ok((n, r, chi)) => write!(f, "PASS {} n={n} r={r} chi={chi} |S|={}", self.instance, chi - 1),
            Err(e) => write!(f, "FAIL {} {e}", self.instance),
        }
    }
}

/// Builds and audits every member of [`Construction::sweep`] in parallel;
/// rows come back in sweep order.
pub fn audit_sweep(kmax: usize, budget: &SearchBudget) -> Vec<AuditRow> {
    Construction::sweep(kmax)
        .into_par_iter()
        .map(|instance| {
            let result = instance
                .build()
                .and_then(|res| audit(&res, budget))
                .map(|rep| (rep.n, rep.r, rep.chi))
                .map_err(|e| e.to_string());
            AuditRow { instance, result }
        })
        .collect()
}

//! Command-line surface.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 infeasible system,
//! 3 systems not equivalent (`check`), 4 exact limit exceeded without
//! `--allow-heuristic`.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::decomposition::{analyze, max_redundant_from_analysis, RepresentativePolicy, SolverConfig};
use crate::distance::min_walk_weights;
use crate::error::Error;
use crate::format;
use crate::graph::PrecedenceGraph;
use crate::reduction::{er_condensation, reduction_from_analysis};
use crate::redundancy::{find_redundant_edges, has_zero_weight_cycle};
use crate::verify::{brute_force_redundant_edges, systems_equivalent};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_NOT_EQUIVALENT: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Representative {
    Smallest,
    Largest,
}

impl From<Representative> for RepresentativePolicy {
    fn from(r: Representative) -> Self {
        match r {
            Representative::Smallest => RepresentativePolicy::Smallest,
            Representative::Largest => RepresentativePolicy::Largest,
        }
    }
}

/// Simplify systems of difference constraints `x_i - x_j <= c`.
///
/// Input files use the `p dcs <n> <m>` header followed by `e <i> <j> <c>` lines.
#[derive(Debug, Clone, Parser)]
#[command(name = "precsys", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest number of tight arcs per class solved exactly.
    #[arg(long, global = true, default_value_t = 20)]
    pub exact_limit: usize,

    /// Solve classes above the exact limit greedily instead of failing.
    #[arg(long, global = true)]
    pub allow_heuristic: bool,

    /// Which member represents each equivalence class.
    #[arg(long, global = true, value_enum, default_value_t = Representative::Smallest)]
    pub representative: Representative,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print class structure and redundancy statistics.
    Info { input: PathBuf },
    /// List every individually redundant edge.
    Redundant {
        input: PathBuf,
        /// Check each edge exhaustively; required when a zero-weight cycle exists.
        #[arg(long)]
        oracle: bool,
    },
    /// Remove a maximum redundant edge set. Output edges are a subset of the
    /// input with unchanged weights.
    Simplify { input: PathBuf },
    /// Write a minimum-size equivalent system. Output may contain edges that
    /// are not in the input (one zero-weight cycle per equivalence class).
    Reduce { input: PathBuf },
    /// Write the condensation over class representatives.
    Condense {
        input: PathBuf,
        /// Condense the equivalent reduction instead of the input.
        #[arg(long)]
        of_reduction: bool,
    },
    /// Exit 0 if both systems have the same solutions, 3 otherwise.
    Check { a: PathBuf, b: PathBuf },
}

/// Statistics printed by `info`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisSummary {
    pub nodes: usize,
    pub edges: usize,
    pub feasible: bool,
    pub class_count: usize,
    pub class_sizes: Vec<usize>,
    pub loose_intra_edges: usize,
    pub zero_cycle: bool,
    pub condensation_edges: usize,
    pub removed: usize,
    pub certified: bool,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for AnalysisSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes: {}", self.nodes)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "feasible: {}", yes_no(self.feasible))?;
        if !self.feasible {
            return Ok(());
        }
        writeln!(f, "zero-weight cycle: {}", yes_no(self.zero_cycle))?;
        writeln!(f, "classes: {}", self.class_count)?;
        let sizes: Vec<String> = self.class_sizes.iter().map(ToString::to_string).collect();
        writeln!(f, "class sizes: {}", sizes.join(" "))?;
        writeln!(f, "loose intra-class edges: {}", self.loose_intra_edges)?;
        writeln!(f, "condensation edges: {}", self.condensation_edges)?;
        writeln!(f, "removable edges: {}", self.removed)?;
        writeln!(f, "certified maximum: {}", yes_no(self.certified))
    }
}

/// A failure that ends the run with a specific exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InfeasibleSystem { .. } | Error::NegativeSelfLoop { .. } => EXIT_INFEASIBLE,
            Error::ExactLimitExceeded { .. } => EXIT_LIMIT,
            _ => EXIT_INPUT,
        };
        let msg = match e {
            Error::ExactLimitExceeded { .. } => format!("{e}; rerun with --allow-heuristic for a maximal set"),
            _ => e.to_string(),
        };
        Failure { code, msg }
    }
}

struct Runner<'a> {
    cfg: &'a RunConfig,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Runner<'_> {
    fn solver(&self) -> SolverConfig {
        SolverConfig {
            exact_limit: self.cfg.exact_limit,
            allow_heuristic: self.cfg.allow_heuristic,
            representative: self.cfg.representative.into(),
        }
    }

    fn load(&mut self, path: &Path) -> Result<PrecedenceGraph, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure { code: EXIT_INPUT, msg: format!("{}: {e}", path.display()) })?;
        let (g, warnings) = format::parse(&text).map_err(|e| {
            let mut f = Failure::from(e);
            f.msg = format!("{}: {}", path.display(), f.msg);
            f
        })?;
        for w in warnings {
            let _ = writeln!(self.stderr, "warning: {}: {w}", path.display());
        }
        Ok(g)
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        let io_err = |e: std::io::Error| Failure { code: EXIT_INPUT, msg: e.to_string() };
        match &self.cfg.out {
            Some(path) => fs::write(path, text).map_err(io_err),
            None => self.stdout.write_all(text.as_bytes()).map_err(io_err),
        }
    }

    fn note(&mut self, msg: impl fmt::Display) {
        let _ = writeln!(self.stderr, "{msg}");
    }

    fn run(&mut self) -> Result<i32, Failure> {
        let policy: RepresentativePolicy = self.cfg.representative.into();
        match &self.cfg.command {
            Command::Info { input } => {
                let g = self.load(input)?;
                let summary = match analyze(&g, policy) {
                    Ok(a) => {
                        let mres = max_redundant_from_analysis(&a, &self.solver())?;
                        AnalysisSummary {
                            nodes: g.node_count(),
                            edges: g.edge_count(),
                            feasible: true,
                            class_count: a.partition.class_count(),
                            class_sizes: a.partition.classes().iter().map(Vec::len).collect(),
                            loose_intra_edges: a.edges.loose_total(),
                            zero_cycle: has_zero_weight_cycle(&a.distances),
                            condensation_edges: a.condensation.edges.len(),
                            removed: mres.edges.len(),
                            certified: mres.certified,
                        }
                    }
                    Err(e @ Error::InfeasibleSystem { .. }) => {
                        let summary = AnalysisSummary {
                            nodes: g.node_count(),
                            edges: g.edge_count(),
                            feasible: false,
                            class_count: 0,
                            class_sizes: Vec::new(),
                            loose_intra_edges: 0,
                            zero_cycle: false,
                            condensation_edges: 0,
                            removed: 0,
                            certified: false,
                        };
                        self.emit(&summary.to_string())?;
                        return Err(e.into());
                    }
                    Err(e) => return Err(e.into()),
                };
                self.emit(&summary.to_string())?;
            }
            Command::Redundant { input, oracle } => {
                let g = self.load(input)?;
                let d = min_walk_weights(&g)?;
                let edges = if *oracle {
                    brute_force_redundant_edges(&g)?
                } else {
                    find_redundant_edges(&g, &d).map_err(|e| match e {
                        Error::ZeroWeightCycle => Failure {
                            code: EXIT_INPUT,
                            msg: format!("{e}; rerun with --oracle to test each edge exhaustively"),
                        },
                        e => e.into(),
                    })?
                };
                let mut text = String::new();
                for &(i, j) in &edges {
                    text.push_str(&format!("e {i} {j} {}\n", g.weight(i, j).expect("edge of g")));
                }
                self.emit(&text)?;
                self.note(format_args!("{} redundant edge(s)", edges.len()));
            }
            Command::Simplify { input } => {
                let g = self.load(input)?;
                let a = analyze(&g, policy)?;
                let mres = max_redundant_from_analysis(&a, &self.solver())?;
                self.emit(&format::serialize(&g.without_edges(&mres.edges)))?;
                let status = if mres.certified { "certified" } else { "maximal, not certified" };
                self.note(format_args!("removed {}, {status}", mres.edges.len()));
            }
            Command::Reduce { input } => {
                let g = self.load(input)?;
                let a = analyze(&g, policy)?;
                let r = reduction_from_analysis(&g, &a);
                self.emit(&format::serialize(&r.reduced))?;
                self.note(format_args!("reduced {} edges to {}", g.edge_count(), r.reduced.edge_count()));
            }
            Command::Condense { input, of_reduction } => {
                let g = self.load(input)?;
                let a = analyze(&g, policy)?;
                let cond = if *of_reduction {
                    er_condensation(&reduction_from_analysis(&g, &a), &a.distances)
                } else {
                    a.condensation.clone()
                };
                let mut out = PrecedenceGraph::empty(g.node_count());
                for (&(u, v), c) in &cond.edges {
                    out.set_edge(u, v, c.clone());
                }
                let reps: Vec<String> = cond.nodes.iter().map(ToString::to_string).collect();
                let text = format!("# representatives: {}\n{}", reps.join(" "), format::serialize(&out));
                self.emit(&text)?;
            }
            Command::Check { a, b } => {
                let ga = self.load(a)?;
                let gb = self.load(b)?;
                let report = systems_equivalent(&ga, &gb)?;
                match report.witness {
                    None => self.emit("equivalent\n")?,
                    Some(w) => {
                        self.emit(&format!("not equivalent: {w}\n"))?;
                        return Ok(EXIT_NOT_EQUIVALENT);
                    }
                }
            }
        }
        Ok(EXIT_OK)
    }
}

/// Runs one command, writing results to `stdout` (or `--out`) and
/// diagnostics to `stderr`. Returns the process exit code.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut runner = Runner { cfg, stdout, stderr };
    match runner.run() {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(runner.stderr, "error: {}", f.msg);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cfg = RunConfig::try_parse_from(std::iter::once("precsys").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cfg, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn write_tmp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
        let p = dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    #[test]
    fn info_on_fig3() {
        let dir = tempfile::tempdir().unwrap();
        let f = write_tmp(&dir, "g.dcs", fixtures::FIG3);
        let (code, out, _) = run_args(&["info", &f]);
        assert_eq!(code, 0);
        assert!(out.contains("classes: 2\n"));
        assert!(out.contains("class sizes: 1 4\n"));
        assert!(out.contains("removable edges: 1\n"));
        assert!(out.contains("certified maximum: yes\n"));
    }

    #[test]
    fn redundant_requires_oracle_with_zero_cycles() {
        let dir = tempfile::tempdir().unwrap();
        let f = write_tmp(&dir, "g.dcs", fixtures::FIG3);
        let (code, _, err) = run_args(&["redundant", &f]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--oracle"));
        let (code, out, _) = run_args(&["redundant", "--oracle", &f]);
        assert_eq!(code, 0);
        assert_eq!(out, "e 3 2 3\n");
    }

    #[test]
    fn infeasible_and_parse_exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let bad = write_tmp(&dir, "neg.dcs", "p dcs 2 2\ne 1 2 -1\ne 2 1 0\n");
        let (code, _, err) = run_args(&["simplify", &bad]);
        assert_eq!(code, EXIT_INFEASIBLE);
        assert!(err.contains("negative cycle"));
        let (code, out, _) = run_args(&["info", &bad]);
        assert_eq!(code, EXIT_INFEASIBLE);
        assert!(out.contains("feasible: no"));

        let garbage = write_tmp(&dir, "bad.dcs", "p dcs 2 1\ne 1 2 zz\n");
        assert_eq!(run_args(&["reduce", &garbage]).0, EXIT_INPUT);
        assert_eq!(run_args(&["reduce", "/nonexistent/file.dcs"]).0, EXIT_INPUT);
    }

    #[test]
    fn condense_writes_representative_edges() {
        let dir = tempfile::tempdir().unwrap();
        let f = write_tmp(&dir, "g.dcs", fixtures::FIG3);
        let (code, out, _) = run_args(&["condense", &f]);
        assert_eq!(code, 0);
        assert_eq!(out, "# representatives: 1 2\np dcs 5 2\ne 1 2 1\ne 2 1 0\n");
        let (_, out_er, _) = run_args(&["condense", "--of-reduction", &f]);
        assert_eq!(out_er, out);
        let (_, out_large, _) = run_args(&["condense", "--representative", "largest", &f]);
        assert_eq!(out_large, "# representatives: 1 5\np dcs 5 2\ne 1 5 0\ne 5 1 1\n");
    }

    #[test]
    fn exact_limit_exit_code() {
        let dir = tempfile::tempdir().unwrap();
        let f = write_tmp(&dir, "g.dcs", fixtures::FIG3);
        let (code, _, err) = run_args(&["simplify", "--exact-limit", "2", &f]);
        assert_eq!(code, EXIT_LIMIT);
        assert!(err.contains("--allow-heuristic"));
        let (code, _, err) = run_args(&["simplify", "--exact-limit", "2", "--allow-heuristic", &f]);
        assert_eq!(code, 0);
        assert!(err.contains("not certified"));
    }
}

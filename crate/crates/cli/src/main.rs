//! `spectough`: build graph families, compute spectra, connectivity and
//! exact toughness, and run the verification suite.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or input error,
//! 3 a search stopped on its budget.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use spectough::connectivity::{edge_connectivity, max_independent_set, vertex_connectivity};
use spectough::family_spec::FamilySpec;
use spectough::spectral::{spectrum, srg_check, SpectrumReport, SrgParams, DEFAULT_GROUP_TOL};
use spectough::toughness::{bounds, toughness_exact, ToughnessOptions, DEFAULT_BUDGET};
use spectough::verify::{check_one, run_suite, Profile, Status, TheoremCheck};
use spectough::{Graph, VertexSet};

use output::{csv_rows, render, Format};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PARTIAL: u8 = 3;

#[derive(Parser)]
#[command(name = "spectough", version, about = "Exact toughness and spectra of regular graph families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph file: a line `n m`, then one `u v` line per edge.
    path: Option<PathBuf>,
    /// Build the graph from a family spec instead, e.g. `kneser:v=7,r=2`.
    #[arg(long)]
    family: Option<String>,
}

impl Input {
    fn load(&self) -> Result<Graph> {
        match (&self.path, &self.family) {
            (Some(p), None) => {
                let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                text.parse().with_context(|| format!("parsing {}", p.display()))
            }
            (None, Some(spec)) => Ok(spec.parse::<FamilySpec>()?.build()?),
            _ => bail!("give exactly one of a graph file or --family"),
        }
    }
}

#[derive(Args)]
struct Solver {
    /// Search-node budget for the exact solver.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for the exact solver; 0 uses all cores.
    #[arg(long, env = "SPECTOUGH_THREADS", default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family and write it in the graph text format.
    Build {
        spec: String,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Adjacency spectrum with grouped eigenvalues.
    Spectrum {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_GROUP_TOL)]
        group_tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact toughness certificate, or the spectral bounds with `--bounds`.
    Toughness {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "bounds")]
        exact: bool,
        #[arg(long)]
        bounds: bool,
        /// Enumerate every optimal set.
        #[arg(long)]
        minimizers: bool,
        #[command(flatten)]
        solver: Solver,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Spectral and structural toughness bounds of a connected regular graph.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Vertex connectivity, edge connectivity and independence number.
    Connectivity {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification suite, or one check with `--check`.
    Verify {
        #[arg(long, default_value = "desk")]
        profile: String,
        /// Also write the checks as a JSON array to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Override the profile's largest exact-solver instance.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, env = "SPECTOUGH_THREADS")]
        threads: Option<usize>,
        /// Run a single check id, e.g. `Thm-L2v`.
        #[arg(long, requires = "params")]
        check: Option<String>,
        /// Parameters of the single check, e.g. `v=3` or `gq24`.
        #[arg(long, requires = "check", allow_hyphen_values = true)]
        params: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Family metadata: order, size, degree and strongly regular parameters.
    Info {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Serialize)]
struct ConnectivityOut {
    n: usize,
    vertex_connectivity: usize,
    edge_connectivity: usize,
    independence_number: usize,
    vertex_cut: Option<VertexSet>,
    independent_set: VertexSet,
}

#[derive(Serialize)]
struct InfoOut {
    spec: String,
    n: usize,
    edges: usize,
    regular_degree: Option<usize>,
    connected: bool,
    bipartite: bool,
    srg: Option<SrgParams>,
}

fn print(s: &str) {
    print!("{s}");
}

fn checks_output(checks: &[TheoremCheck], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(checks)? + "\n",
        Format::Csv => {
            let rows: Vec<Vec<(String, String)>> = checks
                .iter()
                .map(|c| {
                    vec![
                        ("id".into(), c.id.clone()),
                        ("instance".into(), c.instance.clone()),
                        ("claimed".into(), c.claimed.to_string()),
                        ("computed".into(), c.computed.as_ref().map_or(String::new(), |q| q.to_string())),
                        ("status".into(), c.status.to_string()),
                        ("notes".into(), c.notes.clone()),
                        ("wall_ms".into(), format!("{:.3}", c.wall_ms)),
                    ]
                })
                .collect();
            csv_rows(&rows)?
        }
        Format::Text => unreachable!("text reports are rendered by the caller"),
    })
}

fn verdict(checks: &[TheoremCheck]) -> u8 {
    if checks.iter().any(|c| c.status == Status::Fail) {
        EXIT_FAILED
    } else if checks.iter().any(|c| c.status == Status::SkippedBudget) {
        EXIT_PARTIAL
    } else {
        0
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Build { spec, output } => {
            let text = spec.parse::<FamilySpec>()?.build()?.to_text();
            match output {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print(&text),
            }
            Ok(0)
        }
        Command::Spectrum { input, group_tol, format } => {
            let g = input.load()?;
            let sp = spectrum(&g, group_tol)?;
            print(&render(&SpectrumReport::new(&g, &sp), format)?);
            Ok(0)
        }
        Command::Toughness { input, exact: _, bounds: want_bounds, minimizers, solver, format } => {
            let g = input.load()?;
            if want_bounds {
                print(&render(&bounds(&g)?, format)?);
                return Ok(0);
            }
            let opts = ToughnessOptions {
                budget: solver.budget,
                want_minimizers: minimizers,
                threads: solver.threads,
            };
            let cert = toughness_exact(&g, &opts)?;
            print(&render(&cert, format)?);
            Ok(if cert.exhaustive { 0 } else { EXIT_PARTIAL })
        }
        Command::Bounds { input, format } => {
            print(&render(&bounds(&input.load()?)?, format)?);
            Ok(0)
        }
        Command::Connectivity { input, format } => {
            let g = input.load()?;
            let kappa = vertex_connectivity(&g);
            let mis = max_independent_set(&g, false)?;
            let out = ConnectivityOut {
                n: g.n(),
                vertex_connectivity: kappa.value,
                edge_connectivity: edge_connectivity(&g).value,
                independence_number: mis.alpha,
                vertex_cut: kappa.cut,
                independent_set: mis.witness,
            };
            print(&render(&out, format)?);
            Ok(0)
        }
        Command::Verify { profile, json, max_n, budget, threads, check, params, format } => {
            let mut p = Profile::by_name(&profile)?;
            p.max_n = max_n.unwrap_or(p.max_n);
            p.budget = budget.unwrap_or(p.budget);
            p.threads = threads.unwrap_or(p.threads);
            let (checks, text) = match (check, params) {
                (Some(id), Some(params)) => {
                    let c = check_one(&id, &params, &p)?;
                    let text = render(&c, Format::Text)?;
                    (vec![c], text)
                }
                _ => {
                    let report = run_suite(&p);
                    let text = report.to_text();
                    (report.checks, text)
                }
            };
            if let Some(path) = json {
                let body = serde_json::to_string_pretty(&checks)? + "\n";
                fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
            }
            print(&match format {
                Format::Text => text,
                f => checks_output(&checks, f)?,
            });
            Ok(verdict(&checks))
        }
        Command::Info { spec, format } => {
            let spec: FamilySpec = spec.parse()?;
            let g = spec.build()?;
            let out = InfoOut {
                spec: spec.to_string(),
                n: g.n(),
                edges: g.edge_count(),
                regular_degree: g.regularity(),
                connected: g.is_connected(),
                bipartite: g.is_bipartite(),
                srg: srg_check(&g),
            };
            print(&render(&out, format)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let chain: Vec<String> = e.chain().map(|c| c.to_string()).collect();
            eprintln!("error: {}", chain.join(": "));
            ExitCode::from(EXIT_USAGE)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;
    use spectough::verify::Quantity;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    fn check(status: Status) -> TheoremCheck {
        TheoremCheck {
            id: "x".into(),
            instance: "y".into(),
            claimed: Quantity::boolean(true),
            computed: None,
            status,
            notes: String::new(),
            wall_ms: 0.0,
        }
    }

    #[test]
    fn verdict_precedence() {
        use Status::*;
        assert_eq!(verdict(&[check(Pass), check(SkippedSize)]), 0);
        assert_eq!(verdict(&[check(Pass), check(SkippedBudget)]), EXIT_PARTIAL);
        assert_eq!(verdict(&[check(SkippedBudget), check(Fail)]), EXIT_FAILED);
    }
}

//! Command-line surface. Exit codes: 0 on success or a verified property,
//! 1 when a violation is found, 2 on input errors.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use graphcycle::algebra::{check_ainf_relations, check_linf_relations, AlgebraSpec, Flavor};
use graphcycle::complex::{boundary, boundary_matrix, homology_ranks, ComplexParams};
use graphcycle::format::{parse_algebra, parse_graph};
use graphcycle::scalar::{Ring, Scalar};
use graphcycle::statesum::{cycle_chain, expression, verify_cycle};
use graphcycle::zoo::{self, ZooAlgebra};

#[derive(Parser)]
#[command(name = "graphcycle", version, about = "Exact A-infinity / L-infinity structure validation and graph complex cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every structural invariant of an algebra file or zoo entry.
    Validate { algebra: String },
    /// Check the defining relations up to a level.
    CheckRelations {
        algebra: String,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// List the isomorphism classes of a complex.
    Enumerate {
        #[command(subcommand)]
        complex: ComplexCmd,
    },
    /// Boundary of an oriented graph, as a chain.
    Boundary { graph_file: String },
    /// Rational homology ranks by edge degree.
    Homology {
        #[command(subcommand)]
        complex: ComplexCmd,
        /// Also print the boundary matrices in (row, col, value) form.
        #[arg(long, global = true)]
        matrices: bool,
    },
    /// The chain Z built from an algebra over a complex.
    Cycle {
        algebra: String,
        #[command(subcommand)]
        complex: ComplexCmd,
    },
    /// Verify that the chain Z is a cycle.
    VerifyCycle {
        algebra: String,
        #[command(subcommand)]
        complex: ComplexCmd,
    },
    /// Symbolic contraction pattern of a graph.
    Expression { graph_file: String },
}

#[derive(Subcommand, Clone, Copy)]
enum ComplexCmd {
    /// Ordinary graphs of a fixed Euler characteristic.
    Ordinary {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        max_edges: usize,
    },
    /// Ribbon graphs of fixed genus and puncture count.
    Ribbon {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        punctures: usize,
        #[arg(long)]
        max_edges: usize,
    },
}

impl ComplexCmd {
    fn params(self) -> (ComplexParams, usize) {
        match self {
            ComplexCmd::Ordinary { chi, max_edges } => {
                (ComplexParams::Ordinary { chi }, max_edges)
            }
            ComplexCmd::Ribbon { genus, punctures, max_edges } => {
                (ComplexParams::Ribbon { genus, punctures }, max_edges)
            }
        }
    }
}

fn load_algebra(arg: &str) -> Result<ZooAlgebra, String> {
    if let Some(spec) = zoo::zoo(arg) {
        return Ok(spec);
    }
    let text = fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
    parse_algebra(&text)
        .map(ZooAlgebra::Rational)
        .map_err(|e| format!("{arg}: {e}"))
}

fn load_graph(arg: &str) -> Result<graphcycle::OrientedGraph, String> {
    let text = fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
    parse_graph(&text).map_err(|e| format!("{arg}: {e}"))
}

fn run_validate<R: Ring>(spec: &AlgebraSpec<R>) -> ExitCode {
    let violations = spec.validate();
    if violations.is_empty() {
        println!("VALID");
        ExitCode::from(0)
    } else {
        for v in &violations {
            println!("violation: {v}");
        }
        println!("INVALID ({} violations)", violations.len());
        ExitCode::from(1)
    }
}

fn run_check_relations<R: Ring>(spec: &AlgebraSpec<R>, n_max: usize) -> ExitCode {
    let report = match spec.flavor() {
        Flavor::AInfinity => check_ainf_relations(spec, n_max),
        Flavor::LInfinity => check_linf_relations(spec, n_max),
    };
    match report {
        Ok(report) if report.passed() => {
            println!("RELATIONS HOLD (n <= {n_max})");
            ExitCode::from(0)
        }
        Ok(report) => {
            for v in &report.violations {
                let idx: Vec<String> = v.indices.iter().map(|i| (i + 1).to_string()).collect();
                println!("level {} at ({}): {}", v.level, idx.join(","), v.value);
            }
            println!("RELATIONS FAIL ({} nonzero sums)", report.violations.len());
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run_cycle<R: Ring>(spec: &AlgebraSpec<R>, params: ComplexParams, max_edges: usize) -> ExitCode {
    match cycle_chain(spec, &params, max_edges) {
        Ok(chain) => {
            print!("{chain}");
            ExitCode::from(0)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run_verify_cycle<R: Ring>(
    spec: &AlgebraSpec<R>,
    params: ComplexParams,
    max_edges: usize,
) -> ExitCode {
    let chain = match cycle_chain(spec, &params, max_edges) {
        Ok(chain) => chain,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = verify_cycle(&chain, &params, max_edges);
    for (degree, ok) in &report.degrees {
        println!(
            "degree {degree}: {}",
            if *ok { "boundary vanishes" } else { "NONZERO boundary" }
        );
    }
    if report.truncated {
        println!("note: truncated below the complex's edge bound; top degree unchecked");
    }
    if report.verified {
        println!("CYCLE VERIFIED");
        ExitCode::from(0)
    } else {
        println!("NOT A CYCLE");
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { algebra } => match load_algebra(&algebra) {
            Ok(ZooAlgebra::Rational(spec)) => run_validate(&spec),
            Ok(ZooAlgebra::Dual(spec)) => run_validate(&spec),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::CheckRelations { algebra, n_max } => match load_algebra(&algebra) {
            Ok(ZooAlgebra::Rational(spec)) => run_check_relations(&spec, n_max),
            Ok(ZooAlgebra::Dual(spec)) => run_check_relations(&spec, n_max),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Enumerate { complex } => {
            let (params, max_edges) = complex.params();
            let classes = params.classes(max_edges);
            for c in &classes {
                if c.is_zero_class() {
                    println!("{c} zero-orientation");
                } else {
                    println!("{c}");
                }
            }
            println!(
                "{} classes, {} nonzero",
                classes.len(),
                classes.iter().filter(|c| !c.is_zero_class()).count()
            );
            ExitCode::from(0)
        }
        Command::Boundary { graph_file } => match load_graph(&graph_file) {
            Ok(g) => {
                print!("{}", boundary::<Scalar>(&g));
                ExitCode::from(0)
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Homology { complex, matrices } => {
            let (params, max_edges) = complex.params();
            let top = max_edges.min(params.edge_bound());
            if matrices {
                for e in 1..=top {
                    let m = boundary_matrix(&params, e);
                    if m.rows.is_empty() && m.cols.is_empty() {
                        continue;
                    }
                    println!("matrix e={} ({} x {})", e, m.rows.len(), m.cols.len());
                    for (r, c, v) in m.coordinate_form() {
                        println!("{r} {c} {v}");
                    }
                }
            }
            println!("edges dim rank_out rank_in betti");
            for d in homology_ranks(&params, max_edges) {
                let rank_in = d.rank_in.map_or("?".into(), |r| r.to_string());
                let betti = d.betti.map_or("truncated".into(), |b| b.to_string());
                println!("{} {} {} {} {}", d.edges, d.dim, d.rank_out, rank_in, betti);
            }
            if top < params.edge_bound() {
                println!(
                    "note: complex extends to {} edges; output truncated at {}",
                    params.edge_bound(),
                    top
                );
            }
            ExitCode::from(0)
        }
        Command::Cycle { algebra, complex } => {
            let (params, max_edges) = complex.params();
            match load_algebra(&algebra) {
                Ok(ZooAlgebra::Rational(spec)) => run_cycle(&spec, params, max_edges),
                Ok(ZooAlgebra::Dual(spec)) => run_cycle(&spec, params, max_edges),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::VerifyCycle { algebra, complex } => {
            let (params, max_edges) = complex.params();
            match load_algebra(&algebra) {
                Ok(ZooAlgebra::Rational(spec)) => run_verify_cycle(&spec, params, max_edges),
                Ok(ZooAlgebra::Dual(spec)) => run_verify_cycle(&spec, params, max_edges),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Expression { graph_file } => match load_graph(&graph_file) {
            Ok(g) => {
                println!("{}", expression(&g));
                ExitCode::from(0)
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}

//! Thin command-line front end: each subcommand parses its inputs, calls
//! one library entry point, and prints the result. Exit codes: 0 for
//! success, 1 when a verification run completes but the mathematics
//! disagrees, 2 for usage or input problems.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use latreg::catalog::{all_entries, entry_json};
use latreg::classify::run_classify_2d;
use latreg::polytope::{lattice_map_json, polytope_from_json};
use latreg::symmetry::{are_congruent, is_lattice_regular, symmetry_group};
use latreg::verify::run_verify_theorem;
use latreg::{Error, Polytope, Result};

#[derive(Parser)]
#[command(name = "latreg", version, about = "exact tools for lattice-regular convex lattice polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog of lattice-regular polytopes up to a dimension
    Catalog {
        /// Largest dimension to include (1 to 6)
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the normalized lattice volume of a polytope
    Volume {
        /// Polytope as JSON: {"ambient_dim": n, "vertices": [[..], ..]}
        file: PathBuf,
    },
    /// Test a polytope for lattice-regularity
    Regular { file: PathBuf },
    /// Test whether a polytope is elementary, i.e. not a lattice multiple
    Elementary { file: PathBuf },
    /// Test two polytopes for lattice-congruence
    Congruent {
        a: PathBuf,
        b: PathBuf,
        /// Print the witnessing lattice-affine map as JSON
        #[arg(long)]
        emit_map: bool,
    },
    /// Compute the lattice symmetry group of a polytope
    Symmetries {
        file: PathBuf,
        /// Print every group element as JSON
        #[arg(long)]
        emit_matrices: bool,
    },
    /// Check the classification end to end: every catalog entry
    /// lattice-regular and elementary with its expected invariants, all
    /// same-dimension pairs non-congruent, negative controls failing
    VerifyTheorem {
        /// Largest dimension to check (1 to 6)
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        /// Worker threads; 0 means one per CPU
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also write the full report, timings included, to this path
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Sweep every convex lattice polygon in [-R, R]^2 and match the
    /// elementary lattice-regular ones against the catalog
    #[command(name = "classify-2d")]
    Classify2d {
        /// Half-width of the box (at least 2; cost grows steeply with R)
        #[arg(long, default_value_t = 2)]
        radius: i64,
        /// Also write the full report, timings included, to this path
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("latreg: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Polytope> {
    polytope_from_json(&fs::read_to_string(path)?)
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Catalog { max_dim, format } => {
            if !(1..=6).contains(&max_dim) {
                return Err(Error::Argument(format!(
                    "the catalog is built for dimensions 1..=6, got {max_dim}"
                )));
            }
            let entries = all_entries(max_dim);
            match format {
                Format::Text => {
                    for e in &entries {
                        println!(
                            "{:<14} {:<14} dim {}  volume {:>5}  flags {:>5}",
                            e.label(),
                            e.schlafli,
                            e.dim,
                            e.expected_volume,
                            e.expected_flag_count,
                        );
                    }
                }
                Format::Json => {
                    let all: Vec<_> = entries.iter().map(entry_json).collect();
                    println!("{}", serde_json::to_string_pretty(&serde_json::Value::Array(all))?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Volume { file } => {
            println!("{}", load(&file)?.lattice_volume());
            Ok(ExitCode::SUCCESS)
        }
        Command::Regular { file } => {
            let (regular, _) = is_lattice_regular(&load(&file)?);
            println!("{}", if regular { "lattice-regular" } else { "not lattice-regular" });
            Ok(ExitCode::SUCCESS)
        }
        Command::Elementary { file } => {
            let elementary = load(&file)?.is_elementary();
            println!("{}", if elementary { "elementary" } else { "not elementary" });
            Ok(ExitCode::SUCCESS)
        }
        Command::Congruent { a, b, emit_map } => {
            match are_congruent(&load(&a)?, &load(&b)?) {
                Some(map) => {
                    println!("congruent");
                    if emit_map {
                        println!("{}", serde_json::to_string_pretty(&lattice_map_json(&map))?);
                    }
                }
                None => println!("not congruent"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Symmetries { file, emit_matrices } => {
            let group = symmetry_group(&load(&file)?);
            println!("order {}", group.order());
            if emit_matrices {
                let maps: Vec<_> = group.elements().iter().map(lattice_map_json).collect();
                println!("{}", serde_json::to_string_pretty(&serde_json::Value::Array(maps))?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTheorem { max_dim, jobs, report } => {
            let result = run_verify_theorem(max_dim, jobs)?;
            print!("{}", result.render());
            if let Some(path) = report {
                fs::write(&path, serde_json::to_string_pretty(&result.to_json())?)?;
            }
            Ok(if result.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Classify2d { radius, report } => {
            let result = run_classify_2d(radius)?;
            print!("{}", result.render());
            if let Some(path) = report {
                fs::write(&path, serde_json::to_string_pretty(&result.to_json())?)?;
            }
            Ok(if result.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

//! `ksym`: batch front end for exact k-symplectic linear algebra.
//!
//! Every invocation reads JSON inputs (files or named fixtures), performs
//! one operation, and prints a single JSON document. Exit codes: 0 success
//! (including tri-state "unknown" answers), 1 domain errors, 2 parse and
//! schema errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ksymplectic_cli::{run, CliError};

#[derive(Parser)]
#[command(name = "ksym", version, about = "Exact k-symplectic linear algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpaceArg {
    /// Space file (JSON)
    #[arg(long, value_name = "FILE", conflicts_with = "fixture")]
    space: Option<PathBuf>,
    /// Built-in space: r3-2symp | r6-2symp | r6-5symp | canonical:n,k
    #[arg(long, value_name = "NAME")]
    fixture: Option<String>,
}

#[derive(Args)]
struct SecondSpaceArg {
    /// Second space file (JSON)
    #[arg(long, value_name = "FILE", conflicts_with = "fixture2")]
    space2: Option<PathBuf>,
    /// Built-in second space, same names as --fixture
    #[arg(long, value_name = "NAME")]
    fixture2: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a k-symplectic space
    Validate {
        #[command(flatten)]
        space: SpaceArg,
    },
    /// Kernel of a form of a space (--level) or of an arbitrary matrix (--map)
    Kernel {
        #[command(flatten)]
        space: SpaceArg,
        /// Form index r (1-based)
        #[arg(long)]
        level: Option<usize>,
        /// Matrix file; kernel of this matrix instead of a form
        #[arg(long, value_name = "FILE")]
        map: Option<PathBuf>,
    },
    /// The level-l orthogonal complement of a subspace
    Orth {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_name = "FILE")]
        subspace: PathBuf,
        #[arg(long)]
        level: usize,
    },
    /// Classify a subspace: isotropic, coisotropic, lagrangian (tri-state)
    Classify {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_name = "FILE")]
        subspace: PathBuf,
        #[arg(long)]
        level: usize,
    },
    /// Grow an isotropic subspace to one equal to its own complement
    Complete {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_name = "FILE")]
        subspace: PathBuf,
        #[arg(long)]
        level: usize,
    },
    /// Isotropic direct-sum complement of a self-orthogonal subspace
    Complement {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_name = "FILE")]
        subspace: PathBuf,
        #[arg(long)]
        level: usize,
    },
    /// Search for a polarization
    Polarize {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Darboux frame of a polarized space
    Darboux {
        #[command(flatten)]
        space: SpaceArg,
        /// The polarization
        #[arg(long, value_name = "FILE")]
        subspace: PathBuf,
    },
    /// Does a matrix map the first space symplectomorphically onto the second?
    Symplecto {
        #[command(flatten)]
        space: SpaceArg,
        #[command(flatten)]
        space2: SecondSpaceArg,
        #[arg(long, value_name = "FILE")]
        map: PathBuf,
    },
    /// Graph criterion: both sides evaluated independently
    GraphCheck {
        #[command(flatten)]
        space: SpaceArg,
        #[command(flatten)]
        space2: SecondSpaceArg,
        #[arg(long, value_name = "FILE")]
        map: PathBuf,
    },
    /// Is a polynomial section closed?
    Closed {
        #[arg(long, value_name = "FILE")]
        section: PathBuf,
    },
    /// Hamilton-Jacobi constancy check
    Hj {
        #[arg(long, value_name = "FILE")]
        hamiltonian: PathBuf,
        /// k potentials over the base chart
        #[arg(long, value_name = "FILE", conflicts_with = "section")]
        potentials: Option<PathBuf>,
        /// A raw section; must be closed
        #[arg(long, value_name = "FILE")]
        section: Option<PathBuf>,
    },
    /// Generate a seeded random space with its witness matrix
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the randomized invariant suite
    PropSuite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        k_max: usize,
    },
}

fn execute(command: Command) -> Result<(serde_json::Value, bool), CliError> {
    match command {
        Command::Validate { space } => {
            let s = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
            Ok((run::cmd_validate(&s), true))
        }
        Command::Kernel { space, level, map } => match (map, level) {
            (Some(path), None) => Ok((run::cmd_kernel_of_map(&path)?, true)),
            (None, Some(r)) => {
                let s = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
                Ok((run::cmd_kernel_of_form(&s, r)?, true))
            }
            _ => Err(CliError::Schema(
                "kernel needs either --map FILE, or a space with --level R".into(),
            )),
        },
        Command::Orth {
            space,
            subspace,
            level,
        } => {
            let s = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
            let w = run::load_subspace(&subspace, &s)?;
            Ok((run::cmd_orth(&s, &w, level)?, true))
        }
        Command::Classify {
            space,
            subspace,
            level,
        } => {
            let s = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
            let w = run::load_subspace(&subspace, &s)?;
            Ok((run::cmd_classify(&s, &w, level)?, true))
        }
        Command::Complete {
            space,
            subspace,
            level,
        } => {
            let s = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
            let w = run::load_subspace(&subspace, &s)?;
            Ok((run::cmd_complete(&s, &w, level)?, true))
        }
        Command::Complement {
            space,
            subspace,
            level,
        } => {
            let s = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
            let w = run::load_subspace(&subspace, &s)?;
            Ok((run::cmd_complement(&s, &w, level)?, true))
        }
        Command::Polarize { space, seed } => {
            let s = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
            Ok((run::cmd_polarize(&s, seed), true))
        }
        Command::Darboux { space, subspace } => {
            let s = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
            let w = run::load_subspace(&subspace, &s)?;
            Ok((run::cmd_darboux(&s, &w)?, true))
        }
        Command::Symplecto { space, space2, map } => {
            let s1 = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
            let s2 = run::load_space(space2.space2.as_deref(), space2.fixture2.as_deref())?;
            let p = run::load_matrix(&map)?;
            Ok((run::cmd_symplecto(&s1, &s2, &p)?, true))
        }
        Command::GraphCheck { space, space2, map } => {
            let s1 = run::load_space(space.space.as_deref(), space.fixture.as_deref())?;
            let s2 = run::load_space(space2.space2.as_deref(), space2.fixture2.as_deref())?;
            let p = run::load_matrix(&map)?;
            Ok((run::cmd_graph_check(&s1, &s2, &p)?, true))
        }
        Command::Closed { section } => Ok((run::cmd_closed(&section)?, true)),
        Command::Hj {
            hamiltonian,
            potentials,
            section,
        } => Ok((
            run::cmd_hj(&hamiltonian, potentials.as_deref(), section.as_deref())?,
            true,
        )),
        Command::Gen { n, k, seed } => Ok((run::cmd_gen(n, k, seed)?, true)),
        Command::PropSuite {
            seed,
            trials,
            n_max,
            k_max,
        } => {
            if n_max == 0 || k_max == 0 {
                return Err(CliError::Schema(
                    "prop-suite requires positive --n-max and --k-max".into(),
                ));
            }
            Ok(run::cmd_prop_suite(seed, trials, n_max, k_max))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok((doc, ok)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&err.to_json()).expect("serializable")
            );
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

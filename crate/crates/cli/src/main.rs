use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use jmarked::{parse_input, Error, PairMode, TermOrder};

mod commands;

/// Marked bases over strongly stable monomial ideals.
#[derive(Parser, Debug)]
#[command(name = "jmarked", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// Largest degree examined (default depends on the command).
    #[arg(long, global = true, value_name = "N")]
    pub max_degree: Option<u32>,
    /// Term order used for head comparisons: drl or lex.
    #[arg(long, global = true, default_value = "drl", value_parser = parse_order)]
    pub order: TermOrder,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Which S-pairs to examine: all or minimal.
    #[arg(long, global = true, default_value = "minimal", value_parser = parse_pairs)]
    pub pairs: PairMode,
    /// Parameter naming map for scheme commands.
    #[arg(long, global = true, value_name = "FILE")]
    pub naming: Option<PathBuf>,
    /// Worker threads for parallel reductions (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    /// Largest minor order computed by `minors`.
    #[arg(long, global = true, value_name = "N")]
    pub minor_limit: Option<usize>,
    /// Enumerate every minor instead of the bordered ones.
    #[arg(long, global = true)]
    pub full_minors: bool,
}

fn parse_order(s: &str) -> Result<TermOrder, String> {
    s.parse()
}

fn parse_pairs(s: &str) -> Result<PairMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Check that J is strongly stable.
    StableCheck { input: Input },
    /// Hilbert function of S/J (and of S/I when the input has `I:`).
    Hilbert { input: Input },
    /// Print the reduction lists V_m.
    Vm { input: Input },
    /// J-normal form of every query.
    Nf { input: Input },
    /// S-polynomials of the selected pairs and their reductions.
    Spoly { input: Input },
    /// Decide whether G is a J-marked basis.
    BasisCheck { input: Input },
    /// Lift the syzygies of J to syzygies of G.
    LiftSyzygy { input: Input },
    /// Membership of every query in the ideal generated by G.
    Member { input: Input },
    /// Equations of the marked scheme.
    Scheme { input: Input },
    /// Tangent space of the marked scheme at the origin.
    Tangent { input: Input },
    /// Minors of the coefficient matrices A_m.
    Minors { input: Input },
    /// Section of the marked scheme by a term order.
    Stratum { input: Input },
    /// Whether the ideal of the `I:` section has a J-marked basis.
    FamilyMember { input: Input },
}

pub type Input = PathBuf;

impl Command {
    fn input(&self) -> &Path {
        match self {
            Command::StableCheck { input }
            | Command::Hilbert { input }
            | Command::Vm { input }
            | Command::Nf { input }
            | Command::Spoly { input }
            | Command::BasisCheck { input }
            | Command::LiftSyzygy { input }
            | Command::Member { input }
            | Command::Scheme { input }
            | Command::Tangent { input }
            | Command::Minors { input }
            | Command::Stratum { input }
            | Command::FamilyMember { input } => input,
        }
    }
}

/// Outcome of a command: the answer was yes (0) or no (1).
pub enum Outcome {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.flags.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let path = cli.command.input();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let result = parse_input(&text).and_then(|file| commands::run(&cli.command, &cli.flags, &file));
    match result {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

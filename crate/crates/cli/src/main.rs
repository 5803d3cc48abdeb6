use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "ginlex",
    version,
    about = "Generic initial ideals and partial elimination ideals of projective curves"
)]
struct Cli {
    /// Field to compute in, `qq` or `gf <prime>`; overrides the file header.
    #[arg(long, global = true, env = "GINLEX_FIELD")]
    field: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct GinArgs {
    /// Seed of the first random coordinate change.
    #[arg(long, env = "GINLEX_SEED")]
    seed: Option<u64>,
    /// Seed of the second change; defaults to one past the first seed.
    #[arg(long)]
    seed2: Option<u64>,
    /// Upper bound for the entries of the change matrices.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    bound: Option<u64>,
    /// Abort when a Gröbner basis computation passes this degree.
    #[arg(long)]
    max_degree: Option<u32>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum OrderArg {
    Glex,
    Grevlex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis, printed as an ideal file.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
    },
    /// Generic initial ideal, one minimal generator per line.
    Gin {
        file: PathBuf,
        #[command(flatten)]
        gin: GinArgs,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
    },
    /// Partial elimination ideal K_i in generic coordinates.
    Pei {
        file: PathBuf,
        #[arg(long)]
        level: u32,
        /// Build K_i from basis elements with x0-degree exactly i.
        #[arg(long)]
        generic: bool,
        /// Use the coordinates of the file instead of a random change.
        #[arg(long)]
        no_change: bool,
        #[command(flatten)]
        gin: GinArgs,
    },
    /// Hilbert function values H(R/I, 0..=m).
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        upto: u32,
        /// Also print the values of the linear-algebra oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Regularity report for a curve.
    Report {
        file: PathBuf,
        /// Point for a tangent space dimension, e.g. "0,0,0,1".
        #[arg(long = "tangent-point", allow_hyphen_values = true)]
        tangent_points: Vec<String>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        gin: GinArgs,
    },
    /// Rational normal curve, optionally projected from secant points.
    Rnc {
        #[arg(long)]
        dim: usize,
        /// Center p(s1) + t p(s2), given as "s1,s2,t".
        #[arg(long = "project-secant", allow_hyphen_values = true)]
        secants: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ginlex: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}

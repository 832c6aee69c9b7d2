use std::path::PathBuf;
use std::process::ExitCode;

use beg_cli::{Format, ImageMode};
use beg_core::braid::{Variant, DEFAULT_GHZ_MAX_LEN};
use beg_core::group::DEFAULT_CAP;
use beg_core::{LambdaBranch, Nu};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "beg", version, about = "Verify structure results for the groups E^nu_n and their braid representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
    /// Largest group to enumerate.
    #[arg(long, global = true, env = "BEG_ELEMENT_CAP")]
    cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Lambda1,
    Lambda2,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate E^nu_n and check its classification.
    Classify {
        #[arg(short)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        nu: Nu,
    },
    /// Rebuild E^nu_n as a central product of D, Q, Z2 and Z4.
    Decompose {
        #[arg(short)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        nu: Nu,
    },
    /// Check the table of E groups against real and complex Pauli groups.
    Table1,
    /// Compare E^nu_{2k}, E^nu_{2k+1} with the k-qubit Pauli groups.
    Compare {
        #[arg(short)]
        k: usize,
    },
    /// Check the nice error basis of the standard representation.
    NiceBasis {
        #[arg(short)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        nu: Nu,
        #[arg(long, value_enum, default_value_t = BranchArg::Lambda1)]
        branch: BranchArg,
    },
    /// Check the braid representation on k qubits and its finite image.
    Braid {
        #[arg(short)]
        k: usize,
        #[arg(long, default_value = "unscaled")]
        variant: Variant,
        /// Skip the image enumeration.
        #[arg(long)]
        no_image: bool,
    },
    /// Search for a braid word producing a GHZ state.
    Ghz {
        #[arg(short)]
        k: usize,
        #[arg(long, default_value = "unscaled")]
        variant: Variant,
        #[arg(long, default_value_t = DEFAULT_GHZ_MAX_LEN)]
        max_len: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli.cap.unwrap_or(DEFAULT_CAP);
    let result = match cli.command {
        Command::Classify { n, nu } => beg_cli::cmd_classify(n, nu, cap),
        Command::Decompose { n, nu } => beg_cli::cmd_decompose(n, nu, cap),
        Command::Table1 => beg_cli::cmd_table1(cap),
        Command::Compare { k } => beg_cli::cmd_compare(k, cap),
        Command::NiceBasis { n, nu, branch } => {
            let branch = match branch {
                BranchArg::Lambda1 => LambdaBranch::One,
                BranchArg::Lambda2 => LambdaBranch::Two,
            };
            beg_cli::cmd_nice_basis(n, nu, branch)
        }
        Command::Braid { k, variant, no_image } => {
            let image = if no_image { ImageMode::Skip } else { ImageMode::Capped { cap, explicit: cli.cap.is_some() } };
            beg_cli::cmd_braid(k, variant, image)
        }
        Command::Ghz { k, variant, max_len } => beg_cli::cmd_ghz(k, variant, max_len),
    };
    let code = beg_cli::exit_code(&result);
    match result {
        Ok(report) => {
            let format = match cli.format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            };
            let out = beg_cli::render(&report, format);
            match &cli.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, out) {
                        eprintln!("beg: cannot write {}: {e}", path.display());
                        return ExitCode::from(beg_cli::EXIT_USAGE as u8);
                    }
                }
                None => print!("{out}"),
            }
        }
        Err(e) => eprintln!("beg: {e}"),
    }
    ExitCode::from(code as u8)
}

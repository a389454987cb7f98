//! `bibrackets`: evaluate bi-brackets, expand products and deformed
//! brackets, run the modular identities and the relation searches.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "bibrackets",
    version,
    about = "Exact q-series algebra of bi-brackets"
)]
struct Cli {
    #[command(flatten)]
    format: FormatFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FormatFlags {
    /// JSON object {command, params, precision, results, stable}
    #[arg(long, global = true, conflicts_with_all = ["csv", "latex"])]
    json: bool,
    /// CSV table with a header row
    #[arg(long, global = true, conflicts_with = "latex")]
    csv: bool,
    /// LaTeX table, one row per quantity
    #[arg(long, global = true)]
    latex: bool,
}

impl FormatFlags {
    fn format(&self) -> Format {
        match (self.json, self.csv, self.latex) {
            (true, _, _) => Format::Json,
            (_, true, _) => Format::Csv,
            (_, _, true) => Format::Latex,
            _ => Format::Text,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ProductMode {
    Stuffle,
    Shuffle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BracketMode {
    Ast,
    Sh,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SequenceKind {
    Dprime,
    D,
    Gen,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VerifyTarget {
    ModularSuite,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Convention {
    YEnded,
    YStarting,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// q-expansion of a bi-bracket or a combination, e.g. "[2,1 | 1,0]"
    Eval {
        target: String,
        #[arg(long, default_value_t = 20)]
        prec: usize,
        /// Use the slow direct enumeration
        #[arg(long)]
        oracle: bool,
    },
    /// Image under the partition relation
    Pmap { target: String },
    /// Stuffle or shuffle product of two bi-words
    Product {
        #[arg(long, value_enum)]
        mode: ProductMode,
        u: String,
        v: String,
        /// Also check the product of the series to this precision
        #[arg(long)]
        prec: Option<usize>,
    },
    /// Stuffle or shuffle bracket of an index list, e.g. "3,1,2"
    Bracket {
        #[arg(long, value_enum)]
        mode: BracketMode,
        indices: String,
        #[arg(long)]
        prec: Option<usize>,
    },
    /// Eisenstein series G_k = beta_k + [k]
    Eisenstein {
        k: u32,
        #[arg(long, default_value_t = 20)]
        prec: usize,
    },
    /// Rankin-Cohen bracket (G_k, G_l)_n
    RankinCohen {
        k: u32,
        l: u32,
        n: u32,
        #[arg(long, default_value_t = 20)]
        prec: usize,
    },
    /// Batch verifications
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long, default_value_t = 60)]
        prec: usize,
    },
    /// Lower bounds for graded dimensions of a generator family
    Dims {
        /// sh, ast, plain or bi:D
        #[arg(long, default_value = "sh")]
        family: String,
        #[arg(long)]
        max_weight: u32,
        #[arg(long)]
        prec: Option<usize>,
        /// Exit 1 if the values move with more coefficients
        #[arg(long)]
        strict: bool,
    },
    /// Dimensions of spans of double shuffle differences
    DsCounts {
        /// eds, fds or rds; all three when omitted
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        max_weight: u32,
        #[arg(long, value_enum, default_value = "y-ended")]
        convention: Convention,
    },
    /// Kernel basis of the relations among a family up to a weight
    Relations {
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value = "plain")]
        family: String,
        #[arg(long)]
        prec: Option<usize>,
        #[arg(long)]
        strict: bool,
    },
    /// Writes a combination in terms of 1 and all brackets of weight <= K
    Express {
        target: String,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        prec: Option<usize>,
        #[arg(long)]
        strict: bool,
    },
    /// Conjectural dimension sequences
    Sequences {
        #[arg(long, value_enum)]
        kind: SequenceKind,
        #[arg(long)]
        max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok((report, verified)) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(
                std::io::stdout(),
                "{}",
                report.render(cli.format.format()).trim_end()
            );
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! `shelfbraid`: command line access to the braid shelf toolkit.
//!
//! Exit status: 0 on success, 1 for a negative decision, 2 for usage and
//! parse errors, 3 when a cap is exceeded, 4 when an internal consistency
//! check fails.

mod commands;
mod reproduce;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use shelfbraid::engine::DEFAULT_STEP_CAP;
use shelfbraid::Error;

use report::Report;

#[derive(Parser)]
#[command(name = "shelfbraid", version, about = "Computations in the braid shelf and its quotients")]
struct Cli {
    /// Print {"op", "inputs", "result", "certificates"} as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on handle reduction steps.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_CAP)]
    step_cap: usize,

    /// Cap on term sizes searched when synthesizing terms.
    #[arg(long, global = true, default_value_t = 7)]
    size_cap: usize,

    #[command(subcommand)]
    command: Command,
}

/// Settings shared by all commands.
#[derive(Clone, Copy)]
pub struct Caps {
    pub step: usize,
    pub size: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Word problem, braid order and related engines.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// The shelf operation on braids and the coloring action.
    #[command(subcommand)]
    Shelf(ShelfCmd),
    /// Special braids: recognition, decomposition, terms.
    #[command(subcommand)]
    Special(SpecialCmd),
    /// The permutation shelf.
    #[command(subcommand)]
    Perm(PermCmd),
    /// The Burau matrix shelf.
    #[command(subcommand)]
    Burau(BurauCmd),
    /// Laver tables.
    #[command(subcommand)]
    Laver(LaverCmd),
    /// Extended braids `[word | p]`.
    #[command(subcommand)]
    Eb(EbCmd),
    /// Reproduce the worked examples and report pass/fail for each.
    PaperExamples,
}

#[derive(Args)]
pub struct Word {
    /// Braid word: signed generator indices, e.g. "1 -2 3".
    #[arg(allow_hyphen_values = true)]
    pub word: String,
}

#[derive(Args)]
pub struct WordPair {
    #[arg(allow_hyphen_values = true)]
    pub first: String,
    #[arg(allow_hyphen_values = true)]
    pub second: String,
}

#[derive(Subcommand)]
pub enum BraidCmd {
    /// Decide equality of two braid words.
    Equal(WordPair),
    /// Sigma-classification by handle reduction.
    Classify(Word),
    /// Compare two braids in the braid order.
    Compare(WordPair),
    /// Handle reduction.
    Reduce(Word),
    /// Subword reversing to `u v^-1`, or `N^-1 P` with --left.
    Reverse {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        left: bool,
    },
    /// Artin action images of the generators.
    Fingerprint(Word),
}

#[derive(Subcommand)]
pub enum ShelfCmd {
    /// `a ▷ b = a sh(b) σ1 sh(a)^-1`.
    Op(WordPair),
    /// `sh(b)^-1 σ1 sh(a) b`.
    Opposite(WordPair),
    /// Right power `a^[m]`, or left power `a_[m]` with --left.
    Power {
        #[arg(allow_hyphen_values = true)]
        word: String,
        m: usize,
        #[arg(long)]
        left: bool,
    },
    /// The `x` with `b ▷ x = c`.
    Divide(WordPair),
    /// Whether the braid lies in `B_n`.
    Member {
        #[arg(allow_hyphen_values = true)]
        word: String,
        n: u32,
    },
    /// Act on a color sequence, e.g. "(1, 1, 1)" or just its length "3".
    Act {
        colors: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Subcommand)]
pub enum SpecialCmd {
    /// Recognize a special braid and give a term for it.
    Check(Word),
    /// Special decomposition `N^-1 P`.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Length of the color sequences (raised to the width if needed).
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Evaluate a term such as "((1 > 1) > 1)".
    Term { term: String },
    /// Least depth of a term evaluating to the braid.
    Complexity {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 4)]
        depth_cap: usize,
    },
    /// Decide whether a braid is simple and list its positive special factors.
    Simple(Word),
    /// Enumerate words acting on a color sequence and sort those defined.
    ProbeLaver { colors: String, max_len: usize },
}

#[derive(Subcommand)]
pub enum PermCmd {
    /// `f ▷ g = f sh(g) s1 sh(f)^-1`.
    Op { f: String, g: String },
    /// Permutation of a braid word.
    Of(Word),
    /// `f^-1(1)`.
    Class { f: String },
    /// Table of `f ▷ g` for the given permutations.
    Table { perms: Vec<String> },
}

#[derive(Subcommand)]
pub enum BurauCmd {
    /// Burau matrix of a braid word.
    Of(Word),
    /// `A ▷ B`; matrices as JSON rows of polynomials, or braid words.
    Op {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Determinant.
    Det {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Sum of the superdiagonal entries.
    Shtr {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Subcommand)]
pub enum LaverCmd {
    /// CSV of `A_n`, or of the cyclic table on `n` elements with --cyclic.
    Table {
        n: u32,
        #[arg(long)]
        cyclic: bool,
    },
    /// Period of row `x` of `A_n`.
    Period { n: u32, x: u32 },
    /// Reduce `A_n` modulo `2^(n-1)`.
    Project { n: u32 },
    /// Check left self-distributivity exhaustively.
    Check {
        n: u32,
        #[arg(long)]
        cyclic: bool,
    },
}

#[derive(Subcommand)]
pub enum EbCmd {
    /// Product `[b, p][c, q] = [b sh^p(c), p + q]`.
    Mul(WordPair),
    /// The shelf operation on extended braids.
    Op(WordPair),
    /// Equality of classes.
    Equal(WordPair),
    /// Ultrametric distance.
    Distance(WordPair),
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } | Error::ElementTooLong { .. } => 3,
        Error::Inconsistent(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let caps = Caps { step: cli.step_cap, size: cli.size_cap };
    let outcome = match cli.command {
        Command::Braid(c) => commands::braid(c, caps),
        Command::Shelf(c) => commands::shelf(c),
        Command::Special(c) => commands::special(c, caps),
        Command::Perm(c) => commands::perm(c),
        Command::Burau(c) => commands::burau(c),
        Command::Laver(c) => commands::laver(c),
        Command::Eb(c) => commands::eb(c),
        Command::PaperExamples => reproduce::run(caps),
    };
    match outcome {
        Ok(report) => {
            let out = if cli.json {
                serde_json::to_string_pretty(&report.to_json()).expect("serializable")
            } else {
                report.to_text()
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            if report.is_positive() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

pub type Outcome = Result<Report, Error>;

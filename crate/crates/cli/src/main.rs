//! `neutralgraph`: generate, transform and classify graphs by exact degree
//! assortativity.
//!
//! Exit status is 0 on success, 1 when `verify-claims` reports a
//! counterexample and 2 on usage or input errors. Sweeps run on the rayon
//! pool; set `RAYON_NUM_THREADS` to pin the thread count.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "neutralgraph", version, about)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    G6,
    Edges,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InFormat {
    /// graph6 if the input is a single token, otherwise an edge list
    Auto,
    G6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Subdivide,
    /// single-edge division
    Sed,
    Triangle,
    Leafconnect,
    Ominus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumFamily {
    Connected,
    Trees,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumReport {
    Neutral,
    Count,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family member or a certified neutral graph.
    #[command(group = clap::ArgGroup::new("source").required(true))]
    Gen {
        /// e.g. spider(2,2,2), cycle(9), circulant(8;1,2)
        #[arg(long, group = "source")]
        family: Option<String>,
        #[arg(long, value_name = "N", group = "source")]
        neutral_tree: Option<usize>,
        #[arg(long, value_name = "N", group = "source")]
        neutral_nontree: Option<usize>,
        #[arg(long, value_enum, default_value = "edges")]
        format: OutFormat,
        /// Base graphs the stretch search may examine.
        #[arg(long, default_value_t = neutralgraph::Budget::DEFAULT.get())]
        budget: u64,
    },
    /// Print m, P, S, Q, N, D, r and the classification of a graph.
    Check {
        /// Input file; standard input when omitted.
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        input: InFormat,
    },
    /// Apply one operation to a graph.
    Transform {
        #[arg(long, value_enum)]
        op: Op,
        /// Vertices inserted per edge by `subdivide`.
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Edge `u-v` for `sed`; defaults to the smallest edge.
        #[arg(long)]
        edge: Option<String>,
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        input: InFormat,
        #[arg(long, value_enum, default_value = "edges")]
        format: OutFormat,
    },
    /// Sweep all labeled graphs of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "connected")]
        family: EnumFamily,
        #[arg(long, value_enum, default_value = "neutral")]
        report: EnumReport,
    },
    /// Check the claim registry on its finite families.
    VerifyClaims {
        /// `all` or a comma-separated list such as `L1,L6,T4`.
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value_t = neutralgraph::Budget::DEFAULT.get())]
        budget: u64,
        #[arg(long, default_value_t = neutralgraph::VerifyConfig::DEFAULT_SEED)]
        seed: u64,
        /// Write the full JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Which orders have certified neutral trees and non-trees.
    Coverage {
        #[arg(long, default_value_t = 60)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        min_order: usize,
        #[arg(long, default_value_t = neutralgraph::Budget::DEFAULT.get())]
        budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match cli.command {
        Command::Gen {
            family,
            neutral_tree,
            neutral_nontree,
            format,
            budget,
        } => commands::gen(family, neutral_tree, neutral_nontree, format, budget, json),
        Command::Check { file, input } => commands::check(file, input, json),
        Command::Transform {
            op,
            s,
            edge,
            file,
            input,
            format,
        } => commands::transform(op, s, edge, file, input, format, json),
        Command::Enumerate {
            order,
            family,
            report,
        } => commands::enumerate(order, family, report, json),
        Command::VerifyClaims {
            claims,
            budget,
            seed,
            out,
        } => commands::verify_claims(&claims, budget, seed, out, json),
        Command::Coverage {
            max_order,
            min_order,
            budget,
        } => commands::coverage(min_order, max_order, budget, json),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

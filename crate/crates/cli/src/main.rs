mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::InputError;

/// Discrete curves and surfaces on graphs.
#[derive(Debug, Parser)]
#[command(name = "dcx", version, about)]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Complex file in `.dcx` format.
    pub file: PathBuf,
    /// Restrict to the region spanned by these vertices (comma separated).
    #[arg(long)]
    pub region: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    /// Cell and edge pseudo nodes, exactly two components expected.
    Pseudo,
    /// Original vertices only, discrete curves, at least two components.
    Strict,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    B,
    C,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Longest cycle or arc (in vertices) considered.
    #[arg(long, default_value_t = 8)]
    pub budget: usize,
    /// Longest deformation sequence, in steps.
    #[arg(long, default_value_t = 12)]
    pub max_steps: usize,
    /// States explored per search before giving up.
    #[arg(long, default_value_t = 50_000)]
    pub max_states: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the graph, the surface-cells and any 3-cells.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Classify a point or a vertex sequence.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "curve", required_unless_present = "curve")]
        vertex: Option<String>,
        #[arg(long)]
        curve: Option<String>,
    },
    /// Print the default surface-cells of the file's graph.
    U2Default {
        #[command(flatten)]
        input: Input,
    },
    /// Boundary of the region.
    Boundary {
        #[command(flatten)]
        input: Input,
    },
    /// Separation of the region by a closed curve.
    Jordan {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        curve: String,
        #[arg(long, value_enum, default_value = "pseudo")]
        mode: ModeArg,
    },
    /// Separation check for every closed curve up to a length.
    JordanSuite {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[arg(long, value_enum, default_value = "pseudo")]
        mode: ModeArg,
    },
    /// Budgeted simply-connectedness check.
    SimplyConnected {
        #[command(flatten)]
        input: Input,
        #[arg(value_enum)]
        variant: VariantArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run both simply-connectedness checks and compare them per cycle.
    Crosscheck {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Search for a deformation between two paths.
    Homotopy {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Treat both vertex lists as closed cycles.
        #[arg(long)]
        closed: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Search for a contraction of a cycle onto one of its points.
    Contract {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cycle: String,
        #[arg(long)]
        point: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Write a generated fixture.
    Generate {
        /// grid, torus-grid, cube, octahedron, moebius-strip or bowtie
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let echo = std::iter::once("dcx".to_string())
        .chain(argv.iter().skip(1).cloned())
        .collect::<Vec<_>>()
        .join(" ");
    match commands::run(&cli, echo) {
        Ok(commands::Output::Report(report)) => {
            if cli.json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::from(report.exit_code as u8)
        }
        Ok(commands::Output::Raw(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

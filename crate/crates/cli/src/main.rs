use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tripartite::analysis::TrackedQuantity;
use tripartite::channel::Temperature;
use tripartite::states::StateBranch;
use tripartite_cli::{cmd_critical, cmd_plot, cmd_sweep, figures, CliError, SweepSpec};

#[derive(Parser)]
#[command(name = "tripartite", version, about = "GHZ and W states under independent thermal reservoirs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate quantities on a uniform γt grid.
    Sweep {
        #[arg(long)]
        branch: StateBranch,
        /// Mean photon number; repeat for several curves, or `inf`.
        #[arg(long, required = true)]
        nbar: Vec<Temperature>,
        #[arg(long)]
        tmax: f64,
        #[arg(long, default_value_t = 201)]
        steps: usize,
        /// negativity, fidelity, svetlichny, wwzb_p1 .. wwzb_p5; repeatable.
        #[arg(long, required = true)]
        quantity: Vec<TrackedQuantity>,
        /// Optimize Bell settings over all Bloch directions.
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Death times and the critical negativity for each n̄.
    Critical {
        #[arg(long)]
        branch: StateBranch,
        #[arg(long, required = true)]
        nbar: Vec<Temperature>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render a sweep or critical CSV as an SVG line chart.
    Plot {
        csv: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Regenerate the data and charts for all figures into a directory.
    Figures {
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep {
            branch,
            nbar,
            tmax,
            steps,
            quantity,
            extended,
            out,
        } => {
            let spec = SweepSpec {
                branch,
                temperatures: nbar,
                gamma_t_max: tmax,
                steps,
                quantities: quantity,
                extended,
            };
            cmd_sweep(&spec, &out)?;
        }
        Command::Critical { branch, nbar, out } => {
            cmd_critical(branch, &nbar, &out)?;
        }
        Command::Plot { csv, out } => cmd_plot(&csv, &out)?,
        Command::Figures { out } => {
            for path in figures::write_figures(&out)? {
                println!("{}", path.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tripartite: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dkg_cli::config::{parse_config, with_preset};
use dkg_cli::sweep::{parse_values, sweep, SweepAxis};
use dkg_cli::{run_experiment, verify, CliError, Preset, SimConfig};

#[derive(Parser)]
#[command(
    name = "dkg",
    version,
    about = "Strongly damped Klein-Gordon experiments on the torus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one simulation and write series.csv, fit.txt and energies.svg.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Override the initial data with a figure preset.
        #[arg(long)]
        preset: Option<String>,
        /// Override the output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a built-in property check: semigroup, conservation or convergence.
    Verify { subcommand: String },
    /// Run the configuration once per value of one key.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// One of dt, n, p, amplitude.
        #[arg(long)]
        axis: String,
        /// Comma-separated values.
        #[arg(long)]
        values: String,
    },
}

fn load_config(path: &PathBuf) -> Result<SimConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_config(&text)?)
}

fn execute(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Run {
            config,
            preset,
            out,
        } => {
            let mut cfg = load_config(&config)?;
            if let Some(name) = preset {
                let p: Preset = name.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
                cfg = with_preset(cfg, p)?;
            }
            if let Some(dir) = out {
                cfg.output_dir = dir;
            }
            let result = run_experiment(&cfg)?;
            let last = result.rows.last().map(|r| r.record);
            println!(
                "wrote {} rows to {}",
                result.rows.len(),
                cfg.output_dir.display()
            );
            if let Some(rec) = last {
                println!(
                    "t = {:.3}: E(psi) = {:.6e}, E(phi) = {:.6e}, Q = {:.6e}",
                    rec.t, rec.e_psi, rec.e_phi, rec.q
                );
            }
            if let Some(fit) = result.fit_phi {
                println!("E(phi) decay rate {:.4} (r2 = {:.5})", fit.alpha, fit.r2);
            }
            Ok(true)
        }
        Command::Verify { subcommand } => {
            let report = verify::verify(&subcommand)?;
            print!("{report}");
            Ok(report.passed())
        }
        Command::Sweep {
            config,
            axis,
            values,
        } => {
            let cfg = load_config(&config)?;
            let axis: SweepAxis = axis.parse()?;
            let values = parse_values(&values)?;
            let results = sweep(&cfg, axis, &values)?;
            for r in &results {
                match &r.outcome {
                    Ok(_) => println!("{axis} = {}: ok ({})", r.value, r.dir.display()),
                    Err(e) => println!("{axis} = {}: error: {e}", r.value),
                }
            }
            println!("summary: {}", cfg.output_dir.join("summary.csv").display());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

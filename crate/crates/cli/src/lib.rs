//! Experiment runner for the strongly damped Klein-Gordon simulator.
//!
//! Reads flat `key = value` configurations, runs the named presets or
//! explicit Fourier initial data, and writes `series.csv`, `fit.txt` and
//! `energies.svg`. Also hosts the verification reports and parameter sweeps
//! behind the `dkg` binary.

pub mod config;
pub mod error;
pub mod experiment;
pub mod output;
pub mod plot;
pub mod presets;
pub mod sweep;
pub mod verify;

pub use config::{parse_config, render, ConfigError, InitialData, Mode, SimConfig};
pub use error::CliError;
pub use experiment::{run_experiment, simulate, ExperimentOutput};
pub use output::CsvRow;
pub use presets::{preset, Preset};

//! Parameter sweeps: one independent run per value, executed on a worker pool.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;

use crate::config::SimConfig;
use crate::error::CliError;
use crate::experiment::{run_experiment, ExperimentOutput};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepAxis {
    Dt,
    N,
    P,
    Amplitude,
}

impl SweepAxis {
    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::Dt => "dt",
            SweepAxis::N => "n",
            SweepAxis::P => "p",
            SweepAxis::Amplitude => "amplitude",
        }
    }

    /// Copy of `base` with this axis set to `value`, written under its own subdirectory.
    fn apply(self, base: &SimConfig, value: f64) -> Result<SimConfig, CliError> {
        let mut cfg = base.clone();
        match self {
            SweepAxis::Dt => cfg.dt = value,
            SweepAxis::P => cfg.p = value,
            SweepAxis::Amplitude => cfg.amplitude = value,
            SweepAxis::N => {
                if value.fract() != 0.0 || value < 1.0 {
                    return Err(CliError::Usage(format!(
                        "n must be a positive integer, got {value}"
                    )));
                }
                cfg.n = value as usize;
            }
        }
        cfg.output_dir = base.output_dir.join(format!("{}_{value}", self.name()));
        cfg.check()?;
        Ok(cfg)
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepAxis {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dt" => Ok(SweepAxis::Dt),
            "n" => Ok(SweepAxis::N),
            "p" => Ok(SweepAxis::P),
            "amplitude" => Ok(SweepAxis::Amplitude),
            _ => Err(CliError::Usage(format!(
                "`{s}` is not a sweepable key (expected dt, n, p or amplitude)"
            ))),
        }
    }
}

pub struct SweepResult {
    pub value: f64,
    pub dir: PathBuf,
    pub outcome: Result<ExperimentOutput, CliError>,
}

pub const SUMMARY_HEADER: &str = "value,status,alpha_phi,r2_phi,alpha_gap,q_limit,message";

/// Parses a comma-separated list of numbers.
pub fn parse_values(list: &str) -> Result<Vec<f64>, CliError> {
    let values: Vec<f64> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| CliError::Usage(format!("malformed sweep value `{s}`")))
        })
        .collect::<Result<_, _>>()?;
    if values.is_empty() {
        return Err(CliError::Usage("sweep needs at least one value".into()));
    }
    Ok(values)
}

/// Runs every value concurrently and writes `summary.csv` once all runs have finished.
pub fn sweep(
    base: &SimConfig,
    axis: SweepAxis,
    values: &[f64],
) -> Result<Vec<SweepResult>, CliError> {
    if values.is_empty() {
        return Err(CliError::Usage("sweep needs at least one value".into()));
    }
    let results: Vec<SweepResult> = values
        .par_iter()
        .map(|&value| {
            let dir = base.output_dir.join(format!("{}_{value}", axis.name()));
            let outcome = axis.apply(base, value).and_then(|cfg| run_experiment(&cfg));
            SweepResult {
                value,
                dir,
                outcome,
            }
        })
        .collect();

    fs::create_dir_all(&base.output_dir).map_err(|e| CliError::io(&base.output_dir, e))?;
    let path = base.output_dir.join("summary.csv");
    fs::write(&path, render_summary(&results)).map_err(|e| CliError::io(&path, e))?;
    Ok(results)
}

pub fn render_summary(results: &[SweepResult]) -> String {
    let mut out = String::from(SUMMARY_HEADER);
    out.push('\n');
    for r in results {
        match &r.outcome {
            Ok(o) => {
                let (a_phi, r2_phi) = o.fit_phi.map_or((f64::NAN, f64::NAN), |f| (f.alpha, f.r2));
                let a_gap = o.fit_gap.map_or(f64::NAN, |f| f.alpha);
                let _ = writeln!(
                    out,
                    "{:?},ok,{a_phi:.16e},{r2_phi:.16e},{a_gap:.16e},{:.16e},",
                    r.value,
                    o.q_limit()
                );
            }
            Err(e) => {
                let msg = e.to_string().replace([',', '\n'], ";");
                let _ = writeln!(out, "{:?},error,,,,,{msg}", r.value);
            }
        }
    }
    out
}

//! Single simulation runs: integrate, observe, write artifacts.

use std::fs;
use std::path::Path;

use dkg_core::diagnostics::{self, DecayFit};
use dkg_core::integrators;

use crate::config::SimConfig;
use crate::error::CliError;
use crate::output::{self, CsvRow};
use crate::plot;

/// Largest imaginary part tolerated when the initial data are real.
pub const IMAG_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct ExperimentOutput {
    pub rows: Vec<CsvRow>,
    pub fit_phi: Option<DecayFit>,
    pub fit_gap: Option<DecayFit>,
}

impl ExperimentOutput {
    /// Mean of `Q_n` over the last quarter of the observed times.
    pub fn q_limit(&self) -> f64 {
        let Some(last) = self.rows.last() else {
            return f64::NAN;
        };
        let cutoff = 0.75 * last.record.t;
        let tail: Vec<f64> = self
            .rows
            .iter()
            .filter(|r| r.record.t >= cutoff)
            .map(|r| r.record.q)
            .collect();
        tail.iter().sum::<f64>() / tail.len() as f64
    }
}

/// Integrates `config` and evaluates diagnostics every `observe_stride` steps,
/// without touching the filesystem.
pub fn simulate(config: &SimConfig) -> Result<Vec<CsvRow>, CliError> {
    let grid = config
        .grid()
        .map_err(|e| CliError::sim("building grid", e))?;
    let (psi0, v0) = config
        .initial_fields(&grid)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let real_data = psi0.max_imag() == 0.0 && v0.max_imag() == 0.0;
    let params = config.params();

    let mut rows = Vec::with_capacity(params.total_steps() / config.observe_stride + 2);
    let mut failure: Option<CliError> = None;
    integrators::run(&psi0, &v0, &params, config.observe_stride, |step, state| {
        if failure.is_some() {
            return;
        }
        let t = state.time(params.dt);
        if real_data {
            let imag = state.curr.max_imag();
            if imag > IMAG_TOLERANCE * state.curr.max_abs().max(1.0) {
                failure = Some(CliError::ImaginaryDrift { value: imag, t });
                return;
            }
        }
        match diagnostics::record(state, &params, config.eps) {
            Ok(rec) => rows.push(CsvRow::new(step, rec)),
            Err(e) => failure = Some(CliError::sim(format!("diagnostics at t = {t}"), e)),
        }
    })
    .map_err(|e| CliError::sim("integration", e))?;
    match failure {
        Some(err) => Err(err),
        None => Ok(rows),
    }
}

fn fit_column(rows: &[CsvRow], f: impl Fn(&CsvRow) -> f64) -> Option<DecayFit> {
    let series: Vec<(f64, f64)> = rows.iter().map(|r| (r.record.t, f(r))).collect();
    diagnostics::fit_decay_rate(&series).ok()
}

pub fn fit_rows(rows: Vec<CsvRow>) -> ExperimentOutput {
    ExperimentOutput {
        fit_phi: fit_column(&rows, |r| r.record.e_phi),
        fit_gap: fit_column(&rows, |r| r.record.gap),
        rows,
    }
}

/// Runs `config` and writes `series.csv`, `fit.txt` and (optionally)
/// `energies.svg` into `config.output_dir`.
pub fn run_experiment(config: &SimConfig) -> Result<ExperimentOutput, CliError> {
    let out = fit_rows(simulate(config)?);
    write_artifacts(&config.output_dir, &out, config.emit_plots)?;
    Ok(out)
}

pub fn write_artifacts(dir: &Path, out: &ExperimentOutput, plots: bool) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    output::write_csv(&dir.join("series.csv"), &out.rows)?;
    let fits = output::render_fit("e_phi", out.fit_phi.as_ref())
        + &output::render_fit("gap", out.fit_gap.as_ref());
    let fit_path = dir.join("fit.txt");
    fs::write(&fit_path, fits).map_err(|e| CliError::io(&fit_path, e))?;
    if plots {
        let svg_path = dir.join("energies.svg");
        fs::write(&svg_path, plot::energy_figure(&out.rows))
            .map_err(|e| CliError::io(&svg_path, e))?;
    }
    Ok(())
}

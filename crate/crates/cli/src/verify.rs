//! Self-check reports behind `dkg verify <subcommand>`.

use std::fmt;

use dkg_core::diagnostics::{discrete_energy, discrete_quadratic_energy};
use dkg_core::integrators::{run, SimParams};
use dkg_core::oracle::expm2;
use dkg_core::semigroup::{measure_decay_constant, mode_eigenvalues, mode_matrix};
use dkg_core::spectral::{self, make_grid, Field, TorusGrid};
use num_complex::Complex64;

use crate::error::CliError;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    /// Human-readable acceptance condition, e.g. `< 1e-9`.
    pub condition: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{tag}  {}: {:.6e} (required {})",
                c.name, c.measured, c.condition
            )?;
        }
        Ok(())
    }
}

fn check(name: &str, measured: f64, condition: &str, passed: bool) -> Check {
    Check {
        name: name.into(),
        measured,
        condition: condition.into(),
        passed,
    }
}

/// Largest entrywise deviation of the mode matrix from a direct matrix
/// exponential of the per-mode generator, over `k² ≤ k2_max` and the given times.
pub fn oracle_deviation(k2_max: u32, times: &[f64]) -> f64 {
    let mut worst: f64 = 0.0;
    for k2 in 0..=k2_max {
        let k2 = k2 as f64;
        for &t in times {
            let gen = [
                [Complex64::new(0.0, 0.0), Complex64::new(t, 0.0)],
                [
                    Complex64::new(-(1.0 + k2) * t, 0.0),
                    Complex64::new(-k2 * t, 0.0),
                ],
            ];
            let exact = expm2(gen);
            let m = mode_matrix(k2, t);
            for (a, b) in m.entries.iter().flatten().zip(exact.iter().flatten()) {
                worst = worst.max((a - b).norm());
            }
        }
    }
    worst
}

/// Time grid `0, 0.05, …, 20` used for the decay-constant measurement.
pub fn decay_time_grid() -> Vec<f64> {
    (0..=400).map(|i| i as f64 * 0.05).collect()
}

pub fn semigroup_report() -> Result<Report, CliError> {
    let dev = oracle_deviation(1024, &[0.01, 0.1, 1.0, 10.0]);
    let times = decay_time_grid();
    let c1 =
        measure_decay_constant(1024, &times).map_err(|e| CliError::sim("decay constant", e))?;
    let c2 =
        measure_decay_constant(2048, &times).map_err(|e| CliError::sim("decay constant", e))?;
    let rel = (c2 - c1).abs() / c1;
    let worst_re = (1..=1024u32)
        .map(|k2| mode_eigenvalues(k2 as f64).max_re())
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(Report {
        title: "semigroup",
        checks: vec![
            check(
                "max |mode_matrix - expm| over k^2 <= 1024",
                dev,
                "< 1e-9",
                dev < 1e-9,
            ),
            check(
                "decay constant C (k^2 <= 1024)",
                c1,
                "finite",
                c1.is_finite(),
            ),
            check(
                "relative change of C when k^2 range doubles",
                rel,
                "< 1e-2",
                rel < 1e-2,
            ),
            check(
                "max Re lambda over nonzero modes",
                worst_re,
                "<= -0.5",
                worst_re <= -0.5,
            ),
        ],
    })
}

fn smooth_data(g: &TorusGrid) -> (Field, Field) {
    (
        Field::from_real_fn(g, |x| 0.5 + x[0].cos() - 0.4 * (2.0 * x[0]).sin()),
        Field::from_real_fn(g, |x| 0.3 * (3.0 * x[0]).cos()),
    )
}

/// Largest relative deviation of the linear undamped discrete energy from its
/// initial value over 10⁴ steps of size 0.01 on a 32-point grid.
pub fn linear_drift() -> Result<f64, CliError> {
    let g = make_grid(1, 32).map_err(|e| CliError::sim("grid", e))?;
    let (psi0, v0) = smooth_data(&g);
    let params = SimParams {
        damped: false,
        linear: true,
        ..SimParams::new(0.01, 100.0)
    };
    let mut energies = Vec::with_capacity(10_001);
    run(&psi0, &v0, &params, 1, |_, s| {
        energies.push(discrete_quadratic_energy(s, params.dt))
    })
    .map_err(|e| CliError::sim("linear run", e))?;
    let e0 = energies[0];
    Ok(energies
        .iter()
        .map(|e| (e - e0).abs() / e0)
        .fold(0.0, f64::max))
}

/// Relative energy drift of the undamped cubic scheme at `dt` over `[0, 10]`.
pub fn nonlinear_drift(dt: f64) -> Result<f64, CliError> {
    let g = make_grid(1, 32).map_err(|e| CliError::sim("grid", e))?;
    let (psi0, v0) = smooth_data(&g);
    let params = SimParams {
        damped: false,
        ..SimParams::new(dt, 10.0)
    };
    let mut e = Vec::new();
    run(&psi0, &v0, &params, 1, |_, s| {
        e.push(discrete_energy(s, dt, params.p))
    })
    .map_err(|e| CliError::sim("nonlinear run", e))?;
    Ok(e.iter().map(|x| (x - e[0]).abs()).fold(0.0, f64::max) / e[0])
}

pub fn conservation_report() -> Result<Report, CliError> {
    let drift = linear_drift()?;
    let ratio = nonlinear_drift(0.01)? / nonlinear_drift(0.005)?;
    Ok(Report {
        title: "conservation",
        checks: vec![
            check(
                "linear undamped relative energy drift, 1e4 steps",
                drift,
                "< 1e-12",
                drift < 1e-12,
            ),
            check(
                "nonlinear drift ratio dt=0.01 vs dt=0.005",
                ratio,
                "in [3, 5.5]",
                (3.0..=5.5).contains(&ratio),
            ),
        ],
    })
}

/// Observed order `log₂(‖u_h − u_{h/2}‖ / ‖u_{h/2} − u_{h/4}‖)` of the damped
/// cubic scheme at `t = 1`, starting from `h = 0.01`.
pub fn richardson_slope() -> Result<f64, CliError> {
    let g = make_grid(1, 32).map_err(|e| CliError::sim("grid", e))?;
    let (psi0, v0) = smooth_data(&g);
    let mut sols = Vec::with_capacity(3);
    for h in [0.01, 0.005, 0.0025] {
        let last = run(&psi0, &v0, &SimParams::new(h, 1.0), usize::MAX, |_, _| {})
            .map_err(|e| CliError::sim("convergence run", e))?;
        sols.push(last.curr);
    }
    let d = |a: &Field, b: &Field| spectral::l2_norm_sq(&a.sub(b)).sqrt();
    Ok((d(&sols[0], &sols[1]) / d(&sols[1], &sols[2])).log2())
}

pub fn convergence_report() -> Result<Report, CliError> {
    let slope = richardson_slope()?;
    Ok(Report {
        title: "convergence",
        checks: vec![check(
            "Richardson slope (step halving)",
            slope,
            ">= 0.9",
            slope >= 0.9,
        )],
    })
}

pub const SUBCOMMANDS: [&str; 3] = ["semigroup", "conservation", "convergence"];

pub fn verify(subcommand: &str) -> Result<Report, CliError> {
    match subcommand {
        "semigroup" => semigroup_report(),
        "conservation" => conservation_report(),
        "convergence" => convergence_report(),
        other => Err(CliError::Usage(format!(
            "unknown verify subcommand `{other}` (expected one of {})",
            SUBCOMMANDS.join(", ")
        ))),
    }
}

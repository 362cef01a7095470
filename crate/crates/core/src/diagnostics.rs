//! Energy functionals, the mean/oscillation splitting `ψ = φ + θ`, and
//! exponential decay-rate fitting.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::integrators::{SimParams, StatePair};
use crate::spectral::{self, Field};

/// Diagnostics of one time level.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnergyRecord {
    pub t: f64,
    /// Discrete energy `E_n(ψ)`.
    pub e_psi: f64,
    /// Discrete energy `E_n(φ)` of the zero-mean part.
    pub e_phi: f64,
    /// Mean-mode energy `Q_n(θ)`.
    pub q: f64,
    /// `J` at the time midpoint.
    pub j: f64,
    /// Modified energy `E_ε`.
    pub e_eps: f64,
    /// `‖ψ_n‖_{H²}`.
    pub h2: f64,
    /// `|E_n(ψ) − Q_n|`.
    pub gap: f64,
}

/// Potential density exponent: `∫ |ψ|^{p+2} / (p+2)`.
fn potential(f: &Field, p: f64) -> f64 {
    spectral::abs_pow_integral(f, p + 2.0) / (p + 2.0)
}

/// `½(‖v‖² + ‖ψ‖² + ‖∇ψ‖²)`, the quadratic part of the energy.
fn quadratic_energy(psi: &Field, v: &Field) -> f64 {
    0.5 * (spectral::l2_norm_sq(v) + spectral::l2_norm_sq(psi) + spectral::grad_norm_sq(psi))
}

/// `E_n(ψ)`: the continuous energy evaluated at the time midpoint
/// `(ψ_n + ψ_{n−1})/2` with velocity `(ψ_n − ψ_{n−1})/δt`.
pub fn discrete_energy(state: &StatePair, dt: f64, p: f64) -> f64 {
    let mid = state.midpoint();
    quadratic_energy(&mid, &state.velocity(dt)) + potential(&mid, p)
}

/// The quadratic part of [`discrete_energy`], exactly conserved by the
/// undamped linear scheme.
pub fn discrete_quadratic_energy(state: &StatePair, dt: f64) -> f64 {
    quadratic_energy(&state.midpoint(), &state.velocity(dt))
}

/// `Q_n(θ) = (2π)^d (½|θ_n|² + ½|(θ_n − θ_{n−1})/δt|² + |θ_n|^{p+2}/(p+2))`.
pub fn discrete_q(theta_n: Complex64, theta_prev: Complex64, dt: f64, p: f64, dim: usize) -> f64 {
    let vel = (theta_n - theta_prev) / dt;
    let r = theta_n.norm();
    let volume = (2.0 * std::f64::consts::PI).powi(dim as i32);
    volume * (0.5 * r * r + 0.5 * vel.norm_sqr() + r.powf(p + 2.0) / (p + 2.0))
}

/// `E(ψ) = ½∫ |v|² + |ψ|² + |∇ψ|² + (1/(p+2)) ∫ |ψ|^{p+2}`.
pub fn continuous_energy(psi: &Field, v: &Field, p: f64) -> f64 {
    quadratic_energy(psi, v) + potential(psi, p)
}

/// `E_ε(ψ) = E(ψ) + ε ∫ Re(ψ̄ v)`, defined for `0 < ε < 1`.
pub fn modified_energy(psi: &Field, v: &Field, p: f64, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::invalid(
            "eps",
            format!("must lie in (0, 1), got {eps}"),
        ));
    }
    Ok(continuous_energy(psi, v, p) + eps * cross_term(psi, v))
}

/// `∫ Re(ψ̄ v)`.
pub fn cross_term(psi: &Field, v: &Field) -> f64 {
    let s: f64 = psi
        .coeffs()
        .iter()
        .zip(v.coeffs())
        .map(|(a, b)| (a.conj() * b).re)
        .sum();
    s * psi.grid().volume()
}

/// `J(ψ) = ½‖Δψ − v‖² + ½‖ψ‖²_{H¹} + (1/(p+2))‖ψ‖_{p+2}^{p+2}`.
pub fn j_functional(psi: &Field, v: &Field, p: f64) -> f64 {
    let residual = spectral::laplacian(psi).sub(v);
    0.5 * spectral::l2_norm_sq(&residual)
        + 0.5 * (spectral::l2_norm_sq(psi) + spectral::grad_norm_sq(psi))
        + potential(psi, p)
}

/// Splitting of a two-level state into its zero-mean part and mean pair.
#[derive(Clone, Debug)]
pub struct SplitState {
    pub phi: StatePair,
    /// `(θ_n, θ_{n−1})`.
    pub theta: (Complex64, Complex64),
}

/// `θ := mean(ψ)`, `φ := ψ − θ` on both levels.
pub fn split_state(state: &StatePair) -> SplitState {
    let strip = |f: &Field| f.map_coeffs(|i, c| if i == 0 { Complex64::default() } else { c });
    SplitState {
        phi: StatePair {
            prev: strip(&state.prev),
            curr: strip(&state.curr),
            step_index: state.step_index,
        },
        theta: (spectral::mean(&state.curr), spectral::mean(&state.prev)),
    }
}

/// Evaluates every diagnostic on one state.
///
/// `J` and `E_ε` are evaluated at the time midpoint `(ψ_n + ψ_{n−1})/2` with
/// velocity `(ψ_n − ψ_{n−1})/δt`, the same pairing `E_n` uses; pairing `ψ_n`
/// with that velocity is off by half a step and makes `J` drift by `O(δt)`.
/// For linear runs every potential term is dropped, so the functionals are
/// those of the equation actually integrated.
pub fn record(state: &StatePair, params: &SimParams, eps: f64) -> Result<EnergyRecord> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::invalid(
            "eps",
            format!("must lie in (0, 1), got {eps}"),
        ));
    }
    let dt = params.dt;
    let p = params.p;
    let dim = state.curr.grid().dim();
    let split = split_state(state);
    let v = state.velocity(dt);
    let mid = state.midpoint();
    let pot = |f: &Field| if params.linear { 0.0 } else { potential(f, p) };

    let e_psi = quadratic_energy(&mid, &v) + pot(&mid);
    let phi_mid = split.phi.midpoint();
    let e_phi = quadratic_energy(&phi_mid, &split.phi.velocity(dt)) + pot(&phi_mid);
    let mut q = discrete_q(split.theta.0, split.theta.1, dt, p, dim);
    if params.linear {
        let r = split.theta.0.norm();
        q -= (2.0 * std::f64::consts::PI).powi(dim as i32) * r.powf(p + 2.0) / (p + 2.0);
    }
    let residual = spectral::laplacian(&mid).sub(&v);
    let j = 0.5 * spectral::l2_norm_sq(&residual)
        + 0.5 * (spectral::l2_norm_sq(&mid) + spectral::grad_norm_sq(&mid))
        + pot(&mid);
    Ok(EnergyRecord {
        t: state.time(dt),
        e_psi,
        e_phi,
        q,
        j,
        e_eps: e_psi + eps * cross_term(&mid, &v),
        h2: spectral::sobolev_norm(&state.curr, 2.0)?,
        gap: (e_psi - q).abs(),
    })
}

/// Least-squares fit of `value ≈ c e^{−alpha t}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecayFit {
    /// Decay rate (negative when the series grows).
    pub alpha: f64,
    pub c: f64,
    pub r2: f64,
    /// Time range of the samples actually used.
    pub window: (f64, f64),
    /// Set when the log-values have zero variance, so `r2` carries no information.
    pub degenerate: bool,
}

pub const MIN_FIT_SAMPLES: usize = 10;

/// Fits `log value` against `t` on `[t_last/2, t_last]`, dropping samples at
/// or below `max(1e−12·value_0, 1e−300)`.
pub fn fit_decay_rate(series: &[(f64, f64)]) -> Result<DecayFit> {
    let Some(&(_, first)) = series.first() else {
        return Err(Error::InsufficientSamples {
            needed: MIN_FIT_SAMPLES,
            got: 0,
        });
    };
    let t_end = series.last().map(|s| s.0).unwrap_or(0.0);
    let floor = (1e-12 * first).max(1e-300);
    let usable: Vec<(f64, f64)> = series
        .iter()
        .filter(|(t, v)| *t >= 0.5 * t_end && *v > floor && v.is_finite())
        .map(|&(t, v)| (t, v.ln()))
        .collect();
    if usable.len() < MIN_FIT_SAMPLES {
        return Err(Error::InsufficientSamples {
            needed: MIN_FIT_SAMPLES,
            got: usable.len(),
        });
    }
    let n = usable.len() as f64;
    let t_mean = usable.iter().map(|s| s.0).sum::<f64>() / n;
    let y_mean = usable.iter().map(|s| s.1).sum::<f64>() / n;
    let (mut stt, mut sty, mut syy) = (0.0, 0.0, 0.0);
    for &(t, y) in &usable {
        let (dt, dy) = (t - t_mean, y - y_mean);
        stt += dt * dt;
        sty += dt * dy;
        syy += dy * dy;
    }
    let slope = if stt > 0.0 { sty / stt } else { 0.0 };
    let intercept = y_mean - slope * t_mean;
    let degenerate = syy <= f64::EPSILON * f64::EPSILON * n * (1.0 + y_mean * y_mean);
    let r2 = if degenerate {
        1.0
    } else {
        (sty * sty / (stt * syy)).clamp(0.0, 1.0)
    };
    Ok(DecayFit {
        alpha: if degenerate { 0.0 } else { -slope },
        c: intercept.exp(),
        r2,
        window: (usable[0].0, usable[usable.len() - 1].0),
        degenerate,
    })
}

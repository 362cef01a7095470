//! Time marching for `ψ_tt − Δψ_t − Δψ + ψ + |ψ|^p ψ = 0`.
//!
//! The primary scheme is the two-level method
//!
//! ```text
//! (ψ_{n+1} − 2ψ_n + ψ_{n−1})/δt² + (I − Δ)(ψ_{n+1} + 2ψ_n + ψ_{n−1})/4
//!     + |ψ_n|^p ψ_n − Δ(ψ_{n+1} − ψ_n)/δt = 0,
//! ```
//!
//! whose undamped variant drops the last term. The nonlinearity is explicit,
//! so every Fourier mode is advanced by one scalar division.
//!
//! An exponential (Lawson-type) integrator built on the exact linear
//! semigroup is provided for cross-validation.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::semigroup::{self, ModeMatrix, PhaseState};
use crate::spectral::{self, Field};

/// Parameters of one simulation.
#[derive(Clone, Debug, PartialEq)]
pub struct SimParams {
    /// Exponent of the defocusing nonlinearity `|ψ|^p ψ`.
    pub p: f64,
    pub dt: f64,
    /// Include the strong damping term `−Δψ_t`.
    pub damped: bool,
    /// Apply the 2/3 rule to the cubic product.
    pub dealias: bool,
    pub t_final: f64,
    /// Drop the nonlinear term entirely.
    pub linear: bool,
}

impl SimParams {
    pub fn new(dt: f64, t_final: f64) -> Self {
        Self {
            p: 2.0,
            dt,
            damped: true,
            dealias: false,
            t_final,
            linear: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.p >= 0.0 && self.p.is_finite()) {
            return Err(Error::invalid(
                "p",
                format!("must be finite and >= 0, got {}", self.p),
            ));
        }
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::invalid(
                "dt",
                format!("must be finite and > 0, got {}", self.dt),
            ));
        }
        if !(self.t_final.is_finite() && self.t_final >= self.dt * (1.0 - 1e-12)) {
            return Err(Error::invalid(
                "t_final",
                format!("must be finite and >= dt, got {}", self.t_final),
            ));
        }
        Ok(())
    }

    /// Number of time levels after `ψ_0`, i.e. `⌈t_final/δt⌉`.
    pub fn total_steps(&self) -> usize {
        ((self.t_final / self.dt) * (1.0 - 1e-12)).ceil().max(1.0) as usize
    }
}

/// Two consecutive time levels `(ψ_{n−1}, ψ_n)`; `step_index` is `n`.
#[derive(Clone, Debug)]
pub struct StatePair {
    pub prev: Field,
    pub curr: Field,
    pub step_index: usize,
}

impl StatePair {
    pub fn new(prev: Field, curr: Field, step_index: usize) -> Result<Self> {
        prev.same_grid(&curr)?;
        Ok(Self {
            prev,
            curr,
            step_index,
        })
    }

    /// Builds the pair from initial position and velocity via [`startup_step`].
    pub fn from_initial_data(psi0: &Field, v0: &Field, params: &SimParams) -> Result<Self> {
        startup_step(psi0, v0, params)
    }

    pub fn time(&self, dt: f64) -> f64 {
        self.step_index as f64 * dt
    }

    /// Backward difference `(ψ_n − ψ_{n−1})/δt`.
    pub fn velocity(&self, dt: f64) -> Field {
        self.curr
            .lincomb((1.0 / dt).into(), &self.prev, (-1.0 / dt).into())
    }

    /// Time midpoint `(ψ_n + ψ_{n−1})/2`.
    pub fn midpoint(&self) -> Field {
        self.curr.lincomb(0.5.into(), &self.prev, 0.5.into())
    }
}

/// Pointwise `|f|^p f`, optionally dealiased by the 2/3 rule when `p = 2`.
pub fn nonlinearity(f: &Field, p: f64, dealias: bool) -> Field {
    let out = if p == 2.0 {
        f.map_values(|z| z * z.norm_sqr())
    } else if p == 0.0 {
        f.clone()
    } else {
        f.map_values(|z| {
            let r = z.norm();
            if r == 0.0 {
                z
            } else {
                z * r.powf(p)
            }
        })
    };
    if dealias && p == 2.0 {
        dealias_two_thirds(&out)
    } else {
        out
    }
}

/// Zeroes every coefficient with some `|k_i| > n/3`.
pub fn dealias_two_thirds(f: &Field) -> Field {
    let grid = f.grid().clone();
    let cutoff = grid.n() as f64 / 3.0;
    let dim = grid.dim();
    f.map_coeffs(|i, c| {
        let k = grid.wavevector(i);
        if k[..dim].iter().any(|&ki| ki.abs() as f64 > cutoff) {
            Complex64::default()
        } else {
            c
        }
    })
}

fn forcing(f: &Field, params: &SimParams) -> Option<Field> {
    (!params.linear).then(|| nonlinearity(f, params.p, params.dealias))
}

/// Second-order Taylor start: `ψ_1 = ψ_0 + δt v_0 + δt²/2 ψ_tt(0)` with
/// `ψ_tt(0)` taken from the equation itself.
pub fn startup_step(psi0: &Field, v0: &Field, params: &SimParams) -> Result<StatePair> {
    params.validate()?;
    psi0.same_grid(v0)?;
    let grid = psi0.grid();
    let dt = params.dt;
    let k2 = grid.k2();
    let damp = if params.damped { 1.0 } else { 0.0 };
    let n_hat = forcing(psi0, params);
    let (p, v) = (psi0.coeffs(), v0.coeffs());
    let curr = (0..grid.len())
        .map(|i| {
            let mut acc = -k2[i] * (damp * v[i] + p[i]) - p[i];
            if let Some(n) = &n_hat {
                acc -= n.coeffs()[i];
            }
            p[i] + dt * v[i] + 0.5 * dt * dt * acc
        })
        .collect();
    StatePair::new(psi0.clone(), Field::from_coeffs(grid, curr)?, 1)
}

/// Per-mode coefficients of the primary scheme for one grid and time step.
#[derive(Clone, Debug)]
pub struct Stepper {
    params: SimParams,
    inv_lhs: Vec<f64>,
    curr_coef: Vec<f64>,
    prev_coef: Vec<f64>,
}

impl Stepper {
    pub fn new(grid: &spectral::TorusGrid, params: &SimParams) -> Result<Self> {
        params.validate()?;
        let dt = params.dt;
        let damp = if params.damped { 1.0 } else { 0.0 };
        let idt2 = 1.0 / (dt * dt);
        let mut inv_lhs = Vec::with_capacity(grid.len());
        let mut curr_coef = Vec::with_capacity(grid.len());
        let mut prev_coef = Vec::with_capacity(grid.len());
        for &k2 in grid.k2() {
            let mass = 0.25 * (1.0 + k2);
            let friction = damp * k2 / dt;
            inv_lhs.push(1.0 / (idt2 + mass + friction));
            curr_coef.push(2.0 * idt2 - 2.0 * mass + friction);
            prev_coef.push(idt2 + mass);
        }
        Ok(Self {
            params: params.clone(),
            inv_lhs,
            curr_coef,
            prev_coef,
        })
    }

    pub fn params(&self) -> &SimParams {
        &self.params
    }

    /// Advances `(ψ_{n−1}, ψ_n)` to `(ψ_n, ψ_{n+1})`.
    pub fn advance(&self, state: &StatePair) -> StatePair {
        let grid = state.curr.grid();
        let n_hat = forcing(&state.curr, &self.params);
        let (c, pv) = (state.curr.coeffs(), state.prev.coeffs());
        let next: Vec<Complex64> = match &n_hat {
            Some(n) => {
                let n = n.coeffs();
                (0..c.len())
                    .map(|i| {
                        (self.curr_coef[i] * c[i] - self.prev_coef[i] * pv[i] - n[i])
                            * self.inv_lhs[i]
                    })
                    .collect()
            }
            None => (0..c.len())
                .map(|i| (self.curr_coef[i] * c[i] - self.prev_coef[i] * pv[i]) * self.inv_lhs[i])
                .collect(),
        };
        StatePair {
            prev: state.curr.clone(),
            curr: Field::from_coeffs(grid, next).expect("same grid"),
            step_index: state.step_index + 1,
        }
    }
}

/// One step of the primary scheme.
pub fn step(state: &StatePair, params: &SimParams) -> Result<StatePair> {
    state.prev.same_grid(&state.curr)?;
    Ok(Stepper::new(state.curr.grid(), params)?.advance(state))
}

/// Exponential integrator `Ψ_{n+1} = e^{−δt𝒜}(Ψ_n − δt F(Ψ_n))` with
/// `F(Ψ) = (0, |ψ|^p ψ)`, caching the mode matrices for one grid.
#[derive(Clone, Debug)]
pub struct MildStepper {
    params: SimParams,
    matrices: HashMap<u64, ModeMatrix>,
}

impl MildStepper {
    pub fn new(grid: &spectral::TorusGrid, params: &SimParams) -> Result<Self> {
        params.validate()?;
        Ok(Self {
            params: params.clone(),
            matrices: semigroup::matrices_for(grid.k2(), params.dt),
        })
    }

    pub fn advance(&self, state: &PhaseState) -> PhaseState {
        let kicked = match forcing(&state.psi, &self.params) {
            Some(n) => PhaseState {
                psi: state.psi.clone(),
                vel: state.vel.lincomb(1.0.into(), &n, (-self.params.dt).into()),
            },
            None => state.clone(),
        };
        semigroup::apply_matrices(&kicked, &self.matrices)
    }
}

/// One exponential-integrator step. The damping flag is ignored: the
/// semigroup always contains the strong damping.
pub fn step_mild(state: &PhaseState, params: &SimParams) -> Result<PhaseState> {
    state.psi.same_grid(&state.vel)?;
    Ok(MildStepper::new(state.psi.grid(), params)?.advance(state))
}

/// Marches from `(ψ_0, v_0)` to `t_final`.
///
/// `observer` sees the startup pair, every state whose index is a multiple of
/// `stride`, and the final state. Non-finite values abort the run with
/// [`Error::BlowUp`].
pub fn run(
    psi0: &Field,
    v0: &Field,
    params: &SimParams,
    stride: usize,
    mut observer: impl FnMut(usize, &StatePair),
) -> Result<StatePair> {
    let stride = stride.max(1);
    let total = params.total_steps();
    let mut state = startup_step(psi0, v0, params)?;
    check_finite(&state, params)?;
    observer(state.step_index, &state);
    let stepper = Stepper::new(psi0.grid(), params)?;
    while state.step_index < total {
        state = stepper.advance(&state);
        check_finite(&state, params)?;
        if state.step_index % stride == 0 || state.step_index == total {
            observer(state.step_index, &state);
        }
    }
    Ok(state)
}

fn check_finite(state: &StatePair, params: &SimParams) -> Result<()> {
    if state.curr.is_finite() {
        Ok(())
    } else {
        Err(Error::BlowUp {
            step: state.step_index,
            time: state.time(params.dt),
        })
    }
}

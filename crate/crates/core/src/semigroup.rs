//! Exact per-mode evaluation of the linear semigroup `e^{−t𝒜}`.
//!
//! Written as a first-order system `Ψ = (ψ, ∂_tψ)`, the linear part of the
//! equation reads `∂_tΨ + 𝒜Ψ = 0` with `𝒜 = [[0, −1], [1 − Δ, −Δ]]`. On the
//! Fourier mode `k`, `Δ` acts as `−|k|²`, so `e^{−t𝒜}` becomes a 2×2 matrix
//!
//! ```text
//! e^{−t k²/2} [[cosh(tA) + ½k² S,  S                ],
//!              [−(1 + k²) S,        cosh(tA) − ½k² S ]],   S = A⁻¹ sinh(tA),
//! ```
//!
//! with `A = ½ √(k⁴ − 4k² − 4)` (a complex square root: imaginary for
//! `k² ≤ 4`, real for `k² ≥ 5`).

use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::Field;

type C = Complex64;

/// `e^{−t𝒜}` restricted to one Fourier mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModeMatrix {
    pub entries: [[C; 2]; 2],
    pub k2: f64,
    pub t: f64,
}

impl ModeMatrix {
    pub fn apply(&self, x: [C; 2]) -> [C; 2] {
        let m = &self.entries;
        [
            m[0][0] * x[0] + m[0][1] * x[1],
            m[1][0] * x[0] + m[1][1] * x[1],
        ]
    }

    pub fn det(&self) -> C {
        let m = &self.entries;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Operator 2-norm (largest singular value).
    pub fn norm2(&self) -> f64 {
        matrix_norm2(&self.entries)
    }
}

pub(crate) fn matrix_norm2(m: &[[C; 2]; 2]) -> f64 {
    let fro2: f64 = m.iter().flatten().map(|z| z.norm_sqr()).sum();
    let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).norm();
    let disc = (fro2 * fro2 - 4.0 * det * det).max(0.0);
    (0.5 * (fro2 + disc.sqrt())).sqrt()
}

/// Roots of `λ² + k²λ + (1 + k²) = 0`, the eigenvalues of `−𝒜` on mode `k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModeEigenpair {
    pub lambda_plus: C,
    pub lambda_minus: C,
}

impl ModeEigenpair {
    pub fn max_re(&self) -> f64 {
        self.lambda_plus.re.max(self.lambda_minus.re)
    }
}

pub fn mode_eigenvalues(k2: f64) -> ModeEigenpair {
    let disc = k2 * k2 - 4.0 * k2 - 4.0;
    if disc >= 0.0 {
        let root = disc.sqrt();
        let minus = -0.5 * (k2 + root);
        // the product of the roots is 1 + k², which avoids cancellation
        let plus = (1.0 + k2) / minus;
        ModeEigenpair {
            lambda_plus: C::new(plus, 0.0),
            lambda_minus: C::new(minus, 0.0),
        }
    } else {
        let im = 0.5 * (-disc).sqrt();
        ModeEigenpair {
            lambda_plus: C::new(-0.5 * k2, im),
            lambda_minus: C::new(-0.5 * k2, -im),
        }
    }
}

/// Below this `|tA|` the factor `A⁻¹ sinh(tA)` is summed as a power series.
const SERIES_CUTOFF: f64 = 1e-2;

/// `e^{−t𝒜}` on a mode with `|k|² = k2`.
///
/// Exponents are formed before exponentiating (`e^{−tk²/2}cosh(tA)` is
/// evaluated as `½(e^{t(A−k²/2)} + e^{−t(A+k²/2)})`), so large `tk²` neither
/// overflows nor loses the slowly decaying branch.
///
/// # Panics
/// If `t` is negative or not finite.
pub fn mode_matrix(k2: f64, t: f64) -> ModeMatrix {
    assert!(
        t >= 0.0 && t.is_finite(),
        "mode_matrix needs t >= 0, got {t}"
    );
    let disc = k2 * k2 - 4.0 * k2 - 4.0;
    let (a, slow) = if disc >= 0.0 {
        let root = disc.sqrt();
        // A − k²/2 = −2(k² + 1)/(√disc + k²)
        (
            C::new(0.5 * root, 0.0),
            C::new(-2.0 * (k2 + 1.0) / (root + k2), 0.0),
        )
    } else {
        let a = C::new(0.0, 0.5 * (-disc).sqrt());
        (a, a - 0.5 * k2)
    };
    let fast = -a - 0.5 * k2;
    let e_slow = (slow * t).exp();
    let e_fast = (fast * t).exp();
    let cosh = 0.5 * (e_slow + e_fast);
    let ta = a * t;
    let sinh_over_a = if ta.norm() < SERIES_CUTOFF {
        let z = ta * ta;
        let series = 1.0 + z / 6.0 * (1.0 + z / 20.0 * (1.0 + z / 42.0 * (1.0 + z / 72.0)));
        series * t * (-0.5 * k2 * t).exp()
    } else {
        (e_slow - e_fast) / (2.0 * a)
    };
    let half = 0.5 * k2 * sinh_over_a;
    ModeMatrix {
        entries: [
            [cosh + half, sinh_over_a],
            [-(1.0 + k2) * sinh_over_a, cosh - half],
        ],
        k2,
        t,
    }
}

/// The state `(ψ, ∂_tψ)` of the first-order system.
#[derive(Clone, Debug)]
pub struct PhaseState {
    pub psi: Field,
    pub vel: Field,
}

impl PhaseState {
    pub fn new(psi: Field, vel: Field) -> Result<Self> {
        psi.same_grid(&vel)?;
        Ok(Self { psi, vel })
    }
}

/// Mode matrices for every distinct `|k|²` on a grid.
pub(crate) fn matrices_for(k2: &[f64], t: f64) -> HashMap<u64, ModeMatrix> {
    let mut cache = HashMap::new();
    for &k in k2 {
        cache
            .entry(k.to_bits())
            .or_insert_with(|| mode_matrix(k, t));
    }
    cache
}

pub(crate) fn apply_matrices(state: &PhaseState, cache: &HashMap<u64, ModeMatrix>) -> PhaseState {
    let grid = state.psi.grid();
    let k2 = grid.k2();
    let (pc, vc) = (state.psi.coeffs(), state.vel.coeffs());
    let mut psi = Vec::with_capacity(pc.len());
    let mut vel = Vec::with_capacity(pc.len());
    for i in 0..pc.len() {
        let [a, b] = cache[&k2[i].to_bits()].apply([pc[i], vc[i]]);
        psi.push(a);
        vel.push(b);
    }
    PhaseState {
        psi: Field::from_coeffs(grid, psi).expect("same grid"),
        vel: Field::from_coeffs(grid, vel).expect("same grid"),
    }
}

/// Advances the linear first-order system by `t`, mode by mode.
pub fn apply_semigroup(state: &PhaseState, t: f64) -> Result<PhaseState> {
    state.psi.same_grid(&state.vel)?;
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::invalid(
            "t",
            format!("must be finite and >= 0, got {t}"),
        ));
    }
    let cache = matrices_for(state.psi.grid().k2(), t);
    Ok(apply_matrices(state, &cache))
}

/// Empirical constant `C` in `‖e^{−t𝒜}‖ ≤ C e^{−t/2}` on the nonzero modes.
///
/// Returns the maximum of `‖M(k², t)‖₂ e^{t/2}` over `k² = 1, …, k2_max` and
/// the sampled times. The `H²×H²` weight is a scalar on each mode and drops
/// out of the per-mode operator norm.
pub fn measure_decay_constant(k2_max: u64, t_samples: &[f64]) -> Result<f64> {
    if k2_max < 1 {
        return Err(Error::invalid("k2_max", "must be at least 1"));
    }
    if t_samples.is_empty() {
        return Err(Error::invalid("t_samples", "empty sample list"));
    }
    if let Some(&t) = t_samples.iter().find(|t| !(**t >= 0.0 && t.is_finite())) {
        return Err(Error::invalid(
            "t_samples",
            format!("times must be finite and >= 0, got {t}"),
        ));
    }
    let mut c: f64 = 0.0;
    for k2 in 1..=k2_max {
        for &t in t_samples {
            c = c.max(mode_matrix(k2 as f64, t).norm2() * (0.5 * t).exp());
        }
    }
    Ok(c)
}

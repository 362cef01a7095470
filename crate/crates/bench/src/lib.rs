//! Shared fixtures for the benchmarks.

use dkg_core::integrators::{startup_step, SimParams, StatePair};
use dkg_core::spectral::{make_grid, Field, TorusGrid};

/// A smooth state with a nonzero mean on `T^dim[n]`, one step into a run.
pub fn smooth_state(dim: usize, n: usize, params: &SimParams) -> (TorusGrid, StatePair) {
    let grid = make_grid(dim, n).expect("benchmark grid");
    let psi0 = Field::from_real_fn(&grid, |x| 1.0 + 3.0 * x[0].cos() + 0.5 * (2.0 * x[1]).sin());
    let v0 = Field::from_real_fn(&grid, |x| x[0].sin());
    let state = startup_step(&psi0, &v0, params).expect("startup");
    (grid, state)
}

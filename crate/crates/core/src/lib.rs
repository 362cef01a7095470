//! Pseudo-spectral simulation of the strongly damped nonlinear Klein-Gordon
//! equation
//!
//! ```text
//! ψ_tt − Δψ_t − Δψ + ψ + |ψ|^p ψ = 0   on the torus T^d, d ∈ {1, 2},
//! ```
//!
//! together with the energy functionals used to study its long-time behaviour:
//! the total energy, the energy of the zero-mean part, and the energy of the
//! spatial mean.

pub mod diagnostics;
pub mod error;
pub mod integrators;
pub mod oracle;
pub mod semigroup;
pub mod spectral;

pub use diagnostics::{DecayFit, EnergyRecord};
pub use error::{Error, Result};
pub use integrators::{SimParams, StatePair};
pub use semigroup::{ModeEigenpair, ModeMatrix, PhaseState};
pub use spectral::{Field, TorusGrid};

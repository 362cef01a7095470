//! Named initial-data presets.

use std::fmt;
use std::str::FromStr;

use dkg_core::spectral::{Field, TorusGrid};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// `ψ₀ = 1 + 3cos x`, `v₀ = 0` on `T¹`.
    Fig1Left,
    /// `ψ₀ = (1 + 0.5cos x)²`, `v₀ = 0` on `T¹`.
    Fig1Right,
    /// `ψ₀ = 1 + cos x + 2cos y`, `v₀ = sin x + 2sin y` on `T²`.
    Fig2Left,
    /// `ψ₀ = 1 + 0.2cos x + 0.5cos y`, `v₀ = 0` on `T²`.
    Fig2Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PresetError {
    #[error("unknown preset `{0}` (expected fig1_left, fig1_right, fig2_left or fig2_right)")]
    Unknown(String),
    #[error("preset `{preset}` lives on T^{expected}, grid has dimension {got}")]
    DimensionMismatch {
        preset: Preset,
        expected: usize,
        got: usize,
    },
}

impl Preset {
    pub const ALL: [Preset; 4] = [
        Preset::Fig1Left,
        Preset::Fig1Right,
        Preset::Fig2Left,
        Preset::Fig2Right,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1Left => "fig1_left",
            Preset::Fig1Right => "fig1_right",
            Preset::Fig2Left => "fig2_left",
            Preset::Fig2Right => "fig2_right",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Preset::Fig1Left | Preset::Fig1Right => 1,
            Preset::Fig2Left | Preset::Fig2Right => 2,
        }
    }

    /// `(ψ₀, v₀)` sampled on `grid`.
    pub fn fields(self, grid: &TorusGrid) -> Result<(Field, Field), PresetError> {
        if grid.dim() != self.dim() {
            return Err(PresetError::DimensionMismatch {
                preset: self,
                expected: self.dim(),
                got: grid.dim(),
            });
        }
        let pair = match self {
            Preset::Fig1Left => (
                Field::from_real_fn(grid, |x| 1.0 + 3.0 * x[0].cos()),
                Field::zeros(grid),
            ),
            Preset::Fig1Right => (
                Field::from_real_fn(grid, |x| (1.0 + 0.5 * x[0].cos()).powi(2)),
                Field::zeros(grid),
            ),
            Preset::Fig2Left => (
                Field::from_real_fn(grid, |x| 1.0 + x[0].cos() + 2.0 * x[1].cos()),
                Field::from_real_fn(grid, |x| x[0].sin() + 2.0 * x[1].sin()),
            ),
            Preset::Fig2Right => (
                Field::from_real_fn(grid, |x| 1.0 + 0.2 * x[0].cos() + 0.5 * x[1].cos()),
                Field::zeros(grid),
            ),
        };
        Ok(pair)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = PresetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| PresetError::Unknown(s.to_string()))
    }
}

/// Looks up a preset by name and samples it on `grid`.
pub fn preset(name: &str, grid: &TorusGrid) -> Result<(Field, Field), PresetError> {
    name.parse::<Preset>()?.fields(grid)
}

//! Flat `key = value` run configuration.
//!
//! ```text
//! # fig1_left data at a finer step
//! preset = fig1_left
//! dt = 0.0025
//! t_final = 40
//! ```
//!
//! Explicit initial data is given as whitespace-separated mode entries
//! `k1[,k2]:re[,im]`, e.g. `psi0 = 0:1 1:1.5 -1:1.5` for `1 + 3cos x`.

use std::fmt::Write as _;
use std::path::PathBuf;

use dkg_core::integrators::SimParams;
use dkg_core::spectral::{Field, TorusGrid};
use num_complex::Complex64;
use thiserror::Error;

use crate::presets::{Preset, PresetError};

#[derive(Clone, Debug, PartialEq, Error)]
#[error("line {line}: {message}")]
pub struct ConfigError {
    /// 1-based line number; 0 when the offending value is a default.
    pub line: usize,
    pub message: String,
}

impl ConfigError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

/// One Fourier mode of explicit initial data.
#[derive(Clone, Debug, PartialEq)]
pub struct Mode {
    pub k: Vec<i64>,
    pub amplitude: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum InitialData {
    Preset(Preset),
    Modes { psi0: Vec<Mode>, v0: Vec<Mode> },
}

impl InitialData {
    pub fn zero() -> Self {
        InitialData::Modes {
            psi0: Vec::new(),
            v0: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimConfig {
    pub dim: usize,
    pub n: usize,
    pub dt: f64,
    pub t_final: f64,
    pub p: f64,
    pub damped: bool,
    pub dealias: bool,
    pub linear: bool,
    pub eps: f64,
    pub observe_stride: usize,
    /// Factor applied to both `ψ₀` and `v₀`.
    pub amplitude: f64,
    pub initial_data: InitialData,
    pub output_dir: PathBuf,
    pub emit_plots: bool,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            dim: 1,
            n: 64,
            dt: 0.005,
            t_final: 50.0,
            p: 2.0,
            damped: true,
            dealias: false,
            linear: false,
            eps: 0.1,
            observe_stride: 20,
            amplitude: 1.0,
            initial_data: InitialData::zero(),
            output_dir: PathBuf::from("out"),
            emit_plots: true,
        }
    }
}

impl SimConfig {
    pub fn params(&self) -> SimParams {
        SimParams {
            p: self.p,
            dt: self.dt,
            damped: self.damped,
            dealias: self.dealias,
            t_final: self.t_final,
            linear: self.linear,
        }
    }

    pub fn grid(&self) -> Result<TorusGrid, dkg_core::Error> {
        TorusGrid::new(self.dim, self.n)
    }

    /// Samples `(ψ₀, v₀)` on `grid`, scaled by `amplitude`.
    pub fn initial_fields(&self, grid: &TorusGrid) -> Result<(Field, Field), PresetError> {
        let (psi0, v0) = match &self.initial_data {
            InitialData::Preset(p) => p.fields(grid)?,
            InitialData::Modes { psi0, v0 } => {
                (modes_to_field(grid, psi0), modes_to_field(grid, v0))
            }
        };
        if self.amplitude == 1.0 {
            Ok((psi0, v0))
        } else {
            Ok((psi0.scale(self.amplitude), v0.scale(self.amplitude)))
        }
    }

    /// Checks every invariant of a programmatically built config.
    pub fn check(&self) -> Result<(), ConfigError> {
        self.validate(|_| 0)
    }

    /// Checks every invariant; `line_of` maps keys to the line that set them.
    fn validate(&self, line_of: impl Fn(&str) -> usize) -> Result<(), ConfigError> {
        let fail = |key: &str, msg: String| Err(ConfigError::new(line_of(key), msg));
        if !(1..=2).contains(&self.dim) {
            return fail("dim", format!("dim must be 1 or 2, got {}", self.dim));
        }
        if self.n < 8 || !self.n.is_power_of_two() {
            return fail(
                "n",
                format!("n must be a power of two >= 8, got {}", self.n),
            );
        }
        if !(self.p >= 0.0 && self.p.is_finite()) {
            return fail("p", format!("p must be >= 0, got {}", self.p));
        }
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return fail("dt", format!("dt must be > 0, got {}", self.dt));
        }
        if !(self.t_final.is_finite() && self.t_final >= self.dt) {
            return fail(
                "t_final",
                format!("t_final must be >= dt, got {}", self.t_final),
            );
        }
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return fail("eps", format!("eps must lie in (0, 1), got {}", self.eps));
        }
        if self.observe_stride == 0 {
            return fail("observe_stride", "observe_stride must be >= 1".into());
        }
        if !self.amplitude.is_finite() {
            return fail(
                "amplitude",
                format!("amplitude must be finite, got {}", self.amplitude),
            );
        }
        match &self.initial_data {
            InitialData::Preset(p) if p.dim() != self.dim => fail(
                "preset",
                format!(
                    "preset {p} needs dim = {}, config has dim = {}",
                    p.dim(),
                    self.dim
                ),
            ),
            InitialData::Preset(_) => Ok(()),
            InitialData::Modes { psi0, v0 } => {
                for (key, modes) in [("psi0", psi0), ("v0", v0)] {
                    for m in modes {
                        if m.k.len() != self.dim {
                            return fail(
                                key,
                                format!(
                                    "mode {:?} has {} components, dim is {}",
                                    m.k,
                                    m.k.len(),
                                    self.dim
                                ),
                            );
                        }
                        let half = (self.n / 2) as i64;
                        if m.k.iter().any(|k| k.abs() >= half) {
                            return fail(
                                key,
                                format!(
                                    "mode {:?} is not resolved by n = {} (need |k_i| < {half})",
                                    m.k, self.n
                                ),
                            );
                        }
                        if !(m.amplitude.re.is_finite() && m.amplitude.im.is_finite()) {
                            return fail(key, format!("mode {:?} has a non-finite amplitude", m.k));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

fn modes_to_field(grid: &TorusGrid, modes: &[Mode]) -> Field {
    let mut coeffs = vec![Complex64::default(); grid.len()];
    for m in modes {
        let idx = grid.index_of(&m.k).expect("validated mode");
        coeffs[idx] += m.amplitude;
    }
    Field::from_coeffs(grid, coeffs).expect("grid-sized")
}

const KEYS: [&str; 16] = [
    "dim",
    "n",
    "dt",
    "t_final",
    "p",
    "damped",
    "dealias",
    "linear",
    "eps",
    "observe_stride",
    "amplitude",
    "preset",
    "psi0",
    "v0",
    "output_dir",
    "emit_plots",
];

pub fn parse_config(text: &str) -> Result<SimConfig, ConfigError> {
    let mut cfg = SimConfig::default();
    let mut seen: Vec<(&'static str, usize)> = Vec::new();
    let mut preset: Option<Preset> = None;
    let mut psi0: Option<Vec<Mode>> = None;
    let mut v0: Option<Vec<Mode>> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| {
            ConfigError::new(line, format!("expected `key = value`, got `{content}`"))
        })?;
        let (key, value) = (key.trim(), value.trim());
        let key: &'static str = KEYS
            .iter()
            .find(|k| **k == key)
            .ok_or_else(|| ConfigError::new(line, format!("unknown key `{key}`")))?;
        if let Some((_, first)) = seen.iter().find(|(k, _)| *k == key) {
            return Err(ConfigError::new(
                line,
                format!("duplicate key `{key}` (first set on line {first})"),
            ));
        }
        seen.push((key, line));
        match key {
            "dim" => cfg.dim = parse_num(value, key, line)?,
            "n" => cfg.n = parse_num(value, key, line)?,
            "dt" => cfg.dt = parse_num(value, key, line)?,
            "t_final" => cfg.t_final = parse_num(value, key, line)?,
            "p" => cfg.p = parse_num(value, key, line)?,
            "eps" => cfg.eps = parse_num(value, key, line)?,
            "observe_stride" => cfg.observe_stride = parse_num(value, key, line)?,
            "amplitude" => cfg.amplitude = parse_num(value, key, line)?,
            "damped" => cfg.damped = parse_bool(value, key, line)?,
            "dealias" => cfg.dealias = parse_bool(value, key, line)?,
            "linear" => cfg.linear = parse_bool(value, key, line)?,
            "emit_plots" => cfg.emit_plots = parse_bool(value, key, line)?,
            "output_dir" => {
                if value.is_empty() {
                    return Err(ConfigError::new(line, "output_dir must not be empty"));
                }
                cfg.output_dir = PathBuf::from(value);
            }
            "preset" => {
                preset = Some(
                    value
                        .parse()
                        .map_err(|e: PresetError| ConfigError::new(line, e.to_string()))?,
                )
            }
            "psi0" => psi0 = Some(parse_modes(value, line)?),
            "v0" => v0 = Some(parse_modes(value, line)?),
            _ => unreachable!("key list is closed"),
        }
    }

    let line_of = |key: &str| seen.iter().find(|(k, _)| *k == key).map_or(0, |(_, l)| *l);
    cfg.initial_data = match preset {
        Some(p) => {
            if psi0.is_some() || v0.is_some() {
                let line = line_of("psi0").max(line_of("v0"));
                return Err(ConfigError::new(
                    line,
                    "explicit modes cannot be combined with a preset",
                ));
            }
            if line_of("dim") == 0 {
                cfg.dim = p.dim();
            }
            InitialData::Preset(p)
        }
        None => InitialData::Modes {
            psi0: psi0.unwrap_or_default(),
            v0: v0.unwrap_or_default(),
        },
    };
    cfg.validate(line_of)?;
    Ok(cfg)
}

/// Applies a preset chosen outside the config file (e.g. on the command line).
pub fn with_preset(mut cfg: SimConfig, preset: Preset) -> Result<SimConfig, ConfigError> {
    cfg.dim = preset.dim();
    cfg.initial_data = InitialData::Preset(preset);
    cfg.check()?;
    Ok(cfg)
}

fn parse_num<T: std::str::FromStr>(value: &str, key: &str, line: usize) -> Result<T, ConfigError> {
    value
        .parse()
        .map_err(|_| ConfigError::new(line, format!("malformed value `{value}` for `{key}`")))
}

fn parse_bool(value: &str, key: &str, line: usize) -> Result<bool, ConfigError> {
    match value {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        _ => Err(ConfigError::new(
            line,
            format!("malformed boolean `{value}` for `{key}`"),
        )),
    }
}

fn parse_modes(value: &str, line: usize) -> Result<Vec<Mode>, ConfigError> {
    value
        .split_whitespace()
        .map(|entry| {
            let bad = || {
                ConfigError::new(
                    line,
                    format!("malformed mode entry `{entry}` (expected k1[,k2]:re[,im])"),
                )
            };
            let (k, amp) = entry.split_once(':').ok_or_else(bad)?;
            let k: Vec<i64> = k
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            let parts: Vec<f64> = amp
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            let amplitude = match parts[..] {
                [re] => Complex64::new(re, 0.0),
                [re, im] => Complex64::new(re, im),
                _ => return Err(bad()),
            };
            if k.is_empty() || k.len() > 2 {
                return Err(bad());
            }
            Ok(Mode { k, amplitude })
        })
        .collect()
}

fn render_modes(modes: &[Mode]) -> String {
    modes
        .iter()
        .map(|m| {
            let k: Vec<String> = m.k.iter().map(|k| k.to_string()).collect();
            if m.amplitude.im == 0.0 {
                format!("{}:{:?}", k.join(","), m.amplitude.re)
            } else {
                format!("{}:{:?},{:?}", k.join(","), m.amplitude.re, m.amplitude.im)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Serializes a config so that `parse_config(&render(c)) == c`.
pub fn render(cfg: &SimConfig) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dim = {}", cfg.dim);
    let _ = writeln!(out, "n = {}", cfg.n);
    let _ = writeln!(out, "dt = {:?}", cfg.dt);
    let _ = writeln!(out, "t_final = {:?}", cfg.t_final);
    let _ = writeln!(out, "p = {:?}", cfg.p);
    let _ = writeln!(out, "damped = {}", cfg.damped);
    let _ = writeln!(out, "dealias = {}", cfg.dealias);
    let _ = writeln!(out, "linear = {}", cfg.linear);
    let _ = writeln!(out, "eps = {:?}", cfg.eps);
    let _ = writeln!(out, "observe_stride = {}", cfg.observe_stride);
    let _ = writeln!(out, "amplitude = {:?}", cfg.amplitude);
    match &cfg.initial_data {
        InitialData::Preset(p) => {
            let _ = writeln!(out, "preset = {p}");
        }
        InitialData::Modes { psi0, v0 } => {
            let _ = writeln!(out, "psi0 = {}", render_modes(psi0));
            let _ = writeln!(out, "v0 = {}", render_modes(v0));
        }
    }
    let _ = writeln!(out, "output_dir = {}", cfg.output_dir.display());
    let _ = writeln!(out, "emit_plots = {}", cfg.emit_plots);
    out
}

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Uniform discretization of the periodic box `[0, 2π)^dim`.
///
/// Points are stored row-major: the flat index of `(i0, i1)` is `i0 * n + i1`,
/// axis 0 being `x` and axis 1 being `y`. Cloning is cheap; the FFT plans are
/// shared behind an `Arc`.
#[derive(Clone)]
pub struct TorusGrid {
    inner: Arc<GridInner>,
}

struct GridInner {
    dim: usize,
    n: usize,
    wavenumbers: Vec<i64>,
    k2: Vec<f64>,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl TorusGrid {
    pub fn new(dim: usize, n: usize) -> Result<Self> {
        if !(1..=2).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::UnsupportedGridSize(n));
        }
        let half = (n / 2) as i64;
        let wavenumbers: Vec<i64> = (0..n as i64)
            .map(|i| if i < half { i } else { i - n as i64 })
            .collect();
        let k2 = match dim {
            1 => wavenumbers.iter().map(|&k| (k * k) as f64).collect(),
            _ => {
                let mut out = Vec::with_capacity(n * n);
                for &kx in &wavenumbers {
                    for &ky in &wavenumbers {
                        out.push((kx * kx + ky * ky) as f64);
                    }
                }
                out
            }
        };
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(n);
        let inverse = planner.plan_fft_inverse(n);
        Ok(Self {
            inner: Arc::new(GridInner {
                dim,
                n,
                wavenumbers,
                k2,
                forward,
                inverse,
            }),
        })
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    /// Points per axis.
    pub fn n(&self) -> usize {
        self.inner.n
    }

    /// Total number of grid points, `n^dim`.
    pub fn len(&self) -> usize {
        self.inner.n.pow(self.inner.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Per-axis integer frequencies in DFT order `0, 1, …, n/2−1, −n/2, …, −1`.
    pub fn wavenumbers(&self) -> &[i64] {
        &self.inner.wavenumbers
    }

    /// `|k|²` for every flat spectral index.
    pub fn k2(&self) -> &[f64] {
        &self.inner.k2
    }

    pub fn spacing(&self) -> f64 {
        2.0 * PI / self.inner.n as f64
    }

    /// Quadrature weight of one grid cell, `(2π/n)^dim`.
    pub fn cell_measure(&self) -> f64 {
        self.spacing().powi(self.inner.dim as i32)
    }

    /// Measure of the whole torus, `(2π)^dim`.
    pub fn volume(&self) -> f64 {
        (2.0 * PI).powi(self.inner.dim as i32)
    }

    /// Wavevector of a flat spectral index; the unused component is 0 in 1D.
    pub fn wavevector(&self, idx: usize) -> [i64; 2] {
        let n = self.inner.n;
        let w = &self.inner.wavenumbers;
        match self.inner.dim {
            1 => [w[idx], 0],
            _ => [w[idx / n], w[idx % n]],
        }
    }

    /// Flat spectral index of a wavevector, if it is representable on the grid.
    pub fn index_of(&self, k: &[i64]) -> Option<usize> {
        if k.len() != self.inner.dim {
            return None;
        }
        let n = self.inner.n as i64;
        let mut idx = 0usize;
        for &ki in k {
            if ki < -n / 2 || ki >= n / 2 {
                return None;
            }
            idx = idx * self.inner.n + ki.rem_euclid(n) as usize;
        }
        Some(idx)
    }

    /// Physical coordinates of a flat index; the unused component is 0 in 1D.
    pub fn point(&self, idx: usize) -> [f64; 2] {
        let n = self.inner.n;
        let h = self.spacing();
        match self.inner.dim {
            1 => [idx as f64 * h, 0.0],
            _ => [(idx / n) as f64 * h, (idx % n) as f64 * h],
        }
    }

    pub(crate) fn transform(&self, data: &mut [Complex64], forward: bool) {
        let n = self.inner.n;
        let plan = if forward {
            &self.inner.forward
        } else {
            &self.inner.inverse
        };
        let mut scratch = vec![Complex64::default(); plan.get_inplace_scratch_len()];
        match self.inner.dim {
            1 => plan.process_with_scratch(data, &mut scratch),
            _ => {
                // rows are contiguous along axis 1
                plan.process_with_scratch(data, &mut scratch);
                let mut column = vec![Complex64::default(); n];
                for j in 0..n {
                    for i in 0..n {
                        column[i] = data[i * n + j];
                    }
                    plan.process_with_scratch(&mut column, &mut scratch);
                    for i in 0..n {
                        data[i * n + j] = column[i];
                    }
                }
            }
        }
        if forward {
            let scale = 1.0 / self.len() as f64;
            data.iter_mut().for_each(|z| *z *= scale);
        }
    }
}

impl PartialEq for TorusGrid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.dim == other.inner.dim && self.inner.n == other.inner.n)
    }
}

impl fmt::Debug for TorusGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TorusGrid")
            .field("dim", &self.inner.dim)
            .field("n", &self.inner.n)
            .finish()
    }
}

impl fmt::Display for TorusGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inner.dim {
            1 => write!(f, "T^1[{}]", self.inner.n),
            _ => write!(f, "T^2[{}x{}]", self.inner.n, self.inner.n),
        }
    }
}

/// Builds a grid on `T^dim` with `n` points per axis.
pub fn make_grid(dim: usize, n: usize) -> Result<TorusGrid> {
    TorusGrid::new(dim, n)
}

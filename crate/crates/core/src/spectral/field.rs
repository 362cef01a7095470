use std::sync::OnceLock;

use num_complex::Complex64;

use super::grid::TorusGrid;
use crate::error::{Error, Result};

/// A complex scalar field on a [`TorusGrid`].
///
/// A field carries a physical view (grid values) and a spectral view
/// (Fourier coefficients `c_k = n^{-dim} Σ_x f(x) e^{-ik·x}`), at least one of
/// which is always populated. The missing view is computed on first access and
/// cached, so a `Field` is immutable from the caller's perspective.
#[derive(Clone, Debug)]
pub struct Field {
    grid: TorusGrid,
    values: OnceLock<Vec<Complex64>>,
    coeffs: OnceLock<Vec<Complex64>>,
}

impl Field {
    pub fn from_values(grid: &TorusGrid, values: Vec<Complex64>) -> Result<Self> {
        check_len(grid, values.len())?;
        Ok(Self {
            grid: grid.clone(),
            values: OnceLock::from(values),
            coeffs: OnceLock::new(),
        })
    }

    pub fn from_coeffs(grid: &TorusGrid, coeffs: Vec<Complex64>) -> Result<Self> {
        check_len(grid, coeffs.len())?;
        Ok(Self {
            grid: grid.clone(),
            values: OnceLock::new(),
            coeffs: OnceLock::from(coeffs),
        })
    }

    pub fn zeros(grid: &TorusGrid) -> Self {
        Self::constant(grid, Complex64::default())
    }

    pub fn constant(grid: &TorusGrid, value: Complex64) -> Self {
        let mut coeffs = vec![Complex64::default(); grid.len()];
        coeffs[0] = value;
        Self {
            grid: grid.clone(),
            values: OnceLock::from(vec![value; grid.len()]),
            coeffs: OnceLock::from(coeffs),
        }
    }

    /// Samples `f` at every grid point. In 1D the second coordinate is 0.
    pub fn from_fn(grid: &TorusGrid, f: impl Fn([f64; 2]) -> Complex64) -> Self {
        let values: Vec<Complex64> = (0..grid.len()).map(|i| f(grid.point(i))).collect();
        Self {
            grid: grid.clone(),
            values: OnceLock::from(values),
            coeffs: OnceLock::new(),
        }
    }

    /// Samples a real-valued function.
    pub fn from_real_fn(grid: &TorusGrid, f: impl Fn([f64; 2]) -> f64) -> Self {
        Self::from_fn(grid, |x| Complex64::new(f(x), 0.0))
    }

    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn has_values(&self) -> bool {
        self.values.get().is_some()
    }

    pub fn has_coeffs(&self) -> bool {
        self.coeffs.get().is_some()
    }

    /// Physical view, transforming from the spectral view if needed.
    pub fn values(&self) -> &[Complex64] {
        self.values.get_or_init(|| {
            let mut data = self.coeffs.get().expect("field has no valid view").clone();
            self.grid.transform(&mut data, false);
            data
        })
    }

    /// Spectral view, transforming from the physical view if needed.
    pub fn coeffs(&self) -> &[Complex64] {
        self.coeffs.get_or_init(|| {
            let mut data = self.values.get().expect("field has no valid view").clone();
            self.grid.transform(&mut data, true);
            data
        })
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values();
        self.values.into_inner().unwrap()
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs();
        self.coeffs.into_inner().unwrap()
    }

    pub fn same_grid(&self, other: &Field) -> Result<()> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch {
                left: self.grid.to_string(),
                right: other.grid.to_string(),
            })
        }
    }

    /// Pointwise map in physical space.
    pub fn map_values(&self, f: impl Fn(Complex64) -> Complex64) -> Field {
        let values: Vec<Complex64> = self.values().iter().map(|&z| f(z)).collect();
        Field {
            grid: self.grid.clone(),
            values: OnceLock::from(values),
            coeffs: OnceLock::new(),
        }
    }

    /// Coefficient-wise map in spectral space; `f` receives the flat index.
    pub fn map_coeffs(&self, f: impl Fn(usize, Complex64) -> Complex64) -> Field {
        let coeffs: Vec<Complex64> = self
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, &c)| f(i, c))
            .collect();
        Field {
            grid: self.grid.clone(),
            values: OnceLock::new(),
            coeffs: OnceLock::from(coeffs),
        }
    }

    /// `a·self + b·other`, combining every view that is valid on both sides.
    ///
    /// # Panics
    /// If the fields live on different grids.
    pub fn lincomb(&self, a: Complex64, other: &Field, b: Complex64) -> Field {
        assert!(
            self.grid == other.grid,
            "lincomb on mismatched grids: {} vs {}",
            self.grid,
            other.grid
        );
        let combine = |x: &[Complex64], y: &[Complex64]| -> Vec<Complex64> {
            x.iter().zip(y).map(|(&u, &v)| a * u + b * v).collect()
        };
        let values = OnceLock::new();
        let coeffs = OnceLock::new();
        if let (Some(x), Some(y)) = (self.values.get(), other.values.get()) {
            let _ = values.set(combine(x, y));
        }
        if let (Some(x), Some(y)) = (self.coeffs.get(), other.coeffs.get()) {
            let _ = coeffs.set(combine(x, y));
        }
        if values.get().is_none() && coeffs.get().is_none() {
            let _ = coeffs.set(combine(self.coeffs(), other.coeffs()));
        }
        Field {
            grid: self.grid.clone(),
            values,
            coeffs,
        }
    }

    pub fn add(&self, other: &Field) -> Field {
        self.lincomb(1.0.into(), other, 1.0.into())
    }

    pub fn sub(&self, other: &Field) -> Field {
        self.lincomb(1.0.into(), other, (-1.0).into())
    }

    pub fn scale(&self, a: f64) -> Field {
        let s = |x: &Vec<Complex64>| x.iter().map(|&z| z * a).collect::<Vec<_>>();
        let values = OnceLock::new();
        let coeffs = OnceLock::new();
        if let Some(x) = self.values.get() {
            let _ = values.set(s(x));
        }
        if let Some(x) = self.coeffs.get() {
            let _ = coeffs.set(s(x));
        }
        Field {
            grid: self.grid.clone(),
            values,
            coeffs,
        }
    }

    /// Largest `|Im f(x)|` over the grid.
    pub fn max_imag(&self) -> f64 {
        self.values().iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.values().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// True when every populated view holds only finite numbers.
    pub fn is_finite(&self) -> bool {
        let ok = |v: &Vec<Complex64>| v.iter().all(|z| z.re.is_finite() && z.im.is_finite());
        self.values.get().is_none_or(ok) && self.coeffs.get().is_none_or(ok)
    }

    /// Largest absolute difference between the physical views.
    pub fn max_diff(&self, other: &Field) -> f64 {
        self.values()
            .iter()
            .zip(other.values())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn check_len(grid: &TorusGrid, len: usize) -> Result<()> {
    if len == grid.len() {
        Ok(())
    } else {
        Err(Error::GridMismatch {
            left: grid.to_string(),
            right: format!("{len} samples"),
        })
    }
}

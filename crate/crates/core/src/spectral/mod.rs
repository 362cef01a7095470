//! Torus grids, Fourier transforms, spectral multipliers, quadrature and norms.

mod field;
mod grid;

pub use field::Field;
pub use grid::{make_grid, TorusGrid};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Returns a copy of `f` whose spectral view is valid.
pub fn forward_transform(f: &Field) -> Field {
    let out = f.clone();
    out.coeffs();
    out
}

/// Returns a copy of `f` whose physical view is valid.
pub fn inverse_transform(f: &Field) -> Field {
    let out = f.clone();
    out.values();
    out
}

/// Multiplies every coefficient `c_k` by `m(k)`. The wavevector slice has
/// length `dim`.
pub fn apply_multiplier(f: &Field, m: impl Fn(&[i64]) -> Complex64) -> Field {
    let grid = f.grid().clone();
    let dim = grid.dim();
    f.map_coeffs(|i, c| m(&grid.wavevector(i)[..dim]) * c)
}

/// Multiplier depending only on `|k|²`, the form every function of `Δ` takes.
pub fn apply_radial(f: &Field, m: impl Fn(f64) -> f64) -> Field {
    let k2 = f.grid().k2().to_vec();
    f.map_coeffs(|i, c| c * m(k2[i]))
}

pub fn laplacian(f: &Field) -> Field {
    apply_radial(f, |k2| -k2)
}

/// Partial derivative along `axis`.
pub fn derivative(f: &Field, axis: usize) -> Field {
    apply_multiplier(f, |k| Complex64::new(0.0, k[axis] as f64))
}

/// Spatial mean, i.e. the zeroth Fourier coefficient.
pub fn mean(f: &Field) -> Complex64 {
    if f.has_coeffs() {
        f.coeffs()[0]
    } else {
        let v = f.values();
        v.iter().sum::<Complex64>() / v.len() as f64
    }
}

/// Grid quadrature `cell_measure · Σ f(x)`.
pub fn integrate(f: &Field) -> Complex64 {
    f.values().iter().sum::<Complex64>() * f.grid().cell_measure()
}

/// Sum of `|c_k|² w(|k|²)` scaled by the torus volume.
fn weighted_sq(f: &Field, w: impl Fn(f64) -> f64) -> f64 {
    let k2 = f.grid().k2();
    let s: f64 = f
        .coeffs()
        .iter()
        .zip(k2)
        .map(|(c, &k2)| c.norm_sqr() * w(k2))
        .sum();
    s * f.grid().volume()
}

/// `‖f‖²_{L²}` by Parseval.
pub fn l2_norm_sq(f: &Field) -> f64 {
    weighted_sq(f, |_| 1.0)
}

/// `‖∇f‖²_{L²}` by Parseval.
pub fn grad_norm_sq(f: &Field) -> f64 {
    weighted_sq(f, |k2| k2)
}

/// `‖Δf‖²_{L²}` by Parseval.
pub fn laplacian_norm_sq(f: &Field) -> f64 {
    weighted_sq(f, |k2| k2 * k2)
}

/// `‖f‖_{H^s} = ((2π)^dim Σ (1+|k|²)^s |c_k|²)^{1/2}`.
pub fn sobolev_norm(f: &Field, s: f64) -> Result<f64> {
    if s.is_nan() || s < 0.0 {
        return Err(Error::invalid(
            "s",
            format!("Sobolev index must be >= 0, got {s}"),
        ));
    }
    Ok(weighted_sq(f, |k2| (1.0 + k2).powf(s)).sqrt())
}

/// `(∫ |f|^q)^{1/q}` by grid quadrature.
pub fn lp_norm(f: &Field, q: f64) -> Result<f64> {
    if q.is_nan() || q < 1.0 {
        return Err(Error::invalid(
            "q",
            format!("Lebesgue exponent must be >= 1, got {q}"),
        ));
    }
    Ok(abs_pow_integral(f, q).powf(1.0 / q))
}

/// `∫ |f|^q` by grid quadrature.
pub fn abs_pow_integral(f: &Field, q: f64) -> f64 {
    let v = f.values();
    let s: f64 = if q == 4.0 {
        v.iter().map(|z| z.norm_sqr() * z.norm_sqr()).sum()
    } else if q == 2.0 {
        v.iter().map(|z| z.norm_sqr()).sum()
    } else {
        v.iter().map(|z| z.norm().powf(q)).sum()
    };
    s * f.grid().cell_measure()
}

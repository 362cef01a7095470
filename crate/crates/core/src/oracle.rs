//! Reference computations used to cross-check the solvers.
//!
//! Nothing here shares code with the production paths: the matrix exponential
//! is a plain scaling-and-squaring Taylor evaluation, and the mean-mode
//! reference is classical RK4.

use num_complex::Complex64;

type M2 = [[Complex64; 2]; 2];

fn mul(a: &M2, b: &M2) -> M2 {
    let mut out = [[Complex64::default(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// `e^M` for a 2×2 complex matrix.
pub fn expm2(m: M2) -> M2 {
    let norm: f64 = m
        .iter()
        .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let a: M2 = [
        [m[0][0] * scale, m[0][1] * scale],
        [m[1][0] * scale, m[1][1] * scale],
    ];
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::default();
    let mut result: M2 = [[one, zero], [zero, one]];
    let mut term = result;
    for k in 1..=24 {
        term = mul(&term, &a);
        let inv = 1.0 / k as f64;
        for row in term.iter_mut() {
            for z in row.iter_mut() {
                *z *= inv;
            }
        }
        for i in 0..2 {
            for j in 0..2 {
                result[i][j] += term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        result = mul(&result, &result);
    }
    result
}

/// Classical RK4 for `θ'' + θ + |θ|^p θ = 0` with real data.
///
/// Returns `(θ, θ')` at `t = 0, h, 2h, …, steps·h`.
pub fn mean_mode_rk4(theta0: f64, vel0: f64, p: f64, h: f64, steps: usize) -> Vec<(f64, f64)> {
    let accel = |x: f64| -x - x.abs().powf(p) * x;
    let mut out = Vec::with_capacity(steps + 1);
    let (mut x, mut v) = (theta0, vel0);
    out.push((x, v));
    for _ in 0..steps {
        let (k1x, k1v) = (v, accel(x));
        let (k2x, k2v) = (v + 0.5 * h * k1v, accel(x + 0.5 * h * k1x));
        let (k3x, k3v) = (v + 0.5 * h * k2v, accel(x + 0.5 * h * k2x));
        let (k4x, k4v) = (v + h * k3v, accel(x + h * k3x));
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        out.push((x, v));
    }
    out
}

//! Acceptance suite: one PASS/FAIL line per criterion, detail lines indented.
//!
//! Runs as a plain binary (`harness = false`) so the report is printed even
//! when every criterion passes. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use dkg_cli::config::{parse_config, SimConfig};
use dkg_cli::output::{parse_csv, render_csv, CsvRow};
use dkg_cli::{simulate, Preset};
use dkg_core::diagnostics::{
    discrete_energy, discrete_q, discrete_quadratic_energy, fit_decay_rate, split_state, DecayFit,
    EnergyRecord,
};
use dkg_core::integrators::{run, SimParams};
use dkg_core::oracle::{expm2, mean_mode_rk4};
use dkg_core::semigroup::{
    apply_semigroup, measure_decay_constant, mode_eigenvalues, mode_matrix, PhaseState,
};
use dkg_core::spectral::{self, make_grid, Field, TorusGrid};
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

struct Outcome {
    passed: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            passed: true,
            summary: String::new(),
            details: Vec::new(),
        }
    }

    /// Records one sub-check; the criterion passes only if all of them do.
    fn check(&mut self, ok: bool, line: String) {
        self.passed &= ok;
        self.details
            .push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
    }

    fn info(&mut self, line: String) {
        self.details.push(format!("info {line}"));
    }
}

fn c64(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

// ---------------------------------------------------------------------------
// 1. Per-mode semigroup formula against a matrix-exponential oracle.

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    let mut worst: f64 = 0.0;
    let mut at = (0, 0.0);
    for k2 in 0..=1024u32 {
        let k2f = k2 as f64;
        for t in [0.01, 0.1, 1.0, 10.0] {
            let exact = expm2([[c64(0.0), c64(t)], [c64(-(1.0 + k2f) * t), c64(-k2f * t)]]);
            let m = mode_matrix(k2f, t);
            for (a, b) in m.entries.iter().flatten().zip(exact.iter().flatten()) {
                let d = (a - b).norm();
                if d > worst {
                    worst = d;
                    at = (k2, t);
                }
            }
        }
    }
    out.check(
        worst < 1e-9,
        format!(
            "max entrywise error {worst:.3e} (k²={}, t={}) < 1e-9",
            at.0, at.1
        ),
    );
    out.summary = "semigroup formula vs matrix exponential".into();
    out
}

// ---------------------------------------------------------------------------
// 2. Decay constant and spectral bound.

fn criterion_2() -> Outcome {
    let mut out = Outcome::new();
    let times: Vec<f64> = (0..=400).map(|i| i as f64 * 0.05).collect();
    let c1 = measure_decay_constant(1024, &times).unwrap();
    let c2 = measure_decay_constant(2048, &times).unwrap();
    let rel = (c2 - c1).abs() / c1;
    out.check(c1.is_finite(), format!("C(k²≤1024) = {c1:.6} is finite"));
    out.check(
        rel < 0.01,
        format!("C(k²≤2048) = {c2:.6}, relative change {rel:.2e} < 1e-2"),
    );

    // Eigenvalues from the characteristic polynomial λ² + k²λ + (1 + k²) = 0.
    let mut worst_re = f64::NEG_INFINITY;
    let mut mismatch: f64 = 0.0;
    for k2 in 1..=1024u32 {
        let k2 = k2 as f64;
        let disc = Complex64::new(k2 * k2 - 4.0 * (1.0 + k2), 0.0).sqrt();
        let roots = [(-k2 + disc) / 2.0, (-k2 - disc) / 2.0];
        let max_re = roots[0].re.max(roots[1].re);
        worst_re = worst_re.max(max_re);
        mismatch = mismatch.max((mode_eigenvalues(k2).max_re() - max_re).abs() / max_re.abs());
    }
    out.check(
        worst_re <= -0.5,
        format!("max Re λ over 1 ≤ k² ≤ 1024 is {worst_re} ≤ -1/2"),
    );
    out.check(
        mismatch < 1e-12,
        format!("mode_eigenvalues vs quadratic formula, relative {mismatch:.2e} < 1e-12"),
    );
    out.summary = format!("decay constant C = {c1:.4}, Re λ ≤ -1/2");
    out
}

// ---------------------------------------------------------------------------
// 3. Conservation of the linear undamped scheme; order of the nonlinear drift.

fn smooth_data(g: &TorusGrid) -> (Field, Field) {
    (
        Field::from_real_fn(g, |x| 0.5 + x[0].cos() - 0.4 * (2.0 * x[0]).sin()),
        Field::from_real_fn(g, |x| 0.3 * (3.0 * x[0]).cos()),
    )
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::new();
    let g = make_grid(1, 32).unwrap();
    let (psi0, v0) = smooth_data(&g);
    let params = SimParams {
        damped: false,
        linear: true,
        ..SimParams::new(0.01, 100.0)
    };
    let mut energies = Vec::new();
    let last = run(&psi0, &v0, &params, 1, |_, s| {
        energies.push(discrete_quadratic_energy(s, params.dt))
    })
    .unwrap();
    let e0 = energies[0];
    let drift = energies
        .iter()
        .map(|e| (e - e0).abs() / e0)
        .fold(0.0, f64::max);
    out.check(
        drift < 1e-12 && last.step_index == 10_000,
        format!(
            "linear undamped relative drift {drift:.2e} over {} steps < 1e-12",
            last.step_index
        ),
    );

    let nonlinear_drift = |dt: f64| {
        let params = SimParams {
            damped: false,
            ..SimParams::new(dt, 10.0)
        };
        let mut e = Vec::new();
        run(&psi0, &v0, &params, 1, |_, s| {
            e.push(discrete_energy(s, dt, params.p))
        })
        .unwrap();
        e.iter().map(|x| (x - e[0]).abs()).fold(0.0, f64::max) / e[0]
    };
    let (d1, d2) = (nonlinear_drift(0.01), nonlinear_drift(0.005));
    let ratio = d1 / d2;
    out.check(
        (3.0..=5.0).contains(&ratio),
        format!("nonlinear undamped drift {d1:.3e} → {d2:.3e} when δt halves, ratio {ratio:.3} ∈ [3, 5]"),
    );
    out.summary = format!("linear drift {drift:.1e}, nonlinear drift ratio {ratio:.2}");
    out
}

// ---------------------------------------------------------------------------
// 4. Exponential decay for zero-mean data.

/// Horizon of the decay fits. The fit window is `[T/2, T]` and samples below
/// `1e-12` of the initial value are discarded; at rate ≈ 1 that floor is hit
/// near `t = ln(1e12) ≈ 27.6`, so `T = 24` keeps the whole window populated.
const FIT_HORIZON: f64 = 24.0;

fn fit_until(
    rows: &[CsvRow],
    f: impl Fn(&EnergyRecord) -> f64,
) -> Result<DecayFit, dkg_core::Error> {
    let series: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.record.t <= FIT_HORIZON + 1e-9)
        .map(|r| (r.record.t, f(&r.record)))
        .collect();
    fit_decay_rate(&series)
}

fn zero_mean_fit(linear: bool) -> DecayFit {
    let cfg = parse_config(&format!(
        "psi0 = 1:0.5 -1:0.5\nlinear = {linear}\nt_final = {FIT_HORIZON:?}\nemit_plots = false"
    ))
    .unwrap();
    fit_until(&simulate(&cfg).unwrap(), |r| r.e_phi).unwrap()
}

fn criterion_4() -> Outcome {
    let mut out = Outcome::new();
    let lin = zero_mean_fit(true);
    out.check(
        (lin.alpha - 1.0).abs() <= 0.05,
        format!(
            "linear: rate {:.4} = 1 ± 0.05 (r² {:.5}, window {:.1}..{:.1})",
            lin.alpha, lin.r2, lin.window.0, lin.window.1
        ),
    );
    let nl = zero_mean_fit(false);
    out.check(
        nl.alpha >= 0.9,
        format!("nonlinear p=2: rate {:.4} ≥ 0.9", nl.alpha),
    );
    out.check(
        nl.r2 >= 0.999,
        format!(
            "nonlinear p=2: r² {:.5} ≥ 0.999 (window {:.1}..{:.1})",
            nl.r2, nl.window.0, nl.window.1
        ),
    );
    out.summary = format!(
        "zero-mean data cos x: linear rate {:.3}, nonlinear rate {:.3} r² {:.4}",
        lin.alpha, nl.alpha, nl.r2
    );
    out
}

// ---------------------------------------------------------------------------
// 5. Convergence of E(ψ) to Q on the four presets.

fn preset_rows(preset: Preset, stride: usize) -> (SimConfig, Vec<CsvRow>) {
    let mut cfg = parse_config(&format!("preset = {preset}\nemit_plots = false")).unwrap();
    cfg.observe_stride = stride;
    let rows = simulate(&cfg).unwrap();
    (cfg, rows)
}

/// Largest increase per unit time of `f` along consecutive samples.
fn max_rise_rate(rows: &[CsvRow], f: impl Fn(&EnergyRecord) -> f64) -> f64 {
    rows.windows(2)
        .map(|w| (f(&w[1].record) - f(&w[0].record)) / (w[1].record.t - w[0].record.t))
        .fold(f64::NEG_INFINITY, f64::max)
}

fn first_time_below(rows: &[CsvRow], f: impl Fn(&EnergyRecord) -> f64, level: f64) -> Option<f64> {
    rows.iter()
        .find(|r| f(&r.record) < level)
        .map(|r| r.record.t)
}

/// `(t, E_n(ψ), Q̃_n)` along a preset, where `Q̃_n` evaluates the mean-mode
/// energy at the same time midpoint as `E_n` (informational only).
fn midpoint_mean_energy(preset: Preset, stride: usize) -> Vec<(f64, f64, f64)> {
    let cfg = parse_config(&format!("preset = {preset}")).unwrap();
    let grid = cfg.grid().unwrap();
    let (psi0, v0) = cfg.initial_fields(&grid).unwrap();
    let params = cfg.params();
    let volume = grid.volume();
    let p = params.p;
    let mut out = Vec::new();
    run(&psi0, &v0, &params, stride, |_, s| {
        let (th, th_prev) = split_state(s).theta;
        let mid = 0.5 * (th + th_prev);
        let vel = (th - th_prev) / params.dt;
        let r = mid.norm();
        let q = volume * (0.5 * r * r + 0.5 * vel.norm_sqr() + r.powf(p + 2.0) / (p + 2.0));
        out.push((s.time(params.dt), discrete_energy(s, params.dt, p), q));
    })
    .unwrap();
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new();
    let mut worst_r2: f64 = 1.0;
    for preset in Preset::ALL {
        let stride = if preset.dim() == 1 { 1 } else { 20 };
        let (cfg, rows) = preset_rows(preset, stride);
        let e0 = rows[0].record.e_psi;
        let tol = 10.0 * cfg.dt * cfg.dt * e0;
        let rise = max_rise_rate(&rows, |r| r.e_psi);
        out.check(
            rise <= tol,
            format!("{preset}: E_n(ψ) max rise {rise:.3e}/unit ≤ 10δt²E₀ = {tol:.3e}"),
        );

        for (label, fit) in [
            ("log E_n(φ)", fit_until(&rows, |r| r.e_phi)),
            ("log|E_n(ψ)−Q_n|", fit_until(&rows, |r| r.gap)),
        ] {
            match fit {
                Ok(fit) => {
                    worst_r2 = worst_r2.min(fit.r2);
                    out.check(
                        fit.alpha > 0.0 && fit.r2 >= 0.99,
                        format!(
                            "{preset}: {label} slope {:.4}, r² {:.5} ≥ 0.99 (window {:.1}..{:.1})",
                            -fit.alpha, fit.r2, fit.window.0, fit.window.1
                        ),
                    );
                }
                Err(e) => out.check(false, format!("{preset}: {label} fit failed: {e}")),
            }
        }

        let level = 1e-8 * e0;
        for (label, below) in [
            ("E_n(φ)", first_time_below(&rows, |r| r.e_phi, level)),
            ("|E_n(ψ)−Q_n|", first_time_below(&rows, |r| r.gap, level)),
        ] {
            let text = below.map_or("never".to_string(), |t| format!("t = {t:.2}"));
            out.check(
                below.is_some_and(|t| t < 50.0),
                format!("{preset}: {label} below 1e-8·E₀ = {level:.3e} before t = 50: {text}"),
            );
        }
        let last = rows.last().unwrap().record;
        out.info(format!(
            "{preset}: final E_n(ψ) = {:.6}, Q_n = {:.6}, gap = {:.3e}",
            last.e_psi, last.q, last.gap
        ));
        let mid = midpoint_mean_energy(preset, stride);
        let mid_gap: Vec<(f64, f64)> = mid
            .iter()
            .filter(|m| m.0 <= FIT_HORIZON + 1e-9)
            .map(|&(t, e, q)| (t, (e - q).abs()))
            .collect();
        if let Ok(fit) = fit_decay_rate(&mid_gap) {
            out.info(format!(
                "{preset}: with the mean mode at the midpoint, |E_n(ψ)−Q̃_n| slope {:.4}, r² {:.5}, final {:.3e}",
                -fit.alpha,
                fit.r2,
                mid.last().map_or(f64::NAN, |m| (m.1 - m.2).abs())
            ));
        }
    }
    out.summary = format!("E(ψ) → Q on the four presets (worst fit r² {worst_r2:.4})");
    out
}

// ---------------------------------------------------------------------------
// 6. Positive limit of the mean-mode energy.

fn criterion_6() -> Outcome {
    let mut out = Outcome::new();
    let (cfg, rows) = preset_rows(Preset::Fig2Right, 20);
    let q0 = rows[0].record.q;
    let q_end = rows.last().unwrap().record.q;
    out.check(
        q_end > 0.5 * q0,
        format!("Q_n(t_final) = {q_end:.6} > 0.5·Q_n(0) = {:.6}", 0.5 * q0),
    );
    let cutoff = 0.75 * cfg.t_final;
    let tail: Vec<f64> = rows
        .iter()
        .filter(|r| r.record.t >= cutoff)
        .map(|r| r.record.q)
        .collect();
    let (lo, hi) = tail
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &q| {
            (a.min(q), b.max(q))
        });
    let mean = tail.iter().sum::<f64>() / tail.len() as f64;
    let variation = (hi - lo) / mean;
    out.check(
        variation < 1e-6,
        format!(
            "Q_n relative variation over t ∈ [{cutoff}, {}] is {variation:.3e} < 1e-6",
            cfg.t_final
        ),
    );
    let mid: Vec<f64> = midpoint_mean_energy(Preset::Fig2Right, 20)
        .into_iter()
        .filter(|m| m.0 >= cutoff)
        .map(|m| m.2)
        .collect();
    let (lo, hi) = mid
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &q| {
            (a.min(q), b.max(q))
        });
    out.info(format!(
        "midpoint mean-mode energy Q̃_n: tail relative variation {:.3e}",
        (hi - lo) / hi
    ));
    out.summary = format!("fig2_right: lim Q ≈ {mean:.4} > 0, tail variation {variation:.1e}");
    out
}

// ---------------------------------------------------------------------------
// 7. Constant data reduce to the mean-mode ODE.

fn criterion_7() -> Outcome {
    let mut out = Outcome::new();
    let dt = 2e-5;
    let g = make_grid(1, 64).unwrap();
    let psi0 = Field::constant(&g, c64(1.0));
    let v0 = Field::zeros(&g);
    let params = SimParams::new(dt, 10.0);
    let mut phi_max: f64 = 0.0;
    let mut thetas = Vec::with_capacity(params.total_steps() + 1);
    let mut q = Vec::with_capacity(params.total_steps() + 1);
    run(&psi0, &v0, &params, 1, |step, s| {
        let split = split_state(s);
        phi_max = phi_max
            .max(split.phi.curr.max_abs())
            .max(split.phi.prev.max_abs());
        thetas.push((step, split.theta.0));
        q.push(discrete_q(split.theta.0, split.theta.1, dt, params.p, 1));
    })
    .unwrap();
    out.check(
        phi_max < 1e-13,
        format!("max |φ_n| = {phi_max:.2e} < 1e-13"),
    );

    let sub = 10;
    let reference = mean_mode_rk4(
        1.0,
        0.0,
        params.p,
        dt / sub as f64,
        params.total_steps() * sub,
    );
    let theta_err = thetas
        .iter()
        .map(|&(step, th)| (th - c64(reference[step * sub].0)).norm())
        .fold(0.0, f64::max);
    out.check(
        theta_err < 5.0 * dt,
        format!(
            "max |θ_n − θ_RK4| = {theta_err:.3e} < 5δt = {:.1e} (δt = {dt})",
            5.0 * dt
        ),
    );

    let q_drift = q.iter().map(|x| (x - q[0]).abs()).fold(0.0, f64::max);
    out.check(
        q_drift < 1e-4,
        format!(
            "Q_n absolute drift on [0, 10] = {q_drift:.3e} < 1e-4 (Q₀ = {:.6})",
            q[0]
        ),
    );
    out.summary =
        format!("constant data: φ ≤ {phi_max:.0e}, θ error {theta_err:.1e}, Q drift {q_drift:.1e}");
    out
}

// ---------------------------------------------------------------------------
// 8. H² bound and monotonicity of J along fig1_left.

fn criterion_8() -> Outcome {
    let mut out = Outcome::new();
    let (cfg, rows) = preset_rows(Preset::Fig1Left, 1);
    let early = rows
        .iter()
        .filter(|r| r.step <= 100)
        .map(|r| r.record.h2)
        .fold(0.0, f64::max);
    let sup = rows.iter().map(|r| r.record.h2).fold(0.0, f64::max);
    out.check(
        sup <= 1.05 * early,
        format!("sup ‖ψ_n‖_H² = {sup:.6} ≤ 1.05 × {early:.6} (first 100 steps)"),
    );
    let e0 = rows[0].record.e_psi;
    let tol = 10.0 * cfg.dt * cfg.dt * e0;
    let rise = max_rise_rate(&rows, |r| r.j);
    out.check(
        rise <= tol,
        format!("J max rise {rise:.3e}/unit ≤ 10δt²E₀ = {tol:.3e}"),
    );
    out.summary = format!(
        "fig1_left: H² sup ratio {:.4}, J rise {rise:.1e}/unit",
        sup / early
    );
    out
}

// ---------------------------------------------------------------------------
// 9. Randomized property suites.

const CASES: u32 = 200;

fn band_limited(grid: &TorusGrid, band: i64, seed: &[f64], zero_mean: bool) -> Field {
    let mut it = seed.iter().cycle();
    let coeffs = (0..grid.len())
        .map(|i| {
            let k = grid.wavevector(i);
            if k[..grid.dim()].iter().all(|ki| ki.abs() <= band) && !(zero_mean && i == 0) {
                Complex64::new(*it.next().unwrap(), *it.next().unwrap())
            } else {
                Complex64::default()
            }
        })
        .collect();
    Field::from_coeffs(grid, coeffs).unwrap()
}

fn grid_and_seed() -> impl Strategy<Value = ((usize, usize), Vec<f64>)> {
    (
        prop_oneof![Just((1, 16)), Just((1, 64)), Just((2, 8)), Just((2, 16))],
        prop::collection::vec(-1.0f64..1.0, 7..64),
    )
}

fn run_property<S: Strategy>(
    out: &mut Outcome,
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) {
    let mut runner = TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    });
    match runner.run(&strategy, test) {
        Ok(()) => out.check(true, format!("{name}: {CASES} cases")),
        Err(e) => out.check(false, format!("{name}: {e}")),
    }
}

fn criterion_9() -> Outcome {
    let mut out = Outcome::new();
    run_property(&mut out, "Parseval", grid_and_seed(), |((dim, n), s)| {
        let g = make_grid(dim, n).unwrap();
        let f = band_limited(&g, n as i64 / 2 - 1, &s, false);
        let quadrature: f64 =
            f.values().iter().map(|z| z.norm_sqr()).sum::<f64>() * g.cell_measure();
        let parseval = spectral::sobolev_norm(&f, 0.0).unwrap().powi(2);
        prop_assert!((quadrature - parseval).abs() <= 1e-10 * parseval);
        Ok(())
    });
    run_property(&mut out, "Poincaré", grid_and_seed(), |((dim, n), s)| {
        let g = make_grid(dim, n).unwrap();
        let f = band_limited(&g, n as i64 / 2 - 1, &s, true);
        prop_assert!(spectral::l2_norm_sq(&f) <= spectral::grad_norm_sq(&f) * (1.0 + 1e-12));
        Ok(())
    });
    run_property(
        &mut out,
        "interpolation ‖|∇f|²‖ ≤ √2‖∇f‖‖Δf‖",
        grid_and_seed(),
        |((dim, n), s)| {
            let g = make_grid(dim, n).unwrap();
            let f = band_limited(&g, n as i64 / 4, &s, false);
            let mut density = vec![0.0; g.len()];
            for axis in 0..dim {
                for (d, z) in density
                    .iter_mut()
                    .zip(spectral::derivative(&f, axis).values())
                {
                    *d += z.norm_sqr();
                }
            }
            let lhs = (density.iter().map(|d| d * d).sum::<f64>() * g.cell_measure()).sqrt();
            let rhs = 2f64.sqrt()
                * spectral::grad_norm_sq(&f).sqrt()
                * spectral::laplacian_norm_sq(&f).sqrt();
            prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-300);
            Ok(())
        },
    );
    run_property(
        &mut out,
        "semigroup law S(t)S(s) = S(t+s)",
        (
            prop::collection::vec(-1.0f64..1.0, 5..40),
            0.0f64..5.0,
            0.0f64..5.0,
        ),
        |(s, t1, t2)| {
            let g = make_grid(2, 8).unwrap();
            let psi = band_limited(&g, 4, &s, false);
            let vel = band_limited(&g, 4, &s[1..], false);
            let state = PhaseState::new(psi, vel).unwrap();
            let two = apply_semigroup(&apply_semigroup(&state, t1).unwrap(), t2).unwrap();
            let one = apply_semigroup(&state, t1 + t2).unwrap();
            let scale = one.psi.max_abs().max(one.vel.max_abs()).max(1e-300);
            prop_assert!(two.psi.max_diff(&one.psi) <= 1e-9 * scale);
            prop_assert!(two.vel.max_diff(&one.vel) <= 1e-9 * scale);
            Ok(())
        },
    );
    let finite = any::<f64>().prop_filter("finite", |x| x.is_finite());
    run_property(
        &mut out,
        "CSV round trip",
        prop::collection::vec((any::<u32>(), prop::array::uniform8(finite)), 1..20),
        |rows| {
            let rows: Vec<CsvRow> = rows
                .into_iter()
                .map(|(step, v)| {
                    CsvRow::new(
                        step as usize,
                        EnergyRecord {
                            t: v[0],
                            e_psi: v[1],
                            e_phi: v[2],
                            q: v[3],
                            j: v[4],
                            e_eps: v[5],
                            h2: v[6],
                            gap: v[7],
                        },
                    )
                })
                .collect();
            let back = parse_csv(&render_csv(&rows)).unwrap();
            prop_assert_eq!(back.len(), rows.len());
            for (a, b) in rows.iter().zip(&back) {
                prop_assert_eq!(a.step, b.step);
                let (x, y) = (a.record, b.record);
                for (p, q) in [x.t, x.e_psi, x.e_phi, x.q, x.j, x.e_eps, x.h2, x.gap]
                    .iter()
                    .zip([y.t, y.e_psi, y.e_phi, y.q, y.j, y.e_eps, y.h2, y.gap])
                {
                    prop_assert_eq!(p.to_bits(), q.to_bits());
                }
            }
            Ok(())
        },
    );
    out.summary = format!("property suites, {CASES} randomized cases each");
    out
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = Vec::new();
    for (id, criterion) in criteria {
        if filter.is_some_and(|f| f != id) {
            continue;
        }
        let started = Instant::now();
        let out = criterion();
        let tag = if out.passed { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] criterion {id}: {} ({:.1}s)",
            out.summary,
            started.elapsed().as_secs_f64()
        );
        for line in &out.details {
            println!("         {line}");
        }
        if !out.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}

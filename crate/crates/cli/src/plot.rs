//! Minimal SVG line plots.

use std::fmt::Write as _;

use crate::output::CsvRow;

const PANEL_W: f64 = 520.0;
const PANEL_H: f64 = 360.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 20.0;
const MARGIN_T: f64 = 30.0;
const MARGIN_B: f64 = 45.0;

pub struct Series {
    pub label: String,
    pub color: &'static str,
    pub points: Vec<(f64, f64)>,
}

pub struct Panel {
    pub title: String,
    pub log_y: bool,
    pub series: Vec<Series>,
}

impl Panel {
    fn transformed(&self) -> Vec<Vec<(f64, f64)>> {
        self.series
            .iter()
            .map(|s| {
                s.points
                    .iter()
                    .filter(|(x, y)| x.is_finite() && y.is_finite() && (!self.log_y || *y > 0.0))
                    .map(|&(x, y)| (x, if self.log_y { y.log10() } else { y }))
                    .collect()
            })
            .collect()
    }
}

fn bounds(data: &[Vec<(f64, f64)>]) -> Option<(f64, f64, f64, f64)> {
    let mut it = data.iter().flatten();
    let &(x0, y0) = it.next()?;
    let mut b = (x0, x0, y0, y0);
    for &(x, y) in it {
        b = (b.0.min(x), b.1.max(x), b.2.min(y), b.3.max(y));
    }
    if b.1 - b.0 <= 0.0 {
        b.1 = b.0 + 1.0;
    }
    if b.3 - b.2 <= 1e-12 * b.3.abs().max(1.0) {
        let pad = 0.5 * b.3.abs().max(1.0);
        b.2 -= pad;
        b.3 += pad;
    }
    Some(b)
}

fn tick_label(v: f64, log_y: bool) -> String {
    if log_y {
        format!("1e{:.0}", v.round())
    } else if v != 0.0 && (v.abs() >= 1e4 || v.abs() < 1e-2) {
        format!("{v:.2e}")
    } else {
        format!("{v:.3}")
    }
}

fn render_panel(out: &mut String, panel: &Panel, x_off: f64) {
    let data = panel.transformed();
    let plot_w = PANEL_W - MARGIN_L - MARGIN_R;
    let plot_h = PANEL_H - MARGIN_T - MARGIN_B;
    let (left, top) = (x_off + MARGIN_L, MARGIN_T);
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="18" font-size="14" text-anchor="middle">{}</text>"#,
        left + plot_w / 2.0,
        escape(&panel.title)
    );
    let _ = writeln!(
        out,
        r#"<rect x="{left:.1}" y="{top:.1}" width="{plot_w:.1}" height="{plot_h:.1}" fill="none" stroke="black"/>"#
    );
    let Some((x0, x1, mut y0, mut y1)) = bounds(&data) else {
        return;
    };
    if panel.log_y {
        y0 = y0.floor();
        y1 = y1.ceil().max(y0 + 1.0);
    }
    let sx = |x: f64| left + (x - x0) / (x1 - x0) * plot_w;
    let sy = |y: f64| top + (y1 - y) / (y1 - y0) * plot_h;

    for i in 0..=4 {
        let fx = x0 + (x1 - x0) * i as f64 / 4.0;
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="middle">{:.1}</text>"#,
            sx(fx),
            top + plot_h + 16.0,
            fx
        );
        let fy = y0 + (y1 - y0) * i as f64 / 4.0;
        let _ = writeln!(
            out,
            r#"<text x="{:.1}" y="{:.1}" font-size="11" text-anchor="end">{}</text>"#,
            left - 6.0,
            sy(fy) + 4.0,
            tick_label(fy, panel.log_y)
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.1}" y="{:.1}" font-size="12" text-anchor="middle">t</text>"#,
        left + plot_w / 2.0,
        top + plot_h + 34.0
    );

    for (k, (series, pts)) in panel.series.iter().zip(&data).enumerate() {
        if pts.is_empty() {
            continue;
        }
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            series.color,
            coords.join(" ")
        );
        let ly = top + 16.0 + 16.0 * k as f64;
        let _ = writeln!(
            out,
            r#"<line x1="{:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{}" stroke-width="2"/><text x="{:.1}" y="{:.1}" font-size="12">{}</text>"#,
            left + plot_w - 120.0,
            left + plot_w - 100.0,
            series.color,
            left + plot_w - 95.0,
            ly + 4.0,
            escape(&series.label)
        );
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Lays the panels out side by side in one SVG document.
pub fn render_svg(panels: &[Panel]) -> String {
    let width = PANEL_W * panels.len().max(1) as f64;
    let mut out = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{PANEL_H:.0}" viewBox="0 0 {width:.0} {PANEL_H:.0}" font-family="sans-serif">"#
    );
    out.push('\n');
    out.push_str(r#"<rect width="100%" height="100%" fill="white"/>"#);
    out.push('\n');
    for (i, panel) in panels.iter().enumerate() {
        render_panel(&mut out, panel, PANEL_W * i as f64);
    }
    out.push_str("</svg>\n");
    out
}

/// Energy figure: `E_n(ψ)` with `Q_n` on a linear axis, `E_n(φ)` on a log axis.
pub fn energy_figure(rows: &[CsvRow]) -> String {
    let col = |f: fn(&CsvRow) -> f64| rows.iter().map(|r| (r.record.t, f(r))).collect::<Vec<_>>();
    let linear = Panel {
        title: "energy and mean-mode energy".into(),
        log_y: false,
        series: vec![
            Series {
                label: "E_n(ψ)".into(),
                color: "#1f77b4",
                points: col(|r| r.record.e_psi),
            },
            Series {
                label: "Q_n".into(),
                color: "#d62728",
                points: col(|r| r.record.q),
            },
            Series {
                label: "E_n(φ)".into(),
                color: "#2ca02c",
                points: col(|r| r.record.e_phi),
            },
        ],
    };
    let log = Panel {
        title: "oscillation energy (log scale)".into(),
        log_y: true,
        series: vec![
            Series {
                label: "E_n(φ)".into(),
                color: "#2ca02c",
                points: col(|r| r.record.e_phi),
            },
            Series {
                label: "|E_n(ψ) − Q_n|".into(),
                color: "#9467bd",
                points: col(|r| r.record.gap),
            },
        ],
    };
    render_svg(&[linear, log])
}

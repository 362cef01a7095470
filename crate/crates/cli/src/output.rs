//! `series.csv` and `fit.txt` writers and readers.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use dkg_core::diagnostics::{DecayFit, EnergyRecord};

use crate::error::CliError;

pub const CSV_HEADER: &str = "step,t,e_psi,e_phi,q,j,e_eps,h2,gap";

/// One observed step, flattened for CSV output.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CsvRow {
    pub step: usize,
    pub record: EnergyRecord,
}

impl CsvRow {
    pub fn new(step: usize, record: EnergyRecord) -> Self {
        Self { step, record }
    }

    fn floats(&self) -> [f64; 8] {
        let r = &self.record;
        [r.t, r.e_psi, r.e_phi, r.q, r.j, r.e_eps, r.h2, r.gap]
    }

    /// Comma-separated line with 17 significant digits per float.
    pub fn to_line(&self) -> String {
        let mut line = self.step.to_string();
        for v in self.floats() {
            let _ = write!(line, ",{v:.16e}");
        }
        line
    }

    pub fn parse_line(line: &str) -> Result<Self, String> {
        let cols: Vec<&str> = line.trim_end().split(',').collect();
        if cols.len() != 9 {
            return Err(format!("expected 9 columns, found {}", cols.len()));
        }
        let step = cols[0]
            .parse()
            .map_err(|_| format!("bad step `{}`", cols[0]))?;
        let mut v = [0.0; 8];
        for (slot, text) in v.iter_mut().zip(&cols[1..]) {
            *slot = text.parse().map_err(|_| format!("bad number `{text}`"))?;
        }
        let record = EnergyRecord {
            t: v[0],
            e_psi: v[1],
            e_phi: v[2],
            q: v[3],
            j: v[4],
            e_eps: v[5],
            h2: v[6],
            gap: v[7],
        };
        Ok(Self { step, record })
    }
}

pub fn render_csv(rows: &[CsvRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 200 + 64);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_line());
        out.push('\n');
    }
    out
}

pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim_end() == CSV_HEADER => {}
        Some(h) => return Err(format!("unexpected header `{h}`")),
        None => return Err("empty file".into()),
    }
    lines
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| CsvRow::parse_line(l).map_err(|e| format!("row {}: {e}", i + 2)))
        .collect()
}

pub fn write_csv(path: &Path, rows: &[CsvRow]) -> Result<(), CliError> {
    fs::write(path, render_csv(rows)).map_err(|e| CliError::io(path, e))
}

pub fn read_csv(path: &Path) -> Result<Vec<CsvRow>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_csv(&text).map_err(|msg| {
        CliError::io(
            path,
            std::io::Error::new(std::io::ErrorKind::InvalidData, msg),
        )
    })
}

/// Text block for one fit; a missing fit (too few samples) is written as a comment.
pub fn render_fit(label: &str, fit: Option<&DecayFit>) -> String {
    let mut out = format!("# {label}\n");
    match fit {
        Some(f) => {
            let _ = writeln!(out, "alpha={:?}", f.alpha);
            let _ = writeln!(out, "c={:?}", f.c);
            let _ = writeln!(out, "r2={:?}", f.r2);
            let _ = writeln!(out, "window={:?},{:?}", f.window.0, f.window.1);
        }
        None => out.push_str("# insufficient samples above the noise floor\n"),
    }
    out
}

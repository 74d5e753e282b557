//! State files: a JSON document
//!
//! ```text
//! {
//!   "dim_a": 2,
//!   "dim_b": 2,
//!   "matrix": [[[re, im], ...], ...]
//! }
//! ```
//!
//! with `d_A * d_B` rows of `d_A * d_B` `[re, im]` pairs. Numbers are written
//! with 17 significant digits so doubles survive a round trip unchanged.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use crate::density::BipartiteDensityMatrix;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StateFile {
    dim_a: usize,
    dim_b: usize,
    matrix: Vec<Vec<[f64; 2]>>,
}

/// Formats with 17 significant digits.
pub(crate) fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn to_json_string(rho: &BipartiteDensityMatrix) -> String {
    let m = rho.matrix();
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"dim_a\": {},", rho.dim_a());
    let _ = writeln!(out, "  \"dim_b\": {},", rho.dim_b());
    let _ = writeln!(out, "  \"matrix\": [");
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|j| format!("[{}, {}]", fmt_f64(m[(i, j)].re), fmt_f64(m[(i, j)].im)))
            .collect();
        let sep = if i + 1 == m.nrows() { "" } else { "," };
        let _ = writeln!(out, "    [{}]{sep}", row.join(", "));
    }
    let _ = writeln!(out, "  ]");
    let _ = writeln!(out, "}}");
    out
}

pub fn from_json_str(text: &str) -> Result<BipartiteDensityMatrix> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let n = file.dim_a.saturating_mul(file.dim_b);
    if file.matrix.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "dim_a * dim_b = {n} but matrix has {} rows",
            file.matrix.len()
        )));
    }
    if let Some((i, row)) = file.matrix.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("matrix row {i} has {} entries, expected {n}", row.len())));
    }
    let m = CMatrix::from_row_iterator(n, n, file.matrix.iter().flatten().map(|[re, im]| Complex64::new(*re, *im)));
    BipartiteDensityMatrix::new(file.dim_a, file.dim_b, m)
}

pub fn read_state(path: impl AsRef<Path>) -> Result<BipartiteDensityMatrix> {
    from_json_str(&fs::read_to_string(path)?)
}

pub fn write_state(rho: &BipartiteDensityMatrix, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, to_json_string(rho))?;
    Ok(())
}

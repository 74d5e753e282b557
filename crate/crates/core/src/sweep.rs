//! Uniform-grid sweeps of a lower bound, written as CSV (`w,value,raw,clamped`).

use std::io::{self, Write};

use crate::bounds::{self, Measure, NoiseFamily};
use crate::criteria::CriterionParams;
use crate::density::BipartiteDensityMatrix;
use crate::error::{Error, Result};
use crate::states::io::fmt_f64;

pub const CSV_HEADER: &str = "w,value,raw,clamped";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    /// White-noise weight `w` with fixed `(alpha, beta)`.
    NoiseWeight,
    /// `alpha = beta = x` on a fixed state.
    AlphaBetaDiagonal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    variable: SweepVariable,
    start: f64,
    stop: f64,
    steps: usize,
    params: CriterionParams,
}

impl SweepSpec {
    pub fn new(variable: SweepVariable, start: f64, stop: f64, steps: usize, params: CriterionParams) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite()) || start > stop {
            return Err(Error::Parameter(format!("sweep range [{start}, {stop}] is empty or non-finite")));
        }
        if steps < 2 {
            return Err(Error::Parameter(format!("a sweep needs at least 2 steps, got {steps}")));
        }
        match variable {
            SweepVariable::NoiseWeight if start < 0.0 || stop > 1.0 => {
                return Err(Error::Parameter(format!("noise weights must lie in [0, 1], got [{start}, {stop}]")));
            }
            SweepVariable::AlphaBetaDiagonal if start < 0.0 => {
                return Err(Error::Parameter(format!("alpha = beta must be nonnegative, got start {start}")));
            }
            _ => {}
        }
        Ok(SweepSpec { variable, start, stop, steps, params })
    }

    pub fn variable(&self) -> SweepVariable {
        self.variable
    }

    /// Grid points; the last one is exactly `stop`.
    pub fn grid(&self) -> Vec<f64> {
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| if i == last { self.stop } else { self.start + (self.stop - self.start) * i as f64 / last as f64 })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// The swept variable (noise weight, or `alpha = beta`).
    pub x: f64,
    pub value: f64,
    pub raw: f64,
    pub clamped: bool,
}

pub fn run_sweep(rho: &BipartiteDensityMatrix, spec: &SweepSpec, measure: Measure) -> Result<Vec<SweepRow>> {
    let family = NoiseFamily::new(rho.clone());
    spec.grid()
        .into_iter()
        .map(|x| {
            let report = match spec.variable {
                SweepVariable::NoiseWeight => family.bound_at(x, spec.params, measure)?,
                SweepVariable::AlphaBetaDiagonal => bounds::lower_bound(measure, rho, CriterionParams::diagonal(x)?)?,
            };
            Ok(SweepRow { x, value: report.bound, raw: report.raw, clamped: report.clamped })
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{},{},{},{}", fmt_f64(row.x), fmt_f64(row.value), fmt_f64(row.raw), row.clamped)?;
    }
    out.flush()
}

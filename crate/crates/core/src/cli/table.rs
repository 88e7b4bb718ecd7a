use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;

use super::format_sig;
use crate::conevolume::{integrand, volume, Regime};
use crate::{Error, Result};

pub const CSV_HEADER: &str = "alpha,A,V_re,V_im,integrand,volume,regime";

/// Significant digits of every numeric CSV field.
const CSV_DIGITS: usize = 12;

/// Uniform grid `min, …, max` with `steps` points (both ends included).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TableSpec {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
    pub tol: f64,
}

impl TableSpec {
    fn validate(&self) -> Result<()> {
        let (min, max) = (self.min, self.max);
        if !(0.0 <= min && min <= max && max <= PI) {
            return Err(Error::InvalidInput(format!(
                "table range [{min}, {max}] must satisfy 0 <= min <= max <= pi"
            )));
        }
        if self.steps == 0 || (self.steps == 1 && min != max) {
            return Err(Error::InvalidInput(format!(
                "{} steps cannot cover [{min}, {max}]; use at least 2, or 1 with min = max",
                self.steps
            )));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.min];
        }
        let h = (self.max - self.min) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|k| {
                if k + 1 == self.steps {
                    self.max
                } else {
                    self.min + k as f64 * h
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub alpha: f64,
    pub a: f64,
    pub v: Option<Complex64>,
    pub integrand: f64,
    pub volume: f64,
    pub regime: Regime,
}

impl TableRow {
    pub fn compute(alpha: f64, tol: f64) -> Result<Self> {
        let vol = volume(alpha, tol)?;
        Ok(Self {
            alpha,
            a: vol.a,
            v: vol.v,
            integrand: integrand(alpha)?,
            volume: vol.volume,
            regime: vol.regime,
        })
    }

    /// One CSV line; `V` fields are empty where there is no geometric root.
    pub fn csv_line(&self) -> String {
        let f = |x: f64| format_sig(x, CSV_DIGITS);
        let (re, im) = match self.v {
            Some(v) => (f(v.re), f(v.im)),
            None => (String::new(), String::new()),
        };
        format!(
            "{},{},{re},{im},{},{},{}",
            f(self.alpha),
            f(self.a),
            f(self.integrand),
            f(self.volume),
            self.regime
        )
    }
}

/// Rows are computed independently, possibly in parallel, and written in
/// ascending `α`, so the output does not depend on the thread count.
pub fn emit_table(spec: &TableSpec, threads: Option<usize>) -> Result<String> {
    spec.validate()?;
    let grid = spec.grid();
    let compute = || {
        grid.par_iter()
            .map(|&alpha| TableRow::compute(alpha, spec.tol))
            .collect::<Result<Vec<_>>>()
    };
    let rows = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidInput(format!("cannot start {n} threads: {e}")))?
            .install(compute),
        None => compute(),
    }?;
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    writeln!(out, "{CSV_HEADER}").unwrap();
    for row in &rows {
        writeln!(out, "{}", row.csv_line()).unwrap();
    }
    Ok(out)
}

use std::sync::OnceLock;

use num_complex::Complex64;

use super::ConeAngle;
use crate::algebra::rm_coefficients_exact;
use crate::numerics::{ComplexPolynomial, RootOptions};
use crate::{Error, Result};

/// Slack on the sign constraints `Re(V) ≤ 0` and `Im(V) ≥ 0`, absorbing
/// root-finder noise when the geometric root nears the real axis.
pub const SIGN_SLACK: f64 = 1e-9;

/// How the geometric root was picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectionRule {
    /// Largest `Im(V)` among roots with `Re(V) ≤ 0`, `Im(V) ≥ 0`.
    MaxImagUpperLeft,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeometricRoot {
    pub v: Complex64,
    pub all_roots: Vec<Complex64>,
    pub rule: SelectionRule,
}

/// Integer coefficients of `P` in `A`, ascending in the `V`-degree,
/// converted once from the exact module.
fn float_coefficients() -> &'static [Vec<f64>] {
    static COEFFS: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        rm_coefficients_exact()
            .iter()
            .rev()
            .map(|c| c.to_f64s())
            .collect()
    })
}

/// `P(·, A)` as a numeric polynomial in `V` of degree 5.
pub fn rm_poly_at(a: f64) -> Result<ComplexPolynomial> {
    if !a.is_finite() {
        return Err(Error::InvalidInput(format!("A = {a} is not finite")));
    }
    let coeffs = float_coefficients()
        .iter()
        .map(|c| Complex64::new(c.iter().rev().fold(0.0, |acc, k| acc * a + k), 0.0))
        .collect();
    ComplexPolynomial::new(coeffs)
}

/// `A = cot(α/2)` and all five roots of `P(·, A)`.
pub fn rm_roots(alpha: f64) -> Result<(f64, Vec<Complex64>)> {
    let a = ConeAngle::new(alpha)?.a();
    let roots = rm_poly_at(a)?.find_roots(&RootOptions::default())?;
    Ok((a, roots))
}

/// The root with `Re(V) ≤ 0`, `Im(V) ≥ 0` and the largest `Im(V)`.
///
/// A real winner (or no candidate at all) means there is no hyperbolic
/// structure at this angle and yields [`Error::NotHyperbolic`].
pub fn select_geometric_root(roots: &[Complex64], alpha: f64) -> Result<GeometricRoot> {
    let best = roots
        .iter()
        .filter(|v| v.im >= -SIGN_SLACK && v.re <= SIGN_SLACK)
        .max_by(|a, b| a.im.total_cmp(&b.im))
        .copied();
    match best {
        Some(v) if v.im > SIGN_SLACK * v.norm().max(1.0) => Ok(GeometricRoot {
            v,
            all_roots: roots.to_vec(),
            rule: SelectionRule::MaxImagUpperLeft,
        }),
        _ => Err(Error::NotHyperbolic { alpha }),
    }
}

/// Root finding plus selection at one cone angle.
pub fn geometric_root(alpha: f64) -> Result<GeometricRoot> {
    let (_, roots) = rm_roots(alpha)?;
    select_geometric_root(&roots, alpha)
}

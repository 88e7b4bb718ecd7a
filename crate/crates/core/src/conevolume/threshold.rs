use std::f64::consts::PI;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use super::{ConeAngle, Regime};
use crate::algebra::{discriminant_in_a, Rational};
use crate::numerics::bisect;
use crate::{Error, Result};

/// Half-width of the band around `α₀` tagged Euclidean.
pub const EUCLIDEAN_BAND: f64 = 1e-9;

/// Exact value of the discriminant `D(A)` at the rational number equal to
/// the double `cot(α/2)`.
pub fn discriminant_at(alpha: f64) -> Result<Rational> {
    let a = ConeAngle::new(alpha)?.a();
    let a = Rational::from_float(a)
        .ok_or_else(|| Error::InvalidInput(format!("A = cot({alpha}/2) is not finite")))?;
    Ok(discriminant_in_a().eval_exact(&a))
}

fn sign_of_discriminant(alpha: f64) -> f64 {
    match discriminant_at(alpha) {
        Ok(d) if d.is_zero() => 0.0,
        Ok(d) if d.is_positive() => 1.0,
        Ok(_) => -1.0,
        Err(_) => f64::NAN,
    }
}

fn compute_alpha0() -> Result<f64> {
    let lo = 2.0 * PI / 3.0;
    let hi = PI - 1e-6;
    bisect(sign_of_discriminant, lo, hi, 0.0)
}

/// The threshold angle `α₀`: the zero of `D(cot(α/2))` in `[2π/3, π)`.
///
/// Bisection runs once down to adjacent doubles and is cached, so any
/// `tol ≥ 0` is met by the cached value.
pub fn alpha0(tol: f64) -> Result<f64> {
    static CACHE: OnceLock<Result<f64>> = OnceLock::new();
    if !(tol >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerance {tol} must be nonnegative"
        )));
    }
    CACHE.get_or_init(compute_alpha0).clone()
}

pub(crate) fn threshold() -> f64 {
    alpha0(0.0).expect("discriminant changes sign on [2pi/3, pi)")
}

/// Hyperbolic below `α₀`, Euclidean within [`EUCLIDEAN_BAND`] of it,
/// spherical above. `α = 0` (the cusped manifold) is hyperbolic.
pub fn classify_regime(alpha: f64) -> Result<Regime> {
    let alpha = ConeAngle::new(alpha)?.radians();
    let a0 = threshold();
    Ok(if (alpha - a0).abs() <= EUCLIDEAN_BAND {
        Regime::Euclidean
    } else if alpha < a0 {
        Regime::Hyperbolic
    } else {
        Regime::Spherical
    })
}

use std::f64::consts::PI;

use num_complex::Complex64;

use super::selection::geometric_root;
use super::threshold::{classify_regime, threshold};
use super::{ConeAngle, Regime};
use crate::numerics::{try_adaptive_integrate, QuadOptions, Quadrature};
use crate::{Error, Result};

/// Library default absolute tolerance for volumes.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Angles at which the integrand is probed before extending it by zero to
/// `α = 0`.
const CUSP_PROBES: [f64; 3] = [1e-4, 1e-5, 1e-6];

/// Width of the last integration piece, ending at `α₀`, where the integrand
/// falls to zero like a square root.
const TAIL_WIDTH: f64 = 0.05;

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeResult {
    pub alpha: f64,
    /// `cot(α/2)`, infinite for `α = 0`.
    pub a: f64,
    /// Geometric root at `α`; `None` when `α ≥ α₀` or `α = 0`.
    pub v: Option<Complex64>,
    pub volume: f64,
    pub err_estimate: f64,
    pub regime: Regime,
}

/// Singular-locus length `2 log|L|`, `L = (A − iV)/(A + iV)`, at the
/// geometric root.
///
/// Zero for `α ≥ α₀` and at `α = 0`. Computed as
/// `log((A² + |V|² + 2A Im V)/(A² + |V|² − 2A Im V))`, which needs neither
/// `ρ` nor `L` itself and stays accurate as `A → ∞`.
pub fn integrand(alpha: f64) -> Result<f64> {
    let angle = ConeAngle::new(alpha)?;
    if alpha == 0.0 || alpha >= threshold() {
        return Ok(0.0);
    }
    let a = angle.a();
    let v = geometric_root(alpha)?.v;
    let base = a * a + v.norm_sqr();
    let cross = 2.0 * a * v.im;
    Ok((2.0 * cross / (base - cross)).ln_1p())
}

/// Probes the integrand at [`CUSP_PROBES`] and checks it decreases toward
/// zero, which justifies extending it by `0` at `α = 0`. Returns the probe
/// values.
pub fn cusp_limit_probe() -> Result<[f64; 3]> {
    let mut values = [0.0; 3];
    for (slot, alpha) in values.iter_mut().zip(CUSP_PROBES) {
        *slot = integrand(alpha)?;
    }
    let decreasing = values.windows(2).all(|w| w[1] < w[0]);
    if !decreasing || values[2] > 1e-4 {
        return Err(Error::EndpointProbe(format!("probe values {values:?}")));
    }
    Ok(values)
}

fn integrate_piece(lo: f64, hi: f64, tol: f64) -> Result<Quadrature> {
    let opts = QuadOptions::with_tol(tol);
    match try_adaptive_integrate(integrand, lo, hi, &opts) {
        Err(Error::QuadratureFailed { .. }) => {
            let deeper = QuadOptions {
                max_depth: 2 * opts.max_depth,
                max_segments: 4 * opts.max_segments,
                ..opts
            };
            try_adaptive_integrate(integrand, lo, hi, &deeper)
        }
        other => other,
    }
}

/// `Vol(X(α)) = ∫_α^π 2 log|L| dα`, integrated over `[α, α₀]` since the
/// integrand vanishes beyond `α₀`.
pub fn volume(alpha: f64, tol: f64) -> Result<VolumeResult> {
    let angle = ConeAngle::new(alpha)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerance {tol} must be positive"
        )));
    }
    let a0 = threshold();
    let regime = classify_regime(alpha)?;
    if alpha >= a0 || regime != Regime::Hyperbolic {
        return Ok(VolumeResult {
            alpha,
            a: angle.a(),
            v: None,
            volume: 0.0,
            err_estimate: 0.0,
            regime,
        });
    }
    let v = if alpha == 0.0 {
        cusp_limit_probe()?;
        None
    } else {
        Some(geometric_root(alpha)?.v)
    };
    let knot = a0 - TAIL_WIDTH.min(0.5 * (a0 - alpha));
    let head = integrate_piece(alpha, knot, 0.5 * tol)?;
    let tail = integrate_piece(knot, a0, 0.5 * tol)?;
    Ok(VolumeResult {
        alpha,
        a: angle.a(),
        v,
        volume: (head.value + tail.value).max(0.0),
        err_estimate: head.err_estimate + tail.err_estimate,
        regime,
    })
}

/// Volume of the `k`-fold cyclic branched cover, `k · Vol(X(2π/k))`.
pub fn cover_volume(k: u32, tol: f64) -> Result<VolumeResult> {
    if k < 3 {
        return Err(Error::InvalidInput(format!(
            "cover degree k = {k} must be at least 3"
        )));
    }
    let base = volume(2.0 * PI / f64::from(k), tol)?;
    let k = f64::from(k);
    Ok(VolumeResult {
        volume: k * base.volume,
        err_estimate: k * base.err_estimate,
        ..base
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conevolume::alpha0;

    #[test]
    fn integrand_vanishes_beyond_threshold() {
        let a0 = alpha0(0.0).unwrap();
        for alpha in [a0, a0 + 1e-6, 2.9, 3.0, PI] {
            assert_eq!(integrand(alpha).unwrap(), 0.0);
        }
        assert_eq!(integrand(0.0).unwrap(), 0.0);
        assert!(integrand(-1.0).is_err());
    }

    #[test]
    fn integrand_matches_longitude_modulus() {
        for alpha in [0.3, 1.0, 2.0, 2.7] {
            let root = geometric_root(alpha).unwrap();
            let a = ConeAngle::new(alpha).unwrap().a();
            let l = crate::representation::longitude_eigenvalue(a, root.v).unwrap();
            assert!((integrand(alpha).unwrap() - 2.0 * l.norm().ln()).abs() < 1e-10);
            let v = root.v;
            let ratio =
                (a * a + v.norm_sqr() + 2.0 * a * v.im) / (a * a + v.norm_sqr() - 2.0 * a * v.im);
            assert!((l.norm_sqr() - ratio).abs() < 1e-10 * ratio);
        }
    }

    #[test]
    fn volume_at_threshold_and_beyond() {
        let a0 = alpha0(0.0).unwrap();
        let at = volume(a0, DEFAULT_TOL).unwrap();
        assert!(at.volume < 1e-8);
        assert_eq!(at.regime, Regime::Euclidean);
        let sph = volume(3.0, DEFAULT_TOL).unwrap();
        assert_eq!(
            (sph.volume, sph.regime, sph.v),
            (0.0, Regime::Spherical, None)
        );
        assert!(volume(1.0, 0.0).is_err());
        assert!(volume(3.5, 1e-9).is_err());
    }

    #[test]
    fn cover_rejects_small_k() {
        assert!(cover_volume(2, 1e-9).is_err());
        assert!(cover_volume(0, 1e-9).is_err());
    }

    #[test]
    fn probe_decays() {
        let p = cusp_limit_probe().unwrap();
        assert!(p[0] > p[1] && p[1] > p[2] && p[2] > 0.0);
    }
}

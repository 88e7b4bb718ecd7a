//! Volumes of the cone-manifolds `X(α)` and their cyclic covers.

mod selection;
mod threshold;
mod volume;

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use selection::{
    geometric_root, rm_poly_at, rm_roots, select_geometric_root, GeometricRoot, SelectionRule,
    SIGN_SLACK,
};
pub use threshold::{alpha0, classify_regime, discriminant_at, EUCLIDEAN_BAND};
pub use volume::{cover_volume, cusp_limit_probe, integrand, volume, VolumeResult, DEFAULT_TOL};

/// Cone angle `α ∈ [0, π]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct ConeAngle(f64);

impl ConeAngle {
    pub fn new(alpha: f64) -> Result<Self> {
        if (0.0..=PI).contains(&alpha) {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidInput(format!(
                "cone angle {alpha} outside [0, pi]"
            )))
        }
    }

    pub fn from_degrees(deg: f64) -> Result<Self> {
        Self::new(deg.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// `A = cot(α/2)`; infinite at `α = 0`.
    pub fn a(self) -> f64 {
        if self.0 == 0.0 {
            f64::INFINITY
        } else {
            let half = 0.5 * self.0;
            half.cos() / half.sin()
        }
    }
}

/// Geometry of `X(α)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Hyperbolic,
    Euclidean,
    Spherical,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::Hyperbolic => "hyperbolic",
            Regime::Euclidean => "euclidean",
            Regime::Spherical => "spherical",
        })
    }
}

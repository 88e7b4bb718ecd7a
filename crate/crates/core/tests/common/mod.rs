//! Reference values computed independently of this crate.
#![allow(dead_code, clippy::excessive_precision)]

use std::f64::consts::PI;

/// Volume of the 7²₃ link complement (SnapPy, high precision).
pub const CUSPED_VOLUME: f64 = 6.138_138_789_085_246_683;

/// `(k, Vol(X(2π/k)))` from SnapPy orbifold fillings `(k, 0)` on both cusps.
pub const ORBIFOLD_FILLINGS: [(u32, f64); 6] = [
    (3, 1.733_574_571_214_864_634),
    (4, 3.375_707_488_630_312_348),
    (5, 4.284_764_270_650_146_275),
    (6, 4.818_554_010_888_951_825),
    (8, 5.377_521_865_480_133_007),
    (10, 5.645_855_760_452_797_710),
];

/// `Vol(X(1))` from a 50-digit mpmath evaluation of the same integral.
pub const VOLUME_AT_ONE: f64 = 4.928_855_267_571_928_929;

/// Geometric root at `α = 2π/3` (mpmath, 40 digits).
pub const ROOT_AT_TWO_THIRDS_PI: (f64, f64) =
    (-0.241_597_936_407_542_757_4, 0.717_263_225_651_449_826_9);

/// Euclidean threshold angle.
pub const ALPHA0: f64 = 2.830_028_351_524_685_787;

pub fn two_pi_over(k: u32) -> f64 {
    2.0 * PI / f64::from(k)
}

//! Globally adaptive Gauss–Kronrod (7, 15) quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::{Error, Result};

/// Kronrod abscissae on `[-1, 1]`, outermost first; odd indices are the
/// 7-point Gauss nodes, the last entry is the centre.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadOptions {
    /// Absolute error target for the whole integral.
    pub tol: f64,
    /// Maximum number of bisections applied to any one segment.
    pub max_depth: u32,
    pub max_segments: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_depth: 60,
            max_segments: 20_000,
        }
    }
}

impl QuadOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub err_estimate: f64,
    pub segments: usize,
}

#[derive(Clone, Copy, Debug)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// One Gauss–Kronrod (7, 15) pass with the QUADPACK error rescaling.
fn gk15<F>(f: &F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_centre = f(centre)?;
    let mut kronrod = WGK[7] * f_centre;
    let mut gauss = WG[3] * f_centre;
    let mut res_abs = kronrod.abs();
    let mut values = [(0.0, 0.0); 7];
    for (j, x) in XGK[..7].iter().enumerate() {
        let dx = half * x;
        let (lo, hi) = (f(centre - dx)?, f(centre + dx)?);
        values[j] = (lo, hi);
        kronrod += WGK[j] * (lo + hi);
        res_abs += WGK[j] * (lo.abs() + hi.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (lo + hi);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (f_centre - mean).abs();
    for (j, (lo, hi)) in values.iter().enumerate() {
        res_asc += WGK[j] * ((lo - mean).abs() + (hi - mean).abs());
    }
    let scale = half.abs();
    let value = kronrod * half;
    res_abs *= scale;
    res_asc *= scale;
    let mut err = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    if !value.is_finite() {
        return Err(Error::InvalidInput(format!(
            "integrand is not finite on [{a}, {b}]"
        )));
    }
    Ok((value, err))
}

/// `∫ₐᵇ f` for an integrand that may fail; failures abort the integration.
pub fn try_adaptive_integrate<F>(f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<Quadrature>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(a <= b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInput(format!(
            "integration needs a <= b, got [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(Quadrature {
            value: 0.0,
            err_estimate: 0.0,
            segments: 0,
        });
    }
    let (value, err) = gk15(&f, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Segment {
        a,
        b,
        value,
        err,
        depth: 0,
    });
    // Segments that hit the depth limit; they still count toward the totals.
    let mut frozen: Vec<Segment> = Vec::new();

    loop {
        let total_err: f64 = heap.iter().chain(&frozen).map(|s| s.err).sum();
        let segments = heap.len() + frozen.len();
        if total_err <= opts.tol {
            let value = heap.iter().chain(&frozen).map(|s| s.value).sum();
            return Ok(Quadrature {
                value,
                err_estimate: total_err,
                segments,
            });
        }
        let worst = match heap.pop() {
            Some(s) if segments < opts.max_segments => s,
            other => {
                frozen.extend(other);
                let value = heap.iter().chain(&frozen).map(|s| s.value).sum();
                return Err(Error::QuadratureFailed {
                    partial: value,
                    err_estimate: total_err,
                });
            }
        };
        let mid = 0.5 * (worst.a + worst.b);
        if worst.depth >= opts.max_depth || mid <= worst.a || mid >= worst.b {
            frozen.push(worst);
            continue;
        }
        for (lo, hi) in [(worst.a, mid), (mid, worst.b)] {
            let (value, err) = gk15(&f, lo, hi)?;
            heap.push(Segment {
                a: lo,
                b: hi,
                value,
                err,
                depth: worst.depth + 1,
            });
        }
    }
}

/// `∫ₐᵇ f` to absolute tolerance `tol` with the default depth limit.
pub fn adaptive_integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<Quadrature> {
    try_adaptive_integrate(|x| Ok(f(x)), a, b, &QuadOptions::with_tol(tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn sine_over_half_period() {
        let q = adaptive_integrate(f64::sin, 0.0, PI, 1e-12).unwrap();
        assert!((q.value - 2.0).abs() < 1e-10);
    }

    #[test]
    fn square_on_unit_interval() {
        let q = adaptive_integrate(|x| x * x, 0.0, 1.0, 1e-13).unwrap();
        assert!((q.value - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn zero_integrand_and_empty_interval() {
        let q = adaptive_integrate(|_| 0.0, 2.83, PI, 1e-10).unwrap();
        assert_eq!(q.value, 0.0);
        assert_eq!(
            adaptive_integrate(f64::exp, 1.0, 1.0, 1e-10).unwrap().value,
            0.0
        );
        assert!(adaptive_integrate(f64::exp, 1.0, 0.0, 1e-10).is_err());
    }

    #[test]
    fn square_root_endpoint() {
        // ∫₀¹ √(1 − x) = 2/3, with the square-root approach at the right end.
        let q = adaptive_integrate(|x: f64| (1.0 - x).max(0.0).sqrt(), 0.0, 1.0, 1e-11).unwrap();
        assert!((q.value - 2.0 / 3.0).abs() <= q.err_estimate.max(1e-11));
    }

    #[test]
    fn halving_tolerance_is_self_consistent() {
        let f = |x: f64| (3.0 * x).cos() * (-x).exp() + (1.0 - x).abs().sqrt();
        for tol in [1e-6, 1e-8, 1e-10] {
            let a = adaptive_integrate(f, 0.0, 2.0, tol).unwrap().value;
            let b = adaptive_integrate(f, 0.0, 2.0, tol / 2.0).unwrap().value;
            assert!((a - b).abs() < 10.0 * tol);
        }
    }

    #[test]
    fn depth_limit_reports_partial_value() {
        let opts = QuadOptions {
            tol: 1e-14,
            max_depth: 2,
            max_segments: 100,
        };
        match try_adaptive_integrate(
            |x: f64| Ok(x.abs().sqrt().recip().min(1e6)),
            -1.0,
            1.0,
            &opts,
        ) {
            Err(Error::QuadratureFailed {
                partial,
                err_estimate,
            }) => {
                assert!(partial.is_finite() && err_estimate > 1e-14);
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn integrand_errors_propagate() {
        let r = try_adaptive_integrate(
            |x| {
                if x > 0.5 {
                    Err(Error::NotHyperbolic { alpha: x })
                } else {
                    Ok(x)
                }
            },
            0.0,
            1.0,
            &QuadOptions::default(),
        );
        assert!(matches!(r, Err(Error::NotHyperbolic { .. })));
    }

    proptest! {
        #[test]
        fn linearity_on_polynomials(p in prop::collection::vec(-3.0f64..3.0, 1..6),
                                    q in prop::collection::vec(-3.0f64..3.0, 1..6),
                                    a in -2.0f64..0.0, b in 0.0f64..2.0) {
            let eval = |c: &[f64], x: f64| c.iter().rev().fold(0.0, |acc, k| acc * x + k);
            let fp = adaptive_integrate(|x| eval(&p, x), a, b, 1e-12).unwrap();
            let fq = adaptive_integrate(|x| eval(&q, x), a, b, 1e-12).unwrap();
            let sum = adaptive_integrate(|x| eval(&p, x) + eval(&q, x), a, b, 1e-12).unwrap();
            let slack = fp.err_estimate + fq.err_estimate + sum.err_estimate + 1e-12;
            prop_assert!((sum.value - fp.value - fq.value).abs() <= slack);
        }
    }
}

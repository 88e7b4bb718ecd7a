mod common;

use common::*;
use conevol::algebra::{discriminant_in_a, rat, Rational};
use conevol::conevolume::{
    alpha0, classify_regime, cover_volume, geometric_root, integrand, rm_poly_at, rm_roots, volume,
    Regime, DEFAULT_TOL,
};
use conevol::numerics::RootOptions;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;

#[test]
fn threshold_matches_reference() {
    assert!((alpha0(0.0).unwrap() - ALPHA0).abs() < 1e-13);
    assert!((alpha0(1e-6).unwrap() - ALPHA0).abs() < 1e-6);
}

#[test]
fn geometric_root_matches_reference() {
    let v = geometric_root(2.0 * std::f64::consts::PI / 3.0).unwrap().v;
    let expected = Complex64::new(ROOT_AT_TWO_THIRDS_PI.0, ROOT_AT_TWO_THIRDS_PI.1);
    assert!((v - expected).norm() < 1e-13);
}

#[test]
fn orbifold_volumes_match_census_values() {
    for (k, expected) in ORBIFOLD_FILLINGS {
        let r = volume(two_pi_over(k), DEFAULT_TOL).unwrap();
        assert!(
            (r.volume - expected).abs() < 1e-9,
            "k = {k}: {} vs {expected}",
            r.volume
        );
        assert!(r.err_estimate <= DEFAULT_TOL);
        let cover = cover_volume(k, DEFAULT_TOL).unwrap();
        assert_eq!(cover.volume, f64::from(k) * r.volume);
    }
    assert!((volume(1.0, DEFAULT_TOL).unwrap().volume - VOLUME_AT_ONE).abs() < 1e-9);
}

#[test]
fn cusped_limit() {
    let r = volume(0.0, DEFAULT_TOL).unwrap();
    assert!((r.volume - CUSPED_VOLUME).abs() < 1e-8);
    assert_eq!((r.v, r.regime), (None, Regime::Hyperbolic));
    assert!(r.a.is_infinite());
}

/// Follow the geometric root from near the threshold down to small angles,
/// always taking the root nearest the previous one, and check the selection
/// rule picks the same root at every step.
#[test]
fn selection_agrees_with_continuation() {
    let mut alpha = ALPHA0 - 1e-3;
    let mut tracked = geometric_root(alpha).unwrap().v;
    let step = 1e-3;
    while alpha > 0.1 {
        alpha -= step;
        let (_, roots) = rm_roots(alpha).unwrap();
        let nearest = *roots
            .iter()
            .min_by(|x, y| (*x - tracked).norm().total_cmp(&(*y - tracked).norm()))
            .unwrap();
        let selected = geometric_root(alpha).unwrap().v;
        assert!(
            (nearest - selected).norm() < 1e-9 * (1.0 + selected.norm()),
            "alpha = {alpha}"
        );
        tracked = nearest;
    }
}

/// `lc^(2n−2) ∏_{i<j} (r_i − r_j)²` from the numerical roots.
fn numeric_discriminant(a: f64) -> f64 {
    let p = rm_poly_at(a).unwrap();
    let roots = p.find_roots(&RootOptions::default()).unwrap();
    let mut prod = Complex64::new(p.leading().re.powi(8), 0.0);
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            prod *= (roots[i] - roots[j]).powi(2);
        }
    }
    assert!(prod.im.abs() < 1e-6 * prod.norm());
    prod.re
}

#[test]
fn discriminant_agrees_with_root_product() {
    let disc = discriminant_in_a();
    let mut samples: Vec<Rational> = (1..=19).map(|k| rat(k * 3 + 1, 10)).collect();
    samples.push(rat(1, 1));
    for a in &samples {
        let exact = disc.eval_exact(a).to_f64().unwrap();
        let numeric = numeric_discriminant(a.to_f64().unwrap());
        assert!(
            (exact - numeric).abs() <= 1e-6 * exact.abs(),
            "A = {a}: {exact} vs {numeric}"
        );
    }
}

#[test]
fn volume_profile() {
    let a0 = alpha0(0.0).unwrap();
    let grid: Vec<f64> = (1..=40).map(|k| a0 * k as f64 / 41.0).collect();
    let vols: Vec<f64> = grid
        .iter()
        .map(|&a| volume(a, 1e-9).unwrap().volume)
        .collect();
    assert!(vols.windows(2).all(|w| w[1] < w[0]));
    assert!(vols.iter().all(|&v| v > 0.0 && v < CUSPED_VOLUME));
    for alpha in [a0 + 0.01, 3.0, std::f64::consts::PI] {
        assert_eq!(volume(alpha, 1e-9).unwrap().volume, 0.0);
        assert_ne!(classify_regime(alpha).unwrap(), Regime::Hyperbolic);
    }
}

#[test]
fn volume_is_integral_of_integrand() {
    // Vol(a) − Vol(b) is the integral of the integrand over [a, b]; check
    // with a trapezoid rule on a fine grid away from the threshold.
    let (a, b) = (0.8, 1.6);
    let n = 4000;
    let h = (b - a) / n as f64;
    let mut trap = 0.5 * (integrand(a).unwrap() + integrand(b).unwrap());
    for k in 1..n {
        trap += integrand(a + k as f64 * h).unwrap();
    }
    trap *= h;
    let diff = volume(a, 1e-11).unwrap().volume - volume(b, 1e-11).unwrap().volume;
    assert!((diff - trap).abs() < 1e-6);
}

#[test]
fn tightening_tolerance_moves_volumes_little() {
    for alpha in [0.0, 0.05, 0.7, 1.5, 2.5, 2.82] {
        let coarse = volume(alpha, 1e-9).unwrap().volume;
        let fine = volume(alpha, 1e-10).unwrap().volume;
        assert!((coarse - fine).abs() < 1e-8, "alpha = {alpha}");
    }
}

#[test]
fn cover_volume_per_sheet_increases_with_degree() {
    let per_sheet: Vec<f64> = (3..=50)
        .map(|k| cover_volume(k, 1e-9).unwrap().volume / f64::from(k))
        .collect();
    assert!(per_sheet.windows(2).all(|w| w[1] > w[0]));
    assert!(per_sheet.iter().all(|&v| v < CUSPED_VOLUME));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn volume_nonnegative_and_monotone(a in 0.0f64..std::f64::consts::PI, b in 0.0f64..std::f64::consts::PI) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let v_lo = volume(lo, 1e-9).unwrap().volume;
        let v_hi = volume(hi, 1e-9).unwrap().volume;
        prop_assert!(v_lo >= 0.0 && v_hi >= 0.0);
        prop_assert!(v_lo + 1e-8 >= v_hi);
    }

    #[test]
    fn selected_root_satisfies_constraints(alpha in 0.05f64..2.82) {
        let g = geometric_root(alpha).unwrap();
        prop_assert!(g.v.re <= 1e-9 && g.v.im > 0.0);
        let p = rm_poly_at(conevol::conevolume::ConeAngle::new(alpha).unwrap().a()).unwrap();
        prop_assert!(p.relative_residual(g.v) < 1e-10);
        for r in &g.all_roots {
            if r.re <= 1e-9 && r.im >= -1e-9 {
                prop_assert!(r.im <= g.v.im);
            }
        }
    }

    #[test]
    fn integrand_is_finite_and_nonnegative(alpha in 0.0f64..=std::f64::consts::PI) {
        let f = integrand(alpha).unwrap();
        prop_assert!(f.is_finite() && f >= 0.0);
    }
}

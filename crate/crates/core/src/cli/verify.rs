use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::format_sig;
use crate::algebra::ExactSample;
use crate::conevolume::{alpha0, geometric_root};
use crate::representation::{
    exact_identity_check, exact_sl2, longitude_lemma_defects, longitudes, pythagorean_check,
    random_sl2, relator_residual, swn_square_residual, trace_swn, RepPoint,
};

/// Side of the smallest exact grid; `37²` samples exceed the degree bound
/// that makes agreement on the grid a proof of the identity.
pub const EXACT_GRID_MIN_SIDE: usize = 37;

const GRID_POINTS: usize = 50;
const PYTHAGOREAN_POINTS: usize = 20;
const TRACE_TOL: f64 = 1e-8;
const LEMMA_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn sci(x: f64) -> String {
    format_sig(x, 3)
}

/// Exact trace factorization on a square Pythagorean grid with at least
/// `samples` points.
pub fn check_exact_identity(samples: usize) -> CheckOutcome {
    let side = EXACT_GRID_MIN_SIDE.max((samples as f64).sqrt().ceil() as usize);
    let grid = ExactSample::pythagorean_grid(side, side);
    let failures = grid.iter().filter(|s| !exact_identity_check(s)).count();
    CheckOutcome {
        name: "exact-trace-factorization",
        passed: failures == 0,
        detail: format!(
            "{} of {} exact samples agree",
            grid.len() - failures,
            grid.len()
        ),
    }
}

/// `tr(S⁻¹ L_T) = tr S` and `tr(T⁻¹ L_S) = tr T` for random pairs in
/// `SL(2, ℂ)`: exactly, after converting each sample to `SL(2, ℚ(i))`, and
/// in floating point relative to the size of the longitude matrices.
pub fn check_longitude_lemma(rng: &mut ChaCha8Rng, pairs: usize) -> CheckOutcome {
    let mut worst = 0.0f64;
    let mut exact_failures = 0;
    for _ in 0..pairs {
        let (s, t) = (random_sl2(rng), random_sl2(rng));
        let (l_s, l_t) = longitudes(&s, &t);
        let (d1, d2) = longitude_lemma_defects(&s, &t);
        worst = worst.max(d1.norm().max(d2.norm()) / (1.0 + l_s.norm().max(l_t.norm())));
        let exact = exact_sl2(&s).and_then(|s| Ok((s, exact_sl2(&t)?)));
        match exact {
            Ok((s, t)) => {
                let (e1, e2) = longitude_lemma_defects(&s, &t);
                exact_failures += usize::from(!(e1.is_zero() && e2.is_zero()));
            }
            Err(_) => exact_failures += 1,
        }
    }
    CheckOutcome {
        name: "longitude-trace-lemma",
        passed: exact_failures == 0 && worst < LEMMA_TOL,
        detail: format!(
            "{pairs} random pairs, {} exact agreements, max float relative residual {}",
            pairs - exact_failures,
            sci(worst)
        ),
    }
}

/// `S W S⁻¹ W⁻¹ = −(S W n)²` at random points off the variety.
pub fn check_swn_square(rng: &mut ChaCha8Rng, points: usize) -> CheckOutcome {
    let mut worst = 0.0f64;
    for _ in 0..points {
        let alpha = rng.gen_range(0.2..std::f64::consts::PI);
        let v = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let p = RepPoint::new(alpha, v).expect("finite sample");
        worst = worst.max(swn_square_residual(&p));
    }
    CheckOutcome {
        name: "relator-equals-minus-swn-squared",
        passed: worst < TRACE_TOL,
        detail: format!(
            "{points} random points, max relative residual {}",
            sci(worst)
        ),
    }
}

/// Evenly spaced hyperbolic angles in `(lo, hi)`, endpoints excluded.
fn interior_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| lo + (hi - lo) * k as f64 / (n + 1) as f64)
        .collect()
}

/// At the geometric root, `tr(S W n)` vanishes and the relator holds.
pub fn check_geometric_traces() -> CheckOutcome {
    let name = "geometric-root-relator";
    let a0 = match alpha0(0.0) {
        Ok(a0) => a0,
        Err(e) => {
            return CheckOutcome {
                name,
                passed: false,
                detail: e.to_string(),
            }
        }
    };
    let (mut trace, mut relator) = (0.0f64, 0.0f64);
    for alpha in interior_grid(0.1, a0 - 0.01, GRID_POINTS) {
        let point = match geometric_root(alpha).and_then(|g| RepPoint::new(alpha, g.v)) {
            Ok(p) => p,
            Err(e) => {
                return CheckOutcome {
                    name,
                    passed: false,
                    detail: format!("alpha = {alpha}: {e}"),
                }
            }
        };
        trace = trace.max(trace_swn(&point).norm());
        relator = relator.max(relator_residual(&point));
    }
    CheckOutcome {
        name,
        passed: trace < TRACE_TOL && relator < TRACE_TOL,
        detail: format!(
            "{GRID_POINTS} angles, max |tr SWn| {}, max relator residual {}",
            sci(trace),
            sci(relator)
        ),
    }
}

/// Longitude trace and the cone-angle relation between `ρ` and the complex
/// length, at the geometric root.
pub fn check_pythagorean() -> CheckOutcome {
    let name = "longitude-and-pythagorean-relation";
    let a0 = match alpha0(0.0) {
        Ok(a0) => a0,
        Err(e) => {
            return CheckOutcome {
                name,
                passed: false,
                detail: e.to_string(),
            }
        }
    };
    let (mut trace, mut pyth) = (0.0f64, 0.0f64);
    for alpha in interior_grid(0.3, a0 - 0.01, PYTHAGOREAN_POINTS) {
        let check = geometric_root(alpha)
            .and_then(|g| RepPoint::new(alpha, g.v))
            .and_then(|p| pythagorean_check(&p));
        match check {
            Ok(c) => {
                trace = trace.max(c.residual);
                pyth = pyth.max(c.pythagorean_residual);
            }
            Err(e) => {
                return CheckOutcome {
                    name,
                    passed: false,
                    detail: format!("alpha = {alpha}: {e}"),
                }
            }
        }
    }
    CheckOutcome {
        name,
        passed: trace < TRACE_TOL && pyth < TRACE_TOL,
        detail: format!(
            "{PYTHAGOREAN_POINTS} angles, max longitude trace residual {}, max relation residual {}",
            sci(trace),
            sci(pyth)
        ),
    }
}

/// All checks behind `conevol verify`. Deterministic for a given seed.
pub fn run_verify(samples: usize, seed: u64) -> Vec<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = samples.max(1);
    vec![
        check_exact_identity(samples),
        check_longitude_lemma(&mut rng, random),
        check_swn_square(&mut rng, random),
        check_geometric_traces(),
        check_pythagorean(),
    ]
}

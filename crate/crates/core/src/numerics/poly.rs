use std::f64::consts::TAU;

use num_complex::Complex64;

use super::complex::ensure_finite;
use crate::{Error, Result};

/// Angular offset of the starting circle, in radians (`√2 − 1`). Irrational
/// so that starting points avoid the symmetry lines of real polynomials.
const ANGLE_OFFSET: f64 = 0.414_213_562_373_095_1;

/// Settings for [`ComplexPolynomial::find_roots`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootOptions {
    /// Bound on the backward error `|p(r)| / Σ|cᵢ||r|ⁱ` of every root.
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iterations: 500,
        }
    }
}

/// Polynomial with double-precision complex coefficients, ascending degree.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    /// Trailing zero coefficients are dropped; the zero polynomial and
    /// non-finite coefficients are rejected.
    pub fn new(mut coeffs: Vec<Complex64>) -> Result<Self> {
        for c in &coeffs {
            ensure_finite(*c)?;
        }
        while coeffs
            .last()
            .is_some_and(|c| *c == Complex64::new(0.0, 0.0))
        {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `leading · ∏ (z − rᵢ)`.
    pub fn from_roots(roots: &[Complex64], leading: Complex64) -> Result<Self> {
        let mut coeffs = vec![leading];
        for r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.degree()]
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// `(p(z), p'(z))` in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        self.coeffs
            .iter()
            .rev()
            .fold((zero, zero), |(p, dp), c| (p * z + c, dp * z + p))
    }

    /// `Σ |cᵢ| |z|ⁱ`, the size of `p(z)` before cancellation.
    pub fn residual_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// Backward error of `z` as a root.
    pub fn relative_residual(&self, z: Complex64) -> f64 {
        let scale = self.residual_scale(z);
        if scale == 0.0 {
            0.0
        } else {
            self.eval(z).norm() / scale
        }
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Radius of the starting circle: the smaller of the Cauchy bound and
    /// the Fujiwara bound, both of which enclose every root.
    fn start_radius(&self) -> f64 {
        let n = self.degree();
        let lead = self.leading();
        let ratios: Vec<f64> = self.coeffs[..n].iter().map(|c| (c / lead).norm()).collect();
        let cauchy = 1.0 + ratios.iter().cloned().fold(0.0, f64::max);
        let fujiwara = (1..=n)
            .map(|k| {
                let r = ratios[n - k];
                if k == n {
                    (0.5 * r).powf(1.0 / k as f64)
                } else {
                    r.powf(1.0 / k as f64)
                }
            })
            .fold(0.0, f64::max)
            * 2.0;
        cauchy.min(fujiwara)
    }

    /// All `degree()` roots, with multiplicity, by Aberth–Ehrlich iteration.
    ///
    /// Starts from `degree()` points equally spaced on a circle enclosing all
    /// roots, rotated by a fixed offset, so the result is deterministic.
    /// Fails with [`Error::RootsNotConverged`] carrying the last iterate if
    /// some root's backward error is still above `opts.tol`.
    pub fn find_roots(&self, opts: &RootOptions) -> Result<Vec<Complex64>> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::DegreeTooLow {
                degree: 0,
                required: 1,
            });
        }
        if self.leading().norm() < f64::MIN_POSITIVE / f64::EPSILON {
            return Err(Error::InvalidInput("leading coefficient underflows".into()));
        }
        // Exact zero roots are split off before iterating.
        let zeros = self.coeffs.iter().take_while(|c| c.norm() == 0.0).count();
        let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
        if zeros == n {
            return Ok(roots);
        }
        let reduced = ComplexPolynomial {
            coeffs: self.coeffs[zeros..].to_vec(),
        };
        roots.extend(reduced.aberth(opts)?);
        Ok(roots)
    }

    fn aberth(&self, opts: &RootOptions) -> Result<Vec<Complex64>> {
        let n = self.degree();
        if n == 1 {
            return Ok(vec![-self.coeffs[0] / self.coeffs[1]]);
        }
        let radius = self.start_radius();
        let mut z: Vec<Complex64> = (0..n)
            .map(|k| Complex64::from_polar(radius, TAU * k as f64 / n as f64 + ANGLE_OFFSET))
            .collect();
        let mut done = vec![false; n];
        let floor = 4.0 * (n as f64 + 1.0) * f64::EPSILON;

        for _ in 0..opts.max_iterations {
            if done.iter().all(|&d| d) {
                break;
            }
            for k in 0..n {
                if done[k] {
                    continue;
                }
                let (p, dp) = self.eval_with_derivative(z[k]);
                if p.norm() == 0.0 {
                    done[k] = true;
                    continue;
                }
                let at_floor = p.norm() <= floor * self.residual_scale(z[k]);
                let ehrlich: Complex64 = (0..n)
                    .filter(|&j| j != k && z[j] != z[k])
                    .map(|j| (z[k] - z[j]).inv())
                    .sum();
                let step = if dp.norm() == 0.0 {
                    // Flat spot: nudge off it.
                    Complex64::new(1e-8, 1e-8) * z[k].norm().max(1.0)
                } else {
                    let ratio = p / dp;
                    ratio / (Complex64::new(1.0, 0.0) - ratio * ehrlich)
                };
                if step.re.is_finite() && step.im.is_finite() {
                    z[k] -= step;
                }
                if at_floor || step.norm() <= f64::EPSILON * z[k].norm() {
                    done[k] = true;
                }
            }
        }

        let worst = z
            .iter()
            .map(|&r| self.relative_residual(r))
            .fold(0.0, f64::max);
        if !(worst <= opts.tol) {
            return Err(Error::RootsNotConverged {
                iterations: opts.max_iterations,
                best: z,
                residual: worst,
            });
        }
        Ok(z)
    }
}

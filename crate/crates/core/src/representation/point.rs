use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::One;
use rand::Rng;

use super::{Entry, Mat2};
use crate::algebra::{ExactSample, GaussianRational, Rational};
use crate::numerics::{ensure_finite, principal_acosh};
use crate::{Error, Result};

/// A cone angle together with a value `V = cosh ρ`.
///
/// `ρ` is taken on the principal `acosh` branch. The other branch swaps
/// `e^{ρ/2}` and `e^{−ρ/2}`, which exchanges `S` and `T` and gives an
/// equivalent representation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RepPoint {
    alpha: f64,
    v: Complex64,
    rho: Complex64,
    a: f64,
}

impl RepPoint {
    pub fn new(alpha: f64, v: Complex64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= PI) {
            return Err(Error::InvalidInput(format!(
                "cone angle {alpha} outside (0, pi]"
            )));
        }
        ensure_finite(v)?;
        let half = 0.5 * alpha;
        Ok(Self {
            alpha,
            v,
            rho: principal_acosh(v),
            a: half.cos() / half.sin(),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn v(&self) -> Complex64 {
        self.v
    }

    pub fn rho(&self) -> Complex64 {
        self.rho
    }

    /// `A = cot(α/2)`.
    pub fn a(&self) -> f64 {
        self.a
    }
}

/// Images of the generators and the involution `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Generators<T> {
    pub s: Mat2<T>,
    pub t: Mat2<T>,
    pub n: Mat2<T>,
}

/// `n = diag(i, −i)`, one of the two lifts of the involution.
fn involution<T: Entry>() -> Mat2<T> {
    Mat2::diag(T::imag_unit(), T::imag_unit().neg())
}

/// `S = [[cos α/2, i e^{ρ/2} sin α/2], [i e^{−ρ/2} sin α/2, cos α/2]]`, and
/// `T` the same with `ρ ↦ −ρ`.
pub fn build_generators(point: &RepPoint) -> Generators<Complex64> {
    let half = 0.5 * point.alpha;
    let (cos, sin) = (Complex64::new(half.cos(), 0.0), half.sin());
    let up = (point.rho * 0.5).exp();
    let down = (-point.rho * 0.5).exp();
    let i = Complex64::i();
    Generators {
        s: Mat2::new(cos, i * up * sin, i * down * sin, cos),
        t: Mat2::new(cos, i * down * sin, i * up * sin, cos),
        n: involution(),
    }
}

/// The same matrices over `ℚ(i)` with `cos α/2 = c`, `sin α/2 = s`,
/// `e^{ρ/2} = u`.
pub fn exact_generators(sample: &ExactSample) -> Generators<GaussianRational> {
    let zero = crate::algebra::Rational::from_integer(0.into());
    let cos = GaussianRational::from(sample.c().clone());
    let up = GaussianRational::new(zero.clone(), sample.s() * sample.u());
    let down = GaussianRational::new(zero, sample.s() / sample.u());
    Generators {
        s: Mat2::new(cos.clone(), up.clone(), down.clone(), cos.clone()),
        t: Mat2::new(cos.clone(), down, up, cos),
        n: involution(),
    }
}

/// Random element of `SL(2, ℂ)`: three entries uniform in the disc of
/// radius 2, the fourth solved from `det = 1`, rejecting small pivots.
pub fn random_sl2<R: Rng + ?Sized>(rng: &mut R) -> Mat2<Complex64> {
    let mut disc = || loop {
        let z = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if z.norm() <= 2.0 {
            return z;
        }
    };
    loop {
        let (a, b, c) = (disc(), disc(), disc());
        if a.norm() < 0.25 {
            continue;
        }
        let d = (Complex64::new(1.0, 0.0) + b * c) / a;
        return Mat2::new(a, b, c, d);
    }
}

/// The unit-determinant matrix over `ℚ(i)` agreeing with `m` in its first
/// three entries, which are converted exactly; the last entry is solved
/// from `det = 1`. Fails when `m.a11` is zero or an entry is not finite.
pub fn exact_sl2(m: &Mat2<Complex64>) -> Result<Mat2<GaussianRational>> {
    let exact = |z: Complex64| -> Result<GaussianRational> {
        match (Rational::from_float(z.re), Rational::from_float(z.im)) {
            (Some(re), Some(im)) => Ok(GaussianRational::new(re, im)),
            _ => Err(Error::InvalidInput(format!(
                "matrix entry {z} is not finite"
            ))),
        }
    };
    let (a, b, c) = (exact(m.a11)?, exact(m.a12)?, exact(m.a21)?);
    let inv = a
        .inv()
        .ok_or_else(|| Error::InvalidInput("leading matrix entry is zero".into()))?;
    let d = (<GaussianRational as One>::one() + &b * &c) * inv;
    Ok(Mat2::new(a, b, c, d))
}

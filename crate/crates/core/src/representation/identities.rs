use num_complex::Complex64;
use num_traits::Zero;

use super::point::{build_generators, exact_generators};
use super::{word_eval, Entry, Mat2, RepPoint, Word};
use crate::algebra::{rat, rm_polynomial, ExactSample, GaussianRational, Rational};
use crate::{Error, Result};

/// Power of `sin(α/2)` in the constant relating `tr(SWn)` to the factored
/// form: `tr(SWn) = −4 sin¹⁶(α/2) · (−4i sinh ρ (2V² + A⁴ + 2A² − 1) P)`.
pub const TRACE_NORMALIZATION_SIN_POWER: u32 = 16;

/// `tr(S W n)` at a representation point.
pub fn trace_swn(point: &RepPoint) -> Complex64 {
    let g = build_generators(point);
    let w = word_eval(&Word::w(), &g.s, &g.t);
    g.s.matmul(&w).matmul(&g.n).trace()
}

/// `‖S W S⁻¹ W⁻¹ − I‖`, zero exactly on representations.
pub fn relator_residual(point: &RepPoint) -> f64 {
    let g = build_generators(point);
    word_eval(&Word::relator(), &g.s, &g.t).distance(&Mat2::identity())
}

/// `‖S W S⁻¹ W⁻¹ + (S W n)²‖ / (1 + ‖S W S⁻¹ W⁻¹‖)`. The numerator
/// vanishes at every point because `n` conjugates `S` and `T` to their
/// inverses; the scaling keeps the check meaningful where the matrices are
/// large.
pub fn swn_square_residual(point: &RepPoint) -> f64 {
    let g = build_generators(point);
    let relator = word_eval(&Word::relator(), &g.s, &g.t);
    let swn = g.s.matmul(&word_eval(&Word::w(), &g.s, &g.t)).matmul(&g.n);
    relator.add(&swn.pow(2)).norm() / (1.0 + relator.norm())
}

/// `tr(S W n)` over `ℚ(i)`.
pub fn trace_swn_exact(sample: &ExactSample) -> GaussianRational {
    let g = exact_generators(sample);
    let w = word_eval(&Word::w(), &g.s, &g.t);
    g.s.matmul(&w).matmul(&g.n).trace()
}

/// Both sides of the trace factorization, exactly: the left side is
/// `tr(S W n)`, the right side is
/// `16 i s¹⁶ sinh ρ (2V² + A⁴ + 2A² − 1) P(V, A)` with `A = c/s` and
/// `V`, `sinh ρ` from `u`.
pub fn exact_identity_sides(sample: &ExactSample) -> (GaussianRational, GaussianRational) {
    let lhs = trace_swn_exact(sample);

    let (a, v) = (sample.a(), sample.v());
    let a2 = &a * &a;
    let other_factor = rat(2, 1) * &v * &v + &a2 * &a2 + rat(2, 1) * &a2 - rat(1, 1);
    let p = rm_polynomial().eval_exact(&v, &a);
    let s_power = num_traits::pow(sample.s().clone(), TRACE_NORMALIZATION_SIN_POWER as usize);
    let imag: Rational = rat(16, 1) * s_power * sample.sinh_rho() * other_factor * p;
    let rhs = GaussianRational::new(Rational::zero(), imag);
    (lhs, rhs)
}

/// Exact check of the trace factorization at one sample.
pub fn exact_identity_check(sample: &ExactSample) -> bool {
    let (lhs, rhs) = exact_identity_sides(sample);
    lhs == rhs
}

/// `(L_S, L_T)` for `l_s = w s` and `l_t = t⁻¹[t,s]²[t,s⁻¹]² t`.
pub fn longitudes<T: Entry>(s: &Mat2<T>, t: &Mat2<T>) -> (Mat2<T>, Mat2<T>) {
    (
        word_eval(&Word::longitude_s(), s, t),
        word_eval(&Word::longitude_t(), s, t),
    )
}

/// `(tr(S⁻¹ L_T) − tr S, tr(T⁻¹ L_S) − tr T)`, both zero in exact
/// arithmetic for every pair.
pub fn longitude_lemma_defects<T: Entry>(s: &Mat2<T>, t: &Mat2<T>) -> (T, T) {
    let (l_s, l_t) = longitudes(s, t);
    (
        s.sl2_inverse().matmul(&l_t).trace().sub(&s.trace()),
        t.sl2_inverse().matmul(&l_s).trace().sub(&t.trace()),
    )
}

/// `L = (A − iV)/(A + iV)`.
pub fn longitude_eigenvalue(a: f64, v: Complex64) -> Result<Complex64> {
    let i = Complex64::i();
    let den = a + i * v;
    if den.norm() <= f64::EPSILON * (a.abs() + v.norm()).max(f64::MIN_POSITIVE) {
        return Err(Error::DegenerateLongitude);
    }
    Ok((a - i * v) / den)
}

/// `L + 1/L`, the trace a longitude must have.
pub fn predicted_longitude_trace(a: f64, v: Complex64) -> Result<Complex64> {
    let l = longitude_eigenvalue(a, v)?;
    Ok(l + l.inv())
}

/// Outcome of [`pythagorean_check`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PythagoreanCheck {
    /// `|tr(L_T) − (L + 1/L)|`.
    pub residual: f64,
    pub longitude_eigenvalue: Complex64,
    /// `γ = 2 log L` on the principal branch (defined modulo `4πi`).
    pub complex_length: Complex64,
    /// `|2 cosh(γ/2) − tr(L_T)|`.
    pub cosh_recovery_residual: f64,
    /// `|i cosh ρ + A tanh(γ/4)|`. The relation `i cosh ρ = A tanh(γ'/4)`
    /// holds for the complex length `γ' = −γ` of the other eigenvalue
    /// `1/L`; `tanh(γ/4) = (L − 1)/(L + 1)` does not depend on the branch.
    pub pythagorean_residual: f64,
}

/// Compares the longitude trace computed from the matrices with the one
/// predicted by `L = (A − iV)/(A + iV)`.
pub fn pythagorean_check(point: &RepPoint) -> Result<PythagoreanCheck> {
    let v = point.v();
    if v.im.abs() <= 1e-12 * v.norm().max(1.0) {
        return Err(Error::InvalidInput(format!(
            "V = {v} is real; not a hyperbolic point"
        )));
    }
    let l = longitude_eigenvalue(point.a(), v)?;
    let g = build_generators(point);
    let (_, l_t) = longitudes(&g.s, &g.t);
    let trace = l_t.trace();
    let gamma = 2.0 * l.ln();
    let i = Complex64::i();
    Ok(PythagoreanCheck {
        residual: (trace - (l + l.inv())).norm(),
        longitude_eigenvalue: l,
        complex_length: gamma,
        cosh_recovery_residual: (2.0 * (gamma / 2.0).cosh() - trace).norm(),
        pythagorean_residual: (i * point.rho().cosh() + point.a() * (gamma / 4.0).tanh()).norm(),
    })
}

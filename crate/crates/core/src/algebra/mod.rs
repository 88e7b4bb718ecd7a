//! Exact arithmetic: rationals, Gaussian rationals, polynomials over `ℤ` and
//! over `ℤ[A]`, Sylvester resultants and the Riley–Mednykh data.

mod gaussian;
mod poly;
mod resultant;
mod riley;

pub use gaussian::GaussianRational;
pub use poly::{exact_eval, BivariatePoly, IntPolynomial};
pub use resultant::{bareiss_determinant, discriminant, sylvester_matrix, sylvester_resultant};
pub use riley::{discriminant_in_a, rm_coefficients_exact, rm_polynomial, ExactSample};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always normalized: positive denominator, coprime parts.
pub type Rational = num_rational::BigRational;

/// Shorthand for a small rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{discriminant, rat, BivariatePoly, IntPolynomial, Rational};
use crate::{Error, Result};

/// Coefficients of the Riley–Mednykh polynomial `P(V, A)` of the 7²₃ link,
/// as polynomials in `A`, ordered by descending `V`-degree (`V⁵` first).
pub fn rm_coefficients_exact() -> Vec<IntPolynomial> {
    vec![
        IntPolynomial::from_i64s(&[8]),
        IntPolynomial::from_i64s(&[0, 0, 8]),
        IntPolynomial::from_i64s(&[-8, 0, 16, 0, 8]),
        IntPolynomial::from_i64s(&[0, 0, -12, 0, 8, 0, 4]),
        IntPolynomial::from_i64s(&[1, 0, -12, 0, -2, 0, 4, 0, 1]),
        IntPolynomial::from_i64s(&[0, 0, 4, 0, -8, 0, -4]),
    ]
}

/// `P(V, A)` as a polynomial in `V` over `ℤ[A]`.
pub fn rm_polynomial() -> BivariatePoly {
    let mut coeffs = rm_coefficients_exact();
    coeffs.reverse();
    BivariatePoly::new(coeffs)
}

/// Discriminant of `P(V, A)` over `V`, a polynomial in `A`.
///
/// Equal to `Res_V(P, ∂P/∂V) / 8`; the sign factor `(−1)^{n(n−1)/2}` is `+1`
/// for `n = 5`. Computed once and cached.
pub fn discriminant_in_a() -> &'static IntPolynomial {
    static DISC: OnceLock<IntPolynomial> = OnceLock::new();
    DISC.get_or_init(|| {
        discriminant(&rm_polynomial()).expect("exact discriminant of the Riley–Mednykh polynomial")
    })
}

/// Exact stand-in for a representation point: `c = cos(α/2)`,
/// `s = sin(α/2)`, `u = e^{ρ/2}`, all rational with `c² + s² = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSample {
    c: Rational,
    s: Rational,
    u: Rational,
}

impl ExactSample {
    pub fn new(c: Rational, s: Rational, u: Rational) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::InvalidInput("sample needs s != 0".into()));
        }
        if u.is_zero() {
            return Err(Error::InvalidInput("sample needs u != 0".into()));
        }
        if &c * &c + &s * &s != Rational::one() {
            return Err(Error::InvalidInput(format!(
                "c^2 + s^2 != 1 for c = {c}, s = {s}"
            )));
        }
        Ok(Self { c, s, u })
    }

    /// Rational point of the unit circle from the half-angle tangent `t`:
    /// `c = (1 − t²)/(1 + t²)`, `s = 2t/(1 + t²)`.
    pub fn from_tangent(t: Rational, u: Rational) -> Result<Self> {
        let t2 = &t * &t;
        let den = Rational::one() + &t2;
        let c = (Rational::one() - &t2) / &den;
        let s = (&t + &t) / &den;
        Self::new(c, s, u)
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    /// `A = c/s`.
    pub fn a(&self) -> Rational {
        &self.c / &self.s
    }

    /// `V = (u² + u⁻²)/2`.
    pub fn v(&self) -> Rational {
        let u2 = &self.u * &self.u;
        (&u2 + u2.recip()) / rat(2, 1)
    }

    /// `sinh ρ = (u² − u⁻²)/2`.
    pub fn sinh_rho(&self) -> Rational {
        let u2 = &self.u * &self.u;
        (&u2 - u2.recip()) / rat(2, 1)
    }

    /// Enumerated grid of samples: the first `n_angles` half-angle tangents
    /// `p/q ∈ (0, 1]` (by increasing `q`, reduced fractions only) crossed
    /// with the first `n_u` positive rationals `a/b` in the same order,
    /// shifted by one so that `u = 1` is included.
    pub fn pythagorean_grid(n_angles: usize, n_u: usize) -> Vec<ExactSample> {
        let tangents = farey_fractions(n_angles);
        let us: Vec<Rational> = std::iter::once(Rational::one())
            .chain(
                farey_fractions(n_u)
                    .into_iter()
                    .filter(|r| !r.is_one())
                    .map(|r| r + rat(1, 1)),
            )
            .take(n_u)
            .collect();
        let mut out = Vec::with_capacity(tangents.len() * us.len());
        for t in &tangents {
            for u in &us {
                out.push(
                    ExactSample::from_tangent(t.clone(), u.clone()).expect("valid by construction"),
                );
            }
        }
        out
    }
}

/// First `n` reduced fractions `p/q` with `0 < p ≤ q`, ordered by `q` then `p`.
fn farey_fractions(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n);
    let mut q = 1i64;
    while out.len() < n {
        for p in 1..=q {
            if p.gcd(&q) == 1 && out.len() < n {
                out.push(rat(p, q));
            }
        }
        q += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn values_at(a: i64) -> Vec<BigInt> {
        rm_coefficients_exact()
            .iter()
            .map(|c| c.eval_int(&BigInt::from(a)))
            .collect()
    }

    #[test]
    fn leading_coefficient_is_eight() {
        assert_eq!(rm_coefficients_exact()[0], IntPolynomial::from_i64s(&[8]));
        assert_eq!(rm_polynomial().degree(), Some(5));
    }

    #[test]
    fn coefficients_at_small_a() {
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(values_at(0), big(&[8, 0, -8, 0, 1, 0]));
        assert_eq!(values_at(1), big(&[8, 8, 16, 0, -8, -8]));
    }

    #[test]
    fn discriminant_division_by_eight_is_exact() {
        let d = discriminant_in_a();
        let res =
            super::super::sylvester_resultant(&rm_polynomial(), &rm_polynomial().derivative())
                .unwrap();
        assert_eq!(&d.scale(&BigInt::from(8)), &res);
        assert_eq!(d.degree(), Some(40));
        // Only even powers of A appear.
        assert!(d.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero));
    }

    #[test]
    fn discriminant_at_zero_matches_8v5_minus_8v3_plus_v() {
        let direct = discriminant(&BivariatePoly::from_int_coeffs(&[0, 1, 0, -8, 0, 8])).unwrap();
        assert_eq!(discriminant_in_a().coeff(0), direct.coeff(0));
    }

    #[test]
    fn sample_validation() {
        assert!(ExactSample::new(rat(3, 5), rat(4, 5), rat(2, 1)).is_ok());
        assert!(ExactSample::new(rat(3, 5), rat(3, 5), rat(2, 1)).is_err());
        assert!(ExactSample::new(rat(1, 1), rat(0, 1), rat(2, 1)).is_err());
        assert!(ExactSample::new(rat(0, 1), rat(1, 1), rat(0, 1)).is_err());
        let s = ExactSample::from_tangent(rat(1, 2), rat(2, 1)).unwrap();
        assert_eq!((s.c().clone(), s.s().clone()), (rat(3, 5), rat(4, 5)));
        assert_eq!(s.a(), rat(3, 4));
        assert_eq!(s.v(), rat(17, 8));
        assert_eq!(s.sinh_rho(), rat(15, 8));
    }

    #[test]
    fn grid_is_distinct() {
        let grid = ExactSample::pythagorean_grid(37, 37);
        assert_eq!(grid.len(), 1369);
        let mut circle: Vec<_> = grid
            .iter()
            .map(|s| (s.c().clone(), s.s().clone()))
            .collect();
        circle.sort();
        circle.dedup();
        assert_eq!(circle.len(), 37);
        let mut us: Vec<_> = grid.iter().map(|s| s.u().clone()).collect();
        us.sort();
        us.dedup();
        assert_eq!(us.len(), 37);
        assert!(grid.iter().any(|s| s.c().is_zero()));
        assert!(grid.iter().any(|s| s.u().is_one()));
    }
}

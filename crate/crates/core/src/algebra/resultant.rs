//! Sylvester resultants over `ℤ[A]` by fraction-free elimination.
//!
//! Sign convention: the Sylvester matrix of `f` (degree `m`) and `g`
//! (degree `n`) has the `n` shifted copies of `f` first, then the `m` shifted
//! copies of `g`, each row written from the leading coefficient down. With
//! that layout `Res(f, g) = lc(f)^n ∏ g(rᵢ)` over the roots `rᵢ` of `f`, so
//! `Res(V − a, V − b) = a − b`.

use super::{BivariatePoly, IntPolynomial};
use crate::{Error, Result};

/// The `(m + n)`-square Sylvester matrix, `f`-rows first.
pub fn sylvester_matrix(f: &BivariatePoly, g: &BivariatePoly) -> Result<Vec<Vec<IntPolynomial>>> {
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    let n = g.degree().ok_or(Error::ZeroPolynomial)?;
    let size = m + n;
    let mut rows = vec![vec![IntPolynomial::zero(); size]; size];
    for i in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    Ok(rows)
}

/// Determinant of a square matrix over `ℤ[A]` by Bareiss elimination.
///
/// Every intermediate division is exact; a nonzero remainder surfaces as
/// [`Error::InexactDivision`].
pub fn bareiss_determinant(mut m: Vec<Vec<IntPolynomial>>) -> Result<IntPolynomial> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidInput("matrix is not square".into()));
    }
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let mut negate = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(IntPolynomial::zero());
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = cross.div_exact(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// `Res_V(f, g)` as a polynomial in `A`.
pub fn sylvester_resultant(f: &BivariatePoly, g: &BivariatePoly) -> Result<IntPolynomial> {
    bareiss_determinant(sylvester_matrix(f, g)?)
}

/// Discriminant in `V`: `(−1)^{n(n−1)/2} Res(f, ∂f/∂V) / lc(f)`.
///
/// Degrees below 2 are rejected. The division by the leading coefficient is
/// checked to be exact.
pub fn discriminant(f: &BivariatePoly) -> Result<IntPolynomial> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooLow {
            degree: n,
            required: 2,
        });
    }
    let res = sylvester_resultant(f, &f.derivative())?;
    let quotient = res.div_exact(f.leading().expect("nonzero"))?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        -quotient
    } else {
        quotient
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bp(c: &[i64]) -> BivariatePoly {
        BivariatePoly::from_int_coeffs(c)
    }

    fn constant(p: &IntPolynomial) -> i64 {
        assert!(p.degree().unwrap_or(0) == 0);
        num_traits::ToPrimitive::to_i64(&p.coeff(0)).unwrap()
    }

    #[test]
    fn linear_case_fixes_the_sign() {
        for (a, b) in [(3, 5), (-2, 7), (4, 4), (0, -9)] {
            let r = sylvester_resultant(&bp(&[-a, 1]), &bp(&[-b, 1])).unwrap();
            assert_eq!(r, IntPolynomial::from_i64s(&[a - b]));
        }
    }

    #[test]
    fn shared_root_gives_zero() {
        let r = sylvester_resultant(&bp(&[-1, 0, 1]), &bp(&[-1, 1])).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn zero_polynomials_rejected() {
        assert!(matches!(
            sylvester_resultant(&bp(&[]), &bp(&[1, 1])),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            discriminant(&bp(&[1, 1])),
            Err(Error::DegreeTooLow {
                degree: 1,
                required: 2
            })
        ));
    }

    #[test]
    fn quadratic_discriminant_is_b2_minus_4c() {
        // V² + bV + c with b = A and c = A² − 3, so b² − 4c = 12 − 3A².
        let f = BivariatePoly::new(vec![
            IntPolynomial::from_i64s(&[-3, 0, 1]),
            IntPolynomial::from_i64s(&[0, 1]),
            IntPolynomial::one(),
        ]);
        assert_eq!(
            discriminant(&f).unwrap(),
            IntPolynomial::from_i64s(&[12, 0, -3])
        );
        for (b, c) in [(1, 1), (5, 6), (-3, -10), (0, 2)] {
            assert_eq!(
                constant(&discriminant(&bp(&[c, b, 1])).unwrap()),
                b * b - 4 * c
            );
        }
    }

    #[test]
    fn cubic_discriminant_matches_textbook() {
        // x³ + px + q: −4p³ − 27q².
        for (p, q) in [(1, 1), (-3, 2), (2, -5)] {
            assert_eq!(
                constant(&discriminant(&bp(&[q, p, 0, 1])).unwrap()),
                -4 * p * p * p - 27 * q * q
            );
        }
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let m = vec![
            vec![IntPolynomial::zero(), IntPolynomial::one()],
            vec![IntPolynomial::one(), IntPolynomial::zero()],
        ];
        assert_eq!(
            bareiss_determinant(m).unwrap(),
            IntPolynomial::from_i64s(&[-1])
        );
    }

    proptest! {
        #[test]
        fn resultant_is_multiplicative(f in prop::collection::vec(-6i64..6, 2..5),
                                       g in prop::collection::vec(-6i64..6, 2..5),
                                       h in prop::collection::vec(-6i64..6, 2..5)) {
            let (f, g, h) = (bp(&f), bp(&g), bp(&h));
            prop_assume!(f.degree().unwrap_or(0) >= 1 && g.degree().unwrap_or(0) >= 1 && h.degree().unwrap_or(0) >= 1);
            let lhs = sylvester_resultant(&f.mul(&g), &h).unwrap();
            let rhs = &sylvester_resultant(&f, &h).unwrap() * &sylvester_resultant(&g, &h).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

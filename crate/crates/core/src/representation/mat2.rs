use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::GaussianRational;

/// Scalars a [`Mat2`] can hold: a commutative ring containing `i`.
pub trait Entry: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn imag_unit() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Entry for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::i()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Entry for GaussianRational {
    fn zero() -> Self {
        <GaussianRational as Zero>::zero()
    }
    fn one() -> Self {
        <GaussianRational as One>::one()
    }
    fn imag_unit() -> Self {
        GaussianRational::i()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// 2×2 matrix `[[a11, a12], [a21, a22]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<T> {
    pub a11: T,
    pub a12: T,
    pub a21: T,
    pub a22: T,
}

impl<T: Entry> Mat2<T> {
    pub fn new(a11: T, a12: T, a21: T, a22: T) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn diag(a: T, d: T) -> Self {
        Self::new(a, T::zero(), T::zero(), d)
    }

    pub fn det(&self) -> T {
        self.a11.mul(&self.a22).sub(&self.a12.mul(&self.a21))
    }

    pub fn trace(&self) -> T {
        self.a11.add(&self.a22)
    }

    /// Adjugate, which is the inverse for unit-determinant matrices.
    pub fn sl2_inverse(&self) -> Self {
        Self::new(
            self.a22.clone(),
            self.a12.neg(),
            self.a21.neg(),
            self.a11.clone(),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            self.a11.add(&rhs.a11),
            self.a12.add(&rhs.a12),
            self.a21.add(&rhs.a21),
            self.a22.add(&rhs.a22),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(
            self.a11.sub(&rhs.a11),
            self.a12.sub(&rhs.a12),
            self.a21.sub(&rhs.a21),
            self.a22.sub(&rhs.a22),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(
            self.a11.neg(),
            self.a12.neg(),
            self.a21.neg(),
            self.a22.neg(),
        )
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        Self::new(
            self.a11.mul(&rhs.a11).add(&self.a12.mul(&rhs.a21)),
            self.a11.mul(&rhs.a12).add(&self.a12.mul(&rhs.a22)),
            self.a21.mul(&rhs.a11).add(&self.a22.mul(&rhs.a21)),
            self.a21.mul(&rhs.a12).add(&self.a22.mul(&rhs.a22)),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.matmul(self))
    }

    pub fn entries(&self) -> [&T; 4] {
        [&self.a11, &self.a12, &self.a21, &self.a22]
    }
}

impl<'a, T: Entry> Mul<&'a Mat2<T>> for &'a Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, rhs: &Mat2<T>) -> Mat2<T> {
        self.matmul(rhs)
    }
}

impl Mat2<Complex64> {
    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.entries()
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `‖self − other‖` in the Frobenius norm.
    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).norm()
    }

    /// Both eigenvalues, from the characteristic polynomial.
    pub fn eigenvalues(&self) -> (Complex64, Complex64) {
        let tr = self.trace();
        let disc = (tr * tr - 4.0 * self.det()).sqrt();
        ((tr + disc) / 2.0, (tr - disc) / 2.0)
    }
}

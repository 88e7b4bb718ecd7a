use num_complex::Complex64;

use crate::{Error, Result};

pub type ComplexValue = Complex64;

/// Principal square root, `Re(√z) ≥ 0`.
pub fn principal_sqrt(z: ComplexValue) -> ComplexValue {
    z.sqrt()
}

/// Principal inverse hyperbolic cosine, `Re ≥ 0` and `Im ∈ (−π, π]`.
pub fn principal_acosh(z: ComplexValue) -> ComplexValue {
    z.acosh()
}

pub fn magnitude(z: ComplexValue) -> f64 {
    z.norm()
}

pub fn ensure_finite(z: ComplexValue) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::InvalidInput(format!("non-finite complex value {z}")))
    }
}

//! Double-precision numerics: complex helpers, simultaneous root finding,
//! adaptive quadrature and bisection.

mod bisect;
mod complex;
mod poly;
mod quadrature;

pub use bisect::bisect;
pub use complex::{ensure_finite, magnitude, principal_acosh, principal_sqrt, ComplexValue};
pub use poly::{ComplexPolynomial, RootOptions};
pub use quadrature::{adaptive_integrate, try_adaptive_integrate, QuadOptions, Quadrature};

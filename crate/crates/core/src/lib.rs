//! Hyperbolic volumes of the cone-manifolds `X(α)` of the two-component link
//! 7²₃ and of its cyclic branched covers.
//!
//! The pipeline finds the geometric root `V` of the Riley–Mednykh polynomial
//! `P(V, A)` at `A = cot(α/2)`, turns it into the longitude eigenvalue
//! `L = (A − iV)/(A + iV)` and integrates the singular-locus length
//! `2 log|L|` from `α` up to `π` (Schläfli formula). The threshold angle `α₀`
//! where the structure turns Euclidean is the unique zero of the exact
//! discriminant of `P` over `V` in `[2π/3, π)`.
//!
//! Modules:
//! - [`algebra`]: exact rationals, Gaussian rationals, integer polynomials,
//!   Sylvester resultants and the exact discriminant.
//! - [`numerics`]: complex helpers, Aberth root finding, adaptive
//!   Gauss–Kronrod quadrature and bisection.
//! - [`representation`]: the `SL(2, ℂ)` generators, group words and the
//!   trace identities, checked numerically and exactly.
//! - [`conevolume`]: root selection, the volume integrand, `α₀`, volumes and
//!   cover volumes.
//! - [`cli`]: the `conevol` command-line front end.

// `!(x > 0.0)` guards are deliberate: they reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod cli;
pub mod conevolume;
mod error;
pub mod numerics;
pub mod representation;

pub use error::{Error, Result};

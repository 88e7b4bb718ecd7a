//! `SL(2, ℂ)` representations of the 7²₃ link group.
//!
//! The group is `⟨s, t | s w s⁻¹ w⁻¹⟩` with `w = s⁻¹[s,t]²[s,t⁻¹]²` and
//! `[x, y] = x y x⁻¹ y⁻¹`. Generators are sent to the matrices `S`, `T` of
//! [`build_generators`]; everything here works over doubles and, through
//! [`Mat2<GaussianRational>`](crate::algebra::GaussianRational), exactly.

mod identities;
mod mat2;
mod point;
mod word;

pub use identities::{
    exact_identity_check, exact_identity_sides, longitude_eigenvalue, longitude_lemma_defects,
    longitudes, predicted_longitude_trace, pythagorean_check, relator_residual,
    swn_square_residual, trace_swn, trace_swn_exact, PythagoreanCheck,
    TRACE_NORMALIZATION_SIN_POWER,
};
pub use mat2::{Entry, Mat2};
pub use point::{build_generators, exact_generators, exact_sl2, random_sl2, Generators, RepPoint};
pub use word::{word_eval, Letter, Word};

//! The skew monoid ring `ℂ(U)⋆(T⋊S_n)`, its dictionary with the partially
//! spherical generators, and the Galois-ring and principality checks.

pub mod checks;
pub mod dictionary;
pub mod random;
pub mod skew;

pub use checks::{galois_ring_check, principality_check, skew_algebra_check};
pub use dictionary::{from_skew, to_skew, AffineGenerator, DictOp};
pub use skew::SkewElement;

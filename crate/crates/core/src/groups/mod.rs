//! G(ℓ,p,n), its diagonal subgroup, and the extended affine group T⋊S_n.

pub mod affine;
pub mod gpn;
pub mod perm;

pub use affine::{lattice_member, AffineElement};
pub use gpn::{enumerate_reflections, GPNElement};
pub use perm::Perm;

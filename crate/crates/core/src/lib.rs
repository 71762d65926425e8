//! Exact polynomial model of rational Cherednik algebras for the groups
//! G(ℓ,p,n): the polynomial representation, its partially spherical
//! subalgebra, the Galois-order dictionary and the simple-module census.

pub mod arith;
pub mod clifford;
pub mod error;
pub mod galois;
pub mod groups;
pub mod pcyclic;
pub mod psph;
pub mod rep;
pub mod report;
pub mod setting;

pub use error::{CoreError, Result};
pub use setting::{Mutation, Setting};

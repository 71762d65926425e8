pub mod cyclo;
pub mod fourier;
pub mod gcd;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use cyclo::{CycloField, CycloScalar};
pub use poly::{Mono, ParamPoly};
pub use ratfunc::RatFunc;
pub use rational::Q;

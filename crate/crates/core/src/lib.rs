//! Exact symbolic computation for Hecke algebra characters via
//! supersymmetric Hall–Littlewood functions.

pub mod frobenius;
pub mod heckesim;
pub mod hl;
pub mod mpoly;
pub mod partition;
pub mod scalar;
pub mod superring;
pub mod symring;
pub mod verify;

pub use partition::Partition;
pub use scalar::{LaurentScalar, Rational, ScalarFraction};
pub use symring::{Basis, SymFunc};

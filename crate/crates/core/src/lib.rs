//! Centrosymmetric permutations in permutation classes: pattern machinery,
//! class enumeration, generating functions, geometric grid classes and
//! rc-atomicity checks.

pub mod atomic;
pub mod class;
pub mod error;
pub mod grid;
pub mod harness;
pub mod perm;
pub mod series;

pub use error::{Error, Result};
pub use perm::Permutation;

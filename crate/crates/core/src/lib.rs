//! Exact computation and verification of Gaudin functions and the symmetric-function
//! identities around them.

pub mod alphabets;
pub mod combinatorics;
pub mod error;
pub mod euler_poincare;
pub mod exact_algebra;
pub mod gaudin;
pub mod operators;
pub mod orthogonal_bases;
pub mod report;
pub mod schubert;
pub mod suites;

pub use error::{Error, Result};

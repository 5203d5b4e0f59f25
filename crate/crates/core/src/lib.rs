//! Exact-arithmetic toolkit for the centralizer of an order-two nilpotent
//! acting on flag varieties of classical groups.
//!
//! The crate provides the matrix models of the four classical families with
//! their distinguished subgroups, the signed-permutation combinatorics of the
//! associated Weyl groups, orbit parametrization and counting, the corrected
//! representative construction behind the birational resolutions, character
//! dominance computations, the two-column tableau dictionary, and an exact
//! reproduction of the orthogonal non-continuity counter-example. Everything
//! runs over the rationals or a prime field; there is no floating point.

pub mod chars;
pub mod counterex;
pub mod error;
pub mod matrix;
pub mod matspace;
pub mod models;
pub mod orbits;
pub mod perm;
pub mod resolve;
pub mod rng;
pub mod scalar;
pub mod tableaux;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use matspace::MatSpace;
pub use perm::Perm;
pub use scalar::{Field, Scalar};
pub use weyl::{Family, ModelSpec, WeylKind};

//! Exact construction and verification of finite-dimensional L-infinity and
//! A-infinity algebras.
//!
//! Structure constants are stored over exact rings (rationals, Gaussian
//! rationals, Laurent polynomials in `mu`), and the homotopy relations are
//! evaluated exhaustively on basis tuples. See the `examples/` directory for
//! one runnable program per capability.

pub mod brackets;
pub mod checker;
pub mod cli;
pub mod constructions;
pub mod document;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod scalar;
pub mod zoo;

pub use brackets::{associator, jacobiator, AlgebraKind, BracketSet, HomotopyAlgebra, MultiBracket, StarProduct};
pub use checker::{check_ainfty, check_linfty, RelationReport};
pub use error::AlgebraError;
pub use graded::{GradedBasis, LinearMap, Vector};
pub use scalar::{Field, Gaussian, Laurent, Rational, Ring, RingTag};

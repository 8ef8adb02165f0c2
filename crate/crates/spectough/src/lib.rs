//! Spectral conditions for toughness-type graph invariants.
//!
//! The crate computes A_alpha spectral radii of small graphs (n <= 64), the scattering
//! number, toughness and tau-toughness via twin-aware exact search, and the closed-form
//! quotient matrices of the join-of-cliques families that make the spectral thresholds
//! sharp. On top of those primitives sit checkers, exhaustive and randomized
//! counterexample searches, and consistency audits.
//!
//! Numeric code is generic over the scalar (`f64` or `f32`) through [`scalar::Real`];
//! the aliases at the crate root pin `f64`, which every shipped tolerance assumes.

pub mod cli;
pub mod eigen;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod iso;
pub mod matrix;
pub mod rational;
pub mod scalar;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use rational::{Alpha, Rational};
pub use scalar::Real;

/// Double precision matrix, the default everywhere in the CLI.
pub type SymMatrixF64 = matrix::SymMatrix<f64>;
/// Double precision quotient matrix.
pub type QuotientMatrixF64 = matrix::QuotientMatrix<f64>;
/// Double precision eigenpair certificate.
pub type SpectralResultF64 = eigen::SpectralResult<f64>;

//! Classification of three-dimensional maximum-parameter second-order
//! conformally-superintegrable systems by polynomial evaluation.
//!
//! The pipeline runs from a 10-tuple of structure functions (Q, R, S) to the
//! rotation-adapted variables X ∈ ℂ³, Y ∈ ℂ⁷, from Y to a classifying binary
//! sextic p(z), through the 26-element Hilbert basis of covariants of p, and
//! finally to one of ten conformal classes decided by which classifying
//! ideals vanish.
//!
//! Module map:
//! - [`scalar`]: arbitrary-precision complex arithmetic and the tolerance policy
//! - [`sextic`]: binary sextics, Möbius action, projective roots, multi-ratios
//! - [`covariant`]: transvectants and the Hilbert basis of sextic covariants
//! - [`repspace`]: (Q,R,S) ↔ A-coefficients ↔ (X,Y) ↔ sextic maps, so(3) ladders
//! - [`conformal`]: inversions, dilations, rotations, S-normalization
//! - [`flow`]: translation of the regular point (the 30 quadratic derivatives)
//! - [`classify`]: the classifying ideals, class verdicts, degeneration order
//! - [`catalog`]: the ten representative systems and the vanishing-matrix harness

pub mod catalog;
pub mod classify;
pub mod conformal;
pub mod covariant;
pub mod error;
pub mod flow;
pub mod repspace;
pub mod scalar;
pub mod sextic;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::Error;
pub use scalar::{Ctx, Precision, Scalar, Tolerance};

/// Convenience result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

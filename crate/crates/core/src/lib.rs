//! Exact diagonal-similarity decisions for matrices and finitely generated
//! matrix semigroups.
//!
//! A matrix `M` is diagonally similar to a nonnegative matrix when some
//! invertible diagonal `D` makes `D M D^{-1}` entrywise nonnegative. The
//! crate decides this exactly, for single matrices and for whole
//! collections, and returns the diagonal as a witness. Around that core it
//! provides the tools needed to check the surrounding structure theory on
//! concrete instances: zero-pattern decomposability, polyhedral cones and
//! their duals, semigroup closures with Burnside irreducibility, Perron
//! vectors, and hypothesis-checking pipelines.
//!
//! All structural decisions use Gaussian-rational arithmetic; only
//! [`spectral`] works in floating point.

pub mod cones;
pub mod diagsim;
pub mod error;
pub mod harness;
pub mod io;
pub mod linalg;
pub mod semigroup;
pub mod spectral;
pub mod structure;

pub use cones::{Cone, PropernessReport, Ray};
pub use diagsim::{DiagonalWitness, SignDiagonal};
pub use error::{Error, Result};
pub use linalg::{EntryClassification, Matrix, Scalar};
pub use semigroup::{Caps, ProjectiveElement, SemigroupClosure, XYFactorization};
pub use spectral::SpectralResult;
pub use structure::{DecompositionKind, DecompositionReport, PatternDigraph};

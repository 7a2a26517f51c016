//! Exact scalar and dense-matrix arithmetic.
//!
//! All zero tests, sign tests and ranks here are exact; nothing in this
//! module rounds.

pub mod elim;
mod matrix;
mod scalar;

pub use elim::SpanBasis;
pub use matrix::{common_order, ints, EntryClassification, Matrix};
pub use scalar::Scalar;

pub(crate) use scalar::{format_rational, parse_rational};

//! Exact truncated power series, rational scalars and small dense matrices.

mod matrix;
pub mod scalar;
mod trunc;

pub use matrix::{det_scalar, det_series, det_series_at_zero, Matrix};
pub use scalar::{format_scalar, parse_scalar, Scalar};
pub use trunc::TruncSeries;

//! Exact differential invariants of formal arcs in projective space.
//!
//! Arcs are tuples of truncated power series over the rationals. The crate
//! computes Plücker coordinates of their Taylor columns, the Monge invariant
//! by a closed formula and by two geometric constructions, the dictionary
//! with linear differential equations (adjoints, duality, Liouville
//! normalization) and canonical slice forms under the projective group.

pub mod arcgeom;
pub mod canonical;
pub mod checks;
pub mod error;
pub mod invariants;
pub mod json;
pub mod odelink;
pub mod sample;
pub mod series;

pub use arcgeom::Arc;
pub use error::{Error, Result};
pub use series::{Matrix, Scalar, TruncSeries};

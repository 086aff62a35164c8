//! Parametrized smooth arcs in projective space and the group acting on them.

mod arc;
mod derived;
mod group;

pub use arc::Arc;
pub use derived::{
    dual_arc, gap_sequence, project_from_center, projectively_equal, tangent_scroll,
    tangent_scroll_coords, veronese2, veronese2_coords, wedge_pairs, GapSequence,
};
pub use group::{
    act_linear, act_reparam, act_scale, degree, weight, GroupElement, GroupTriple, LinearMap,
    Reparam, Scaling,
};

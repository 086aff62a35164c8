//! Linear differential equations attached to arcs: the arc/ODE dictionary,
//! adjoints, the bilinear concomitant, Plücker duality and Liouville
//! normalization.

mod adjoint;
mod dictionary;
mod involution;
mod liouville;
mod operator;

pub use adjoint::{
    adjoint, adjoint_closed_form, apply_raw_adjoint, bilinear_b, bilinear_b_closed_form,
    first_mismatch, gram_matrix, lagrange_identity_residual, plucker_duality_check,
};
pub use dictionary::{arc_to_ode, initial_data_matrix, ode_to_arc, pv_residual, solution_basis};
pub use involution::{
    duality_involution_matrix, involution_report, reference_involution_matrix, InvolutionReport,
};
pub use liouville::liouville_normalize;
pub use operator::DiffOperator;

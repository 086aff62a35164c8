//! Plücker coordinates `U_λ` of arcs and polynomial invariants built from
//! them, including the Monge invariant.

mod monge;
mod parser;
mod partition;
mod plucker;
mod poly;

pub use monge::{
    monge_formula, monge_formula_displayed, monge_scroll, monge_series, monge_veronese,
    veronese_quotient_series, SCROLL_CONSTANT, VERONESE_CONSTANT,
};
pub use parser::parse_expression;
pub use partition::{Bidegree, Partition};
pub use plucker::{
    affine_coordinate, is_inflexional, u_lambda, u_lambda_series, wronskian, wronskian_of_coords,
    wronskian_series, wronskian_series_of_coords,
};
pub use poly::{
    monge_with_coefficient, monomial_bidegree, transformation_check, InvariantPoly, Monomial,
};

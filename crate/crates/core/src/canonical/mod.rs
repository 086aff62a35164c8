//! Canonical forms of non-inflexional arcs: the B-slice, reached through
//! the rational normal curve osculating to order `n + 2`, and the μ₃-slice
//! off the Monge hypersurface.

mod bslice;
mod mu3;

pub use bslice::{monge_member_geometric, normalize_to_b, CanonicalFormB};
pub use mu3::{mu3_orbit_equal, mu3_translate, normalize_to_mu3, CanonicalFormMu3};

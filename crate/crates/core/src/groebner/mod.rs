//! Buchberger's algorithm, elimination and zero-dimensional solving over Q.

mod buchberger;
mod order;
mod solve;

pub use buchberger::{buchberger, dube_degree_check, elimination_ideal, image_closure, GroebnerBasis};
pub use order::{MonomialOrder, OrderKind};
pub use solve::{field_roots, is_zero_dimensional, scalar_roots, solve_zero_dim, ZeroDimSolution};

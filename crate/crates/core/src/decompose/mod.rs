//! Functional decomposition, lifting families, bivariate lifts and Lüroth generators.

mod bivariate;
mod lift;
mod luroth;
mod univariate;

pub use bivariate::{solve_bivariate_lift, LiftSide, MAX_LIFT_UNKNOWNS};
pub use lift::{lift_family, lift_vars, LiftFamily, LiftVariant};
pub use luroth::{common_left_pair, luroth_generator, CommonLeft};
pub use univariate::{
    are_equivalent, are_equivalent_all, dominating_function, enumerate_decompositions, gauged_right_components,
    normalize_mobius, polynomial_gauge, solve_left_component, solve_right_component, Decomposition, Domination, MAX_DECOMPOSE_DEGREE,
};
pub(crate) use univariate::sample_points;

//! Univariate and bivariate rational functions, Möbius maps and resultants.

mod birat;
mod mobius;
mod resultant;
mod unirat;

pub use birat::BiRat;
pub use mobius::{mobius_apply, mobius_compose, Mobius};
pub use resultant::{bad_specializations, cross_poly, is_irreducible_bilinear, resultant, BadSpecializations};
pub use unirat::{compose_uni, UniRat};

//! Exact algebra for bivariate rational functions.

pub mod classify;
pub mod decompose;
pub mod error;
pub mod field;
pub mod geometry;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod text;

pub use error::{Error, Result};
pub use field::{rat, ratio, Field, Rat, Scalar, WorkingField};
pub use poly::{BiPoly, MultiPoly, UniPoly, Var};
pub use ratfunc::{BiRat, Mobius, UniRat};

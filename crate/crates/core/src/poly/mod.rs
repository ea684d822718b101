//! Univariate, bivariate and multivariate polynomials.

mod bi;
mod factor;
mod gcd;
mod multi;
mod uni;

pub use bi::{grlex_cmp, BiPoly, Var};
pub use factor::{factor, monic_divisors};
pub use gcd::{content_primitive, div_exact_bivariate, poly_gcd_bivariate};
pub use multi::MultiPoly;
pub use uni::UniPoly;

//! Set generators, growth sweeps and the command-line front end.

pub mod commands;
pub mod error;
pub mod family;
pub mod growth;

pub use error::{HarnessError, Result};
pub use family::{gen_set, Family};
pub use growth::{loglog_slope, run_growth, GrowthConfig, GrowthReport, GrowthRow};

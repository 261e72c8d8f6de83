//! Command-line front end for the dispersion solvers: instance generation,
//! point and graph file formats, solver dispatch with JSON reports, and a
//! scaling benchmark.

pub mod bench;
mod error;
pub mod gen;
pub mod io;
pub mod report;
pub mod solve;

pub use error::{CliError, Result};

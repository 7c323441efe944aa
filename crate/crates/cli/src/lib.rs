//! Command-line front end for `betamat`: `gen`, `analyze` and `verify`, each
//! producing a [`Report`] as JSON or CSV.
//!
//! Exit codes: 0 when everything checked holds, 1 on a mathematical failure,
//! 2 on a usage error.

pub mod app;
pub mod report;

pub use app::{exit_code, run, Cli, Command, EXIT_FAILURE, EXIT_PASS, EXIT_USAGE};
pub use report::{Report, VERSION};

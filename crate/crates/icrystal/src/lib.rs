//! File formats, the verification suite and the command line for
//! [`icrystal_core`].

pub mod cli;
pub mod format;
pub mod suite;

pub use cli::{run, run_with, CliConfig, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};

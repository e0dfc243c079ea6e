//! Library side of the `weave` command-line tool.

pub mod commands;
pub mod record;
pub mod verify;

pub use commands::{run, Cli, CliError, Command, Outcome};
pub use record::{render, Format, Kind, OutputRecord};
pub use verify::{run_verify, Suite, VerifyConfig, VerifyReport};

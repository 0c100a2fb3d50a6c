//! Library side of the `photomom` command-line tool: configuration, result
//! tables and the command runners. `main.rs` only wires them to argv.

pub mod config;
pub mod error;
pub mod run;
pub mod table;

pub use config::{Command, Config};
pub use error::CliError;
pub use run::run;
pub use table::{Format, ResultTable};

//! Configuration, dispatch and report rendering behind the `wcoprime` binary.

pub mod config;
pub mod report;
pub mod run;

pub use config::{parse_config, parse_config_with, Command, Format, Overrides, RunConfig};
pub use report::{emit_report, Report};
pub use run::{run, Outcome};

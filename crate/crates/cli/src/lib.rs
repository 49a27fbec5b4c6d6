//! Word-file parsing, reports and subcommand logic behind the `lefschetz` binary.

pub mod commands;
pub mod report;
pub mod wordfile;

pub use commands::CliError;
pub use report::{GroupSummary, Report};
pub use wordfile::{ParseError, ParseOptions, WordFile};

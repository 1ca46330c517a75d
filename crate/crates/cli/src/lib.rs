//! Batch front end: reads a presentation document, runs one analysis and
//! reports the verdicts as JSON or text.

pub mod args;
pub mod error;
pub mod input;
pub mod job;
pub mod report;

pub use error::CliError;
pub use input::{emit, parse_presentation, Parsed};
pub use job::{run, Command, Format, JobSpec, Limits, Source};
pub use report::{Report, Verdict};

//! Subcommands `gseries`, `limit` and `classify`, returning reports that
//! render as text or JSON.

pub mod classify;
pub mod config;
pub mod error;
pub mod gseries;
pub mod limit;
pub mod report;

pub use classify::{cmd_classify, ClassifyArgs};
pub use config::{parse_l, Format, RunConfig};
pub use error::CliError;
pub use gseries::{cmd_gseries, GseriesArgs};
pub use limit::cmd_limit;
pub use report::Report;

/// Exit status for a report: 0 when every requested check holds.
pub fn exit_code(report: &Report, checked: bool) -> i32 {
    if checked && !report.pass {
        1
    } else {
        0
    }
}

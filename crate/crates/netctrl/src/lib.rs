//! File formats, reports and the command-line front end for `netctrl-core`.

pub mod cli;
pub mod formats;
pub mod report;

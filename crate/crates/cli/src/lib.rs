//! Command-line front end: verification suites, basis listings and
//! factorization round trips, with JSON reports.

pub mod commands;
pub mod report;
pub mod suite;

pub use report::{CheckReport, Params, Record, Status, Summary};
pub use suite::{run_suite, SuiteConfig};

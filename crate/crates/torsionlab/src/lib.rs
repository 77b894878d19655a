//! Command-line front end and std-side tooling for `torsionlab-core`:
//! configuration, the parallel pipeline, JSON/CSV output and the oracle suite.

pub mod cli;
pub mod config;
pub mod error;
pub mod oracle;
pub mod output;
pub mod pipeline;
pub mod report;
pub mod selftest;

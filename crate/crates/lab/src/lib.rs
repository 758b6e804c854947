//! Experiment suites and reports for the `coverideal-lab` command line.

pub mod corpus;
pub mod experiments;
pub mod report;

//! Experiment runner and command-line front end for `npd-core`.
//!
//! A sweep runs a list of estimators over a grid of processes and Hurst
//! values, with replications seeded deterministically from one base seed, and
//! writes a flat table of means, variances and analytic references. The bench
//! times each estimator on white noise.

pub mod bench;
pub mod cli;
pub mod config;
mod error;
pub mod estimator;
pub mod sweep;

pub use bench::{run_bench, BenchRow};
pub use config::{ExperimentConfig, OutputFormat, ProcessTemplate};
pub use error::{HarnessError, Result};
pub use estimator::EstimatorSpec;
pub use sweep::{run_sweep, SweepResult, SweepRow};

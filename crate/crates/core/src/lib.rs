//! Differential entropy rate estimation for continuous-valued time series.
//!
//! The main estimator quantises a series into fixed-width bins, estimates the
//! Shannon entropy rate of the symbol sequence from longest-match lengths, and
//! adds `ln Δ` to obtain a differential entropy rate in nats. Alongside it the
//! crate provides the usual relative complexity measures (approximate, sample
//! and permutation entropy), generators for long-range dependent test
//! processes, and analytic entropy rates for fractional Gaussian noise and
//! ARFIMA(0,d,0).
//!
//! Numeric code is generic over [`Real`] (`f32` or `f64`); the aliases at the
//! crate root fix the scalar to `f64`, which is what the harness uses.

pub mod analytic;
pub mod baselines;
mod error;
pub mod matchlen;
pub mod npd;
pub mod processes;
pub mod quantizer;
mod report;
mod scalar;
mod seed;
mod series;
mod units;

pub use error::{Error, Result};
pub use report::{summarize, EstimateReport, EstimatorId, ParamValue, Summary};
pub use scalar::Real;
pub use seed::{mix_seed, Seed};
pub use series::TimeSeries;
pub use units::EntropyValue;

/// Time series of `f64` samples.
pub type TimeSeries64 = series::TimeSeries<f64>;
/// Time series of `f32` samples.
pub type TimeSeries32 = series::TimeSeries<f32>;
/// Entropy in nats, stored as `f64`.
pub type Entropy64 = units::EntropyValue<f64>;
/// Entropy in nats, stored as `f32`.
pub type Entropy32 = units::EntropyValue<f32>;
/// Quantiser settings for `f64` series.
pub type QuantizerConfig64 = quantizer::QuantizerConfig<f64>;
/// Approximate/sample entropy parameters for `f64` series.
pub type TemplateParams64 = baselines::TemplateParams<f64>;
/// Process description for `f64` generators.
pub type ProcessSpec64 = processes::ProcessSpec<f64>;

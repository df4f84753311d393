//! Seeded generators for the test processes.
//!
//! Every generator draws from a ChaCha8 stream seeded by [`ProcessSpec::seed`]
//! and works in `f64` internally, so a given spec yields the same series
//! bit-for-bit on every run.

mod arfima;
mod fgn;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::{Error, Real, Result, Seed, TimeSeries};

pub use arfima::{arfima_innovation_variance, ma_weights};
pub use fgn::fgn_autocovariance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProcessKind {
    Fgn,
    Arfima,
    White,
    MeanShift,
    GaussianWalk,
}

impl ProcessKind {
    pub const ALL: [ProcessKind; 5] = [Self::Fgn, Self::Arfima, Self::White, Self::MeanShift, Self::GaussianWalk];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Fgn => "fgn",
            Self::Arfima => "arfima",
            Self::White => "white",
            Self::MeanShift => "mean_shift",
            Self::GaussianWalk => "gaussian_walk",
        }
    }

    /// Whether the Hurst parameter affects the process.
    pub fn uses_hurst(self) -> bool {
        matches!(self, Self::Fgn | Self::Arfima)
    }
}

impl std::fmt::Display for ProcessKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ProcessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| {
            Error::param(
                "kind",
                format!("unknown process `{s}`; valid kinds are fgn, arfima, white, mean_shift, gaussian_walk"),
            )
        })
    }
}

pub const DEFAULT_PERIOD: usize = 100;

/// What to generate. `hurst` only matters for FGN and ARFIMA (`d = H − ½`);
/// `period` only for the mean-shift process.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProcessSpec<T = f64> {
    pub kind: ProcessKind,
    pub hurst: T,
    pub sigma2: T,
    pub length: usize,
    pub seed: Seed,
    pub period: usize,
}

impl<T: Real> ProcessSpec<T> {
    /// Unit variance, `H = ½`, default period.
    pub fn new(kind: ProcessKind, length: usize, seed: Seed) -> Self {
        Self { kind, hurst: T::lit(0.5), sigma2: T::one(), length, seed, period: DEFAULT_PERIOD }
    }

    pub fn with_hurst(mut self, hurst: T) -> Self {
        self.hurst = hurst;
        self
    }

    pub fn with_sigma2(mut self, sigma2: T) -> Self {
        self.sigma2 = sigma2;
        self
    }

    pub fn with_period(mut self, period: usize) -> Self {
        self.period = period;
        self
    }

    pub fn with_seed(mut self, seed: Seed) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.length == 0 {
            return Err(Error::param("length", "must be at least 1"));
        }
        if self.sigma2 <= T::zero() || !self.sigma2.is_finite() {
            return Err(Error::param("sigma2", format!("must be positive and finite, got {}", self.sigma2)));
        }
        if self.kind.uses_hurst() && !(self.hurst > T::zero() && self.hurst < T::one()) {
            return Err(Error::param("hurst", format!("must lie in (0, 1), got {}", self.hurst)));
        }
        if self.kind == ProcessKind::MeanShift && self.period == 0 {
            return Err(Error::param("period", "must be at least 1"));
        }
        Ok(())
    }

    fn sd(&self) -> f64 {
        self.sigma2.as_f64().sqrt()
    }
}

fn expect_kind<T: Real>(spec: &ProcessSpec<T>, kind: ProcessKind) -> Result<()> {
    if spec.kind != kind {
        return Err(Error::param("kind", format!("expected {kind}, got {}", spec.kind)));
    }
    spec.validate()
}

fn finish<T: Real>(values: Vec<f64>) -> Result<TimeSeries<T>> {
    TimeSeries::new(values.into_iter().map(T::lit).collect())
}

pub(crate) fn normals<R: Rng>(rng: &mut R, n: usize, sd: f64) -> Vec<f64> {
    (0..n).map(|_| sd * Distribution::<f64>::sample(&StandardNormal, rng)).collect()
}

/// Dispatches on `spec.kind`.
pub fn generate<T: Real>(spec: &ProcessSpec<T>) -> Result<TimeSeries<T>> {
    match spec.kind {
        ProcessKind::Fgn => gen_fgn(spec),
        ProcessKind::Arfima => gen_arfima(spec),
        ProcessKind::White => gen_white(spec),
        ProcessKind::MeanShift => gen_mean_shift(spec),
        ProcessKind::GaussianWalk => gen_gaussian_walk(spec),
    }
}

/// Fractional Gaussian noise by circulant embedding of its autocovariance.
pub fn gen_fgn<T: Real>(spec: &ProcessSpec<T>) -> Result<TimeSeries<T>> {
    expect_kind(spec, ProcessKind::Fgn)?;
    let mut rng = spec.seed.rng();
    finish(fgn::circulant_sample(spec.length, spec.hurst.as_f64(), spec.sigma2.as_f64(), &mut rng)?)
}

/// ARFIMA(0, d, 0) with `d = H − ½` and process variance `σ²`, from the
/// truncated MA(∞) representation.
pub fn gen_arfima<T: Real>(spec: &ProcessSpec<T>) -> Result<TimeSeries<T>> {
    expect_kind(spec, ProcessKind::Arfima)?;
    let mut rng = spec.seed.rng();
    let d = spec.hurst.as_f64() - 0.5;
    finish(arfima::sample(spec.length, d, spec.sigma2.as_f64(), &mut rng)?)
}

/// I.i.d. `N(0, σ²)`.
pub fn gen_white<T: Real>(spec: &ProcessSpec<T>) -> Result<TimeSeries<T>> {
    expect_kind(spec, ProcessKind::White)?;
    finish(normals(&mut spec.seed.rng(), spec.length, spec.sd()))
}

/// Square wave between 0 and 1 that switches level every `period` samples,
/// starting at 0.
pub fn square_wave(length: usize, period: usize) -> Vec<f64> {
    (0..length).map(|n| ((n / period) % 2) as f64).collect()
}

/// `X_n = μ_n + ε_n` with `μ` from [`square_wave`] and `ε_n ~ N(0, σ²)`.
pub fn gen_mean_shift<T: Real>(spec: &ProcessSpec<T>) -> Result<TimeSeries<T>> {
    expect_kind(spec, ProcessKind::MeanShift)?;
    finish(mean_shift_values(spec.length, spec.period, spec.sd(), &mut spec.seed.rng()))
}

fn mean_shift_values<R: Rng>(length: usize, period: usize, noise_sd: f64, rng: &mut R) -> Vec<f64> {
    let noise = normals(rng, length, noise_sd);
    square_wave(length, period).into_iter().zip(noise).map(|(m, e)| m + e).collect()
}

/// `Z_n = Σ_{i ≤ n} X_i` with `X_i ~ N(0, σ²)` i.i.d.
pub fn gen_gaussian_walk<T: Real>(spec: &ProcessSpec<T>) -> Result<TimeSeries<T>> {
    expect_kind(spec, ProcessKind::GaussianWalk)?;
    let steps = normals(&mut spec.seed.rng(), spec.length, spec.sd());
    finish(
        steps
            .into_iter()
            .scan(0.0, |z, x| {
                *z += x;
                Some(*z)
            })
            .collect(),
    )
}

#[cfg(test)]
pub(crate) mod stats {
    pub fn mean(x: &[f64]) -> f64 {
        x.iter().sum::<f64>() / x.len() as f64
    }

    /// Biased (1/N) autocovariance at `lag` about the sample mean.
    pub fn autocov(x: &[f64], lag: usize) -> f64 {
        let m = mean(x);
        x.iter().zip(&x[lag..]).map(|(a, b)| (a - m) * (b - m)).sum::<f64>() / x.len() as f64
    }

    pub fn autocorr(x: &[f64], lag: usize) -> f64 {
        autocov(x, lag) / autocov(x, 0)
    }
}

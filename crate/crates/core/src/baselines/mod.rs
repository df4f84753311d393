//! Relative complexity measures: approximate, sample and permutation entropy.
//!
//! All three return nats. Approximate and sample entropy compare every pair of
//! length-`m` templates and are `O(N²)`; permutation entropy is one pass.

mod apen;
mod permen;
mod sampen;

pub use apen::approximate_entropy;
pub use permen::{permutation_entropy, PermEnParams};
pub use sampen::sample_entropy;

use serde::{Deserialize, Serialize};

use crate::{Error, Real, Result, TimeSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// `max_k |x_{i+k} − x_{j+k}|`
    #[default]
    Chebyshev,
    /// `sqrt(Σ_k (x_{i+k} − x_{j+k})²)`
    Euclidean,
}

impl std::str::FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chebyshev" => Ok(Metric::Chebyshev),
            "euclidean" => Ok(Metric::Euclidean),
            other => Err(Error::param("metric", format!("unknown metric `{other}`; expected chebyshev or euclidean"))),
        }
    }
}

/// Match tolerance `r`, either in sample units or as a multiple of the
/// sample standard deviation of the series being measured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance<T = f64> {
    Absolute(T),
    StdScaled(T),
}

impl<T: Real> Tolerance<T> {
    pub fn resolve(&self, ts: &TimeSeries<T>) -> Result<T> {
        let r = match *self {
            Tolerance::Absolute(r) => r,
            Tolerance::StdScaled(k) => k * ts.std_dev(),
        };
        if r <= T::zero() || !r.is_finite() {
            return Err(Error::param("r", format!("tolerance must be positive and finite, got {r}")));
        }
        Ok(r)
    }
}

/// Template length `m`, tolerance `r` and distance for approximate and sample entropy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemplateParams<T = f64> {
    pub m: usize,
    pub tolerance: Tolerance<T>,
    pub metric: Metric,
}

/// Same parameter set serves both template estimators.
pub type ApEnParams<T = f64> = TemplateParams<T>;

impl<T: Real> TemplateParams<T> {
    pub fn new(m: usize, tolerance: Tolerance<T>, metric: Metric) -> Result<Self> {
        if m == 0 {
            return Err(Error::param("m", "template length must be at least 1"));
        }
        match tolerance {
            Tolerance::Absolute(r) | Tolerance::StdScaled(r) if r <= T::zero() || !r.is_finite() => {
                return Err(Error::param("r", format!("tolerance must be positive and finite, got {r}")));
            }
            _ => {}
        }
        Ok(Self { m, tolerance, metric })
    }

    fn check_len(&self, ts: &TimeSeries<T>) -> Result<()> {
        if ts.len() < self.m + 2 {
            return Err(Error::TooShort { len: ts.len(), min: self.m + 2 });
        }
        Ok(())
    }
}

impl<T: Real> Default for TemplateParams<T> {
    /// `m = 3`, `r = 0.2` in sample units, Chebyshev.
    fn default() -> Self {
        Self { m: 3, tolerance: Tolerance::Absolute(T::lit(0.2)), metric: Metric::Chebyshev }
    }
}

/// Compares templates at `i` and `j` element by element. `within` accumulates
/// one coordinate and reports whether the pair is still inside the tolerance.
#[derive(Clone, Copy)]
pub(crate) struct Distance<T> {
    metric: Metric,
    r: T,
    r2: T,
    strict: bool,
}

impl<T: Real> Distance<T> {
    pub(crate) fn new(metric: Metric, r: T, strict: bool) -> Self {
        Self { metric, r, r2: r * r, strict }
    }

    /// Zero accumulator.
    #[inline]
    pub(crate) fn start(&self) -> T {
        T::zero()
    }

    #[inline]
    pub(crate) fn push(&self, acc: T, a: T, b: T) -> Option<T> {
        let d = a - b;
        let (value, bound) = match self.metric {
            Metric::Chebyshev => (d.abs(), self.r),
            Metric::Euclidean => (acc + d * d, self.r2),
        };
        let ok = if self.strict { value < bound } else { value <= bound };
        ok.then_some(value)
    }

    /// Runs over `len` coordinates from `i` and `j`.
    #[inline]
    pub(crate) fn within(&self, x: &[T], i: usize, j: usize, len: usize) -> Option<T> {
        let mut acc = self.start();
        for k in 0..len {
            acc = self.push(acc, x[i + k], x[j + k])?;
        }
        Some(acc)
    }
}

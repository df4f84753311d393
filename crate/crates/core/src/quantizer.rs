//! Fixed-width binning of a real-valued series into integer symbols.
//!
//! Bin `s` is the half-open interval `[origin + sΔ, origin + (s+1)Δ)`, so a
//! sample sitting exactly on an edge goes to the upper bin.

use crate::{Error, Real, Result, TimeSeries};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantizerConfig<T = f64> {
    delta: T,
    origin: T,
}

impl<T: Real> QuantizerConfig<T> {
    /// Bin width `delta` (> 0, finite) with bin 0 starting at `origin`.
    pub fn new(delta: T, origin: T) -> Result<Self> {
        if delta <= T::zero() || !delta.is_finite() {
            return Err(Error::param("delta", format!("bin width must be positive and finite, got {delta}")));
        }
        if !origin.is_finite() {
            return Err(Error::param("origin", format!("must be finite, got {origin}")));
        }
        Ok(Self { delta, origin })
    }

    /// Width `delta`, origin 0.
    pub fn with_delta(delta: T) -> Result<Self> {
        Self::new(delta, T::zero())
    }

    /// Width equal to the sample standard deviation of `ts`, origin 0.
    pub fn auto(ts: &TimeSeries<T>) -> Result<Self> {
        Self::with_delta(ts.std_dev())
    }

    pub fn delta(&self) -> T {
        self.delta
    }

    pub fn origin(&self) -> T {
        self.origin
    }

    pub fn bin_of(&self, x: T) -> Option<i64> {
        ((x - self.origin) / self.delta).floor().to_i64()
    }
}

impl<T: Real> Default for QuantizerConfig<T> {
    fn default() -> Self {
        Self { delta: T::one(), origin: T::zero() }
    }
}

/// Quantised series together with the binning that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolSeries<T = f64> {
    symbols: Vec<i64>,
    config: QuantizerConfig<T>,
}

impl<T: Real> SymbolSeries<T> {
    pub fn symbols(&self) -> &[i64] {
        &self.symbols
    }

    pub fn config(&self) -> &QuantizerConfig<T> {
        &self.config
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Wraps raw symbols, e.g. for feeding an already-discrete source to the
    /// match-length estimator. The config records width 1 at origin 0.
    pub fn from_symbols(symbols: Vec<i64>) -> Self {
        Self { symbols, config: QuantizerConfig::default() }
    }
}

/// `symbols[k] = floor((values[k] − origin) / delta)`.
pub fn quantize<T: Real>(ts: &TimeSeries<T>, cfg: &QuantizerConfig<T>) -> Result<SymbolSeries<T>> {
    let symbols = ts
        .values()
        .iter()
        .enumerate()
        .map(|(index, &x)| {
            if !x.is_finite() {
                return Err(Error::NonFinite { index, value: x.as_f64() });
            }
            cfg.bin_of(x).ok_or(Error::SymbolOverflow { index, value: x.as_f64() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymbolSeries { symbols, config: *cfg })
}

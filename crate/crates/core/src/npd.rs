//! Differential entropy rate as `Ĥ(X^Δ) + ln Δ`: quantise, estimate the
//! Shannon entropy rate of the symbols by match lengths, then correct for the
//! bin width.

use crate::matchlen::{self, MatchRule};
use crate::quantizer::{quantize, QuantizerConfig};
use crate::{EntropyValue, Real, Result, TimeSeries};

/// How the bin width is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DeltaChoice<T = f64> {
    Fixed(QuantizerConfig<T>),
    /// Width equal to the sample standard deviation, origin 0.
    StdDev,
}

impl<T: Real> Default for DeltaChoice<T> {
    fn default() -> Self {
        DeltaChoice::Fixed(QuantizerConfig::default())
    }
}

impl<T: Real> DeltaChoice<T> {
    pub fn resolve(&self, ts: &TimeSeries<T>) -> Result<QuantizerConfig<T>> {
        match self {
            DeltaChoice::Fixed(cfg) => Ok(*cfg),
            DeltaChoice::StdDev => QuantizerConfig::auto(ts),
        }
    }
}

/// NPD entropy rate estimate in nats with the default match rule.
pub fn npd_entropy<T: Real>(ts: &TimeSeries<T>, cfg: &QuantizerConfig<T>) -> Result<EntropyValue<T>> {
    npd_entropy_with(ts, cfg, MatchRule::default())
}

pub fn npd_entropy_with<T: Real>(
    ts: &TimeSeries<T>,
    cfg: &QuantizerConfig<T>,
    rule: MatchRule,
) -> Result<EntropyValue<T>> {
    let symbols = quantize(ts, cfg)?;
    let shannon = matchlen::shannon_rate_ml_with(symbols.symbols(), rule)?;
    Ok(EntropyValue::from_nats(T::lit(shannon.nats()) + cfg.delta().ln()))
}

/// One estimate per bin width, in the order given. Origin is 0 for every entry.
pub fn npd_sweep_delta<T: Real>(ts: &TimeSeries<T>, deltas: &[T]) -> Result<Vec<(T, EntropyValue<T>)>> {
    deltas
        .iter()
        .map(|&d| {
            let cfg = QuantizerConfig::with_delta(d)?;
            Ok((d, npd_entropy(ts, &cfg)?))
        })
        .collect()
}

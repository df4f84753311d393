//! Shannon entropy rate of a symbol sequence from string-match lengths.
//!
//! For each position `i`, let `ℓ_i` be the length of the longest block that
//! starts at `i` and also starts at some other position `j` in the sequence,
//! with blocks running past the end of the data never counting as a match.
//! The shortest block at `i` that occurs nowhere else then has length
//! `L_i = ℓ_i + 1`. With window `n = N`, the estimate is
//!
//! ```text
//! Ĥ = n · ln n / Σ_i λ_i        (nats)
//! ```
//!
//! where `λ_i` is `ℓ_i` under [`MatchRule::LongestMatch`] (the default) or
//! `L_i` under [`MatchRule::ShortestNonMatch`]. The first rule has the smaller
//! finite-sample bias on the processes the harness exercises.
//!
//! [`match_lengths`] uses a suffix array with an LCP array: `ℓ_i` is the larger
//! of the two LCP values adjacent to suffix `i` in sorted order. [`oracle`]
//! recomputes the same quantities by direct scanning.

pub mod oracle;
mod suffix;

use serde::{Deserialize, Serialize};

use crate::quantizer::SymbolSeries;
use crate::{EntropyValue, Error, Real, Result};

/// Sequences shorter than this are rejected by the public estimators.
pub const MIN_LEN: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchRule {
    /// Divide by the summed longest-match lengths `ℓ_i`.
    #[default]
    LongestMatch,
    /// Divide by the summed shortest non-matching lengths `L_i = ℓ_i + 1`.
    ShortestNonMatch,
}

/// Per-position match lengths over the window `n = N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchLengths {
    longest: Vec<usize>,
}

impl MatchLengths {
    fn from_longest(longest: Vec<usize>) -> Self {
        Self { longest }
    }

    pub fn window(&self) -> usize {
        self.longest.len()
    }

    /// `ℓ_i` for 0-based `i`.
    pub fn longest(&self) -> &[usize] {
        &self.longest
    }

    /// `L_i = ℓ_i + 1` for 0-based `i`.
    pub fn shortest_non_match(&self) -> impl Iterator<Item = usize> + '_ {
        self.longest.iter().map(|l| l + 1)
    }

    pub fn sum(&self, rule: MatchRule) -> usize {
        let s: usize = self.longest.iter().sum();
        match rule {
            MatchRule::LongestMatch => s,
            MatchRule::ShortestNonMatch => s + self.longest.len(),
        }
    }
}

/// Match lengths at every position via the suffix array.
pub fn match_lengths(symbols: &[i64]) -> MatchLengths {
    if symbols.is_empty() {
        return MatchLengths::from_longest(Vec::new());
    }
    let index = suffix::SuffixIndex::build(symbols);
    MatchLengths::from_longest((0..symbols.len()).map(|i| index.longest_repeat_at(i)).collect())
}

/// `L_i^n`: the length of the shortest block starting at 1-based position `i`
/// that differs from the equal-length block at every other start `j ≤ n`.
/// Blocks at `j` may extend past `n` but not past the end of the data.
pub fn match_length_at(symbols: &[i64], i: usize, n: usize) -> Result<usize> {
    let len = symbols.len();
    if i == 0 || i > n || n > len {
        return Err(Error::IndexOutOfRange { index: i, window: n, len });
    }
    let i = i - 1;
    let mut longest = 0;
    for j in (0..n).filter(|&j| j != i) {
        let common = symbols[i..].iter().zip(&symbols[j..]).take_while(|(a, b)| a == b).count();
        longest = longest.max(common);
    }
    Ok(longest + 1)
}

/// `n · ln n / Σ λ_i` without the minimum-length gate.
pub fn rate_from_lengths(lengths: &MatchLengths, rule: MatchRule) -> Result<EntropyValue> {
    let n = lengths.window();
    let total = lengths.sum(rule);
    if n == 0 {
        return Err(Error::TooShort { len: 0, min: 1 });
    }
    if total == 0 {
        return Err(Error::NoRepeats);
    }
    let n = n as f64;
    Ok(EntropyValue::from_nats(n * n.ln() / total as f64))
}

/// Shannon entropy rate estimate in nats using the default [`MatchRule`].
pub fn shannon_rate_ml<T: Real>(symbols: &SymbolSeries<T>) -> Result<EntropyValue> {
    shannon_rate_ml_with(symbols.symbols(), MatchRule::default())
}

/// Shannon entropy rate estimate in nats; needs at least [`MIN_LEN`] symbols.
pub fn shannon_rate_ml_with(symbols: &[i64], rule: MatchRule) -> Result<EntropyValue> {
    if symbols.len() < MIN_LEN {
        return Err(Error::TooShort { len: symbols.len(), min: MIN_LEN });
    }
    rate_from_lengths(&match_lengths(symbols), rule)
}

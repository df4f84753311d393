//! Direct nested-scan evaluation of match lengths, `O(N²·ℓ)`.
//!
//! Shares nothing with the suffix-array path; used to check it.

use super::{rate_from_lengths, MatchLengths, MatchRule, MIN_LEN};
use crate::{EntropyValue, Error, Result};

/// Longest prefix of the suffix at `i` that also starts at some `j ≠ i`.
/// A block that would run past the end of the data is never a match.
pub fn longest_repeat_at(symbols: &[i64], i: usize) -> usize {
    let n = symbols.len();
    let mut best = 0;
    for j in 0..n {
        if j == i {
            continue;
        }
        let mut l = 0;
        while i + l < n && j + l < n && symbols[i + l] == symbols[j + l] {
            l += 1;
        }
        best = best.max(l);
    }
    best
}

pub fn match_lengths(symbols: &[i64]) -> MatchLengths {
    MatchLengths::from_longest((0..symbols.len()).map(|i| longest_repeat_at(symbols, i)).collect())
}

/// Same contract as [`super::shannon_rate_ml_with`].
pub fn shannon_rate_ml(symbols: &[i64], rule: MatchRule) -> Result<EntropyValue> {
    if symbols.len() < MIN_LEN {
        return Err(Error::TooShort { len: symbols.len(), min: MIN_LEN });
    }
    rate_from_lengths(&match_lengths(symbols), rule)
}

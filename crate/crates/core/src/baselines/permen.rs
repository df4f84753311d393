use std::collections::HashMap;

use crate::{EntropyValue, Error, Real, Result, TimeSeries};

/// Permutation order `n ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermEnParams {
    order: usize,
}

impl PermEnParams {
    /// Orders above 20 would overflow the 64-bit pattern code.
    pub fn new(order: usize) -> Result<Self> {
        if !(2..=20).contains(&order) {
            return Err(Error::param("order", format!("permutation order must be in 2..=20, got {order}")));
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

impl Default for PermEnParams {
    fn default() -> Self {
        Self { order: 3 }
    }
}

/// Lehmer code of the ordinal pattern of `w`. Equal values rank by position,
/// the earlier one lower.
fn pattern_code<T: Real>(w: &[T]) -> u64 {
    let n = w.len();
    let mut code = 0u64;
    for k in 0..n {
        let smaller_after = w[k + 1..].iter().filter(|&&v| v < w[k]).count() as u64;
        code = code * (n - k) as u64 + smaller_after;
    }
    code
}

/// Shannon entropy (nats) of the ordinal-pattern frequencies over the
/// `N − n + 1` windows of length `n`. Lies in `[0, ln n!]`.
pub fn permutation_entropy<T: Real>(ts: &TimeSeries<T>, p: &PermEnParams) -> Result<EntropyValue<T>> {
    let n = p.order;
    if ts.len() < n {
        return Err(Error::TooShort { len: ts.len(), min: n });
    }
    let windows = ts.values().windows(n);
    let total = windows.len();
    let factorial: u64 = (1..=n as u64).product();

    let counts: Vec<u64> = if factorial <= 1 << 20 {
        let mut dense = vec![0u64; factorial as usize];
        for w in windows {
            dense[pattern_code(w) as usize] += 1;
        }
        dense
    } else {
        let mut sparse: HashMap<u64, u64> = HashMap::new();
        for w in windows {
            *sparse.entry(pattern_code(w)).or_default() += 1;
        }
        let mut v: Vec<u64> = sparse.into_values().collect();
        v.sort_unstable();
        v
    };

    let total = T::from_count(total);
    let h: T = counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let q = T::lit(c as f64) / total;
            -q * q.ln()
        })
        .sum();
    Ok(EntropyValue::from_nats(h.max(T::zero())))
}

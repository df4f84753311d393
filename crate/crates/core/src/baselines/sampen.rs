use super::{Distance, TemplateParams};
use crate::{EntropyValue, Error, Real, Result, TimeSeries};

/// `SampEn = −ln(A / B)`, where `B` (resp. `A`) counts ordered pairs `i ≠ j` of
/// length-`m` (resp. `m + 1`) templates at distance `< r`. Both counts use the
/// first `N − m` start positions, so `A ≤ B`.
pub fn sample_entropy<T: Real>(ts: &TimeSeries<T>, p: &TemplateParams<T>) -> Result<EntropyValue<T>> {
    p.check_len(ts)?;
    let r = p.tolerance.resolve(ts)?;
    let x = ts.values();
    let starts = x.len() - p.m;
    let dist = Distance::new(p.metric, r, true);

    let b = matching_pairs(x, starts, p.m, dist);
    let a = matching_pairs(x, starts, p.m + 1, dist);
    if a == 0 || b == 0 {
        return Err(Error::NoTemplateMatches { a, b, r: r.as_f64() });
    }
    Ok(EntropyValue::from_nats(-(T::lit(a as f64) / T::lit(b as f64)).ln()))
}

/// Ordered pairs `(i, j)`, `i ≠ j`, among the first `starts` templates of length `len`.
fn matching_pairs<T: Real>(x: &[T], starts: usize, len: usize, dist: Distance<T>) -> u64 {
    let mut count = 0u64;
    for i in 0..starts {
        for j in i + 1..starts {
            if dist.within(x, i, j, len).is_some() {
                count += 1;
            }
        }
    }
    2 * count
}

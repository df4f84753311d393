use super::{Distance, TemplateParams};
use crate::{EntropyValue, Real, Result, TimeSeries};

/// `ApEn(m, r) = Φ^m(r) − Φ^{m+1}(r)` with
/// `Φ^m = mean_i ln C_i^m` and `C_i^m` the fraction of length-`m` templates
/// within distance `≤ r` of template `i`, itself included.
///
/// One pass over unordered pairs fills both orders: a pair can only match at
/// `m + 1` if it already matched at `m`.
pub fn approximate_entropy<T: Real>(ts: &TimeSeries<T>, p: &TemplateParams<T>) -> Result<EntropyValue<T>> {
    p.check_len(ts)?;
    let r = p.tolerance.resolve(ts)?;
    let x = ts.values();
    let m = p.m;
    let short = x.len() - m + 1;
    let long = x.len() - m;
    let dist = Distance::new(p.metric, r, false);

    let mut c_short = vec![1u64; short];
    let mut c_long = vec![1u64; long];
    for i in 0..short {
        for j in i + 1..short {
            let Some(acc) = dist.within(x, i, j, m) else { continue };
            c_short[i] += 1;
            c_short[j] += 1;
            if j < long && dist.push(acc, x[i + m], x[j + m]).is_some() {
                c_long[i] += 1;
                c_long[j] += 1;
            }
        }
    }

    let phi = |counts: &[u64]| -> T {
        let total = T::from_count(counts.len());
        counts.iter().map(|&c| (T::lit(c as f64) / total).ln()).sum::<T>() / total
    };
    Ok(EntropyValue::from_nats(phi(&c_short) - phi(&c_long)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::{Metric, Tolerance};
    use crate::Error;

    fn params(m: usize, r: f64, metric: Metric) -> TemplateParams {
        TemplateParams::new(m, Tolerance::Absolute(r), metric).unwrap()
    }

    /// Direct evaluation of the definition, one order at a time.
    fn reference(x: &[f64], m: usize, r: f64) -> f64 {
        let phi = |m: usize| {
            let k = x.len() - m + 1;
            (0..k)
                .map(|i| {
                    let c = (0..k).filter(|&j| (0..m).all(|t| (x[i + t] - x[j + t]).abs() <= r)).count();
                    (c as f64 / k as f64).ln()
                })
                .sum::<f64>()
                / k as f64
        };
        phi(m) - phi(m + 1)
    }

    #[test]
    fn constant_series_is_zero() {
        let ts = TimeSeries::new(vec![2.5; 40]).unwrap();
        for m in 1..4 {
            for metric in [Metric::Chebyshev, Metric::Euclidean] {
                assert_eq!(approximate_entropy(&ts, &params(m, 0.2, metric)).unwrap().nats(), 0.0);
            }
        }
    }

    #[test]
    fn matches_direct_definition() {
        let x: Vec<f64> = (0..60).map(|i| ((i * 37 % 11) as f64 * 0.13).sin()).collect();
        let ts = TimeSeries::new(x.clone()).unwrap();
        for m in 1..4 {
            for r in [0.05, 0.2, 0.5] {
                let got = approximate_entropy(&ts, &params(m, r, Metric::Chebyshev)).unwrap().nats();
                assert!((got - reference(&x, m, r)).abs() < 1e-12, "m={m} r={r}");
            }
        }
    }

    #[test]
    fn hand_computed_small_case() {
        // x = [0, 1, 0, 1, 0], m = 1, r = 0.5:
        // C^1 = [3/5, 2/5, 3/5, 2/5, 3/5]; C^2 over [01,10,01,10] = [1/2; 4]
        let ts = TimeSeries::new(vec![0.0, 1.0, 0.0, 1.0, 0.0]).unwrap();
        let phi1 = (3.0 * (0.6f64).ln() + 2.0 * (0.4f64).ln()) / 5.0;
        let phi2 = (0.5f64).ln();
        let got = approximate_entropy(&ts, &params(1, 0.5, Metric::Chebyshev)).unwrap().nats();
        assert!((got - (phi1 - phi2)).abs() < 1e-15);
    }

    #[test]
    fn too_short() {
        let ts = TimeSeries::new(vec![0.0; 4]).unwrap();
        assert_eq!(
            approximate_entropy(&ts, &params(3, 0.2, Metric::Chebyshev)),
            Err(Error::TooShort { len: 4, min: 5 })
        );
    }
}

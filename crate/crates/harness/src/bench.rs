use std::hint::black_box;
use std::time::{Duration, Instant};

use npd_core::processes::{generate, ProcessKind, ProcessSpec};
use npd_core::{EstimatorId, Seed, TimeSeries};
use serde::Serialize;

use crate::error::{HarnessError, Result};
use crate::estimator::EstimatorSpec;

pub const WARMUP_CALLS: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub estimator: EstimatorId,
    pub total_seconds: f64,
    pub per_call_seconds: f64,
}

/// Every estimator at its default settings.
pub fn default_estimators() -> Vec<EstimatorSpec> {
    EstimatorId::ALL.into_iter().map(EstimatorSpec::default_for).collect()
}

fn white_inputs(n: usize, count: usize, stream: u64, seed: Seed) -> Result<Vec<TimeSeries>> {
    (0..count).map(|i| Ok(generate(&ProcessSpec::new(ProcessKind::White, n, seed.derive(stream, i as u64)))?)).collect()
}

/// Times `trials` calls on fresh unit white-noise series of length `n`,
/// after [`WARMUP_CALLS`] discarded calls. Inputs are generated before the
/// clock starts.
pub fn time_estimator(est: &EstimatorSpec, n: usize, trials: usize, seed: Seed) -> Result<BenchRow> {
    if trials == 0 {
        return Err(HarnessError::invalid("trials", "must be at least 1"));
    }
    est.validate()?;
    for ts in white_inputs(n, WARMUP_CALLS, 0, seed)? {
        black_box(est.estimate(black_box(&ts))?);
    }
    let inputs = white_inputs(n, trials, 1, seed)?;
    let mut total = Duration::ZERO;
    for ts in &inputs {
        let start = Instant::now();
        let v = est.estimate(black_box(ts));
        total += start.elapsed();
        black_box(v?);
    }
    let total_seconds = total.as_secs_f64();
    Ok(BenchRow { estimator: est.id(), total_seconds, per_call_seconds: total_seconds / trials as f64 })
}

pub fn run_bench(estimators: &[EstimatorSpec], n: usize, trials: usize, seed: Seed) -> Result<Vec<BenchRow>> {
    estimators.iter().map(|e| time_estimator(e, n, trials, seed)).collect()
}

/// Estimator ids from fastest to slowest.
pub fn ranking(rows: &[BenchRow]) -> Vec<EstimatorId> {
    let mut sorted: Vec<&BenchRow> = rows.iter().collect();
    sorted.sort_by(|a, b| a.total_seconds.total_cmp(&b.total_seconds));
    sorted.into_iter().map(|r| r.estimator).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_trial_per_call_is_total() {
        let row = time_estimator(&EstimatorSpec::npd(1.0), 500, 1, Seed(3)).unwrap();
        assert_eq!(row.per_call_seconds, row.total_seconds);
        assert!(row.total_seconds > 0.0);
    }

    #[test]
    fn zero_trials_rejected() {
        assert!(time_estimator(&EstimatorSpec::permen(3), 100, 0, Seed(0)).is_err());
    }

    #[test]
    fn ranking_sorts_by_total() {
        let row = |estimator, t| BenchRow { estimator, total_seconds: t, per_call_seconds: t };
        let rows = [row(EstimatorId::Sampen, 3.0), row(EstimatorId::Permen, 0.1), row(EstimatorId::Npd, 1.0)];
        assert_eq!(ranking(&rows), vec![EstimatorId::Permen, EstimatorId::Npd, EstimatorId::Sampen]);
    }
}

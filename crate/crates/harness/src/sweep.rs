use std::io::Write;

use npd_core::analytic::{arfima_entropy_rate, fgn_entropy_rate, white_noise_entropy_rate, SpectralConfig};
use npd_core::processes::{generate, ProcessKind, ProcessSpec};
use npd_core::{summarize, EntropyValue, EstimatorId, Seed, TimeSeries};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, OutputFormat, ProcessTemplate};
use crate::error::{HarnessError, Result};

/// One (process, H, estimator) cell of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub process: ProcessKind,
    /// Absent for processes that do not depend on `H`.
    pub hurst: Option<f64>,
    pub estimator: EstimatorId,
    pub delta: Option<f64>,
    /// Absent when every replication failed.
    pub mean_nats: Option<f64>,
    /// Absent with fewer than two successful replications.
    pub variance: Option<f64>,
    pub analytic_nats: Option<f64>,
    pub replications: usize,
    pub failures: usize,
    /// Successful replication values in replication order.
    #[serde(skip)]
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    pub fn total_failures(&self) -> usize {
        self.rows.iter().map(|r| r.failures).sum()
    }

    /// Rows for one process and estimator, in grid order.
    pub fn select(&self, process: ProcessKind, estimator: EstimatorId) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(move |r| r.process == process && r.estimator == estimator)
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for row in &self.rows {
            w.serialize(row).map_err(|e| HarnessError::Output(e.to_string()))?;
        }
        if self.rows.is_empty() {
            w.write_record(CSV_HEADER).map_err(|e| HarnessError::Output(e.to_string()))?;
        }
        w.flush().map_err(|e| HarnessError::io("writing csv", e))
    }

    pub fn write_json<W: Write>(&self, mut writer: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut writer, &self.rows).map_err(|e| HarnessError::Output(e.to_string()))?;
        writeln!(writer).map_err(|e| HarnessError::io("writing json", e))
    }

    pub fn write<W: Write>(&self, writer: W, format: OutputFormat) -> Result<()> {
        match format {
            OutputFormat::Csv => self.write_csv(writer),
            OutputFormat::Json => self.write_json(writer),
        }
    }
}

pub const CSV_HEADER: [&str; 9] =
    ["process", "hurst", "estimator", "delta", "mean_nats", "variance", "analytic_nats", "replications", "failures"];

struct GridPoint<'a> {
    template: &'a ProcessTemplate,
    hurst: Option<f64>,
}

impl GridPoint<'_> {
    fn spec(&self, length: usize, seed: Seed) -> ProcessSpec<f64> {
        ProcessSpec::new(self.template.kind, length, seed)
            .with_hurst(self.hurst.unwrap_or(0.5))
            .with_sigma2(self.template.sigma2)
            .with_period(self.template.period)
    }

    fn analytic(&self) -> Option<f64> {
        let s2 = self.template.sigma2;
        let h = self.hurst.unwrap_or(0.5);
        let value = match self.template.kind {
            ProcessKind::Fgn => fgn_entropy_rate(h, s2, &SpectralConfig::default()),
            ProcessKind::Arfima => arfima_entropy_rate(h, s2),
            // the walk's increments and the mean-shift noise are N(0, σ²)
            ProcessKind::White | ProcessKind::MeanShift | ProcessKind::GaussianWalk => white_noise_entropy_rate(s2),
        };
        value.ok().map(EntropyValue::nats)
    }
}

fn grid(cfg: &ExperimentConfig) -> Vec<GridPoint<'_>> {
    let mut points = Vec::new();
    for template in &cfg.processes {
        if template.kind.uses_hurst() {
            points.extend(cfg.hurst_grid.iter().map(|&h| GridPoint { template, hurst: Some(h) }));
        } else {
            points.push(GridPoint { template, hurst: None });
        }
    }
    points
}

/// Runs every estimator on `replications` independent series per grid point.
///
/// Grid point `g` (processes in order, Hurst values in order within each)
/// and replication `r` use seed `mix_seed(base_seed, g, r)`; all estimators at
/// a point see the same series. Results do not depend on the worker count.
pub fn run_sweep(cfg: &ExperimentConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let points = grid(cfg);
    for p in &points {
        p.spec(cfg.series_length, Seed(0)).validate()?;
    }
    let reps = cfg.replications;
    let base = Seed(cfg.base_seed);

    let task = |t: usize| -> Vec<Option<f64>> {
        let (g, r) = (t / reps, t % reps);
        let spec = points[g].spec(cfg.series_length, base.derive(g as u64, r as u64));
        match generate::<f64>(&spec) {
            Ok(ts) => cfg.estimators.iter().map(|e| estimate(e, &ts)).collect(),
            Err(_) => vec![None; cfg.estimators.len()],
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.unwrap_or(0))
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    let outcomes: Vec<Vec<Option<f64>>> = pool.install(|| (0..points.len() * reps).into_par_iter().map(task).collect());

    let mut rows = Vec::with_capacity(points.len() * cfg.estimators.len());
    for (g, point) in points.iter().enumerate() {
        let analytic = point.analytic();
        for (k, est) in cfg.estimators.iter().enumerate() {
            let values: Vec<f64> = outcomes[g * reps..(g + 1) * reps].iter().filter_map(|o| o[k]).collect();
            let (mean_nats, variance) = summary(&values);
            rows.push(SweepRow {
                process: point.template.kind,
                hurst: point.hurst,
                estimator: est.id(),
                delta: est.delta(),
                mean_nats,
                variance,
                analytic_nats: analytic,
                replications: reps,
                failures: reps - values.len(),
                values,
            });
        }
    }
    Ok(SweepResult { rows })
}

fn estimate(est: &crate::estimator::EstimatorSpec, ts: &TimeSeries) -> Option<f64> {
    est.estimate(ts).ok().map(|v| v.nats()).filter(|v| v.is_finite())
}

/// Mean and unbiased variance; variance absent below two values.
pub fn summary(values: &[f64]) -> (Option<f64>, Option<f64>) {
    match values {
        [] => (None, None),
        [single] => (Some(*single), None),
        many => {
            let ev: Vec<EntropyValue> = many.iter().map(|&v| EntropyValue::from_nats(v)).collect();
            let s = summarize(&ev).expect("at least two values");
            (Some(s.mean.nats()), Some(s.variance))
        }
    }
}

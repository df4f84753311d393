use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use npd_core::processes::{ProcessKind, DEFAULT_PERIOD};
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};
use crate::estimator::EstimatorSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    /// `.json` selects JSON; anything else CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => OutputFormat::Json,
            _ => OutputFormat::Csv,
        }
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown format `{s}`; expected csv or json")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub path: Option<PathBuf>,
    pub format: Option<OutputFormat>,
}

fn default_sigma2() -> f64 {
    1.0
}

fn default_period() -> usize {
    DEFAULT_PERIOD
}

/// A process family; the Hurst value comes from the grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProcessTemplate {
    pub kind: ProcessKind,
    #[serde(default = "default_sigma2")]
    pub sigma2: f64,
    #[serde(default = "default_period")]
    pub period: usize,
}

impl ProcessTemplate {
    pub fn new(kind: ProcessKind) -> Self {
        Self { kind, sigma2: default_sigma2(), period: default_period() }
    }
}

fn default_replications() -> usize {
    50
}

fn default_series_length() -> usize {
    2000
}

/// A sweep over processes × Hurst values × estimators.
///
/// Processes whose law does not depend on `H` are run once and reported
/// without a Hurst value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub processes: Vec<ProcessTemplate>,
    #[serde(default)]
    pub hurst_grid: Vec<f64>,
    pub estimators: Vec<EstimatorSpec>,
    #[serde(default = "default_replications")]
    pub replications: usize,
    #[serde(default = "default_series_length")]
    pub series_length: usize,
    #[serde(default)]
    pub base_seed: u64,
    /// Worker threads; all available cores when absent.
    #[serde(default)]
    pub workers: Option<usize>,
    #[serde(default)]
    pub output: OutputSpec,
}

impl ExperimentConfig {
    /// 50 replications of length 2000, seed 0, no Hurst grid.
    pub fn new(processes: Vec<ProcessTemplate>, estimators: Vec<EstimatorSpec>) -> Self {
        Self {
            processes,
            hurst_grid: Vec::new(),
            estimators,
            replications: default_replications(),
            series_length: default_series_length(),
            base_seed: 0,
            workers: None,
            output: OutputSpec::default(),
        }
    }

    pub fn with_hurst_grid(mut self, grid: Vec<f64>) -> Self {
        self.hurst_grid = grid;
        self
    }

    pub fn with_replications(mut self, replications: usize) -> Self {
        self.replications = replications;
        self
    }

    pub fn with_series_length(mut self, series_length: usize) -> Self {
        self.series_length = series_length;
        self
    }

    pub fn with_base_seed(mut self, base_seed: u64) -> Self {
        self.base_seed = base_seed;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    /// Parses and validates; `source_name` prefixes error messages.
    pub fn from_toml_str(text: &str, source_name: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text)
            .map_err(|e| HarnessError::Config { source_name: source_name.to_owned(), message: e.to_string() })?;
        cfg.validate()
            .map_err(|e| HarnessError::Config { source_name: source_name.to_owned(), message: e.to_string() })?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| HarnessError::io(format!("reading {}", path.display()), e))?;
        Self::from_toml_str(&text, &path.display().to_string())
    }

    pub fn validate(&self) -> Result<()> {
        if self.processes.is_empty() {
            return Err(HarnessError::invalid("processes", "at least one process is required"));
        }
        if self.estimators.is_empty() {
            return Err(HarnessError::invalid("estimators", "at least one estimator is required"));
        }
        if self.replications == 0 {
            return Err(HarnessError::invalid("replications", "must be at least 1"));
        }
        if self.series_length == 0 {
            return Err(HarnessError::invalid("series_length", "must be at least 1"));
        }
        if self.workers == Some(0) {
            return Err(HarnessError::invalid("workers", "must be at least 1"));
        }
        if self.processes.iter().any(|p| p.kind.uses_hurst()) && self.hurst_grid.is_empty() {
            return Err(HarnessError::invalid("hurst_grid", "fgn and arfima processes need a nonempty grid"));
        }
        for (i, &h) in self.hurst_grid.iter().enumerate() {
            if !(h > 0.0 && h < 1.0) {
                return Err(HarnessError::invalid(format!("hurst_grid[{i}]"), format!("must lie in (0, 1), got {h}")));
            }
        }
        for (i, p) in self.processes.iter().enumerate() {
            if p.sigma2 <= 0.0 || !p.sigma2.is_finite() {
                return Err(HarnessError::invalid(
                    format!("processes[{i}].sigma2"),
                    format!("must be positive and finite, got {}", p.sigma2),
                ));
            }
            if p.period == 0 {
                return Err(HarnessError::invalid(format!("processes[{i}].period"), "must be at least 1"));
            }
        }
        for (i, e) in self.estimators.iter().enumerate() {
            e.validate().map_err(|err| HarnessError::invalid(format!("estimators[{i}]"), err.to_string()))?;
        }
        Ok(())
    }

    /// Output format from the config, else from the output path, else CSV.
    pub fn output_format(&self) -> OutputFormat {
        self.output.format.or_else(|| self.output.path.as_deref().map(OutputFormat::from_path)).unwrap_or_default()
    }
}

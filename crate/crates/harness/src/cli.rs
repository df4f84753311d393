use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use npd_core::baselines::Metric;
use npd_core::matchlen::MatchRule;
use npd_core::processes::{generate, ProcessKind, ProcessSpec, DEFAULT_PERIOD};
use npd_core::{EntropyValue, EstimateReport, EstimatorId, Seed, TimeSeries};
use serde::Serialize;

use crate::bench::{default_estimators, ranking, run_bench};
use crate::config::{ExperimentConfig, OutputFormat};
use crate::error::{HarnessError, Result};
use crate::estimator::{DeltaSetting, EstimatorSpec, RScale};
use crate::sweep::run_sweep;

#[derive(Debug, Parser)]
#[command(name = "npd", version, about = "Entropy rate estimation for continuous-valued time series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a synthetic series as CSV.
    Generate(GenerateArgs),
    /// Estimate the entropy rate of a CSV series and print a JSON report.
    Estimate(EstimateArgs),
    /// Run an experiment config and write the sweep table.
    Sweep(SweepArgs),
    /// Time each estimator on white-noise inputs.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub kind: ProcessKind,
    #[arg(long, default_value_t = 0.5)]
    pub hurst: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sigma2: f64,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_PERIOD)]
    pub period: usize,
    /// Defaults to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Nats,
    Bits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Chebyshev,
    Euclidean,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    LongestMatch,
    ShortestNonMatch,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long)]
    pub estimator: EstimatorId,
    /// Bin width: a number, a fraction like 1/3, or `auto` for the sample standard deviation.
    #[arg(long, default_value = "1")]
    pub delta: DeltaSetting,
    #[arg(long, value_enum, default_value_t = RuleArg::LongestMatch)]
    pub rule: RuleArg,
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    #[arg(long, default_value_t = 0.2)]
    pub r: f64,
    /// `sd` multiplies `r` by the sample standard deviation.
    #[arg(long, default_value = "absolute")]
    pub r_scale: RScale,
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = MetricArg::Chebyshev)]
    pub metric: MetricArg,
    #[arg(long, value_enum, default_value_t = Units::Nats)]
    pub units: Units,
    /// CSV file with a single `value` column; `-` or absent reads stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

impl EstimateArgs {
    pub fn spec(&self) -> EstimatorSpec {
        let metric = match self.metric {
            MetricArg::Chebyshev => Metric::Chebyshev,
            MetricArg::Euclidean => Metric::Euclidean,
        };
        let rule = match self.rule {
            RuleArg::LongestMatch => MatchRule::LongestMatch,
            RuleArg::ShortestNonMatch => MatchRule::ShortestNonMatch,
        };
        let (m, r, r_scale) = (self.m, self.r, self.r_scale);
        match self.estimator {
            EstimatorId::Npd => EstimatorSpec::Npd { delta: self.delta, rule },
            EstimatorId::Apen => EstimatorSpec::Apen { m, r, r_scale, metric },
            EstimatorId::Sampen => EstimatorSpec::Sampen { m, r, r_scale, metric },
            EstimatorId::Permen => EstimatorSpec::permen(self.order),
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the config's worker count.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Overrides the config's output path; stdout when neither is set.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub format: Option<OutputFormat>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Report as printed by `estimate`: the core report plus the headline value
/// in the requested units.
#[derive(Debug, Serialize)]
struct EstimateOutput {
    #[serde(flatten)]
    report: EstimateReport,
    value: f64,
    units: &'static str,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match command {
        Command::Generate(a) => cmd_generate(&a, out),
        Command::Estimate(a) => cmd_estimate(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out, err),
        Command::Bench(a) => cmd_bench(&a, out, err),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(format!("creating {}", dir.display()), e))?;
    }
    let file = File::create(path).map_err(|e| HarnessError::io(format!("creating {}", path.display()), e))?;
    Ok(BufWriter::new(file))
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<()> {
    let spec =
        ProcessSpec::new(a.kind, a.n, Seed(a.seed)).with_hurst(a.hurst).with_sigma2(a.sigma2).with_period(a.period);
    spec.validate().map_err(|e| HarnessError::invalid("process", e.to_string()))?;
    let ts: TimeSeries = generate(&spec)?;
    match &a.output {
        Some(path) => {
            let mut w = create(path)?;
            ts.write_csv(&mut w)?;
            w.flush().map_err(|e| HarnessError::io(format!("writing {}", path.display()), e))
        }
        None => Ok(ts.write_csv(out)?),
    }
}

fn read_series(input: Option<&Path>) -> Result<TimeSeries> {
    match input {
        Some(path) if path != Path::new("-") => {
            let file = File::open(path).map_err(|e| HarnessError::io(format!("opening {}", path.display()), e))?;
            Ok(TimeSeries::read_csv(BufReader::new(file))?)
        }
        _ => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf).map_err(|e| HarnessError::io("reading stdin", e))?;
            Ok(TimeSeries::read_csv(buf.as_slice())?)
        }
    }
}

fn cmd_estimate(a: &EstimateArgs, out: &mut dyn Write) -> Result<()> {
    let spec = a.spec();
    spec.validate().map_err(|e| HarnessError::invalid(a.estimator.as_str(), e.to_string()))?;
    let ts = read_series(a.input.as_deref())?;
    let value = spec.estimate(&ts)?;
    let report = EstimateReport::new(spec.id(), spec.params(), vec![value])?;
    let (value, units) = match a.units {
        Units::Nats => (value.nats(), "nats"),
        Units::Bits => (EntropyValue::to_bits(value), "bits"),
    };
    let output = EstimateOutput { report, value, units };
    serde_json::to_writer_pretty(&mut *out, &output).map_err(|e| HarnessError::Output(e.to_string()))?;
    writeln!(out).map_err(|e| HarnessError::io("writing report", e))
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let mut cfg = ExperimentConfig::load(&a.config)?;
    if let Some(w) = a.workers {
        cfg.workers = Some(w);
    }
    if let Some(p) = &a.output {
        cfg.output.path = Some(p.clone());
    }
    if let Some(f) = a.format {
        cfg.output.format = Some(f);
    }
    let result = run_sweep(&cfg)?;
    let format = cfg.output_format();
    match &cfg.output.path {
        Some(path) => {
            let mut w = create(path)?;
            result.write(&mut w, format)?;
            w.flush().map_err(|e| HarnessError::io(format!("writing {}", path.display()), e))?;
        }
        None => result.write(out, format)?,
    }
    let failures = result.total_failures();
    if failures > 0 {
        let _ = writeln!(err, "warning: {failures} estimator runs failed; see the failures column");
    }
    Ok(())
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let rows = run_bench(&default_estimators(), a.n, a.trials, Seed(a.seed))?;
    let mut w = csv::Writer::from_writer(out);
    for row in &rows {
        w.serialize(row).map_err(|e| HarnessError::Output(e.to_string()))?;
    }
    w.flush().map_err(|e| HarnessError::io("writing bench table", e))?;
    let order: Vec<&str> = ranking(&rows).into_iter().map(EstimatorId::as_str).collect();
    let _ = writeln!(err, "fastest to slowest: {}", order.join(", "));
    Ok(())
}

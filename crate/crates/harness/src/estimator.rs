use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use npd_core::baselines::{
    approximate_entropy, permutation_entropy, sample_entropy, Metric, PermEnParams, TemplateParams, Tolerance,
};
use npd_core::matchlen::MatchRule;
use npd_core::npd::npd_entropy_with;
use npd_core::quantizer::QuantizerConfig;
use npd_core::{EntropyValue, EstimatorId, ParamValue, TimeSeries};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// Bin width for the NPD estimator: a fixed value or the sample standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum DeltaSetting {
    #[default]
    Unit,
    Fixed(f64),
    Auto,
}

impl DeltaSetting {
    pub fn value(self) -> Option<f64> {
        match self {
            DeltaSetting::Unit => Some(1.0),
            DeltaSetting::Fixed(d) => Some(d),
            DeltaSetting::Auto => None,
        }
    }

    fn config(self, ts: &TimeSeries) -> npd_core::Result<QuantizerConfig<f64>> {
        match self.value() {
            Some(d) => QuantizerConfig::with_delta(d),
            None => QuantizerConfig::auto(ts),
        }
    }
}

impl FromStr for DeltaSetting {
    type Err = String;

    /// A number, a fraction such as `1/3`, or `auto`.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("auto") {
            return Ok(DeltaSetting::Auto);
        }
        let parse = |t: &str| {
            t.trim().parse::<f64>().map_err(|_| format!("expected a number, a fraction or `auto`, got `{s}`"))
        };
        let value = match s.split_once('/') {
            Some((a, b)) => parse(a)? / parse(b)?,
            None => parse(s)?,
        };
        if value <= 0.0 || !value.is_finite() {
            return Err(format!("bin width must be positive and finite, got `{s}`"));
        }
        Ok(if value == 1.0 { DeltaSetting::Unit } else { DeltaSetting::Fixed(value) })
    }
}

impl fmt::Display for DeltaSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("auto"),
        }
    }
}

impl Serialize for DeltaSetting {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.value() {
            Some(d) => s.serialize_f64(d),
            None => s.serialize_str("auto"),
        }
    }
}

impl<'de> Deserialize<'de> for DeltaSetting {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = DeltaSetting;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a positive number, a fraction string like \"1/3\", or \"auto\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<DeltaSetting, E> {
                v.to_string().parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<DeltaSetting, E> {
                self.visit_f64(v as f64)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<DeltaSetting, E> {
                self.visit_f64(v as f64)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<DeltaSetting, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// How the template tolerance `r` is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RScale {
    /// `r` in sample units.
    #[default]
    Absolute,
    /// `r` times the sample standard deviation.
    Sd,
}

impl FromStr for RScale {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "absolute" => Ok(RScale::Absolute),
            "sd" => Ok(RScale::Sd),
            _ => Err(format!("unknown tolerance scale `{s}`; expected absolute or sd")),
        }
    }
}

fn default_m() -> usize {
    3
}

fn default_r() -> f64 {
    0.2
}

fn default_order() -> usize {
    3
}

/// One estimator and its parameters, as written in a sweep config.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "id", rename_all = "lowercase", deny_unknown_fields)]
pub enum EstimatorSpec {
    Npd {
        #[serde(default)]
        delta: DeltaSetting,
        #[serde(default)]
        rule: MatchRule,
    },
    Apen {
        #[serde(default = "default_m")]
        m: usize,
        #[serde(default = "default_r")]
        r: f64,
        #[serde(default)]
        r_scale: RScale,
        #[serde(default)]
        metric: Metric,
    },
    Sampen {
        #[serde(default = "default_m")]
        m: usize,
        #[serde(default = "default_r")]
        r: f64,
        #[serde(default)]
        r_scale: RScale,
        #[serde(default)]
        metric: Metric,
    },
    Permen {
        #[serde(default = "default_order")]
        order: usize,
    },
}

impl EstimatorSpec {
    pub fn npd(delta: f64) -> Self {
        let delta = if delta == 1.0 { DeltaSetting::Unit } else { DeltaSetting::Fixed(delta) };
        EstimatorSpec::Npd { delta, rule: MatchRule::default() }
    }

    pub fn apen(m: usize, r: f64, metric: Metric) -> Self {
        EstimatorSpec::Apen { m, r, r_scale: RScale::Absolute, metric }
    }

    pub fn sampen(m: usize, r: f64, metric: Metric) -> Self {
        EstimatorSpec::Sampen { m, r, r_scale: RScale::Absolute, metric }
    }

    pub fn permen(order: usize) -> Self {
        EstimatorSpec::Permen { order }
    }

    /// Defaults for every estimator: `Δ = 1`, `m = 3`, `r = 0.2`, Chebyshev, order 3.
    pub fn default_for(id: EstimatorId) -> Self {
        match id {
            EstimatorId::Npd => Self::npd(1.0),
            EstimatorId::Apen => Self::apen(default_m(), default_r(), Metric::default()),
            EstimatorId::Sampen => Self::sampen(default_m(), default_r(), Metric::default()),
            EstimatorId::Permen => Self::permen(default_order()),
        }
    }

    pub fn id(&self) -> EstimatorId {
        match self {
            EstimatorSpec::Npd { .. } => EstimatorId::Npd,
            EstimatorSpec::Apen { .. } => EstimatorId::Apen,
            EstimatorSpec::Sampen { .. } => EstimatorId::Sampen,
            EstimatorSpec::Permen { .. } => EstimatorId::Permen,
        }
    }

    /// Bin width for a fixed-width NPD estimator.
    pub fn delta(&self) -> Option<f64> {
        match self {
            EstimatorSpec::Npd { delta, .. } => delta.value(),
            _ => None,
        }
    }

    /// Rejects parameters every series would reject.
    pub fn validate(&self) -> npd_core::Result<()> {
        match *self {
            EstimatorSpec::Npd { delta, .. } => {
                if let Some(d) = delta.value() {
                    QuantizerConfig::with_delta(d)?;
                }
            }
            EstimatorSpec::Apen { m, r, r_scale, metric } | EstimatorSpec::Sampen { m, r, r_scale, metric } => {
                template_params(m, r, r_scale, metric)?;
            }
            EstimatorSpec::Permen { order } => {
                PermEnParams::new(order)?;
            }
        }
        Ok(())
    }

    pub fn estimate(&self, ts: &TimeSeries) -> npd_core::Result<EntropyValue> {
        match *self {
            EstimatorSpec::Npd { delta, rule } => npd_entropy_with(ts, &delta.config(ts)?, rule),
            EstimatorSpec::Apen { m, r, r_scale, metric } => {
                approximate_entropy(ts, &template_params(m, r, r_scale, metric)?)
            }
            EstimatorSpec::Sampen { m, r, r_scale, metric } => {
                sample_entropy(ts, &template_params(m, r, r_scale, metric)?)
            }
            EstimatorSpec::Permen { order } => permutation_entropy(ts, &PermEnParams::new(order)?),
        }
    }

    pub fn params(&self) -> BTreeMap<String, ParamValue> {
        let mut p = BTreeMap::new();
        let name = |s: &str| s.to_owned();
        match *self {
            EstimatorSpec::Npd { delta, rule } => {
                let value = match delta.value() {
                    Some(d) => ParamValue::Real(d),
                    None => ParamValue::from("auto"),
                };
                p.insert(name("delta"), value);
                p.insert(name("rule"), ParamValue::from(rule_name(rule)));
            }
            EstimatorSpec::Apen { m, r, r_scale, metric } | EstimatorSpec::Sampen { m, r, r_scale, metric } => {
                p.insert(name("m"), m.into());
                p.insert(name("r"), r.into());
                p.insert(name("r_scale"), ParamValue::from(if r_scale == RScale::Sd { "sd" } else { "absolute" }));
                p.insert(
                    name("metric"),
                    ParamValue::from(if metric == Metric::Euclidean { "euclidean" } else { "chebyshev" }),
                );
            }
            EstimatorSpec::Permen { order } => {
                p.insert(name("order"), order.into());
            }
        }
        p
    }
}

fn rule_name(rule: MatchRule) -> &'static str {
    match rule {
        MatchRule::LongestMatch => "longest_match",
        MatchRule::ShortestNonMatch => "shortest_non_match",
    }
}

fn template_params(m: usize, r: f64, scale: RScale, metric: Metric) -> npd_core::Result<TemplateParams<f64>> {
    let tolerance = match scale {
        RScale::Absolute => Tolerance::Absolute(r),
        RScale::Sd => Tolerance::StdScaled(r),
    };
    TemplateParams::new(m, tolerance, metric)
}

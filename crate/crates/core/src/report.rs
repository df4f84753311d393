use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{EntropyValue, Error, Real, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EstimatorId {
    Npd,
    Apen,
    Sampen,
    Permen,
}

impl EstimatorId {
    pub const ALL: [EstimatorId; 4] = [Self::Npd, Self::Apen, Self::Sampen, Self::Permen];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Npd => "npd",
            Self::Apen => "apen",
            Self::Sampen => "sampen",
            Self::Permen => "permen",
        }
    }
}

impl fmt::Display for EstimatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for EstimatorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|id| id.as_str() == s).ok_or_else(|| {
            Error::param("estimator", format!("unknown estimator `{s}`; valid ids are npd, apen, sampen, permen"))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
    Text(String),
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Real(v)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_owned())
    }
}

/// Mean and unbiased variance of a set of replications.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summary<T = f64> {
    pub mean: EntropyValue<T>,
    /// nats²
    pub variance: T,
}

/// Arithmetic mean and `(k − 1)`-denominator variance. Needs `k ≥ 2`.
pub fn summarize<T: Real>(values: &[EntropyValue<T>]) -> Result<Summary<T>> {
    let k = values.len();
    if k < 2 {
        return Err(Error::InsufficientReplications(k));
    }
    let mean = values.iter().map(|v| v.nats()).sum::<T>() / T::from_count(k);
    let ss: T = values.iter().map(|v| (v.nats() - mean) * (v.nats() - mean)).sum();
    Ok(Summary { mean: EntropyValue::from_nats(mean), variance: ss / T::from_count(k - 1) })
}

/// One estimator applied to one or more replications.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub estimator_id: EstimatorId,
    pub params: BTreeMap<String, ParamValue>,
    pub replication_values: Vec<EntropyValue<f64>>,
    pub mean: EntropyValue<f64>,
    /// `None` for a single replication.
    pub variance: Option<f64>,
}

impl EstimateReport {
    /// Fails only on an empty replication list.
    pub fn new(
        estimator_id: EstimatorId,
        params: BTreeMap<String, ParamValue>,
        replication_values: Vec<EntropyValue<f64>>,
    ) -> Result<Self> {
        let (mean, variance) = match replication_values.as_slice() {
            [] => return Err(Error::InsufficientReplications(0)),
            [single] => (*single, None),
            many => {
                let s = summarize(many)?;
                (s.mean, Some(s.variance))
            }
        };
        Ok(Self { estimator_id, params, replication_values, mean, variance })
    }
}

use std::io::{Read, Write};

use crate::{Error, Real, Result};

/// A finite, non-empty sample path `x_1, …, x_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries<T = f64> {
    values: Vec<T>,
}

impl<T: Real> TimeSeries<T> {
    /// Fails on an empty vector or on the first NaN/infinite sample.
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySeries);
        }
        if let Some((index, v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite { index, value: v.as_f64() });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean(&self) -> T {
        self.values.iter().copied().sum::<T>() / T::from_count(self.len())
    }

    /// Sample standard deviation with the `N − 1` denominator (0 for `N = 1`).
    pub fn std_dev(&self) -> T {
        let n = self.len();
        if n < 2 {
            return T::zero();
        }
        let mean = self.mean();
        let ss: T = self.values.iter().map(|&x| (x - mean) * (x - mean)).sum();
        (ss / T::from_count(n - 1)).sqrt()
    }

    /// Element-wise map; the result is re-validated.
    pub fn map(&self, f: impl Fn(T) -> T) -> Result<Self> {
        Self::new(self.values.iter().map(|&x| f(x)).collect())
    }

    /// Reads a one-column CSV with header `value`.
    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers()?.clone();
        if headers.len() != 1 || &headers[0] != "value" {
            return Err(Error::Csv(format!(
                "line 1: expected a single header `value`, found `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut values = Vec::new();
        for (row, record) in rdr.records().enumerate() {
            let record = record?;
            let line = row + 2;
            let field = record.get(0).unwrap_or("");
            let v: f64 = field
                .parse()
                .map_err(|_| Error::Csv(format!("line {line}: field `value` is not a number: `{field}`")))?;
            if !v.is_finite() {
                return Err(Error::Csv(format!("line {line}: field `value` is not finite: `{field}`")));
            }
            values.push(T::lit(v));
        }
        Self::new(values)
    }

    /// Writes the series as a one-column CSV with header `value`.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        wtr.write_record(["value"])?;
        for v in &self.values {
            wtr.write_record([v.to_string()])?;
        }
        wtr.flush().map_err(|e| Error::Csv(e.to_string()))?;
        Ok(())
    }
}

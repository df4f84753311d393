use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("time series is empty")]
    EmptySeries,
    #[error("non-finite sample {value} at index {index}")]
    NonFinite { index: usize, value: f64 },
    #[error("bin index for sample {value} at index {index} does not fit in i64")]
    SymbolOverflow { index: usize, value: f64 },
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("series of length {len} is too short; at least {min} samples required")]
    TooShort { len: usize, min: usize },
    #[error("need at least 2 replications for a variance, got {0}")]
    InsufficientReplications(usize),
    #[error("position {index} is outside the window 1..={window} (series length {len})")]
    IndexOutOfRange { index: usize, window: usize, len: usize },
    #[error("no symbol block repeats anywhere in the sequence; match-length rate is unbounded")]
    NoRepeats,
    #[error("sample entropy undefined: {a} matches of length m+1 and {b} of length m at tolerance {r}")]
    NoTemplateMatches { a: u64, b: u64, r: f64 },
    #[error("circulant embedding has negative eigenvalue {value} at index {index}")]
    NegativeEigenvalue { index: usize, value: f64 },
    #[error("spectral aliasing sum not converged at H={hurst}: omitted tail is {relative_tail:e} of the truncated sum (j_max={j_max}); enable tail correction or raise j_max")]
    SpectralTail { hurst: f64, j_max: usize, relative_tail: f64 },
    #[error("csv error: {0}")]
    Csv(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}

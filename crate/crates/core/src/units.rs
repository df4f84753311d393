use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Real;

/// An entropy or entropy rate, always held in nats.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EntropyValue<T = f64> {
    nats: T,
}

impl<T: Real> EntropyValue<T> {
    pub fn from_nats(nats: T) -> Self {
        Self { nats }
    }

    pub fn from_bits(bits: T) -> Self {
        Self { nats: bits * T::LN_2() }
    }

    pub fn nats(self) -> T {
        self.nats
    }

    pub fn to_bits(self) -> T {
        self.nats / T::LN_2()
    }
}

impl<T: Real> fmt::Display for EntropyValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} nats", self.nats)
    }
}

use serde::{Deserialize, Serialize};

/// Base seed for every random draw in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl Seed {
    /// Seed for replication `replication` of grid point `grid`, see [`mix_seed`].
    pub fn derive(self, grid: u64, replication: u64) -> Seed {
        Seed(mix_seed(self.0, grid, replication))
    }

    pub(crate) fn rng(self) -> rand_chacha::ChaCha8Rng {
        use rand::SeedableRng;
        rand_chacha::ChaCha8Rng::seed_from_u64(self.0)
    }
}

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derived seed `splitmix64(base ^ splitmix64(grid ^ splitmix64(replication)))`.
///
/// Each input passes through a full avalanche before being combined, so
/// neighbouring `(grid, replication)` pairs give unrelated streams.
pub fn mix_seed(base: u64, grid: u64, replication: u64) -> u64 {
    splitmix64(base ^ splitmix64(grid ^ splitmix64(replication)))
}

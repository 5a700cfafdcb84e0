//! Command line, text formats and reporting on top of `sigtau-core`.

pub mod cli;
pub mod text;

use rand::RngCore;
use sigtau_core::{BigUint, LengthTables};

/// A uniformly distributed rank in `[0, n!)` (up to a bias below `2^-64`).
pub fn random_rank(rng: &mut impl RngCore, tables: &LengthTables) -> BigUint {
    let mut bytes = vec![0u8; tables.factorial().to_bytes_le().len() + 8];
    rng.fill_bytes(&mut bytes);
    BigUint::from_bytes_le(&bytes) % tables.factorial()
}

//! Sigma-tau generation of all permutations of `1..=n` as a straight-line
//! program, with ranking, unranking and a Hamiltonian-cycle variant.
//!
//! `σ` rotates a permutation left by one, `τ` swaps its first two entries.
//! The generated order starts at `τ(n, n-1, ..., 1)` and visits every
//! permutation once. Ranks are 0-based and arbitrary precision.
//!
//! ```
//! use sigtau_core::{LengthTables, Permutation};
//!
//! let tables = LengthTables::new(10).unwrap();
//! let p: Permutation = "7 2 4 1 6 5 10 9 8 3".parse().unwrap();
//! let t = sigtau_core::rank(&tables, &p).unwrap();
//! assert_eq!(t.to_string(), "1584702");
//! assert_eq!(sigtau_core::unrank(&tables, &t).unwrap(), p);
//! ```

#![no_std]

extern crate alloc;

mod error;
mod frame;

pub mod cycle;
pub mod cyclic;
pub mod oracle;
pub mod perm;
pub mod rank;
pub mod seed;
pub mod slp;
pub mod structures;
pub mod unrank;

pub use error::Error;
pub use cyclic::CyclicOrder;
pub use perm::{Letter, Permutation};
pub use rank::{rank, Route};
pub use seed::{delta, Seed};
pub use slp::{LengthTables, SlpProgram, Symbol};
pub use unrank::{descend_step, hub_step, unrank, HubStep, Step};

pub use num_bigint::BigUint;

/// Smallest order the path construction supports.
pub const MIN_ORDER: usize = 4;

pub type Result<T> = core::result::Result<T, Error>;

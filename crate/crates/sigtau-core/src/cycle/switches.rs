//! Switches: `Δ_x = (x, n, x+1, ..., x-1)` for `x = 1..=n-1`. On the
//! two-cycle cover each leaves by `σ`; sending it along `τ` instead lands
//! one step after `Δ_{x-1}`.

use alloc::vec::Vec;

use num_bigint::BigUint;

use super::alt::AltPath;
use crate::{CyclicOrder, Permutation, Result, Route};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Switch {
    pub x: u32,
    pub perm: Permutation,
}

impl Switch {
    pub fn new(n: usize, x: u32) -> Switch {
        let order = CyclicOrder::plus(n);
        let mut elems = Vec::with_capacity(n);
        elems.push(x);
        elems.push(n as u32);
        elems.extend((1..n as u64 - 1).map(|k| order.add(x, k)));
        Switch { x, perm: Permutation::from_vec_unchecked(elems) }
    }
}

/// All switches, `Δ_1` first.
pub fn switches(n: usize) -> Vec<Switch> {
    (1..n as u32).map(|x| Switch::new(n, x)).collect()
}

/// Route of the parent-first `Times` seed of `Δ_x`, seed first; empty when
/// that seed is a hub.
pub fn switch_route(n: usize, x: u32) -> Route {
    let n32 = n as u32;
    let ords: Vec<usize> = match x {
        1 => (3..=n - 3).rev().collect(),
        x if x == n32 - 2 => (1..=n - 4).rev().collect(),
        x if x == n32 - 1 => (1..=n - 3).rev().collect(),
        x => (1..=n - 3).rev().filter(|&i| i != x as usize).collect(),
    };
    Route::from_seed_first(ords)
}

/// Alternative-path rank of every switch, `Δ_1` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchTable {
    pub switches: Vec<Switch>,
    pub path_ranks: Vec<BigUint>,
}

impl SwitchTable {
    /// One full ranking per switch.
    pub fn slow(alt: &AltPath) -> Result<Self> {
        let switches = switches(alt.n());
        let path_ranks = switches.iter().map(|s| alt.rank(&s.perm)).collect::<Result<_>>()?;
        Ok(SwitchTable { switches, path_ranks })
    }

    /// Uses the closed-form routes and skips the inversion-vector pass.
    pub fn fast(alt: &AltPath) -> Result<Self> {
        let n = alt.n();
        let switches = switches(n);
        let path_ranks = switches
            .iter()
            .map(|s| {
                let route = switch_route(n, s.x);
                if route.is_empty() {
                    alt.rank(&s.perm)
                } else {
                    alt.rank_with_route(&s.perm, &route)
                }
            })
            .collect::<Result<_>>()?;
        Ok(SwitchTable { switches, path_ranks })
    }

    /// Number of switches on the inner cycle.
    pub fn inner_count(&self, alt: &AltPath) -> usize {
        self.path_ranks.iter().filter(|r| *r >= alt.outer_len()).count()
    }

    pub fn outer_count(&self, alt: &AltPath) -> usize {
        self.path_ranks.len() - self.inner_count(alt)
    }
}

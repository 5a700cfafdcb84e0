//! Position of a permutation in the generated order, without expansion.
//!
//! A permutation either lies on the starting path, in the package of a hub
//! seed, or in the package of a seed `ψ` in some tree hanging off the hub.
//! In the last case its rank is
//! `rank(anchor) + Σ SUM(height, ord)` along the parent chain from the
//! anchor down to `ψ`, plus its offset inside `ψ`'s package. The chain is
//! never built: its length comes from the descending run of `ψ`, and every
//! `ord` on it from one inversion-vector pass.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::frame::package_offset;
use crate::seed::hub_above;
use crate::structures::InversionVector;
use crate::{delta, CyclicOrder, Error, LengthTables, Permutation, Result, Seed};

/// The `ord` values along a parent chain, from a seed up to its anchor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Route {
    ords: Vec<usize>,
}

impl Route {
    /// `ords[0]` is the seed's own `ord`, the last entry the anchor's.
    pub fn from_seed_first(ords: Vec<usize>) -> Self {
        Route { ords }
    }

    /// `ords[0]` is the anchor's `ord`, the last entry the seed's.
    pub fn from_descent(mut ords: Vec<usize>) -> Self {
        ords.reverse();
        Route { ords }
    }

    pub fn seed_first(&self) -> &[usize] {
        &self.ords
    }

    pub fn descent(&self) -> Vec<usize> {
        self.ords.iter().rev().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.ords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ords.is_empty()
    }

    pub fn anchor_ord(&self) -> Option<usize> {
        self.ords.last().copied()
    }
}

/// Route and anchor of a non-hub seed, in `O(n log n)`.
pub fn route_and_anchor(s: &Seed) -> Result<(Route, Seed)> {
    if s.is_hub() {
        return Err(Error::HubSeed);
    }
    let order = s.order();
    let level = s.level();
    let a2 = s.second();
    let iv = InversionVector::under_order(&s.as_slice()[1..], order, a2)?;
    let mut ords = Vec::with_capacity(level);
    let mut z = a2;
    for _ in 0..level {
        let next = order.succ(order.succ(z));
        let smaller = iv.right_smaller(next).ok_or(Error::InvalidSeed("broken descending run"))?;
        ords.push(smaller as usize + 1);
        z = order.succ(z);
    }
    let anchor_ord = *ords.last().ok_or(Error::InvalidSeed("non-hub seed with level 0"))?;
    let anchor = hub_above(s, level).son_unchecked(anchor_ord);
    Ok((Route { ords }, anchor))
}

/// `rank(ψ̃) - rank(anchor~)`: the sum of `SUM(height(parent), ord)` down the
/// chain, starting from an anchor of height `anchor_height`.
pub fn anchor_offset(t: &LengthTables, route: &Route, anchor_height: usize) -> Result<BigUint> {
    Ok(chain_offset(t, route, anchor_height)?.0)
}

/// [`anchor_offset`] and the height of the seed at the bottom of the chain.
pub(crate) fn chain_offset(t: &LengthTables, route: &Route, anchor_height: usize) -> Result<(BigUint, usize)> {
    let n = t.n();
    let mut total = BigUint::default();
    let mut h = anchor_height;
    let ords = route.seed_first();
    for &i in ords.iter().rev().skip(1) {
        if h < 2 {
            return Err(Error::InconsistentRoute("a seed of height 1 has no sons"));
        }
        if i == 0 || i > n - 3 {
            return Err(Error::InconsistentRoute("son index out of range"));
        }
        total += t.sum(h, i);
        h = delta(h, i, n);
    }
    Ok((total, h))
}

/// Offset of `p` from the representative of the non-hub seed `s`, along the
/// traversal of `s`'s bunch. Rotations of the representative other than
/// itself and its `σ`-image are visited by the parent's traversal and are
/// rejected with [`Error::NotInPackage`].
pub fn rank_in_package(t: &LengthTables, p: &Permutation, s: &Seed) -> Result<BigUint> {
    if s.is_hub() {
        return Err(Error::HubSeed);
    }
    if !s.contains(p) || s.n() != t.n() {
        return Err(Error::NotInPackage);
    }
    offset_in_package(t, p, s, s.height())
}

pub(crate) fn offset_in_package(t: &LengthTables, p: &Permutation, s: &Seed, k: usize) -> Result<BigUint> {
    let n = t.n();
    let (rho, l) = p.rotation_from_max();
    let x = s.missing();
    let j = rho.position(x).expect("absent value is in the permutation") + 1;
    if j == 2 {
        return match l {
            1 => Ok(BigUint::default()),
            l if l == n => Ok(t.wlen(k)),
            _ => Err(Error::NotInPackage),
        };
    }
    Ok(package_offset(t, k, j, l))
}

/// Rank of a permutation on the starting path or in a hub seed's package.
pub fn rank_hub(t: &LengthTables, p: &Permutation) -> Result<BigUint> {
    check_order(t, p)?;
    let n = t.n();
    let order = CyclicOrder::plus(n);
    let (rho, l) = p.rotation_from_max();
    let r = rho.as_slice();
    let x = order.succ(r[1]);
    let psi = parent_first_seed(&rho, x, order);
    if !psi.is_hub() {
        return Err(Error::NotHubPermutation);
    }
    let m = (n - 1) as u64;
    let decreasing = r[1..].windows(2).all(|w| w[0] == order.succ(w[1]));
    if decreasing && l == 1 {
        let p2 = r[1] as u64 % m;
        return Ok(BigUint::from(2 * (n as u64 - p2 - 1) - 1));
    }
    if decreasing && l == 2 {
        let p1 = p.as_slice()[0] as u64;
        return Ok(BigUint::from(2 * (n as u64 - p1 - 1)));
    }
    let base = hub_base(t, r[1]);
    let j = rho.position(x).expect("present") + 1;
    if j == n {
        return Ok(base + (n - l) as u64);
    }
    Ok(base + package_offset(t, n - 3, j, l) - t.wlen(n - 4) - 2u32)
}

/// Rank of `p` in the generated order, `0 <= rank < n!`.
pub fn rank(t: &LengthTables, p: &Permutation) -> Result<BigUint> {
    check_order(t, p)?;
    let n = t.n();
    let order = CyclicOrder::plus(n);
    let (rho, l) = p.rotation_from_max();
    let x = order.succ(rho.as_slice()[1]);
    let psi = parent_first_seed(&rho, x, order);
    if psi.is_hub() {
        return rank_hub(t, p);
    }
    let (route, anchor) = route_and_anchor(&psi)?;
    let anchor_ord = route.anchor_ord().expect("routes are non-empty");
    let hub = anchor.parent();
    let anchor_rank = hub_base(t, hub.second()) + t.sum(n - 3, anchor_ord) - t.wlen(n - 4) - 2u32;
    let (chain, k) = chain_offset(t, &route, delta(n - 3, anchor_ord, n))?;
    debug_assert_eq!(k, psi.height());
    let j = rho.position(x).expect("present") + 1;
    Ok(anchor_rank + chain + package_offset(t, k, j, l))
}

/// Rank of the first permutation of the hub package reached with second
/// entry `b`, past the starting path.
fn hub_base(t: &LengthTables, b: u32) -> BigUint {
    let n = t.n();
    let slot = b as u64 % (n as u64 - 1);
    BigUint::from(2 * n as u64 - 2) + t.vtau_len() * slot
}

/// The seed obtained by removing `x` from the rotation `rho` starting with `n`.
pub(crate) fn parent_first_seed(rho: &Permutation, x: u32, order: CyclicOrder) -> Seed {
    Seed::from_vec_unchecked(rho.as_slice().iter().copied().filter(|&v| v != x).collect(), order)
}

pub(crate) fn check_order(t: &LengthTables, p: &Permutation) -> Result<()> {
    if p.n() != t.n() {
        return Err(Error::LengthMismatch { expected: t.n(), found: p.n() });
    }
    Ok(())
}

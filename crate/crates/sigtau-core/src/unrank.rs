//! The permutation at a given rank, without expansion.
//!
//! Past the starting path, the rank picks a hub package and an offset in
//! the hub's frame. Descending through child blocks only needs the block
//! index and the height at each level, so the seed at the bottom is built
//! once, from the anchor and the collected `ord` values.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::frame::{place, rotation, Place, Search};
use crate::seed::hub_seed;
use crate::structures::IndexableList;
use crate::{CyclicOrder, Error, LengthTables, Permutation, Result, Route, Seed};

/// Where a descent through nested frames stops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Descent {
    /// Son indices taken, from the top seed downwards.
    pub ords: Vec<usize>,
    pub stop: Stop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    /// The representative of the bottom seed.
    Start,
    /// `σ` of the representative.
    End,
    Rotation { block: usize, shift: usize },
}

/// Follows `offset` (`0 <= offset <= |W_k|`) down from a height-`k` frame.
pub(crate) fn descend(t: &LengthTables, k: usize, offset: &BigUint, search: Search) -> Descent {
    let mut ords = Vec::new();
    if *offset == BigUint::default() {
        return Descent { ords, stop: Stop::Start };
    }
    if *offset == t.wlen(k) {
        return Descent { ords, stop: Stop::End };
    }
    let mut k = k;
    let mut offset = offset.clone();
    loop {
        match place(t, k, &offset, search) {
            Place::Rotation { block, shift } => return Descent { ords, stop: Stop::Rotation { block, shift } },
            Place::Child { ord, height, offset: inner } => {
                ords.push(ord);
                k = height;
                offset = inner;
            }
        }
    }
}

/// One level of descent inside a height-`k` frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// `offset` falls in the bunch of son `ord`, at `child_offset` from the
    /// son's representative.
    Child { ord: usize, height: usize, child_offset: BigUint },
    /// `offset` is a permutation of the frame's own package.
    InPackage,
}

/// Where `offset` (`0 <= offset <= |W_k|`) falls in a height-`k` frame:
/// uniform blocks by division, the rest through the prefix-sum locator.
pub fn descend_step(t: &LengthTables, k: usize, offset: &BigUint) -> Step {
    if *offset == BigUint::default() || *offset >= t.wlen(k) {
        return Step::InPackage;
    }
    match place(t, k, offset, Search::Buckets) {
        Place::Rotation { .. } => Step::InPackage,
        Place::Child { ord, height, offset } => Step::Child { ord, height, child_offset: offset },
    }
}

/// Result of locating a rank among the hub packages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HubStep {
    /// On the starting path or in a hub package.
    Permutation(Permutation),
    /// Inside the bunch of `anchor`, `offset` letters after its
    /// representative.
    Anchor { anchor: Seed, height: usize, offset: BigUint },
}

/// Resolves ranks on the starting path and in hub packages directly;
/// otherwise finds the anchor whose bunch holds the rank.
pub fn hub_step(t: &LengthTables, r: &BigUint) -> Result<HubStep> {
    let n = t.n();
    if let Some(p) = starting_path(t, r)? {
        return Ok(HubStep::Permutation(p));
    }
    let (hub, offset) = hub_frame(t, r);
    Ok(match place(t, n - 3, &offset, Search::Buckets) {
        Place::Rotation { block, shift } => HubStep::Permutation(rotation(&hub, block, shift)),
        Place::Child { ord, height, offset } => HubStep::Anchor { anchor: hub.son_unchecked(ord), height, offset },
    })
}

/// The seed at the bottom of a descent from `top`.
pub(crate) fn bottom_seed(top: &Seed, d: &Descent) -> Result<Seed> {
    match d.ords.first() {
        None => Ok(top.clone()),
        Some(&first) => {
            let anchor = top.son_unchecked(first);
            seed_from_route(&anchor, &Route::from_descent(d.ords.clone()))
        }
    }
}

/// Builds the seed reached from `top` by a descent, and the permutation
/// where it stops.
pub(crate) fn materialize(top: &Seed, d: &Descent) -> Result<Permutation> {
    let seed = bottom_seed(top, d)?;
    Ok(match d.stop {
        Stop::Start => seed.representative(),
        Stop::End => seed.representative().sigma(),
        Stop::Rotation { block, shift } => rotation(&seed, block, shift),
    })
}

/// The seed at the end of `route` below `anchor`. The route lists the
/// anchor's own `ord` last and is consumed from the second-to-last entry
/// down; each step drops the second entry and re-inserts its successor
/// counted from the end, which an indexable list does in `O(log n)`.
pub fn seed_from_route(anchor: &Seed, route: &Route) -> Result<Seed> {
    let n = anchor.n();
    let ords = route.seed_first();
    if ords.is_empty() {
        return Err(Error::InconsistentRoute("empty route"));
    }
    let m = ords.len() - 1;
    let tail = &anchor.as_slice()[1..];
    if m >= tail.len() {
        return Err(Error::InconsistentRoute("route longer than the seed"));
    }
    let order = anchor.order();
    let mut list = IndexableList::new(tail[m..].iter().copied());
    for s in 1..=m {
        let k = ords[m - s];
        if k == 0 || k > n - 3 {
            return Err(Error::InconsistentRoute("son index out of range"));
        }
        list.insert_from_end(order.succ(tail[s - 1]), k)
            .map_err(|_| Error::InconsistentRoute("son index past the front"))?;
    }
    let mut elems = Vec::with_capacity(n - 1);
    elems.push(n as u32);
    elems.extend(list.to_vec());
    Seed::with_order(elems, order).map_err(|_| Error::InconsistentRoute("route does not lead to a seed"))
}

/// The permutation `offset` letters into the traversal of a non-hub seed,
/// `0 <= offset <= |W_height|`.
pub fn perm_in_package(t: &LengthTables, s: &Seed, offset: &BigUint) -> Result<Permutation> {
    if s.is_hub() {
        return Err(Error::HubSeed);
    }
    let k = s.height();
    if *offset > t.wlen(k) {
        return Err(Error::RankOutOfRange { rank: offset.clone(), n: t.n() });
    }
    materialize(s, &descend(t, k, offset, Search::Buckets))
}

/// The permutation of rank `r`, `0 <= r < n!`.
pub fn unrank(t: &LengthTables, r: &BigUint) -> Result<Permutation> {
    unrank_with(t, r, Search::Buckets)
}

pub(crate) fn unrank_with(t: &LengthTables, r: &BigUint, search: Search) -> Result<Permutation> {
    if let Some(p) = starting_path(t, r)? {
        return Ok(p);
    }
    let (hub, offset) = hub_frame(t, r);
    materialize(&hub, &descend(t, t.n() - 3, &offset, search))
}

/// The first `2n - 2` permutations alternate `σ`, `τ` from `τ(n, ..., 1)`.
fn starting_path(t: &LengthTables, r: &BigUint) -> Result<Option<Permutation>> {
    let n = t.n();
    if r >= t.factorial() {
        return Err(Error::RankOutOfRange { rank: r.clone(), n });
    }
    let Some(small) = r.to_u64().filter(|&v| v < 2 * n as u64 - 2) else {
        return Ok(None);
    };
    let rotated = Permutation::decreasing(n - 1).rotate_left(small.div_ceil(2) as usize).into_vec();
    let mut elems = Vec::with_capacity(n);
    if small % 2 == 1 {
        elems.push(n as u32);
        elems.extend(rotated);
    } else {
        elems.push(rotated[0]);
        elems.push(n as u32);
        elems.extend_from_slice(&rotated[1..]);
    }
    Ok(Some(Permutation::from_vec_unchecked(elems)))
}

/// The hub seed whose package holds rank `r >= 2n - 2`, and the offset of
/// `r` in that hub's height-`(n-3)` frame.
fn hub_frame(t: &LengthTables, r: &BigUint) -> (Seed, BigUint) {
    let n = t.n();
    let (slot, inner) = (r - (2 * n as u64 - 2)).div_rem(t.vtau_len());
    let slot = slot.to_u32().expect("fewer than n slots");
    let b = if slot == 0 { n as u32 - 1 } else { slot };
    (hub_seed(CyclicOrder::plus(n), b), inner + t.wlen(n - 4) + 2u32)
}

//! Positions inside the traversal `W_k` of a height-`k` seed.
//!
//! Starting from the seed's representative (offset 0), `W_k` runs through
//! blocks `i = 1..=n-2`. Block `i` starts at offset `SUM(k,i) - i` with the
//! absent value inserted `i-1` places from the end, visits `i+1` rotations,
//! the bunch of son `i` (`|W_{Δ(k,i)}|` letters), and `n-2-i` more
//! rotations. The traversal ends at offset `|W_k|` on `σ` of the
//! representative.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::{delta, LengthTables, Permutation, Seed};

pub(crate) enum Place {
    /// `σ^shift` of the block's start permutation.
    Rotation { block: usize, shift: usize },
    Child { ord: usize, height: usize, offset: BigUint },
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Search {
    Buckets,
    #[cfg_attr(not(test), allow(dead_code))]
    Binary,
}

/// Block containing `offset`, `1 <= offset < |W_k|`, and the offset inside it.
pub(crate) fn locate(t: &LengthTables, k: usize, offset: &BigUint, search: Search) -> (usize, BigUint) {
    let n = t.n();
    let stride = t.wlen(k - 1) + (n as u64 - 1);
    let uniform_end = BigUint::from(1u32) + &stride * (n - 1 - k) as u64;
    if *offset < uniform_end {
        let (q, d) = (offset - 1u32).div_rem(&stride);
        return (1 + q.to_usize().expect("block index is small"), d);
    }
    // tail blocks i = n-k..=n-2 hold W_u for u = n-2-i, and end exactly
    // b_u letters before the end of W_k
    let s = t.wlen(k) - offset;
    let b = t.prefixes();
    let u = if s <= b[0] {
        0
    } else {
        let t1 = &s - 1u32;
        let j = match search {
            Search::Buckets => t.locator().locate(&t1),
            Search::Binary => t.locator().locate_binary(&t1),
        };
        j.expect("value lies inside the prefix table") + 1
    };
    (n - 2 - u, &b[u] - s)
}

pub(crate) fn place(t: &LengthTables, k: usize, offset: &BigUint, search: Search) -> Place {
    let n = t.n();
    let (i, d) = locate(t, k, offset, search);
    let w = t.wlen(delta(k, i, n));
    if d <= BigUint::from(i) {
        let d = d.to_usize().expect("small");
        return Place::Rotation { block: i, shift: n - i + d };
    }
    let i_w = &w + i;
    if d >= i_w {
        let extra = (d - i_w).to_usize().expect("small");
        return Place::Rotation { block: i, shift: 1 + extra };
    }
    Place::Child { ord: i, height: delta(k, i, n), offset: d - i }
}

pub(crate) fn rotation(seed: &Seed, block: usize, shift: usize) -> Permutation {
    seed.block_start(block).rotate_left(shift)
}

/// Offset from the representative of a height-`k` seed to a package
/// permutation, given the 1-based position `j >= 3` of the absent value in
/// the rotation starting with `n`, and the 1-based position `l` of `n`.
pub(crate) fn package_offset(t: &LengthTables, k: usize, j: usize, l: usize) -> BigUint {
    let n = t.n();
    let i = n - j + 1;
    let s = t.sum(k, i);
    if l <= n - j + 2 {
        s - (l - 1) as u64
    } else {
        s + t.wlen(delta(k, i, n)) + (n - l) as u64
    }
}

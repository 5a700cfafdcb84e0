//! Seeds and navigation in the seed tree.
//!
//! A seed is an `(n-1)`-tuple `(n, a2, ..., a_{n-1})` of distinct values
//! whose single absent value is `a2 + 1` under its cyclic order. Inserting
//! the absent value anywhere after `n` and rotating gives the `n(n-1)`
//! permutations of the seed's package.

use alloc::vec::Vec;
use core::fmt;

use crate::{CyclicOrder, Error, Permutation, Result};

/// Height of the `i`-th son of a height-`k` seed: `min(k-1, n-2-i)`.
pub fn delta(k: usize, i: usize, n: usize) -> usize {
    debug_assert!(k >= 1 && i >= 1 && i <= n - 2);
    core::cmp::min(k - 1, n - 2 - i)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    elems: Vec<u32>,
    order: CyclicOrder,
}

impl Seed {
    /// A seed under the `Plus` order.
    pub fn new(elems: Vec<u32>) -> Result<Self> {
        let n = elems.len() + 1;
        Self::with_order(elems, CyclicOrder::plus(n))
    }

    pub fn with_order(elems: Vec<u32>, order: CyclicOrder) -> Result<Self> {
        let n = elems.len() + 1;
        let min = match order {
            CyclicOrder::Plus { .. } => crate::MIN_ORDER,
            CyclicOrder::Times { .. } => crate::MIN_ORDER + 1,
        };
        if n < min {
            return Err(Error::OrderTooSmall { n, min });
        }
        if order.n() != n {
            return Err(Error::LengthMismatch { expected: order.n() - 1, found: elems.len() });
        }
        if elems[0] as usize != n {
            return Err(Error::InvalidSeed("first entry must be n"));
        }
        let mut seen = alloc::vec![false; n + 1];
        for &v in &elems {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidSeed("value out of range"));
            }
            if seen[v as usize] {
                return Err(Error::InvalidSeed("repeated value"));
            }
            seen[v as usize] = true;
        }
        if seen[order.succ(elems[1]) as usize] {
            return Err(Error::InvalidSeed("absent value must follow the second entry"));
        }
        Ok(Seed { elems, order })
    }

    pub(crate) fn from_vec_unchecked(elems: Vec<u32>, order: CyclicOrder) -> Self {
        debug_assert!(Seed::with_order(elems.clone(), order).is_ok(), "{:?}", elems);
        Seed { elems, order }
    }

    pub fn n(&self) -> usize {
        self.elems.len() + 1
    }

    pub fn order(&self) -> CyclicOrder {
        self.order
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.elems
    }

    /// The entry after `n`.
    pub fn second(&self) -> u32 {
        self.elems[1]
    }

    /// The absent value, `a2 + 1`.
    pub fn missing(&self) -> u32 {
        self.order.succ(self.elems[1])
    }

    /// Length of the longest prefix `a2, a3, ...` descending by one step,
    /// capped at `n-3`.
    pub fn height(&self) -> usize {
        let a = &self.elems[1..];
        let mut k = 1;
        while k < a.len() && a[k - 1] == self.order.succ(a[k]) {
            k += 1;
        }
        k.min(self.n() - 3)
    }

    pub fn is_hub(&self) -> bool {
        let a = &self.elems[1..];
        match self.order {
            CyclicOrder::Plus { .. } => a.windows(2).all(|w| w[0] == self.order.succ(w[1])),
            CyclicOrder::Times { .. } => {
                let (last, body) = a.split_last().expect("seeds have at least three entries");
                *last == 1 && body.windows(2).all(|w| w[0] == self.order.succ(w[1]))
            }
        }
    }

    /// `(n, x, a2, ..., a_{n-1})` with `x` the absent value.
    pub fn representative(&self) -> Permutation {
        self.block_start(self.n() - 1)
    }

    /// The `i`-th connecting permutation, `1 <= i <= n-1`: the absent value
    /// followed by the seed rotated right by `i-1`.
    pub fn connecting(&self, i: usize) -> Result<Permutation> {
        let n = self.n();
        if i == 0 || i > n - 1 {
            return Err(Error::PositionOutOfRange { k: i, max: n - 1 });
        }
        let mut elems = Vec::with_capacity(n);
        elems.push(self.missing());
        let len = self.elems.len();
        let shift = (i - 1) % len;
        elems.extend_from_slice(&self.elems[len - shift..]);
        elems.extend_from_slice(&self.elems[..len - shift]);
        Ok(Permutation::from_vec_unchecked(elems))
    }

    /// The representative and the `n-1` connecting permutations.
    pub fn seed_reps(&self) -> (Permutation, Vec<Permutation>) {
        let reps = (1..self.n()).map(|i| self.connecting(i).expect("index in range")).collect();
        (self.representative(), reps)
    }

    /// `(n, a2, ..., a_{n-i}, x, a_{n-i+1}, ..., a_{n-1})`: the absent value
    /// inserted with `i-1` entries after it, `1 <= i <= n-1`.
    pub fn block_start(&self, i: usize) -> Permutation {
        let n = self.n();
        debug_assert!(i >= 1 && i < n);
        let mut elems = Vec::with_capacity(n);
        elems.extend_from_slice(&self.elems[..n - i]);
        elems.push(self.missing());
        elems.extend_from_slice(&self.elems[n - i..]);
        Permutation::from_vec_unchecked(elems)
    }

    /// Insert `a2 + 1` after `n` and drop `a2 + 2`.
    pub fn parent(&self) -> Seed {
        let y = self.order.succ(self.elems[1]);
        let x = self.order.succ(y);
        let mut elems = Vec::with_capacity(self.elems.len());
        elems.push(self.elems[0]);
        elems.push(y);
        elems.extend(self.elems[1..].iter().copied().filter(|&v| v != x));
        Seed::from_vec_unchecked(elems, self.order)
    }

    /// The `i`-th son, `1 <= i <= n-3`: drop `a2` and insert the absent value
    /// with `i-1` entries after it.
    pub fn son(&self, i: usize) -> Result<Seed> {
        let n = self.n();
        if i == 0 || i > n - 3 {
            return Err(Error::SonIndex { index: i, max: n - 3 });
        }
        if self.height() < 2 {
            return Err(Error::NoSons);
        }
        Ok(self.son_unchecked(i))
    }

    pub(crate) fn son_unchecked(&self, i: usize) -> Seed {
        let mut elems = Vec::with_capacity(self.elems.len());
        elems.push(self.elems[0]);
        elems.extend_from_slice(&self.elems[2..]);
        let at = elems.len() - (i - 1);
        elems.insert(at, self.missing());
        Seed::from_vec_unchecked(elems, self.order)
    }

    /// Which son of its parent this seed is: the position of `a2 + 2`,
    /// counted from the end.
    pub fn ord(&self) -> usize {
        let y = self.order.succ(self.order.succ(self.elems[1]));
        let at = self.elems.iter().position(|&v| v == y).expect("a2 + 2 is present");
        self.elems.len() - at
    }

    /// The values `a2, a2-1, a2-2, ...` for as long as each next one appears
    /// further right. Under `Times` the chain stops at the value `1`, and
    /// only the part left of `1` is kept.
    pub fn dec_seq(&self) -> Vec<u32> {
        let n = self.n();
        let mut pos = alloc::vec![usize::MAX; n + 1];
        for (i, &v) in self.elems.iter().enumerate() {
            pos[v as usize] = i;
        }
        let a2 = self.elems[1];
        let mut out = Vec::new();
        match self.order {
            CyclicOrder::Plus { .. } => {
                let mut v = a2;
                out.push(v);
                loop {
                    let w = self.order.pred(v);
                    if pos[w as usize] == usize::MAX || pos[w as usize] < pos[v as usize] {
                        break;
                    }
                    out.push(w);
                    v = w;
                    if out.len() == n - 2 {
                        break;
                    }
                }
            }
            CyclicOrder::Times { .. } => {
                if a2 == 1 {
                    return out;
                }
                let mut v = a2;
                while pos[v as usize] < pos[1] && out.len() < n - 2 {
                    out.push(v);
                    let w = self.order.pred(v);
                    if pos[w as usize] == usize::MAX || pos[w as usize] < pos[v as usize] {
                        break;
                    }
                    v = w;
                }
            }
        }
        out
    }

    /// Number of parent steps to the hub; `1` for sons of hub seeds and `0`
    /// for hub seeds.
    pub fn level(&self) -> usize {
        let n = self.n();
        match self.order {
            CyclicOrder::Plus { .. } => n - 2 - self.dec_seq().len(),
            CyclicOrder::Times { .. } => n - 3 - self.dec_seq().len(),
        }
    }

    /// The hub seed reached by following parents; computed without walking.
    pub fn hub(&self) -> Result<Seed> {
        if self.is_hub() {
            return Err(Error::HubSeed);
        }
        Ok(hub_above(self, self.level()))
    }

    /// The last non-hub seed on the way to the hub.
    pub fn anchor(&self) -> Result<Seed> {
        Ok(crate::rank::route_and_anchor(self)?.1)
    }

    /// Whether `p` belongs to this seed's package.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.n() != self.n() {
            return false;
        }
        let (rho, _) = p.rotation_from_max();
        let x = self.missing();
        rho.as_slice().iter().copied().filter(|&v| v != x).eq(self.elems.iter().copied())
    }

    /// All `n(n-1)` permutations of the package.
    pub fn perms(&self) -> Vec<Permutation> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * (n - 1));
        for i in 1..n {
            let base = self.block_start(i);
            for s in 0..n {
                out.push(base.rotate_left(s));
            }
        }
        out
    }
}

impl fmt::Debug for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// The hub seed whose second entry is `top`: `(n, top, top-1, ...)`, ending
/// in `1` under `Times`.
pub fn hub_seed(order: CyclicOrder, top: u32) -> Seed {
    let n = order.n();
    let mut elems = Vec::with_capacity(n - 1);
    elems.push(n as u32);
    match order {
        CyclicOrder::Plus { .. } => {
            elems.extend((0..n as u64 - 2).map(|i| order.sub(top, i)));
        }
        CyclicOrder::Times { .. } => {
            elems.extend((0..n as u64 - 3).map(|i| order.sub(top, i)));
            elems.push(1);
        }
    }
    Seed::from_vec_unchecked(elems, order)
}

pub(crate) fn hub_above(seed: &Seed, level: usize) -> Seed {
    hub_seed(seed.order, seed.order.add(seed.second(), level as u64))
}

/// All hub seeds, in the order their packages are reached: for `Plus` the
/// order of the main path (second entries `n-1, 1, 2, ..., n-2`), for
/// `Times` the order of the outer cycle (`n-2, n-3, ..., 2, n-1`).
pub fn hub_seeds(order: CyclicOrder) -> Vec<Seed> {
    let n = order.n() as u32;
    match order {
        CyclicOrder::Plus { .. } => {
            core::iter::once(n - 1).chain(1..n - 1).map(|b| hub_seed(order, b)).collect()
        }
        CyclicOrder::Times { .. } => {
            (0..n as u64 - 2).map(|b| hub_seed(order, order.sub(n - 2, b))).collect()
        }
    }
}

/// The seeds whose packages contain `p`; when there are two, the parent
/// comes first.
pub fn seeds_of(p: &Permutation, order: CyclicOrder) -> Result<Vec<Seed>> {
    let n = p.n();
    if n != order.n() {
        return Err(Error::LengthMismatch { expected: order.n(), found: n });
    }
    let (rho, _) = p.rotation_from_max();
    let r = rho.as_slice();
    let mut out = Vec::with_capacity(2);
    let x = order.succ(r[1]);
    out.push(Seed::from_vec_unchecked(r.iter().copied().filter(|&v| v != x).collect(), order));
    if r[1] == order.succ(r[2]) {
        let x = r[1];
        out.push(Seed::from_vec_unchecked(r.iter().copied().filter(|&v| v != x).collect(), order));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(v: &[u32]) -> Seed {
        Seed::new(v.to_vec()).unwrap()
    }

    fn p(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn missing_values() {
        assert_eq!(s(&[4, 1, 3]).missing(), 2);
        assert_eq!(s(&[9, 4, 3, 2, 6, 7, 8, 1]).missing(), 5);
        assert_eq!(s(&[10, 6, 5, 9, 8, 4, 3, 1, 2]).missing(), 7);
        assert!(Seed::new(vec![4, 1, 2]).is_err());
        assert!(Seed::new(vec![3, 1, 2, 4]).is_err());
    }

    #[test]
    fn heights() {
        assert_eq!(s(&[9, 4, 3, 2, 6, 7, 8, 1]).height(), 3);
        assert_eq!(s(&[9, 5, 4, 3, 2, 7, 8, 1]).height(), 4);
        assert_eq!(s(&[10, 3, 2, 1, 9, 8, 7, 6, 5]).height(), 7);
    }

    #[test]
    fn representatives() {
        let psi = s(&[5, 3, 2, 1]);
        let (rep, conn) = psi.seed_reps();
        assert_eq!(rep, p(&[5, 4, 3, 2, 1]));
        assert_eq!(conn[1], p(&[4, 1, 5, 3, 2]));
        assert_eq!(conn[3], p(&[4, 3, 2, 1, 5]));
        assert_eq!(conn[3], rep.sigma());
        for w in conn.windows(2) {
            assert_eq!(w[1], w[0].rotate_left(4).tau());
        }
    }

    #[test]
    fn seeds_of_examples() {
        assert_eq!(seeds_of(&p(&[4, 2, 1, 3]), CyclicOrder::plus(4)).unwrap(), vec![s(&[4, 2, 1]), s(&[4, 1, 3])]);
        let both = seeds_of(&p(&[9, 6, 5, 4, 3, 2, 7, 8, 1]), CyclicOrder::plus(9)).unwrap();
        assert!(both.contains(&s(&[9, 5, 4, 3, 2, 7, 8, 1])));
        assert_eq!(both[0], both[1].parent());
    }

    #[test]
    fn navigation_examples() {
        assert_eq!(s(&[9, 4, 3, 2, 6, 7, 8, 1]).parent(), s(&[9, 5, 4, 3, 2, 7, 8, 1]));
        assert_eq!(s(&[10, 6, 5, 9, 8, 4, 3, 1, 2]).ord(), 5);
        let psi = s(&[9, 6, 1, 5, 4, 2, 3, 8]);
        assert_eq!(psi.dec_seq(), vec![6, 5, 4, 3]);
        assert_eq!(psi.level(), 3);
        assert_eq!(s(&[10, 9, 8, 3, 7, 2, 4, 6, 5]).hub().unwrap(), s(&[10, 3, 2, 1, 9, 8, 7, 6, 5]));
        assert_eq!(psi.anchor().unwrap(), s(&[9, 8, 7, 6, 5, 4, 2, 3]));
        assert_eq!(s(&[6, 5, 4, 3, 2]).level(), 0);
        assert_eq!(s(&[6, 5, 4, 3, 2]).hub(), Err(Error::HubSeed));
    }

    #[test]
    fn hub_listing() {
        let hubs = hub_seeds(CyclicOrder::plus(6));
        let mut expected = vec![
            s(&[6, 5, 4, 3, 2]),
            s(&[6, 4, 3, 2, 1]),
            s(&[6, 3, 2, 1, 5]),
            s(&[6, 2, 1, 5, 4]),
            s(&[6, 1, 5, 4, 3]),
        ];
        assert_eq!(hubs[0], expected[0]);
        let mut sorted = hubs.clone();
        sorted.sort_by(|a, b| a.as_slice().cmp(b.as_slice()));
        expected.sort_by(|a, b| a.as_slice().cmp(b.as_slice()));
        assert_eq!(sorted, expected);
        assert!(hubs.iter().all(Seed::is_hub));
        let times = hub_seeds(CyclicOrder::times(6));
        assert_eq!(times[0].as_slice(), &[6, 4, 3, 2, 1]);
        assert_eq!(times[3].as_slice(), &[6, 5, 4, 3, 1]);
        assert!(times.iter().all(Seed::is_hub));
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(2, 8, 10), 0);
        assert_eq!(delta(7, 3, 10), 5);
        assert_eq!(delta(5, 5, 10), 3);
    }

    #[test]
    fn son_errors() {
        let hub = s(&[6, 5, 4, 3, 2]);
        assert!(matches!(hub.son(0), Err(Error::SonIndex { .. })));
        assert!(matches!(hub.son(4), Err(Error::SonIndex { .. })));
        assert_eq!(s(&[6, 1, 3, 4, 5]).son(1), Err(Error::NoSons));
    }
}

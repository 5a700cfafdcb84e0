//! The two cyclic successor functions on seed elements.
//!
//! `Plus` cycles through `1..=n-1` (so `(n-1)+1 = 1`). `Times` cycles through
//! `2..=n-1` and lets `1` enter the cycle at `2`: `1 -> 2`, `(n-1) -> 2`, and
//! the predecessor of `2` is `n-1`. The element `1` has no predecessor there.

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CyclicOrder {
    Plus { n: u32 },
    Times { n: u32 },
}

impl CyclicOrder {
    pub fn plus(n: usize) -> Self {
        CyclicOrder::Plus { n: n as u32 }
    }

    pub fn times(n: usize) -> Self {
        CyclicOrder::Times { n: n as u32 }
    }

    pub fn n(self) -> usize {
        match self {
            CyclicOrder::Plus { n } | CyclicOrder::Times { n } => n as usize,
        }
    }

    /// Length of the cycle: `n-1` or `n-2`.
    pub fn modulus(self) -> u32 {
        match self {
            CyclicOrder::Plus { n } => n - 1,
            CyclicOrder::Times { n } => n - 2,
        }
    }

    pub fn in_domain(self, a: u32) -> bool {
        match self {
            CyclicOrder::Plus { n } | CyclicOrder::Times { n } => a >= 1 && a < n,
        }
    }

    /// Successor; `a` must be in the domain.
    pub fn succ(self, a: u32) -> u32 {
        self.add(a, 1)
    }

    /// Predecessor; `a` must be in the domain (and not `1` for `Times`).
    pub fn pred(self, a: u32) -> u32 {
        self.sub(a, 1)
    }

    /// `k`-fold successor.
    pub fn add(self, a: u32, k: u64) -> u32 {
        debug_assert!(self.in_domain(a));
        match self {
            CyclicOrder::Plus { n } => {
                let m = (n - 1) as u64;
                ((a as u64 - 1 + k % m) % m) as u32 + 1
            }
            CyclicOrder::Times { n } => {
                if k == 0 {
                    return a;
                }
                let (a, k) = if a == 1 { (2, k - 1) } else { (a, k) };
                let m = (n - 2) as u64;
                ((a as u64 - 2 + k % m) % m) as u32 + 2
            }
        }
    }

    /// `k`-fold predecessor.
    pub fn sub(self, a: u32, k: u64) -> u32 {
        debug_assert!(self.in_domain(a));
        match self {
            CyclicOrder::Plus { n } => {
                let m = (n - 1) as u64;
                ((a as u64 - 1 + m - k % m) % m) as u32 + 1
            }
            CyclicOrder::Times { n } => {
                debug_assert!(a != 1 || k == 0);
                if k == 0 {
                    return a;
                }
                let m = (n - 2) as u64;
                ((a as u64 - 2 + m - k % m) % m) as u32 + 2
            }
        }
    }

    pub fn try_succ(self, a: u32) -> Result<u32> {
        self.try_add(a, 1)
    }

    pub fn try_pred(self, a: u32) -> Result<u32> {
        self.try_sub(a, 1)
    }

    pub fn try_add(self, a: u32, k: u64) -> Result<u32> {
        if !self.in_domain(a) {
            return Err(Error::OutOfDomain { element: a });
        }
        Ok(self.add(a, k))
    }

    pub fn try_sub(self, a: u32, k: u64) -> Result<u32> {
        if !self.in_domain(a) || (k > 0 && a == 1 && matches!(self, CyclicOrder::Times { .. })) {
            return Err(Error::OutOfDomain { element: a });
        }
        Ok(self.sub(a, k))
    }

    /// Rank of `v` in the linear order `anchor ≺ anchor-1 ≺ anchor-2 ≺ ...`
    /// (predecessors under this cyclic order). For `Times`, `1` is the
    /// minimum. Values lie in `0..=modulus`.
    pub fn descending_key(self, anchor: u32, v: u32) -> usize {
        match self {
            CyclicOrder::Plus { n } => {
                let m = n - 1;
                ((anchor + m - v) % m) as usize
            }
            CyclicOrder::Times { n } => {
                if v == 1 {
                    return 0;
                }
                let m = n - 2;
                let top = if anchor == 1 { n - 1 } else { anchor };
                1 + ((top + m - v) % m) as usize
            }
        }
    }
}

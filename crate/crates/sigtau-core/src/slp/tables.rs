use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::structures::StableLocator;
use crate::{Error, Result, MIN_ORDER};

/// Expanded lengths of the grammar's nonterminals, in arbitrary precision.
///
/// Only the prefix sums `b_k = Σ_{i<=k} (|W_i| + n - 1)` are stored, for
/// `k = 0..=n-3`; `|W_k|` is recovered by difference. Building takes
/// `O(n)` big-number operations.
#[derive(Clone, Debug)]
pub struct LengthTables {
    n: usize,
    prefix: StableLocator,
    factorial: BigUint,
    vtau: BigUint,
}

impl LengthTables {
    pub fn new(n: usize) -> Result<Self> {
        if n < MIN_ORDER {
            return Err(Error::OrderTooSmall { n, min: MIN_ORDER });
        }
        let n1 = (n - 1) as u64;
        let base = BigUint::from(1 + (n as u64 - 2) * n1);
        let mut prefix: Vec<BigUint> = Vec::with_capacity(n - 2);
        prefix.push(BigUint::from(n as u64));
        let mut w_prev = BigUint::one();
        for k in 1..=n - 3 {
            // |W_k| = 1 + (n-2)(n-1) + (n-1-k)|W_{k-1}| + Σ_{u<=k-2} |W_u|
            let mut w = &base + &w_prev * (n - 1 - k) as u64;
            if k >= 2 {
                w += &prefix[k - 2] - BigUint::from((k as u64 - 1) * n1);
            }
            let b = &prefix[k - 1] + &w + n1;
            prefix.push(b);
            w_prev = w;
        }
        let prefix = StableLocator::new(prefix, n as u64)?;
        let mut factorial = BigUint::one();
        for i in 2..=n as u64 {
            factorial *= i;
        }
        let vtau = &factorial / (n as u64 - 1) - 2u32;
        Ok(LengthTables { n, prefix, factorial, vtau })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|W_k|` for `0 <= k <= n-3`.
    pub fn wlen(&self, k: usize) -> BigUint {
        let b = self.prefix.values();
        let w = &b[k] - (self.n as u64 - 1);
        if k == 0 {
            w
        } else {
            w - &b[k - 1]
        }
    }

    /// `b_k`.
    pub fn prefix(&self, k: usize) -> &BigUint {
        &self.prefix.values()[k]
    }

    pub fn prefixes(&self) -> &[BigUint] {
        self.prefix.values()
    }

    pub(crate) fn locator(&self) -> &StableLocator {
        &self.prefix
    }

    /// `Σ_{lo<=u<=hi} |W_u|`, zero when the range is empty.
    pub(crate) fn wsum(&self, lo: usize, hi: usize) -> BigUint {
        if lo > hi {
            return BigUint::default();
        }
        let b = self.prefix.values();
        let mut s = b[hi].clone() - ((hi - lo + 1) as u64 * (self.n as u64 - 1));
        if lo > 0 {
            s -= &b[lo - 1];
        }
        s
    }

    /// Offset from a height-`k` seed's representative to the representative
    /// of its `j`-th son: `1 + j + Σ_{i<j} (n - 1 + |W_{Δ(k,i)}|)`.
    pub fn sum_kj(&self, k: usize, j: usize) -> Result<BigUint> {
        if k == 0 || k > self.n - 3 {
            return Err(Error::PositionOutOfRange { k, max: self.n - 3 });
        }
        if j == 0 || j > self.n - 1 {
            return Err(Error::PositionOutOfRange { k: j, max: self.n - 1 });
        }
        Ok(self.sum(k, j))
    }

    pub(crate) fn sum(&self, k: usize, j: usize) -> BigUint {
        let n = self.n;
        let uniform = (j - 1).min(n - 1 - k);
        let mut s = BigUint::from((1 + j + (j - 1) * (n - 1)) as u64);
        s += self.wlen(k - 1) * uniform as u64;
        if j > n - k {
            s += self.wsum(n - 1 - j, k - 2);
        }
        s
    }

    /// `|V|`.
    pub fn vlen(&self) -> BigUint {
        &self.vtau - 1u32
    }

    /// `|V τ| = n(n-2)! - 2`, the stride between consecutive hub packages.
    pub fn vtau_len(&self) -> &BigUint {
        &self.vtau
    }

    /// `|SEQ| = n! - 1`.
    pub fn seqlen(&self) -> BigUint {
        &self.factorial - 1u32
    }

    pub fn factorial(&self) -> &BigUint {
        &self.factorial
    }

    /// `|U|`, the inner-cycle block of the cycle variant; needs `n >= 5`.
    pub fn ulen(&self) -> Option<BigUint> {
        let n = self.n;
        if n < 5 {
            return None;
        }
        let fixed = (n - 3) + (n - 5) * (n - 1) + n;
        Some(BigUint::from(fixed as u64) + self.wsum(1, n.saturating_sub(5)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta;

    fn naive_wlens(n: usize) -> Vec<u128> {
        let mut w = alloc::vec![1u128];
        for k in 1..=n - 3 {
            let s: u128 = (1..=n - 2).map(|i| w[delta(k, i, n)]).sum();
            w.push(1 + ((n - 2) * (n - 1)) as u128 + s);
        }
        w
    }

    #[test]
    fn recurrence_matches_definition() {
        for n in 4..=20 {
            let t = LengthTables::new(n).unwrap();
            for (k, w) in naive_wlens(n).into_iter().enumerate() {
                assert_eq!(t.wlen(k), BigUint::from(w), "n={} k={}", n, k);
            }
            assert_eq!(t.wlen(n - 3) - t.wlen(n - 4) - 2u32, *t.vtau_len(), "n={}", n);
        }
    }

    #[test]
    fn known_values() {
        let t = LengthTables::new(10).unwrap();
        assert_eq!(t.wlen(1), BigUint::from(81u32));
        assert_eq!(t.sum_kj(3, 4).unwrap(), BigUint::from(1955u32));
        assert_eq!(t.sum_kj(5, 5).unwrap(), BigUint::from(83246u32));
        assert_eq!(t.sum_kj(7, 3).unwrap() - t.wlen(6) - 2u32, BigUint::from(289621u32));
        let t6 = LengthTables::new(6).unwrap();
        assert_eq!(t6.seqlen(), BigUint::from(719u32));
        assert_eq!(t6.vlen(), BigUint::from(141u32));
    }

    #[test]
    fn sum_matches_definition() {
        for n in 4..=14 {
            let t = LengthTables::new(n).unwrap();
            let w = naive_wlens(n);
            for k in 1..=n - 3 {
                for j in 1..=n - 1 {
                    let s: u128 = 1 + (1..j).map(|i| (n - 1) as u128 + w[delta(k, i, n)]).sum::<u128>() + j as u128;
                    assert_eq!(t.sum_kj(k, j).unwrap(), BigUint::from(s), "n={} k={} j={}", n, k, j);
                }
            }
            assert!(t.sum_kj(0, 1).is_err());
            assert!(t.sum_kj(1, n).is_err());
        }
    }

    #[test]
    fn rejects_small_orders() {
        assert!(matches!(LengthTables::new(3), Err(Error::OrderTooSmall { .. })));
    }
}

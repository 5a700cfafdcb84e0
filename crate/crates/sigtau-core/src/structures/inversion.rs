use alloc::vec;
use alloc::vec::Vec;

use crate::{CyclicOrder, Error, Result};

const ABSENT: u32 = u32::MAX;

/// For each element of a sequence, how many elements to its right are
/// smaller under a given linear order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionVector {
    // indexed by element value
    right_smaller: Vec<u32>,
}

impl InversionVector {
    /// Counts under the order given by `key`, which must be injective on `seq`.
    pub fn with_key(seq: &[u32], key: impl Fn(u32) -> usize) -> Result<Self> {
        let max_elem = seq.iter().copied().max().unwrap_or(0) as usize;
        let keys: Vec<usize> = seq.iter().map(|&v| key(v)).collect();
        let bound = keys.iter().copied().max().map_or(0, |k| k + 1);
        let mut right_smaller = vec![ABSENT; max_elem + 1];
        let mut tree = vec![0u32; bound + 1];
        let mut key_seen = vec![false; bound];
        for (&v, &k) in seq.iter().zip(&keys).rev() {
            if key_seen[k] || right_smaller[v as usize] != ABSENT {
                return Err(Error::DuplicateElement(v));
            }
            key_seen[k] = true;
            // prefix count over keys 0..k
            let mut count = 0;
            let mut i = k;
            while i > 0 {
                count += tree[i];
                i &= i - 1;
            }
            right_smaller[v as usize] = count;
            let mut i = k + 1;
            while i <= bound {
                tree[i] += 1;
                i += i & i.wrapping_neg();
            }
        }
        Ok(InversionVector { right_smaller })
    }

    /// Counts under `anchor ≺ anchor-1 ≺ anchor-2 ≺ ...` for `order`.
    pub fn under_order(seq: &[u32], order: CyclicOrder, anchor: u32) -> Result<Self> {
        if let Some(&v) = seq.iter().find(|&&v| !order.in_domain(v)) {
            return Err(Error::OutOfDomain { element: v });
        }
        Self::with_key(seq, |v| order.descending_key(anchor, v))
    }

    pub fn right_smaller(&self, v: u32) -> Option<u32> {
        match self.right_smaller.get(v as usize) {
            Some(&c) if c != ABSENT => Some(c),
            _ => None,
        }
    }

    pub fn total(&self) -> u64 {
        self.right_smaller.iter().filter(|&&c| c != ABSENT).map(|&c| c as u64).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(seq: &[u32], key: impl Fn(u32) -> usize) -> Vec<(u32, u32)> {
        (0..seq.len())
            .map(|i| {
                let c = seq[i + 1..].iter().filter(|&&u| key(u) < key(seq[i])).count();
                (seq[i], c as u32)
            })
            .collect()
    }

    #[test]
    fn sorted_sequence_has_no_inversions() {
        let order = CyclicOrder::plus(9);
        let iv = InversionVector::under_order(&[6, 5, 4, 3, 2, 1, 8, 7], order, 6).unwrap();
        assert_eq!(iv.total(), 0);
        let iv = InversionVector::under_order(&[7, 6, 5, 4, 3, 2, 1, 8], order, 6).unwrap();
        assert_eq!(iv.total(), 7);
    }

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            InversionVector::with_key(&[3, 1, 3], |v| v as usize),
            Err(Error::DuplicateElement(3))
        );
    }

    proptest! {
        #[test]
        fn matches_quadratic_count(seq in Just((1..=300u32).collect::<Vec<_>>()).prop_shuffle(),
                                   len in 1usize..300, anchor in 1u32..300) {
            let seq = &seq[..len];
            let order = CyclicOrder::plus(301);
            let iv = InversionVector::under_order(seq, order, anchor).unwrap();
            for (v, c) in brute(seq, |u| order.descending_key(anchor, u)) {
                prop_assert_eq!(iv.right_smaller(v), Some(c));
            }
        }
    }

    #[test]
    fn matches_quadratic_count_large() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let size = rng.gen_range(1..=1000usize);
            let mut seq: Vec<u32> = (1..=size as u32).collect();
            seq.shuffle(&mut rng);
            let order = CyclicOrder::times(size + 2);
            let anchor = seq[0];
            let iv = InversionVector::under_order(&seq, order, anchor).unwrap();
            for (v, c) in brute(&seq, |u| order.descending_key(anchor, u)) {
                assert_eq!(iv.right_smaller(v), Some(c));
            }
        }
    }
}

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::{Error, Result};

const FRACTION_BITS: u32 = 24;
const SHORT: usize = 8;

/// Predecessor search in a strictly increasing sequence whose consecutive
/// ratios lie in `[2, max_ratio]`.
///
/// The range `[b_0, b_m]` is cut into `m` buckets of equal logarithmic
/// width; a query jumps to its bucket and binary-searches the few entries
/// inside it. Bucket boundaries use fixed-point logarithms derived from
/// bit lengths, so every answer is checked and falls back to a plain
/// binary search if rounding ever misplaces it.
#[derive(Clone, Debug)]
pub struct StableLocator {
    values: Vec<BigUint>,
    logs: Vec<u64>,
    // buckets[i] = last index j with log(b_j) - log(b_0) <= i * span / m
    buckets: Vec<usize>,
}

impl StableLocator {
    pub fn new(values: Vec<BigUint>, max_ratio: u64) -> Result<Self> {
        for (i, w) in values.windows(2).enumerate() {
            if w[1] < &w[0] * 2u32 || w[1] > &w[0] * max_ratio {
                return Err(Error::NotStablyIncreasing { index: i + 1 });
            }
        }
        if values.first().is_some_and(|b| *b == BigUint::default()) {
            return Err(Error::NotStablyIncreasing { index: 0 });
        }
        let logs: Vec<u64> = values.iter().map(log2_fixed).collect();
        let mut buckets = Vec::new();
        if values.len() >= SHORT {
            let m = (values.len() - 1) as u128;
            let span = (logs[logs.len() - 1] - logs[0]) as u128;
            let mut j = 0;
            for i in 0..=m {
                while j + 1 < logs.len() && ((logs[j + 1] - logs[0]) as u128) * m <= i * span {
                    j += 1;
                }
                buckets.push(j);
            }
        }
        Ok(StableLocator { values, logs, buckets })
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The index `j` with `b_j <= t < b_{j+1}`; the last index when `t` equals
    /// the last value.
    pub fn locate(&self, t: &BigUint) -> Result<usize> {
        let (first, last) = match (self.values.first(), self.values.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::LocateOutOfRange),
        };
        if t < first || t > last {
            return Err(Error::LocateOutOfRange);
        }
        if self.buckets.is_empty() {
            return Ok(self.binary_search(t, 0, self.values.len() - 1));
        }
        let m = (self.values.len() - 1) as u128;
        let span = (self.logs[self.logs.len() - 1] - self.logs[0]) as u128;
        let lt = log2_fixed(t).clamp(self.logs[0], self.logs[self.logs.len() - 1]);
        let y = ((lt - self.logs[0]) as u128 * m).checked_div(span).unwrap_or(0) as usize;
        let lo = self.buckets[y.saturating_sub(1)];
        let hi = self.buckets[(y + 1).min(self.buckets.len() - 1)];
        let hi = (hi + 1).min(self.values.len() - 1);
        let j = self.binary_search(t, lo, hi);
        if self.is_answer(t, j) {
            Ok(j)
        } else {
            Ok(self.binary_search(t, 0, self.values.len() - 1))
        }
    }

    /// Plain binary search, for differential testing.
    pub fn locate_binary(&self, t: &BigUint) -> Result<usize> {
        match (self.values.first(), self.values.last()) {
            (Some(f), Some(l)) if t >= f && t <= l => {
                Ok(self.binary_search(t, 0, self.values.len() - 1))
            }
            _ => Err(Error::LocateOutOfRange),
        }
    }

    fn is_answer(&self, t: &BigUint, j: usize) -> bool {
        self.values[j] <= *t && self.values.get(j + 1).is_none_or(|next| t < next)
    }

    // Largest j in [lo, hi] with b_j <= t, assuming b_lo <= t.
    fn binary_search(&self, t: &BigUint, mut lo: usize, mut hi: usize) -> usize {
        if self.values[lo] > *t {
            return lo;
        }
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if self.values[mid] <= *t {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        lo
    }

    /// Length of the longest run of entries sharing one bucket.
    pub fn max_bucket_width(&self) -> usize {
        self.buckets.windows(2).map(|w| w[1] - w[0]).max().unwrap_or(0)
    }
}

/// `log2(x)` in fixed point with `FRACTION_BITS` fractional bits, from the
/// bit length and the leading 53 bits of the mantissa.
fn log2_fixed(x: &BigUint) -> u64 {
    let bits = x.bits();
    if bits == 0 {
        return 0;
    }
    let shift = bits.saturating_sub(53);
    let top = (x >> shift).to_u64().expect("at most 53 bits remain");
    let mut mantissa = top as f64 / (1u64 << (bits - shift - 1)) as f64;
    let mut fraction = 0u64;
    for _ in 0..FRACTION_BITS {
        mantissa *= mantissa;
        fraction <<= 1;
        if mantissa >= 2.0 {
            mantissa /= 2.0;
            fraction |= 1;
        }
    }
    ((bits - 1) << FRACTION_BITS) | fraction
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::{Rng, SeedableRng};

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn powers_of_two() {
        let b: Vec<BigUint> = (0..=20).map(|i| big(1 << i)).collect();
        let loc = StableLocator::new(b, 2).unwrap();
        assert_eq!(loc.locate(&big(5)).unwrap(), 2);
        assert_eq!(loc.locate(&big(4)).unwrap(), 2);
        assert_eq!(loc.locate(&big(1)).unwrap(), 0);
        assert_eq!(loc.locate(&big(1 << 20)).unwrap(), 20);
        assert_eq!(loc.locate(&big((1 << 20) - 1)).unwrap(), 19);
        assert!(loc.locate(&big(0)).is_err());
        assert!(loc.locate(&big((1 << 20) + 1)).is_err());
    }

    #[test]
    fn short_sequences_use_binary_search() {
        let loc = StableLocator::new(vec![big(3), big(7), big(20)], 4).unwrap();
        assert_eq!(loc.locate(&big(7)).unwrap(), 1);
        assert_eq!(loc.locate(&big(19)).unwrap(), 1);
        assert_eq!(loc.locate(&big(20)).unwrap(), 2);
    }

    #[test]
    fn rejects_unstable_sequences() {
        assert!(StableLocator::new(vec![big(3), big(5)], 4).is_err());
        assert!(StableLocator::new(vec![big(3), big(13)], 4).is_err());
    }

    #[test]
    fn log2_fixed_is_close() {
        for v in [1u64, 2, 3, 5, 1000, 123_456_789, u64::MAX] {
            let exact = (v as f64).log2() * (1u64 << FRACTION_BITS) as f64;
            let got = log2_fixed(&big(v)) as f64;
            assert!((exact - got).abs() < 4.0, "{} {} {}", v, exact, got);
        }
    }

    #[test]
    fn agrees_with_binary_search_on_random_queries() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut b = vec![big(5)];
        for _ in 0..300 {
            let r: u32 = rng.gen_range(2..=64);
            let last = b.last().unwrap().clone();
            b.push(last * r);
        }
        let last = b.last().unwrap().clone();
        let first = b[0].clone();
        let loc = StableLocator::new(b.clone(), 64).unwrap();
        for _ in 0..100_000 {
            let t = match rng.gen_range(0..3) {
                0 => b[rng.gen_range(0..b.len())].clone(),
                1 => &b[rng.gen_range(0..b.len())] - 1u32,
                _ => {
                    let bits = rng.gen_range(3..last.bits());
                    let mut t = BigUint::from(rng.gen::<u64>());
                    t <<= bits.saturating_sub(64) as usize;
                    t
                }
            };
            let t = t.clamp(first.clone(), last.clone());
            assert_eq!(loc.locate(&t).unwrap(), loc.locate_binary(&t).unwrap());
        }
        assert!(loc.max_bucket_width() <= 6);
    }
}

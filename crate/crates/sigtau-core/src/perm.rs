//! Permutations of `1..=n` and the two generators.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// One step of a generation word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// Rotate left by one.
    Sigma,
    /// Swap the first two entries.
    Tau,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::Sigma => 's',
            Letter::Tau => 't',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            's' => Some(Letter::Sigma),
            't' => Some(Letter::Tau),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A permutation of `1..=n`, stored as its sequence of values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    elems: Vec<u32>,
}

impl Permutation {
    /// Checks that `elems` holds each of `1..=elems.len()` exactly once.
    pub fn new(elems: Vec<u32>) -> Result<Self> {
        let n = elems.len();
        if n == 0 {
            return Err(Error::NotAPermutation { n, reason: "empty sequence" });
        }
        let mut seen = alloc::vec![false; n + 1];
        for &v in &elems {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::NotAPermutation { n, reason: "value out of range" });
            }
            if seen[v] {
                return Err(Error::NotAPermutation { n, reason: "repeated value" });
            }
            seen[v] = true;
        }
        Ok(Permutation { elems })
    }

    pub(crate) fn from_vec_unchecked(elems: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(elems.clone()).is_ok());
        Permutation { elems }
    }

    /// `(n, n-1, ..., 1)`.
    pub fn decreasing(n: usize) -> Self {
        Permutation { elems: (1..=n as u32).rev().collect() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { elems: (1..=n as u32).collect() }
    }

    pub fn n(&self) -> usize {
        self.elems.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.elems
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.elems
    }

    /// 0-based index of value `v`.
    pub fn position(&self, v: u32) -> Option<usize> {
        self.elems.iter().position(|&e| e == v)
    }

    pub fn sigma(&self) -> Self {
        self.rotate_left(1)
    }

    pub fn tau(&self) -> Self {
        let mut p = self.clone();
        if p.elems.len() >= 2 {
            p.elems.swap(0, 1);
        }
        p
    }

    pub fn apply(&self, letter: Letter) -> Self {
        let mut p = self.clone();
        p.apply_in_place(letter);
        p
    }

    pub fn apply_in_place(&mut self, letter: Letter) {
        match letter {
            Letter::Sigma => self.elems.rotate_left(1),
            Letter::Tau => {
                if self.elems.len() >= 2 {
                    self.elems.swap(0, 1)
                }
            }
        }
    }

    /// `σ^k` applied to `self`.
    pub fn rotate_left(&self, k: usize) -> Self {
        let mut elems = self.elems.clone();
        if !elems.is_empty() {
            let k = k % elems.len();
            elems.rotate_left(k);
        }
        Permutation { elems }
    }

    /// The rotation that starts with `n`, and the 1-based position of `n` in `self`.
    pub fn rotation_from_max(&self) -> (Permutation, usize) {
        let n = self.n() as u32;
        let i = self.position(n).expect("n is always present");
        (self.rotate_left(i), i + 1)
    }

    /// Lazily applies `word`, yielding `self` first and then every image.
    pub fn walk<I: IntoIterator<Item = Letter>>(self, word: I) -> Walk<I::IntoIter> {
        Walk { current: Some(self), word: word.into_iter(), started: false }
    }

    /// Position in lexicographic order, for `n <= 20`.
    pub fn lex_index(&self) -> u64 {
        let n = self.elems.len();
        let mut index = 0u64;
        let mut used = 0u32;
        for (i, &v) in self.elems.iter().enumerate() {
            let below = (v - 1) - (used & ((1u32 << (v - 1)) - 1)).count_ones();
            index = index * (n - i) as u64 + below as u64;
            used |= 1 << (v - 1);
        }
        index
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Permutation {
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

impl FromStr for Permutation {
    type Err = Error;

    /// Space- or comma-separated values.
    fn from_str(s: &str) -> Result<Self> {
        let elems = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(t.to_string())))
            .collect::<Result<Vec<u32>>>()?;
        Permutation::new(elems)
    }
}

impl AsRef<[u32]> for Permutation {
    fn as_ref(&self) -> &[u32] {
        &self.elems
    }
}

/// Iterator returned by [`Permutation::walk`].
pub struct Walk<I> {
    current: Option<Permutation>,
    word: I,
    started: bool,
}

impl<I: Iterator<Item = Letter>> Iterator for Walk<I> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if !self.started {
            self.started = true;
            return self.current.clone();
        }
        let letter = self.word.next()?;
        let p = self.current.as_mut()?;
        p.apply_in_place(letter);
        Some(p.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(p(&[1, 2, 3, 4]).sigma(), p(&[2, 3, 4, 1]));
        assert_eq!(p(&[6, 5, 4, 3, 2, 1]).sigma(), p(&[5, 4, 3, 2, 1, 6]));
        assert_eq!(p(&[1, 2, 3, 4]).tau(), p(&[2, 1, 3, 4]));
        assert_eq!(p(&[6, 5, 4, 3, 2, 1]).tau(), p(&[5, 6, 4, 3, 2, 1]));
        let q = p(&[3, 1, 4, 2, 5]);
        assert_eq!(q.tau().tau(), q);
        let mut r = q.clone();
        for _ in 0..5 {
            r = r.sigma();
        }
        assert_eq!(r, q);
    }

    #[test]
    fn walk_emits_start_and_images() {
        let out: Vec<_> = p(&[1, 2, 3]).walk(core::iter::empty()).collect();
        assert_eq!(out, vec![p(&[1, 2, 3])]);
        let gamma1 = [Letter::Sigma, Letter::Tau];
        let out: Vec<_> = Permutation::decreasing(6).walk(gamma1).collect();
        assert_eq!(
            out,
            vec![p(&[6, 5, 4, 3, 2, 1]), p(&[5, 4, 3, 2, 1, 6]), p(&[4, 5, 3, 2, 1, 6])]
        );
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1, 2]).is_err());
        assert!(Permutation::new(vec![1, 2, 4]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!("1 2 x".parse::<Permutation>().is_err());
    }

    #[test]
    fn text_round_trip() {
        let q: Permutation = "7 2 4 1 6 5 10 9 8 3".parse().unwrap();
        assert_eq!(q.to_string(), "7 2 4 1 6 5 10 9 8 3");
        assert_eq!(q.rotation_from_max(), (p(&[10, 9, 8, 3, 7, 2, 4, 1, 6, 5]), 7));
    }

    #[test]
    fn lex_index_values() {
        assert_eq!(p(&[1, 2, 3, 4]).lex_index(), 0);
        assert_eq!(p(&[4, 3, 2, 1]).lex_index(), 23);
        assert_eq!(p(&[2, 1, 3, 4]).lex_index(), 6);
    }
}

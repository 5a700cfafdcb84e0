use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::{LengthTables, SlpProgram, Symbol};
use crate::{Error, Letter, Result};

/// Left-to-right expansion of a word, with an explicit stack of depth
/// `O(n)` and constant state per level.
pub struct Letters<'a> {
    program: &'a SlpProgram,
    stack: Vec<(&'a [Symbol], usize)>,
    sigmas: usize,
    tau: bool,
}

impl<'a> Letters<'a> {
    pub fn new(program: &'a SlpProgram, word: &'a [Symbol]) -> Self {
        Letters { program, stack: vec![(word, 0)], sigmas: 0, tau: false }
    }

    /// Expansion of `word` starting at letter `offset`.
    pub fn at(
        program: &'a SlpProgram,
        word: &'a [Symbol],
        tables: &LengthTables,
        offset: &BigUint,
    ) -> Result<Self> {
        let mut it = Letters::new(program, word);
        let mut rest = offset.clone();
        let zero = BigUint::default();
        while rest > zero {
            let Some(top) = it.stack.last_mut() else {
                return Err(Error::LocateOutOfRange);
            };
            if top.1 == top.0.len() {
                it.stack.pop();
                continue;
            }
            let sym = top.0[top.1];
            let len = sym.len(tables);
            top.1 += 1;
            if rest >= len {
                rest -= len;
                continue;
            }
            let r = usize::try_from(&rest).unwrap_or(usize::MAX);
            match sym {
                Symbol::Sigma(k) => it.sigmas = k - r,
                Symbol::Gamma(k) => {
                    it.sigmas = k - r;
                    it.tau = true;
                }
                Symbol::Tau => unreachable!("a single letter is skipped whole"),
                _ => {
                    it.stack.push((program.rule(sym), 0));
                    continue;
                }
            }
            break;
        }
        Ok(it)
    }
}

impl Iterator for Letters<'_> {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        loop {
            if self.sigmas > 0 {
                self.sigmas -= 1;
                return Some(Letter::Sigma);
            }
            if self.tau {
                self.tau = false;
                return Some(Letter::Tau);
            }
            let top = self.stack.last_mut()?;
            if top.1 == top.0.len() {
                self.stack.pop();
                continue;
            }
            let sym = top.0[top.1];
            top.1 += 1;
            match sym {
                Symbol::Sigma(k) => self.sigmas = k,
                Symbol::Tau => self.tau = true,
                Symbol::Gamma(k) => {
                    self.sigmas = k;
                    self.tau = true;
                }
                _ => {
                    let rule = self.program.rule(sym);
                    self.stack.push((rule, 0));
                }
            }
        }
    }
}

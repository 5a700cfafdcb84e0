//! The straight-line program generating the path, and its expansion.
//!
//! ```text
//! W_0 = σ
//! W_k = τ · Π_{i=1..n-2} σ^i W_{Δ(k,i)} γ_{n-2-i}
//! V   = γ_{n-3} · Π_{i=2..n-3} σ^i W_{Δ(n-3,i)} γ_{n-2-i} · σ^{n-1}
//! SEQ = γ_1^{n-2} σ^2 (V τ)^{n-2} V
//! ```
//!
//! with `γ_k = σ^k τ` and `Δ(k,i) = min(k-1, n-2-i)`. Expanding `SEQ` from
//! `τ(n, ..., 1)` visits all `n!` permutations.

mod expand;
mod tables;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

pub use expand::Letters;
pub use tables::LengthTables;

use crate::{delta, Error, Permutation, Result, MIN_ORDER};

/// A right-hand-side symbol. Powers are kept atomic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// `σ^k`, `k >= 1`.
    Sigma(usize),
    Tau,
    /// `γ_k = σ^k τ`.
    Gamma(usize),
    W(usize),
    V,
    /// Inner-cycle block of the cycle variant.
    U,
}

impl Symbol {
    /// Expanded length.
    pub fn len(&self, tables: &LengthTables) -> BigUint {
        match *self {
            Symbol::Sigma(k) => BigUint::from(k as u64),
            Symbol::Tau => BigUint::from(1u32),
            Symbol::Gamma(k) => BigUint::from(k as u64 + 1),
            Symbol::W(k) => tables.wlen(k),
            Symbol::V => tables.vlen(),
            Symbol::U => tables.ulen().unwrap_or_default(),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Sigma(k) => write!(f, "s{}", k),
            Symbol::Tau => f.write_str("t"),
            Symbol::Gamma(k) => write!(f, "g{}", k),
            Symbol::W(k) => write!(f, "W{}", k),
            Symbol::V => f.write_str("V"),
            Symbol::U => f.write_str("U"),
        }
    }
}

/// Left-hand side of a rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Nonterminal {
    W(usize),
    V,
    U,
    Seq,
}

impl fmt::Display for Nonterminal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nonterminal::W(k) => write!(f, "W{}", k),
            Nonterminal::V => f.write_str("V"),
            Nonterminal::U => f.write_str("U"),
            Nonterminal::Seq => f.write_str("SEQ"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlpProgram {
    n: usize,
    w: Vec<Vec<Symbol>>,
    v: Vec<Symbol>,
    u: Option<Vec<Symbol>>,
    seq: Vec<Symbol>,
}

impl SlpProgram {
    /// Rules `W_0..W_{n-4}`, `V` and `SEQ`.
    pub fn build(n: usize) -> Result<Self> {
        if n < MIN_ORDER {
            return Err(Error::OrderTooSmall { n, min: MIN_ORDER });
        }
        let w = (0..=n - 4).map(|k| w_rule(n, k)).collect();
        let mut v = vec![Symbol::Gamma(n - 3)];
        for i in 2..=n - 3 {
            v.extend(block(n, n - 3, i));
        }
        v.push(Symbol::Sigma(n - 1));
        let mut seq = vec![Symbol::Gamma(1); n - 2];
        seq.push(Symbol::Sigma(2));
        for _ in 0..n - 2 {
            seq.push(Symbol::V);
            seq.push(Symbol::Tau);
        }
        seq.push(Symbol::V);
        Ok(SlpProgram { n, w, v, u: None, seq })
    }

    /// [`SlpProgram::build`] plus `W_{n-3}` and the inner-cycle block
    /// `U = γ_{n-4} · Π_{i=3..n-3} σ^i W_{Δ(n-3,i)} γ_{n-2-i} · γ_{n-1}`,
    /// used by the cycle variant; needs `n >= 5`.
    pub fn build_extended(n: usize) -> Result<Self> {
        if n < MIN_ORDER + 1 {
            return Err(Error::OrderTooSmall { n, min: MIN_ORDER + 1 });
        }
        let mut program = Self::build(n)?;
        program.w.push(w_rule(n, n - 3));
        let mut u = vec![Symbol::Gamma(n - 4)];
        for i in 3..=n - 3 {
            u.extend(block(n, n - 3, i));
        }
        u.push(Symbol::Gamma(n - 1));
        program.u = Some(u);
        Ok(program)
    }

    /// Assembles a program from explicit rules; `w[k]` is the rule of `W_k`.
    /// References must point to strictly lower `W` indices (or, outside the
    /// `W` rules, to any defined `W`).
    pub fn from_rules(
        n: usize,
        w: Vec<Vec<Symbol>>,
        v: Vec<Symbol>,
        u: Option<Vec<Symbol>>,
        seq: Vec<Symbol>,
    ) -> Result<Self> {
        if n < MIN_ORDER {
            return Err(Error::OrderTooSmall { n, min: MIN_ORDER });
        }
        let ok = |rhs: &[Symbol], limit: usize, allow_v: bool| {
            rhs.iter().all(|s| match *s {
                Symbol::W(k) => k < limit,
                Symbol::V => allow_v,
                Symbol::U => false,
                Symbol::Sigma(k) => k >= 1,
                _ => true,
            })
        };
        let acyclic = w.iter().enumerate().all(|(k, r)| ok(r, k, false))
            && ok(&v, w.len(), false)
            && u.as_deref().is_none_or(|r| ok(r, w.len(), false))
            && ok(&seq, w.len(), true);
        if !acyclic || w.is_empty() {
            return Err(Error::InvalidProgram("rule references must form an acyclic program"));
        }
        Ok(SlpProgram { n, w, v, u, seq })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w_rule(&self, k: usize) -> Option<&[Symbol]> {
        self.w.get(k).map(Vec::as_slice)
    }

    pub fn v_rule(&self) -> &[Symbol] {
        &self.v
    }

    pub fn u_rule(&self) -> Option<&[Symbol]> {
        self.u.as_deref()
    }

    pub fn seq_rule(&self) -> &[Symbol] {
        &self.seq
    }

    pub fn rules(&self) -> Vec<(Nonterminal, &[Symbol])> {
        let mut out: Vec<(Nonterminal, &[Symbol])> =
            self.w.iter().enumerate().map(|(k, r)| (Nonterminal::W(k), r.as_slice())).collect();
        out.push((Nonterminal::V, &self.v));
        if let Some(u) = &self.u {
            out.push((Nonterminal::U, u));
        }
        out.push((Nonterminal::Seq, &self.seq));
        out
    }

    pub fn rule_count(&self) -> usize {
        self.w.len() + 2 + self.u.is_some() as usize
    }

    /// Total number of right-hand-side symbols.
    pub fn symbol_count(&self) -> usize {
        self.rules().iter().map(|(_, r)| r.len()).sum()
    }

    /// Size of a plain binary encoding: every symbol and every rule header
    /// takes a 3-bit tag plus a `⌈log2(n+1)⌉`-bit argument.
    pub fn encoded_bits(&self) -> u64 {
        let width = (usize::BITS - self.n.leading_zeros()) as u64;
        ((self.symbol_count() + self.rule_count()) as u64) * (3 + width)
    }

    /// Letters of `SEQ`.
    pub fn letters(&self) -> Letters<'_> {
        Letters::new(self, &self.seq)
    }

    /// Letters of an arbitrary word over this program's symbols.
    pub fn expand<'a>(&'a self, word: &'a [Symbol]) -> Letters<'a> {
        Letters::new(self, word)
    }

    /// `τ(n, n-1, ..., 1)`, where the path starts.
    pub fn start(&self) -> Permutation {
        Permutation::decreasing(self.n).tau()
    }

    /// The `n!` permutations of the path, in order.
    pub fn permutations(&self) -> crate::perm::Walk<Letters<'_>> {
        self.start().walk(self.letters())
    }

    fn rule(&self, s: Symbol) -> &[Symbol] {
        match s {
            Symbol::W(k) => &self.w[k],
            Symbol::V => &self.v,
            Symbol::U => self.u.as_deref().unwrap_or(&[]),
            _ => &[],
        }
    }
}

fn w_rule(n: usize, k: usize) -> Vec<Symbol> {
    if k == 0 {
        return vec![Symbol::Sigma(1)];
    }
    let mut rhs = vec![Symbol::Tau];
    for i in 1..=n - 2 {
        rhs.extend(block(n, k, i));
    }
    rhs
}

fn block(n: usize, k: usize, i: usize) -> [Symbol; 3] {
    [Symbol::Sigma(i), Symbol::W(delta(k, i, n)), Symbol::Gamma(n - 2 - i)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Letter;
    use alloc::string::String;

    fn word(letters: Letters<'_>) -> String {
        letters.map(Letter::as_char).collect()
    }

    #[test]
    fn six_has_the_documented_shape() {
        let p = SlpProgram::build(6).unwrap();
        use Symbol::*;
        assert_eq!(
            p.v_rule(),
            &[Gamma(3), Sigma(2), W(2), Gamma(2), Sigma(3), W(1), Gamma(1), Sigma(5)]
        );
        assert_eq!(&p.seq_rule()[..5], &[Gamma(1), Gamma(1), Gamma(1), Gamma(1), Sigma(2)]);
        assert_eq!(p.seq_rule().len(), 4 + 1 + 9);
        assert_eq!(&word(p.letters())[..10], "ststststss");
    }

    #[test]
    fn lengths_match_expansion() {
        for n in 4..=9 {
            let p = SlpProgram::build_extended(n.max(5)).unwrap();
            let t = LengthTables::new(p.n()).unwrap();
            for k in 0..=p.n() - 3 {
                let w = [Symbol::W(k)];
                assert_eq!(BigUint::from(p.expand(&w).count()), t.wlen(k));
            }
            assert_eq!(BigUint::from(p.expand(&[Symbol::V]).count()), t.vlen());
            assert_eq!(BigUint::from(p.expand(&[Symbol::U]).count()), t.ulen().unwrap());
            let p = SlpProgram::build(n).unwrap();
            assert_eq!(BigUint::from(p.letters().count()), t_len(n));
        }
    }

    fn t_len(n: usize) -> BigUint {
        LengthTables::new(n).unwrap().seqlen()
    }

    #[test]
    fn seeking_matches_skipping() {
        let p = SlpProgram::build(7).unwrap();
        let t = LengthTables::new(7).unwrap();
        let full: String = word(p.letters());
        for offset in (0..full.len()).step_by(37).chain([0, 1, full.len() - 1, full.len()]) {
            let tail = word(Letters::at(&p, p.seq_rule(), &t, &BigUint::from(offset)).unwrap());
            assert_eq!(tail, full[offset..], "offset {}", offset);
        }
        assert!(Letters::at(&p, p.seq_rule(), &t, &BigUint::from(full.len() + 1)).is_err());
    }

    #[test]
    fn symbol_count_is_quadratic() {
        for n in 4..=64 {
            let p = SlpProgram::build(n).unwrap();
            assert!(p.symbol_count() <= 4 * n * n, "n={}", n);
        }
    }

    #[test]
    fn from_rules_rejects_cycles() {
        let p = SlpProgram::build(6).unwrap();
        let mut w: Vec<Vec<Symbol>> = (0..=2).map(|k| p.w_rule(k).unwrap().to_vec()).collect();
        w[1].push(Symbol::W(1));
        assert!(SlpProgram::from_rules(6, w, p.v_rule().to_vec(), None, p.seq_rule().to_vec()).is_err());
    }
}

//! The alternative Hamiltonian path: the outer cycle with its closing `τ`
//! replaced by `σ`, followed by the inner cycle without its closing `τ`.
//!
//! Both cycles are built from packages of seeds under the `Times` order.
//! The outer cycle visits, for each hub `H` in turn, block 1 of `H`
//! (which holds the bunch of its first son) and the start of block 2.
//! The inner cycle visits the rest of every hub's traversal.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::frame::{package_offset, Search};
use crate::rank::{chain_offset, parent_first_seed, route_and_anchor};
use crate::seed::hub_seed;
use crate::slp::Letters;
use crate::unrank::{descend, materialize};
use crate::{delta, CyclicOrder, Error, LengthTables, Permutation, Result, Route, SlpProgram, Symbol};

/// `(σ W_{n-3} γ_{n-3} γ_2)(σ W_{n-4} γ_{n-3} γ_2)^{n-3}`, the outer cycle
/// from `(n-1, n, n-2, ..., 1)` back to itself.
pub fn outer_cycle_word(n: usize) -> Result<Vec<Symbol>> {
    check_order(n)?;
    let mut word = vec![Symbol::Sigma(1), Symbol::W(n - 3), Symbol::Gamma(n - 3), Symbol::Gamma(2)];
    for _ in 0..n - 3 {
        word.extend([Symbol::Sigma(1), Symbol::W(n - 4), Symbol::Gamma(n - 3), Symbol::Gamma(2)]);
    }
    Ok(word)
}

/// `U^{n-2}`, the inner cycle.
pub fn inner_cycle_word(n: usize) -> Result<Vec<Symbol>> {
    check_order(n)?;
    Ok(vec![Symbol::U; n - 2])
}

/// `(inner, outer)` cycle words.
pub fn two_cycle_words(n: usize) -> Result<(Vec<Symbol>, Vec<Symbol>)> {
    Ok((inner_cycle_word(n)?, outer_cycle_word(n)?))
}

/// Outer cycle, its closing `τ` turned into `σ`, then the inner cycle
/// without its closing `τ`: `n! - 1` letters.
pub fn alt_path_word(n: usize) -> Result<Vec<Symbol>> {
    let mut word = outer_cycle_word(n)?;
    word.pop();
    word.push(Symbol::Sigma(3));
    word.extend(vec![Symbol::U; n - 3]);
    let program = SlpProgram::build_extended(n)?;
    let u = program.u_rule().expect("extended programs define U");
    word.extend_from_slice(&u[..u.len() - 1]);
    word.push(Symbol::Sigma(n - 1));
    Ok(word)
}

/// Where the alternative path and both cycles start.
pub fn alt_start(n: usize) -> Permutation {
    let mut elems = vec![n as u32 - 1, n as u32];
    elems.extend((1..=n as u32 - 2).rev());
    Permutation::from_vec_unchecked(elems)
}

/// Rank and unrank along the alternative path.
pub struct AltPath {
    n: usize,
    program: SlpProgram,
    tables: LengthTables,
    word: Vec<Symbol>,
    order: CyclicOrder,
    // first hub stretch, later hub stretches, whole outer part
    outer_first: BigUint,
    outer: BigUint,
    outer_total: BigUint,
    u: BigUint,
    // offset of block 3 in a hub frame
    block3: BigUint,
}

impl AltPath {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        let program = SlpProgram::build_extended(n)?;
        let tables = LengthTables::new(n)?;
        let word = alt_path_word(n)?;
        let outer_first = tables.wlen(n - 3) + (n as u64 + 2);
        let outer = tables.wlen(n - 4) + (n as u64 + 2);
        let outer_total = &outer_first + &outer * (n as u64 - 3);
        let u = tables.ulen().expect("n >= 5");
        let block3 = tables.sum(n - 3, 3) - 3u32;
        Ok(AltPath {
            n,
            program,
            tables,
            word,
            order: CyclicOrder::times(n),
            outer_first,
            outer,
            outer_total,
            u,
            block3,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tables(&self) -> &LengthTables {
        &self.tables
    }

    pub fn program(&self) -> &SlpProgram {
        &self.program
    }

    pub fn word(&self) -> &[Symbol] {
        &self.word
    }

    /// Number of permutations on the outer cycle.
    pub fn outer_len(&self) -> &BigUint {
        &self.outer_total
    }

    /// Letters from rank `from` on.
    pub fn letters_from(&self, from: &BigUint) -> Result<Letters<'_>> {
        Letters::at(&self.program, &self.word, &self.tables, from)
    }

    pub fn start(&self) -> Permutation {
        alt_start(self.n)
    }

    /// Rank of the outer stretch of hub `h`.
    fn outer_base(&self, h: u32) -> BigUint {
        let m = self.n as u32 - 2;
        let b = (2 * m - h) % m;
        if b == 0 {
            BigUint::default()
        } else {
            &self.outer_first + &self.outer * (b - 1)
        }
    }

    /// Rank of the inner stretch of hub `h`.
    fn inner_base(&self, h: u32) -> BigUint {
        let m = self.n as u32 - 2;
        let slot = (h + m - 1) % m;
        &self.outer_total + &self.u * slot
    }

    /// Height of the first son of hub `h`, the root of its outer stretch.
    fn first_son_height(&self, h: u32) -> usize {
        if h == self.n as u32 - 2 {
            self.n - 3
        } else {
            self.n - 4
        }
    }

    pub fn rank(&self, p: &Permutation) -> Result<BigUint> {
        self.rank_inner(p, None)
    }

    /// [`AltPath::rank`] with the route of the parent-first seed of `p`
    /// already known.
    pub(crate) fn rank_with_route(&self, p: &Permutation, route: &Route) -> Result<BigUint> {
        self.rank_inner(p, Some(route))
    }

    fn rank_inner(&self, p: &Permutation, known: Option<&Route>) -> Result<BigUint> {
        let n = self.n;
        if p.n() != n {
            return Err(Error::LengthMismatch { expected: n, found: p.n() });
        }
        let t = &self.tables;
        let (rho, l) = p.rotation_from_max();
        let s = if l > 1 { n - l + 1 } else { 0 };
        let x = self.order.succ(rho.as_slice()[1]);
        let j = rho.position(x).expect("present") + 1;
        let psi = parent_first_seed(&rho, x, self.order);
        if psi.is_hub() {
            let h = psi.second();
            let i = n - j + 1;
            let w = t.wlen(self.first_son_height(h));
            let base = self.outer_base(h);
            return Ok(match (i, s) {
                (1, s) if s == n - 1 => base,
                (1, 0) => base + 1u32,
                (1, s) => base + w + s,
                (2, s) if s == n - 2 => base + w + (n - 1),
                (2, s) if s == n - 1 => base + w + n,
                (2, 0) => base + w + (n + 1),
                (2, s) => self.inner_base(h) + (s - 1),
                _ => self.inner_base(h) + package_offset(t, n - 3, j, l) - &self.block3 + (n - 3),
            });
        }
        let (route, anchor) = match known {
            Some(r) => {
                let level = r.len();
                let hub = hub_seed(self.order, self.order.add(psi.second(), level as u64));
                let ord = r.anchor_ord().ok_or(Error::InconsistentRoute("empty route"))?;
                (r.clone(), hub.son_unchecked(ord))
            }
            None => route_and_anchor(&psi)?,
        };
        let h = anchor.parent().second();
        let i0 = route.anchor_ord().expect("routes are non-empty");
        let (anchor_rank, k) = if i0 == 1 {
            (self.outer_base(h) + 1u32, self.first_son_height(h))
        } else {
            let r = self.inner_base(h) + t.sum(n - 3, i0) - &self.block3 + (n - 3);
            (r, delta(n - 3, i0, n))
        };
        let (chain, k) = chain_offset(t, &route, k)?;
        Ok(anchor_rank + chain + package_offset(t, k, j, l))
    }

    pub fn unrank(&self, r: &BigUint) -> Result<Permutation> {
        let n = self.n;
        let t = &self.tables;
        if r >= t.factorial() {
            return Err(Error::RankOutOfRange { rank: r.clone(), n });
        }
        let to_usize = |v: &BigUint| v.to_usize().expect("small local offset");
        if *r < self.outer_total {
            let (b, local) = if *r < self.outer_first {
                (0u32, r.clone())
            } else {
                let (q, rem) = (r - &self.outer_first).div_rem(&self.outer);
                (1 + q.to_u32().expect("fewer than n hubs"), rem)
            };
            let hub = hub_seed(self.order, self.order.sub(n as u32 - 2, b as u64));
            let k = if b == 0 { n - 3 } else { n - 4 };
            let w = t.wlen(k);
            if local == BigUint::default() {
                return Ok(hub.block_start(1).rotate_left(n - 1));
            }
            if local <= &w + 1u32 {
                let root = hub.son_unchecked(1);
                return materialize(&root, &descend(t, k, &(local - 1u32), Search::Buckets));
            }
            let past = to_usize(&(local - &w));
            return Ok(match past {
                p if p <= n - 2 => hub.block_start(1).rotate_left(p),
                p if p == n - 1 => hub.block_start(2).rotate_left(n - 2),
                p if p == n => hub.block_start(2).rotate_left(n - 1),
                _ => hub.block_start(2),
            });
        }
        let (u, local) = (r - &self.outer_total).div_rem(&self.u);
        let hub = hub_seed(self.order, self.order.add(n as u32 - 1, u.to_u64().expect("fewer than n hubs")));
        if local <= BigUint::from(n - 4) {
            return Ok(hub.block_start(2).rotate_left(to_usize(&local) + 1));
        }
        let offset = local - (n - 3) + &self.block3;
        materialize(&hub, &descend(t, n - 3, &offset, Search::Buckets))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n < 5 {
        return Err(Error::OrderTooSmall { n, min: 5 });
    }
    Ok(())
}

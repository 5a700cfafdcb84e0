//! The cycle variant.
//!
//! The alternative path is cut at every switch and at the two cycle ends.
//! Following the redirected edges (`τ` at every switch, the closing `τ` of
//! each cycle) strings the pieces together. When the pieces close up after
//! visiting all `n!` permutations they form a Hamiltonian cycle, and a
//! cycle rank is an alternative-path rank shifted by its piece's offset.
//! For even `n` the pieces close early: no `σ`-`τ` Hamiltonian cycle exists
//! there, and construction reports how far the tour got.

mod alt;
mod switches;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

pub use alt::{alt_path_word, alt_start, inner_cycle_word, outer_cycle_word, two_cycle_words, AltPath};
pub use switches::{switch_route, switches, Switch, SwitchTable};

use crate::oracle::{CheckResult, Report};
use crate::{Error, Letter, Permutation, Result};

/// A stretch of the alternative path traversed in one go by the cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub path_start: BigUint,
    pub cycle_start: BigUint,
    pub len: BigUint,
}

pub struct HamiltonianCycle {
    alt: AltPath,
    switches: SwitchTable,
    // sorted by path_start; by_cycle[i] indexes pieces in cycle order
    pieces: Vec<Piece>,
    by_cycle: Vec<usize>,
}

impl HamiltonianCycle {
    pub fn new(n: usize) -> Result<Self> {
        let alt = AltPath::new(n)?;
        let switches = SwitchTable::fast(&alt)?;
        Self::from_parts(alt, switches)
    }

    pub fn from_parts(alt: AltPath, switches: SwitchTable) -> Result<Self> {
        let n = alt.n();
        let total = alt.tables().factorial().clone();
        let jumps = jump_table(&alt, &switches);
        let mut in_cycle = Vec::new();
        let mut c = BigUint::default();
        let mut covered = BigUint::default();
        loop {
            let (end, next) = jumps.range(&c..).next().expect("the last rank is a jump");
            let len = end - &c + 1u32;
            in_cycle.push(Piece { path_start: c.clone(), cycle_start: covered.clone(), len: len.clone() });
            covered += len;
            c = next.clone();
            if c == BigUint::default() || in_cycle.len() > jumps.len() {
                break;
            }
        }
        if covered != total || c != BigUint::default() {
            return Err(Error::NoHamiltonianCycle { n, covered });
        }
        let mut pieces = in_cycle;
        let mut order: Vec<usize> = (0..pieces.len()).collect();
        order.sort_by(|&a, &b| pieces[a].path_start.cmp(&pieces[b].path_start));
        let sorted: Vec<Piece> = order.iter().map(|&i| pieces[i].clone()).collect();
        let mut by_cycle = vec![0; pieces.len()];
        for (pos, &i) in order.iter().enumerate() {
            by_cycle[i] = pos;
        }
        pieces = sorted;
        Ok(HamiltonianCycle { alt, switches, pieces, by_cycle })
    }

    pub fn n(&self) -> usize {
        self.alt.n()
    }

    pub fn alt_path(&self) -> &AltPath {
        &self.alt
    }

    pub fn switch_table(&self) -> &SwitchTable {
        &self.switches
    }

    /// Pieces in the order the cycle visits them.
    pub fn pieces(&self) -> impl Iterator<Item = &Piece> + '_ {
        self.by_cycle.iter().map(move |&i| &self.pieces[i])
    }

    /// The permutation of cycle rank 0.
    pub fn start(&self) -> Permutation {
        self.alt.start()
    }

    pub fn rank(&self, p: &Permutation) -> Result<BigUint> {
        Ok(self.shift(&self.alt.rank(p)?))
    }

    pub fn unrank(&self, r: &BigUint) -> Result<Permutation> {
        if r >= self.alt.tables().factorial() {
            return Err(Error::RankOutOfRange { rank: r.clone(), n: self.n() });
        }
        let pos = self.by_cycle.partition_point(|&i| self.pieces[i].cycle_start <= *r) - 1;
        let pc = &self.pieces[self.by_cycle[pos]];
        self.alt.unrank(&(&pc.path_start + (r - &pc.cycle_start)))
    }

    /// Cycle rank of every switch, `Δ_1, ..., Δ_{n-1}`.
    pub fn switch_ranks(&self) -> Vec<BigUint> {
        self.switches.path_ranks.iter().map(|a| self.shift(a)).collect()
    }

    fn shift(&self, a: &BigUint) -> BigUint {
        let i = self.pieces.partition_point(|pc| pc.path_start <= *a) - 1;
        let pc = &self.pieces[i];
        &pc.cycle_start + (a - &pc.path_start)
    }

    /// The `n!` letters of the closed tour from [`HamiltonianCycle::start`].
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.pieces().flat_map(move |pc| {
            let inside = self.alt.letters_from(&pc.path_start).expect("piece starts inside the path");
            let count = (&pc.len - 1u32).to_usize().expect("piece fits in memory-sized counts");
            inside.take(count).chain(core::iter::once(Letter::Tau))
        })
    }
}

/// Alternative-path rank of each cut point and where the cycle goes next.
fn jump_table(alt: &AltPath, switches: &SwitchTable) -> BTreeMap<BigUint, BigUint> {
    let n = alt.n();
    let total = alt.tables().factorial();
    let mut jumps = BTreeMap::new();
    for (i, r) in switches.path_ranks.iter().enumerate() {
        // Δ_x goes to σ(Δ_{x-1}), one step after Δ_{x-1}
        let prev = if i == 0 { n - 2 } else { i - 1 };
        jumps.insert(r.clone(), &switches.path_ranks[prev] + 1u32);
    }
    jumps.insert(alt.outer_len() - 1u32, BigUint::default());
    jumps.insert(total - 1u32, alt.outer_len().clone());
    jumps
}

/// Structural checks of the cycle variant for one order, and the
/// round-trip checks when the Hamiltonian cycle exists.
pub fn verify_cycle(n: usize) -> Result<Report> {
    if n > crate::oracle::MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationLimit { n, max: crate::oracle::MAX_ENUMERATION_ORDER });
    }
    let alt = AltPath::new(n)?;
    let total = alt.tables().factorial().to_u64().expect("n <= 10");
    let index = |p: &Permutation| p.lex_index() as usize;
    let mut checks = Vec::new();

    // the two cycles
    let outer = outer_cycle_word(n)?;
    let inner = inner_cycle_word(n)?;
    let outer_start = alt.start();
    let inner_start = alt.unrank(alt.outer_len())?;
    let mut owner = vec![0u8; total as usize];
    let mut failure = None;
    for (tag, start, word) in [(1u8, &outer_start, &outer), (2, &inner_start, &inner)] {
        let mut cur = start.clone();
        for l in alt.program().expand(word) {
            let i = index(&cur);
            if owner[i] != 0 && failure.is_none() {
                failure = Some(format!("{} visited twice", cur));
            }
            owner[i] = tag;
            cur.apply_in_place(l);
        }
        if cur != *start && failure.is_none() {
            failure = Some(format!("cycle from {} ends at {}", start, cur));
        }
    }
    if failure.is_none() {
        if let Some(i) = owner.iter().position(|&o| o == 0) {
            failure = Some(format!("permutation with lexicographic index {} is not covered", i));
        }
    }
    checks.push(check("cover-partition", failure));

    let table = SwitchTable::fast(&alt)?;
    let on = |tag: u8| table.switches.iter().filter(|s| owner[index(&s.perm)] == tag).count();
    let (inner_count, outer_count) = (on(2), on(1));
    let failure = (inner_count != 1 || outer_count != n - 2)
        .then(|| format!("{} inner and {} outer switches, expected 1 and {}", inner_count, outer_count, n - 2));
    checks.push(check("switch-counts", failure));

    let mut seen = vec![false; total as usize];
    let mut failure = None;
    let mut count = 0u64;
    for p in alt.start().walk(alt.program().expand(alt.word())) {
        let i = index(&p);
        if seen[i] {
            failure = Some(format!("{} repeats at position {}", p, count));
            break;
        }
        seen[i] = true;
        count += 1;
    }
    if failure.is_none() && count != total {
        failure = Some(format!("{} permutations, expected {}", count, total));
    }
    checks.push(check("alt-path", failure));

    let cycle = match HamiltonianCycle::from_parts(alt, table) {
        Ok(c) => c,
        Err(e) => {
            checks.push(CheckResult { name: "cycle-round-trips", passed: false, counterexample: Some(format!("{}", e)) });
            return Ok(Report { n, checks });
        }
    };
    let mut failure = None;
    let mut cur = cycle.start();
    let mut steps = 0u64;
    for (r, l) in cycle.letters().enumerate() {
        let r = BigUint::from(r);
        let ok = cycle.rank(&cur).ok() == Some(r.clone()) && cycle.unrank(&r).ok().as_ref() == Some(&cur);
        if !ok {
            failure = Some(format!("round trip breaks at cycle rank {} ({})", r, cur));
            break;
        }
        cur.apply_in_place(l);
        steps += 1;
    }
    if failure.is_none() && (steps != total || cur != cycle.start()) {
        failure = Some(format!("tour of {} letters ends at {}", steps, cur));
    }
    checks.push(check("cycle-round-trips", failure));
    Ok(Report { n, checks })
}

fn check(name: &'static str, failure: Option<alloc::string::String>) -> CheckResult {
    CheckResult { name, passed: failure.is_none(), counterexample: failure }
}

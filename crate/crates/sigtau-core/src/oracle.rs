//! Brute-force reference: the local successor rule, full enumeration for
//! small orders, and verification reports comparing everything else
//! against it.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use num_bigint::BigUint;

use crate::{rank, unrank, Error, LengthTables, Letter, Permutation, Result, SlpProgram};

/// Largest order [`enumerate_naive`] and [`verify`] accept.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// The letter applied to `p` in the generated order.
///
/// `σ` at the decreasing permutation and whenever `n` is second. Otherwise
/// let `r` be the first entry met when scanning cyclically from just after
/// `n`, skipping the second position; the letter is `τ` iff `p_2 = r + 1`
/// (cyclically on `1..=n-1`).
pub fn sw_next(p: &Permutation) -> Letter {
    let a = p.as_slice();
    let n = a.len();
    let top = n as u32;
    if a[1] == top || a.iter().enumerate().all(|(i, &v)| v == top - i as u32) {
        return Letter::Sigma;
    }
    let at = a.iter().position(|&v| v == top).expect("n is present");
    let mut j = (at + 1) % n;
    if j == 1 {
        j = 2;
    }
    let r = a[j];
    if a[1] == r % (top - 1) + 1 {
        Letter::Tau
    } else {
        Letter::Sigma
    }
}

/// Permutations produced by iterating [`sw_next`], `n!` of them from
/// `τ(n, ..., 1)`.
pub struct SuccessorPath {
    next: Option<Permutation>,
    remaining: u64,
}

impl SuccessorPath {
    pub fn new(n: usize) -> Self {
        SuccessorPath::from(Permutation::decreasing(n).tau(), factorial_u64(n))
    }

    /// `count` permutations starting at `start`.
    pub fn from(start: Permutation, count: u64) -> Self {
        SuccessorPath { next: Some(start), remaining: count }
    }
}

impl Iterator for SuccessorPath {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let cur = self.next.take()?;
        if self.remaining > 0 {
            self.next = Some(cur.apply(sw_next(&cur)));
        }
        Some(cur)
    }
}

/// The `n! - 1` letters chosen by [`sw_next`].
pub fn successor_letters(n: usize) -> impl Iterator<Item = Letter> {
    let mut cur = Permutation::decreasing(n).tau();
    (1..factorial_u64(n)).map(move |_| {
        let l = sw_next(&cur);
        cur.apply_in_place(l);
        l
    })
}

/// The whole path, stored; `4 <= n <= 10`.
pub fn enumerate_naive(n: usize) -> Result<Vec<Permutation>> {
    check_order(n)?;
    Ok(SuccessorPath::new(n).collect())
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn pass(name: &'static str) -> Self {
        CheckResult { name, passed: true, counterexample: None }
    }

    fn fail(name: &'static str, counterexample: String) -> Self {
        CheckResult { name, passed: false, counterexample: Some(counterexample) }
    }

    fn from_first_failure(name: &'static str, failure: Option<String>) -> Self {
        match failure {
            None => CheckResult::pass(name),
            Some(c) => CheckResult::fail(name, c),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{} {}", status, self.name)?;
        if let Some(c) = &self.counterexample {
            write!(f, ": {}", c)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub n: usize,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "n={} {}", self.n, c)?;
        }
        Ok(())
    }
}

/// Every check for one order, `4 <= n <= 10`, single-threaded.
pub fn verify(n: usize) -> Result<Report> {
    check_order(n)?;
    let program = SlpProgram::build(n)?;
    let tables = LengthTables::new(n)?;
    let mut checks = vec![check_count(n), check_endpoints(&program)];
    checks.push(verify_program(&program));
    checks.push(check_round_trips(&tables, 0..factorial_u64(n)));
    Ok(Report { n, checks })
}

/// `n!` pairwise distinct permutations on the successor path.
pub fn check_count(n: usize) -> CheckResult {
    let total = factorial_u64(n);
    let mut seen = vec![0u64; (total as usize).div_ceil(64)];
    let mut count = 0u64;
    for p in SuccessorPath::new(n) {
        let i = p.lex_index() as usize;
        if seen[i / 64] >> (i % 64) & 1 == 1 {
            return CheckResult::fail("distinct", format!("{} repeats at position {}", p, count));
        }
        seen[i / 64] |= 1 << (i % 64);
        count += 1;
    }
    if count != total {
        return CheckResult::fail("distinct", format!("{} permutations, expected {}", count, total));
    }
    CheckResult::pass("distinct")
}

/// The expanded program starts at `τ(n, ..., 1)`, ends at `τσ(n, ..., 1)`,
/// and has `n! - 1` letters.
pub fn check_endpoints(program: &SlpProgram) -> CheckResult {
    let n = program.n();
    let first = Permutation::decreasing(n).tau();
    let last_expected = Permutation::decreasing(n).sigma().tau();
    let mut count = 0u64;
    let mut last = program.start();
    for p in program.permutations() {
        count += 1;
        last = p;
    }
    let failure = if program.start() != first {
        Some(format!("starts at {}", program.start()))
    } else if last != last_expected {
        Some(format!("ends at {}, expected {}", last, last_expected))
    } else if count != factorial_u64(n) {
        Some(format!("{} permutations, expected {}", count, factorial_u64(n)))
    } else {
        None
    };
    CheckResult::from_first_failure("endpoints", failure)
}

/// The program's letters equal the successor rule's, letter for letter.
/// A mismatch reports the 0-based index of the first differing letter.
pub fn verify_program(program: &SlpProgram) -> CheckResult {
    let n = program.n();
    let mut ours = program.letters();
    let mut cur = Permutation::decreasing(n).tau();
    let total = factorial_u64(n);
    for i in 0..total - 1 {
        let expected = sw_next(&cur);
        match ours.next() {
            Some(l) if l == expected => cur.apply_in_place(l),
            Some(l) => {
                return CheckResult::fail(
                    "letters",
                    format!("letter {} is {} at {}, expected {}", i, l, cur, expected),
                )
            }
            None => return CheckResult::fail("letters", format!("stream ends after {} letters", i)),
        }
    }
    if ours.next().is_some() {
        return CheckResult::fail("letters", format!("stream runs past {} letters", total - 1));
    }
    CheckResult::pass("letters")
}

/// `rank` and `unrank` agree with positions on the successor path over the
/// given rank range. The walk starts from `unrank(range.start)`, so ranges
/// can be checked independently.
pub fn check_round_trips(tables: &LengthTables, range: Range<u64>) -> CheckResult {
    const NAME: &str = "round-trips";
    if range.is_empty() {
        return CheckResult::pass(NAME);
    }
    let start = match unrank(tables, &BigUint::from(range.start)) {
        Ok(p) => p,
        Err(e) => return CheckResult::fail(NAME, format!("unrank({}) failed: {}", range.start, e)),
    };
    let path = SuccessorPath::from(start, range.end - range.start);
    for (t, p) in range.zip(path) {
        let r = BigUint::from(t);
        match rank(tables, &p) {
            Ok(got) if got == r => {}
            Ok(got) => return CheckResult::fail(NAME, format!("rank({}) = {}, expected {}", p, got, t)),
            Err(e) => return CheckResult::fail(NAME, format!("rank({}) failed: {}", p, e)),
        }
        match unrank(tables, &r) {
            Ok(q) if q == p => {}
            Ok(q) => return CheckResult::fail(NAME, format!("unrank({}) = {}, expected {}", t, q, p)),
            Err(e) => return CheckResult::fail(NAME, format!("unrank({}) failed: {}", t, e)),
        }
    }
    CheckResult::pass(NAME)
}

/// Position of `p` by linear scan of the successor path.
pub fn rank_naive(p: &Permutation) -> Result<u64> {
    check_order(p.n())?;
    Ok(SuccessorPath::new(p.n()).position(|q| q == *p).expect("every permutation is visited") as u64)
}

/// The permutation at position `t` by linear scan.
pub fn unrank_naive(n: usize, t: u64) -> Result<Permutation> {
    check_order(n)?;
    SuccessorPath::new(n)
        .nth(t as usize)
        .ok_or(Error::RankOutOfRange { rank: BigUint::from(t), n })
}

pub(crate) fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn check_order(n: usize) -> Result<()> {
    if n < crate::MIN_ORDER {
        return Err(Error::OrderTooSmall { n, min: crate::MIN_ORDER });
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationLimit { n, max: MAX_ENUMERATION_ORDER });
    }
    Ok(())
}

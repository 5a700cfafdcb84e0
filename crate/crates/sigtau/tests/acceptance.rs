//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sigtau::random_rank;
use sigtau_core::cycle::verify_cycle;
use sigtau_core::oracle::{check_endpoints, verify_program};
use sigtau_core::{rank, unrank, BigUint, LengthTables, Permutation, Route, Seed, SlpProgram};

const SYMBOL_CONSTANT: usize = 4;
const BIT_CONSTANT: f64 = 6.0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("length law", length_law),
        ("oracle equivalence", oracle_equivalence),
        ("golden values n=10", golden_values),
        ("hub ranks n=6", hub_ranks),
        ("round trips", round_trips),
        ("stably increasing prefix sums", stably_increasing),
        ("grammar size", grammar_size),
        ("cycle variant", cycle_variant),
        ("performance", performance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} ({}): PASS in {:.2}s; {}", i + 1, name, secs, detail),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({}): FAIL in {:.2}s; {}", i + 1, name, secs, detail);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn within(limit: Duration, started: Instant, what: &str) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took < limit, || format!("{} took {:?}, limit {:?}", what, took, limit))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn length_law() -> Outcome {
    let started = Instant::now();
    for n in 4..=9 {
        let program = SlpProgram::build(n).unwrap();
        let letters = program.letters().count() as u64;
        ensure(letters == factorial(n) - 1, || format!("n={}: {} letters", n, letters))?;
        let mut seen = vec![false; factorial(n) as usize];
        for p in program.permutations() {
            let i = p.lex_index() as usize;
            ensure(!seen[i], || format!("n={}: {} repeats", n, p))?;
            seen[i] = true;
        }
        ensure(seen.iter().all(|&s| s), || format!("n={}: not every permutation visited", n))?;
        let ends = check_endpoints(&program);
        ensure(ends.passed, || format!("n={}: {}", n, ends))?;
    }
    within(Duration::from_secs(60), started, "n=4..9")?;
    Ok("n=4..9 exact".into())
}

fn oracle_equivalence() -> Outcome {
    for n in 4..=9 {
        let result = verify_program(&SlpProgram::build(n).unwrap());
        ensure(result.passed, || format!("n={}: {}", n, result))?;
    }
    Ok("letter streams identical for n=4..9".into())
}

fn golden_values() -> Outcome {
    let started = Instant::now();
    let t = LengthTables::new(10).unwrap();
    let p: Permutation = "7 2 4 1 6 5 10 9 8 3".parse().unwrap();
    let expect = |what: &str, got: BigUint, want: u64| {
        ensure(got == BigUint::from(want), || format!("{} = {}, expected {}", what, got, want))
    };
    expect("rank", rank(&t, &p).unwrap(), 1_584_702)?;
    let q = unrank(&t, &BigUint::from(1_584_702u32)).unwrap();
    ensure(q == p, || format!("unrank(1584702) = {}", q))?;
    expect("SUM(3,4)", t.sum_kj(3, 4).unwrap(), 1955)?;
    expect("SUM(5,5)", t.sum_kj(5, 5).unwrap(), 83_246)?;
    expect("SUM(7,3)-|W_6|-2", t.sum_kj(7, 3).unwrap() - t.wlen(6) - 2u32, 289_621)?;
    expect("2n-2+3|V_tau|", BigUint::from(18u32) + t.vtau_len() * 3u32, 1_209_612)?;
    let seed = Seed::new(vec![10, 9, 8, 3, 7, 2, 4, 6, 5]).unwrap();
    let (route, _) = sigtau_core::rank::route_and_anchor(&seed).unwrap();
    ensure(route == Route::from_descent(vec![3, 5, 4]), || format!("route {:?}", route.descent()))?;
    within(Duration::from_secs(1), started, "golden values")?;
    Ok("all seven values exact".into())
}

fn hub_ranks() -> Outcome {
    let t = LengthTables::new(6).unwrap();
    for (perm, want) in [("6 4 3 2 1 5", 1u32), ("6 3 2 1 5 4", 3), ("6 2 1 5 4 3", 5), ("6 1 5 4 3 2", 7), ("6 5 4 3 2 1", 9)] {
        let got = rank(&t, &perm.parse().unwrap()).unwrap();
        ensure(got == BigUint::from(want), || format!("rank({}) = {}, expected {}", perm, got, want))?;
    }
    Ok("five hub ranks exact".into())
}

fn round_trips() -> Outcome {
    let started = Instant::now();
    for n in [6, 7] {
        let t = LengthTables::new(n).unwrap();
        for r in 0..factorial(n) {
            let r = BigUint::from(r);
            let p = unrank(&t, &r).unwrap();
            ensure(rank(&t, &p).unwrap() == r, || format!("n={}: rank(unrank({})) differs", n, r))?;
        }
        let all: Vec<u32> = (1..=n as u32).collect();
        let mut count = 0;
        for p in permutations(&all) {
            let p = Permutation::new(p).unwrap();
            let r = rank(&t, &p).unwrap();
            ensure(unrank(&t, &r).unwrap() == p, || format!("n={}: unrank(rank({})) differs", n, p))?;
            count += 1;
        }
        ensure(count == factorial(n), || format!("n={}: enumerated {}", n, count))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in [8, 9] {
        let t = LengthTables::new(n).unwrap();
        for _ in 0..100_000 {
            let r = random_rank(&mut rng, &t);
            let p = unrank(&t, &r).unwrap();
            ensure(rank(&t, &p).unwrap() == r, || format!("n={}: round trip at {}", n, r))?;
            let q = random_perm(&mut rng, n);
            let s = rank(&t, &q).unwrap();
            ensure(unrank(&t, &s).unwrap() == q, || format!("n={}: round trip at {}", n, q))?;
        }
    }
    within(Duration::from_secs(300), started, "round trips")?;
    Ok("exhaustive n=6,7; 10^5 samples each way for n=8,9".into())
}

fn stably_increasing() -> Outcome {
    let mut worst = (f64::MAX, 0.0f64);
    for n in 5..=64 {
        let t = LengthTables::new(n).unwrap();
        for w in t.prefixes().windows(2) {
            let (a, b) = (&w[0], &w[1]);
            ensure(b >= &(a * 2u32) && b <= &(a * n as u64), || format!("n={}: {} -> {}", n, a, b))?;
            let ratio = ratio(b, a);
            worst = (worst.0.min(ratio), worst.1.max(ratio / n as f64));
        }
    }
    Ok(format!("min ratio {:.3}, max ratio/n {:.3}", worst.0, worst.1))
}

fn grammar_size() -> Outcome {
    let (mut c, mut c_bits) = (0.0f64, 0.0f64);
    for n in 4..=64 {
        let p = SlpProgram::build(n).unwrap();
        let sq = (n * n) as f64;
        ensure(p.symbol_count() <= SYMBOL_CONSTANT * n * n, || format!("n={}: {} symbols", n, p.symbol_count()))?;
        let bound = BIT_CONSTANT * sq * (n as f64).log2();
        ensure(p.encoded_bits() as f64 <= bound, || format!("n={}: {} bits", n, p.encoded_bits()))?;
        c = c.max(p.symbol_count() as f64 / sq);
        c_bits = c_bits.max(p.encoded_bits() as f64 / (sq * (n as f64).log2()));
    }
    Ok(format!(
        "symbols <= {}n^2 (max {:.2}), bits <= {}n^2 log2 n (max {:.2}), n=4..64",
        SYMBOL_CONSTANT, c, BIT_CONSTANT, c_bits
    ))
}

fn cycle_variant() -> Outcome {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut passes = Vec::new();
    for n in [6, 7] {
        let report = verify_cycle(n).unwrap();
        for c in &report.checks {
            if c.passed {
                passes.push(format!("n={} {}", n, c.name));
            } else {
                failures.push(format!("n={} {}", n, c));
            }
        }
    }
    within(Duration::from_secs(120), started, "cycle checks")?;
    if failures.is_empty() {
        Ok(passes.join(", "))
    } else {
        Err(format!("{}; passed: {}", failures.join("; "), passes.join(", ")))
    }
}

fn performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for (n, limit, samples) in [(1000, Duration::from_millis(100), 20), (10_000, Duration::from_secs(5), 3)] {
        let started = Instant::now();
        let t = LengthTables::new(n).unwrap();
        let build = started.elapsed();
        let (mut worst_rank, mut worst_unrank) = (Duration::ZERO, Duration::ZERO);
        for _ in 0..samples {
            let r = random_rank(&mut rng, &t);
            let started = Instant::now();
            let p = unrank(&t, &r).unwrap();
            worst_unrank = worst_unrank.max(started.elapsed());
            let started = Instant::now();
            let back = rank(&t, &p).unwrap();
            worst_rank = worst_rank.max(started.elapsed());
            if back != r {
                failures.push(format!("n={}: round trip failed", n));
            }
        }
        lines.push(format!(
            "n={}: tables {:?}, worst rank {:?}, worst unrank {:?} over {} samples (limit {:?})",
            n, build, worst_rank, worst_unrank, samples, limit
        ));
        if worst_rank >= limit || worst_unrank >= limit {
            failures.push(format!("n={} over the {:?} limit", n, limit));
        }
    }
    if failures.is_empty() {
        Ok(lines.join("; "))
    } else {
        Err(format!("{}; {}", failures.join("; "), lines.join("; ")))
    }
}

fn ratio(b: &BigUint, a: &BigUint) -> f64 {
    let shift = a.bits().saturating_sub(60);
    let (a, b) = (a >> shift, b >> shift);
    b.to_string().parse::<f64>().unwrap() / a.to_string().parse::<f64>().unwrap()
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    use rand::seq::SliceRandom;
    let mut v: Vec<u32> = (1..=n as u32).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

/// Heap's algorithm.
fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut a = items.to_vec();
    let mut c = vec![0; a.len()];
    let mut out = vec![a.clone()];
    let mut i = 0;
    while i < a.len() {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

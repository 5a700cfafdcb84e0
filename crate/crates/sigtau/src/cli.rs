//! The `sigtau` command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 bad input.

use std::io::Write;
use std::ops::Range;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sigtau_core::cycle::{verify_cycle, HamiltonianCycle};
use sigtau_core::oracle::{self, CheckResult, Report};
use sigtau_core::{BigUint, Error, LengthTables, Permutation, SlpProgram};

use crate::{random_rank, text};

#[derive(Parser, Debug)]
#[command(name = "sigtau", version, about = "Sigma-tau permutation generation, ranking and unranking")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stream the first letters or permutations of the path.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        limit: Option<u64>,
        /// Print the letter stream as one line.
        #[arg(long, conflicts_with = "perms")]
        letters: bool,
        /// Print one permutation per line (the default).
        #[arg(long)]
        perms: bool,
    },
    /// Position of a permutation in the path.
    Rank {
        #[arg(long)]
        n: usize,
        /// Entries separated by spaces or commas.
        #[arg(long)]
        perm: String,
    },
    /// Permutation at a position of the path.
    Unrank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: String,
    },
    /// Print the grammar.
    Slp {
        #[arg(long)]
        n: usize,
        /// Print rule count, symbol count and encoded size instead.
        #[arg(long)]
        stats: bool,
        /// Include the rules used by the cycle variant.
        #[arg(long)]
        extended: bool,
    },
    /// Check the path against the brute-force successor rule.
    Verify {
        #[arg(long)]
        n: usize,
        /// Also check the cycle variant.
        #[arg(long)]
        cycle: bool,
        /// Worker threads for the round-trip checks.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Time random rank and unrank round trips.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        ops: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Hamiltonian-cycle variant.
    Cycle {
        #[command(subcommand)]
        action: CycleCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum CycleCommand {
    Rank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        perm: String,
    },
    Unrank {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: String,
    },
    Verify {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Checks,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Checks) => 1,
        Err(Failure::Input(message)) => {
            let _ = writeln!(err, "error: {}", message);
            2
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Gen { n, limit, letters, .. } => gen(*n, *limit, *letters, json, out),
        Command::Rank { n, perm } => {
            let tables = LengthTables::new(*n)?;
            let p = parse_perm(perm)?;
            let r = sigtau_core::rank(&tables, &p)?;
            emit(out, json, &r.to_string(), json!({"n": n, "perm": p.as_slice(), "rank": r.to_string()}))
        }
        Command::Unrank { n, rank } => {
            let tables = LengthTables::new(*n)?;
            let r = parse_rank(rank)?;
            let p = sigtau_core::unrank(&tables, &r)?;
            emit(out, json, &p.to_string(), json!({"n": n, "rank": r.to_string(), "perm": p.as_slice()}))
        }
        Command::Slp { n, stats, extended } => {
            let program = if *extended { SlpProgram::build_extended(*n)? } else { SlpProgram::build(*n)? };
            if *stats {
                let (rules, symbols, bits) = (program.rule_count(), program.symbol_count(), program.encoded_bits());
                let line = format!("rules={} symbols={} bits={}", rules, symbols, bits);
                emit(out, json, &line, json!({"n": n, "rules": rules, "symbols": symbols, "bits": bits}))
            } else {
                let rendered = text::render(&program);
                emit(out, json, rendered.trim_end(), json!({"n": n, "grammar": rendered}))
            }
        }
        Command::Verify { n, cycle, threads } => {
            let threads = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |v| v.get()));
            let mut report = verify_sharded(*n, threads.max(1))?;
            if *cycle {
                report.checks.extend(verify_cycle(*n)?.checks);
            }
            print_report(out, json, &report)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Bench { n, ops, seed } => bench(*n, *ops, *seed, json, out),
        Command::Cycle { action } => match action {
            CycleCommand::Rank { n, perm } => {
                let cycle = HamiltonianCycle::new(*n)?;
                let p = parse_perm(perm)?;
                let r = cycle.rank(&p)?;
                emit(out, json, &r.to_string(), json!({"n": n, "perm": p.as_slice(), "rank": r.to_string()}))
            }
            CycleCommand::Unrank { n, rank } => {
                let cycle = HamiltonianCycle::new(*n)?;
                let r = parse_rank(rank)?;
                let p = cycle.unrank(&r)?;
                emit(out, json, &p.to_string(), json!({"n": n, "rank": r.to_string(), "perm": p.as_slice()}))
            }
            CycleCommand::Verify { n } => {
                let report = verify_cycle(*n)?;
                print_report(out, json, &report)?;
                if report.passed() {
                    Ok(())
                } else {
                    Err(Failure::Checks)
                }
            }
        },
    }
}

fn gen(n: usize, limit: Option<u64>, letters: bool, json: bool, out: &mut dyn Write) -> Outcome {
    let program = SlpProgram::build(n)?;
    let limit = limit.unwrap_or(u64::MAX);
    if letters {
        let s: String = program.letters().take(limit as usize).map(|l| l.as_char()).collect();
        return emit(out, json, &s, json!({"n": n, "letters": s}));
    }
    if json {
        let perms: Vec<Value> = program.permutations().take(limit as usize).map(|p| json!(p.as_slice())).collect();
        return emit(out, true, "", json!({"n": n, "perms": perms}));
    }
    for p in program.permutations().take(limit as usize) {
        writeln!(out, "{}", p).map_err(io_failure)?;
    }
    Ok(())
}

/// All oracle checks, with the round trips split into rank ranges checked
/// on separate threads.
pub fn verify_sharded(n: usize, threads: usize) -> Result<Report, Error> {
    if n > oracle::MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationLimit { n, max: oracle::MAX_ENUMERATION_ORDER });
    }
    let program = SlpProgram::build(n)?;
    let tables = LengthTables::new(n)?;
    let total: u64 = (1..=n as u64).product();
    let shards = shard_ranges(total, threads);
    let checks = std::thread::scope(|scope| {
        let count = scope.spawn(|| oracle::check_count(n));
        let endpoints = scope.spawn(|| oracle::check_endpoints(&program));
        let letters = scope.spawn(|| oracle::verify_program(&program));
        let trips: Vec<_> =
            shards.iter().map(|r| scope.spawn(|| oracle::check_round_trips(&tables, r.clone()))).collect();
        let trips: Vec<CheckResult> = trips.into_iter().map(|h| h.join().expect("worker panicked")).collect();
        let merged = trips.iter().find(|c| !c.passed).cloned().unwrap_or_else(|| trips[0].clone());
        vec![
            count.join().expect("worker panicked"),
            endpoints.join().expect("worker panicked"),
            letters.join().expect("worker panicked"),
            merged,
        ]
    });
    Ok(Report { n, checks })
}

fn shard_ranges(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts as u64).clamp(1, total);
    (0..parts).map(|i| total * i / parts..total * (i + 1) / parts).collect()
}

fn bench(n: usize, ops: u64, seed: u64, json: bool, out: &mut dyn Write) -> Outcome {
    let started = Instant::now();
    let tables = LengthTables::new(n)?;
    let build = started.elapsed();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ranks: Vec<BigUint> = (0..ops).map(|_| random_rank(&mut rng, &tables)).collect();
    let started = Instant::now();
    for r in &ranks {
        let p = sigtau_core::unrank(&tables, r)?;
        if sigtau_core::rank(&tables, &p)? != *r {
            return Err(Failure::Input(format!("round trip failed at rank {}", r)));
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let per_op_us = if ops == 0 { 0.0 } else { elapsed * 1e6 / ops as f64 };
    let ops_per_sec = if elapsed > 0.0 { ops as f64 / elapsed } else { 0.0 };
    let line = format!(
        "n={} ops={} seed={} table_ms={:.3} ops_per_sec={:.1} latency_us={:.1}",
        n,
        ops,
        seed,
        build.as_secs_f64() * 1e3,
        ops_per_sec,
        per_op_us
    );
    let value = json!({
        "n": n, "ops": ops, "seed": seed,
        "table_ms": build.as_secs_f64() * 1e3,
        "ops_per_sec": ops_per_sec,
        "latency_us": per_op_us,
    });
    emit(out, json, &line, value)
}

pub fn report_json(report: &Report) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "status": if c.passed { "pass" } else { "fail" },
                "counterexample": c.counterexample,
            })
        })
        .collect();
    json!({"n": report.n, "passed": report.passed(), "checks": checks})
}

fn print_report(out: &mut dyn Write, json: bool, report: &Report) -> Outcome {
    if json {
        return emit(out, true, "", report_json(report));
    }
    write!(out, "{}", report).map_err(io_failure)
}

fn emit(out: &mut dyn Write, json: bool, line: &str, value: Value) -> Outcome {
    let r = if json { writeln!(out, "{}", value) } else { writeln!(out, "{}", line) };
    r.map_err(io_failure)
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Input(e.to_string())
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    s.parse::<Permutation>().map_err(Failure::from)
}

fn parse_rank(s: &str) -> Result<BigUint, Failure> {
    s.trim().parse::<BigUint>().map_err(|e| Failure::Input(format!("cannot parse `{}` as a rank: {}", s, e)))
}

//! Plain-text grammar format.
//!
//! ```text
//! n 6
//! W0 -> s1
//! W1 -> t s1 W0 g3 s2 W0 g2 s3 W0 g1 s4 W0 g0
//! W2 -> t s1 W1 g3 s2 W1 g2 s3 W1 g1 s4 W0 g0
//! V -> g3 s2 W2 g2 s3 W1 g1 s5
//! SEQ -> g1 g1 g1 g1 s2 V t V t V t V t V
//! ```
//!
//! `s<k>` is `σ^k`, `t` is `τ`, `g<k>` is `σ^k τ`. Rules appear in
//! dependency order: `W0, W1, ...`, then `V`, an optional `U`, then `SEQ`.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use sigtau_core::{Error, SlpProgram, Symbol};

pub fn render(program: &SlpProgram) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", program.n()).unwrap();
    for (lhs, rhs) in program.rules() {
        write!(out, "{} ->", lhs).unwrap();
        for s in rhs {
            write!(out, " {}", s).unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse(text: &str) -> Result<SlpProgram, ParseError> {
    let mut n = None;
    let mut w: Vec<Vec<Symbol>> = Vec::new();
    let (mut v, mut u, mut seq) = (None, None, None);
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let at = |message: String| ParseError { line: i + 1, message };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n ") {
            n = Some(rest.trim().parse::<usize>().map_err(|e| at(e.to_string()))?);
            continue;
        }
        let (lhs, rhs) = line.split_once("->").ok_or_else(|| at("expected `lhs -> rhs`".into()))?;
        let rhs = rhs.split_whitespace().map(parse_symbol).collect::<Result<Vec<_>, _>>().map_err(at)?;
        match lhs.trim() {
            "V" => v = Some(rhs),
            "U" => u = Some(rhs),
            "SEQ" => seq = Some(rhs),
            name => {
                let k = name
                    .strip_prefix('W')
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| at(format!("unknown rule `{}`", name)))?;
                if k != w.len() {
                    return Err(at(format!("expected W{}, found W{}", w.len(), k)));
                }
                w.push(rhs);
            }
        }
    }
    let end = text.lines().count();
    let missing = |what: &str| ParseError { line: end, message: format!("missing {}", what) };
    let n = n.ok_or_else(|| missing("`n` line"))?;
    let v = v.ok_or_else(|| missing("rule V"))?;
    let seq = seq.ok_or_else(|| missing("rule SEQ"))?;
    SlpProgram::from_rules(n, w, v, u, seq).map_err(|e: Error| ParseError { line: end, message: e.to_string() })
}

fn parse_symbol(token: &str) -> Result<Symbol, String> {
    let num = |rest: &str| rest.parse::<usize>().map_err(|_| format!("bad symbol `{}`", token));
    match token {
        "t" => Ok(Symbol::Tau),
        "V" => Ok(Symbol::V),
        "U" => Ok(Symbol::U),
        _ => match token.split_at(1) {
            ("s", k) => Ok(Symbol::Sigma(num(k)?)),
            ("g", k) => Ok(Symbol::Gamma(num(k)?)),
            ("W", k) => Ok(Symbol::W(num(k)?)),
            _ => Err(format!("bad symbol `{}`", token)),
        },
    }
}

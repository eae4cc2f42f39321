//! Library side of the `latsize` command-line tool.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

pub mod compute;
pub mod document;
pub mod report;
pub mod svg;

pub use compute::{AlgorithmChoice, parse_target};
pub use document::{PolytopeDocument, ResultDocument};

use lattice_size::Target;

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

/// An error carrying the process exit code it should produce.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub fn check(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_CHECK_FAILED,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

/// Exit code for an error: resource limits get 3, internal inconsistencies
/// 1, everything else (bad input, bad flags) 2.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(f) = err.downcast_ref::<Failure>() {
        return f.code;
    }
    match err.downcast_ref::<lattice_size::Error>() {
        Some(lattice_size::Error::ResourceLimit { .. }) => EXIT_RESOURCE,
        Some(lattice_size::Error::Inconsistent(_)) => EXIT_CHECK_FAILED,
        _ => EXIT_USAGE,
    }
}

/// `"5"` or `"4-8"`, inclusive.
pub fn parse_point_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected a count like 6 or a range like 4-8, got {s:?}");
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Seeded random point sets with coordinates uniform in `[0, max_coord]`.
/// Degenerate draws are kept.
pub fn generate(
    dim: usize,
    count: usize,
    max_coord: i64,
    points: (usize, usize),
    seed: u64,
) -> Vec<PolytopeDocument> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let k = rng.random_range(points.0..=points.1);
            let pts = (0..k)
                .map(|_| (0..dim).map(|_| rng.random_range(0..=max_coord)).collect())
                .collect();
            PolytopeDocument {
                dim,
                points: pts,
                name: Some(format!("gen-{seed}-{i}")),
            }
        })
        .collect()
}

/// Outcome of a batch run: one JSON line per non-blank input line.
pub struct BatchOutput {
    pub lines: Vec<String>,
    /// Some line produced a certificate that failed re-verification.
    pub unverified: bool,
}

fn batch_line(
    text: &str,
    target: Target,
    choice: AlgorithmChoice,
    pool_limit: usize,
) -> anyhow::Result<ResultDocument> {
    let doc = PolytopeDocument::parse(text)?;
    let p = doc.polytope()?;
    let mut docs = compute::run(doc.name.clone(), &p, target, choice, pool_limit)?;
    Ok(docs.remove(0).1)
}

/// Process JSONL input, preserving line order. Lines are independent, so
/// they run on a pool of `threads` workers (0 picks a default).
pub fn batch(
    input: &str,
    target: Target,
    choice: AlgorithmChoice,
    pool_limit: usize,
    threads: usize,
) -> anyhow::Result<BatchOutput> {
    let jobs: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    let results: Vec<(String, bool)> = pool.install(|| {
        jobs.par_iter()
            .map(|&(line, text)| match batch_line(text, target, choice, pool_limit) {
                Ok(doc) => {
                    let ok = doc.verified;
                    (serde_json::to_string(&doc).expect("serializable"), ok)
                }
                Err(e) => (json!({"line": line, "error": format!("{e:#}")}).to_string(), true),
            })
            .collect()
    });
    Ok(BatchOutput {
        unverified: results.iter().any(|r| !r.1),
        lines: results.into_iter().map(|r| r.0).collect(),
    })
}

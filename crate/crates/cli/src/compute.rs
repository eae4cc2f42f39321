//! Dispatch from target and algorithm names to the library.

use std::fmt;
use std::time::Instant;

use lattice_size::search::{brute_force_search, lattice_width_brute, SearchOptions};
use lattice_size::size2d::{lattice_width_fast, ls_sigma_fast, ls_sigma_ul, ls_square_fast};
use lattice_size::{Algorithm, LatticePolytope, SizeCertificate, Target};

use crate::document::ResultDocument;
use crate::Failure;

/// Algorithm selection on the command line; `All` runs every applicable one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmChoice {
    Auto,
    One(Algorithm),
    All,
}

impl AlgorithmChoice {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Self::Auto),
            "fast" => Ok(Self::One(Algorithm::Fast)),
            "ul" => Ok(Self::One(Algorithm::UpperLower)),
            "brute" => Ok(Self::One(Algorithm::Brute)),
            "all" => Ok(Self::All),
            other => Err(format!("unknown algorithm {other:?} (expected auto, fast, ul, brute or all)")),
        }
    }
}

impl fmt::Display for AlgorithmChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Auto => f.write_str("auto"),
            Self::One(a) => write!(f, "{a}"),
            Self::All => f.write_str("all"),
        }
    }
}

pub fn parse_target(s: &str) -> Result<Target, String> {
    match s {
        "sigma" => Ok(Target::Simplex),
        "cube" => Ok(Target::Cube),
        "width" => Ok(Target::Width),
        other => Err(format!("unknown target {other:?} (expected sigma, cube or width)")),
    }
}

/// Algorithms that apply to the given dimension and target, in report order.
pub fn applicable(dim: usize, target: Target) -> Vec<Algorithm> {
    let mut out = Vec::new();
    if dim == 2 {
        out.push(Algorithm::Fast);
        if target == Target::Simplex {
            out.push(Algorithm::UpperLower);
        }
    }
    out.push(Algorithm::Brute);
    out
}

pub fn certify(
    p: &LatticePolytope,
    target: Target,
    algorithm: Algorithm,
    pool_limit: usize,
) -> anyhow::Result<SizeCertificate> {
    let cert = match (algorithm, target) {
        (Algorithm::Fast, Target::Simplex) => ls_sigma_fast(p)?,
        (Algorithm::Fast, Target::Cube) => ls_square_fast(p)?,
        (Algorithm::Fast, Target::Width) => lattice_width_fast(p)?,
        (Algorithm::UpperLower, Target::Simplex) => ls_sigma_ul(p)?,
        (Algorithm::UpperLower, _) => {
            return Err(Failure::usage("the ul algorithm only computes the simplex size").into())
        }
        (Algorithm::Brute, Target::Width) => lattice_width_brute(p, pool_limit)?,
        (Algorithm::Brute, t) => {
            let opts = SearchOptions {
                pool_limit,
                ..SearchOptions::default()
            };
            brute_force_search(p, t, &opts)?.certificate
        }
    };
    Ok(cert)
}

/// Run the requested algorithms and re-verify each certificate.
///
/// With [`AlgorithmChoice::All`] a disagreement between values is reported
/// as a failure with exit code 1.
pub fn run(
    name: Option<String>,
    p: &LatticePolytope,
    target: Target,
    choice: AlgorithmChoice,
    pool_limit: usize,
) -> anyhow::Result<Vec<(SizeCertificate, ResultDocument)>> {
    let algorithms = match choice {
        AlgorithmChoice::Auto => vec![if p.dim() == 2 { Algorithm::Fast } else { Algorithm::Brute }],
        AlgorithmChoice::One(a) => vec![a],
        AlgorithmChoice::All => applicable(p.dim(), target),
    };
    let mut docs = Vec::new();
    for a in algorithms {
        let start = Instant::now();
        let cert = certify(p, target, a, pool_limit)?;
        let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
        let verified = cert.verify(p)?;
        docs.push((cert, ResultDocument::new(name.clone(), &cert, verified, elapsed_ms)));
    }
    if let Some(first) = docs.first() {
        if docs.iter().any(|d| d.1.value != first.1.value) {
            let summary: Vec<String> = docs.iter().map(|(_, d)| format!("{}={}", d.algorithm, d.value)).collect();
            return Err(Failure::check(format!("algorithms disagree: {}", summary.join(", "))).into());
        }
    }
    Ok(docs)
}

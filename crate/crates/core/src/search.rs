//! Exhaustive search over unimodular matrices, made finite by an inscribed
//! ball.
//!
//! If `l1(A·P) <= l` then every row of `A`, and every sum of a subset of its
//! rows, is a direction along which `P` has width at most `l`. A ball of
//! radius `R` inside `P` forces `w_v(P) >= 2R‖v‖`, so only directions with
//! `‖v‖ <= l/(2R)` can appear. The search enumerates them, keeps those of
//! small width, and tries every `n`-subset that forms a unimodular matrix.

use num_rational::BigRational;

pub use crate::directions::enumerate_primitive;

use crate::certificate::{
    flat_direction, low_dimensional, matrix_with_first_row, normalizing_map, Algorithm, SizeCertificate, Target,
};
use crate::directions::{NormCap, DEFAULT_POOL_LIMIT};
use crate::error::{Error, Result};
use crate::lattice::{sign_diagonals, AffineUnimodular, IntMat, IntVec};
use crate::polytope::LatticePolytope;
use crate::size2d::{nls_square, NaiveFit};

/// `l1(P) = max(x_1 + … + x_n) − min x_1 − … − min x_n`.
pub fn l1_nd(p: &LatticePolytope) -> Result<i64> {
    let ones = IntVec::new(&vec![1; p.dim()])?;
    let mut value = p.support(&ones)?;
    let mins = p.coordinate_min()?;
    for &m in mins.as_slice() {
        value = value.checked_sub(m).ok_or(Error::Overflow)?;
    }
    Ok(value)
}

/// `l1` of `D·P` for a sign vector `s`, without building the image.
fn signed_l1(p: &LatticePolytope, signs: &[i64]) -> Result<i64> {
    let s = IntVec::new(signs)?;
    let lo = p.coordinate_min()?;
    let hi = p.coordinate_max()?;
    let mut value = p.support(&s)?;
    for (i, &si) in signs.iter().enumerate() {
        let m = if si > 0 { lo.get(i) } else { -hi.get(i) };
        value = value.checked_sub(m).ok_or(Error::Overflow)?;
    }
    Ok(value)
}

/// Naive simplex size in any dimension: the best of the `2^n` sign-diagonal
/// fits, ties resolved in [`sign_diagonals`] order.
pub fn nls_sigma_nd(p: &LatticePolytope) -> Result<NaiveFit> {
    let mut best: Option<(i64, IntMat)> = None;
    for d in sign_diagonals(p.dim())? {
        let signs: Vec<i64> = (0..p.dim()).map(|i| d.get(i, i)).collect();
        let v = signed_l1(p, &signs)?;
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, d));
        }
    }
    let (value, d) = best.expect("at least one sign pattern");
    Ok(NaiveFit {
        value,
        map: normalizing_map(d, p)?,
    })
}

/// Pool of search directions with their cached extremes.
#[derive(Clone, Debug)]
pub struct CandidatePool {
    /// Canonical primitive directions sorted by `(width, v)`.
    pub vectors: Vec<IntVec>,
    pub widths: Vec<i64>,
    mins: Vec<i64>,
    maxs: Vec<i64>,
}

impl CandidatePool {
    /// Directions inside `cap`; with `max_width` set, only those along which
    /// `P` has width at most that.
    pub fn build(
        p: &LatticePolytope,
        cap: &NormCap,
        max_width: Option<i64>,
        limit: usize,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for v in enumerate_primitive(p.dim(), cap, limit)? {
            let lo = p.min_dot(&v)?;
            let hi = p.support(&v)?;
            let w = hi - lo;
            if max_width.is_none_or(|m| w <= m) {
                entries.push((w, v, lo, hi));
            }
        }
        entries.sort();
        Ok(Self {
            vectors: entries.iter().map(|e| e.1).collect(),
            widths: entries.iter().map(|e| e.0).collect(),
            mins: entries.iter().map(|e| e.2).collect(),
            maxs: entries.iter().map(|e| e.3).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// The bound that made the search finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBound {
    /// Radius of a ball certified to lie inside `P`.
    pub inradius: BigRational,
    /// Size of the starting certificate; the search looks for values
    /// at most this.
    pub initial: i64,
    /// `initial / (2R)`.
    pub norm_cap: NormCap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of directions enumerated before giving up.
    pub pool_limit: usize,
    /// Drop directions whose width exceeds the current best.
    pub width_pruning: bool,
    /// Simplex target only: for each pair of rows, require `r_i + r_j` or
    /// `r_i − r_j` to have width at most the current best.
    pub sum_pruning: bool,
    /// Keep every matrix attaining the optimum, not just the smallest.
    pub collect_witnesses: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            pool_limit: DEFAULT_POOL_LIMIT,
            width_pruning: true,
            sum_pruning: true,
            collect_witnesses: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub certificate: SizeCertificate,
    /// All optimal matrices in increasing order, when requested.
    pub witnesses: Vec<IntMat>,
    pub bound: SearchBound,
    pub pool_size: usize,
    /// Number of full `n`-tuples whose determinant was checked.
    pub tuples_examined: u64,
}

fn require_searchable(p: &LatticePolytope) -> Result<()> {
    if (1..=3).contains(&p.dim()) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension {
            dim: p.dim(),
            supported: "1..=3",
        })
    }
}

struct Search<'a> {
    p: &'a LatticePolytope,
    pool: &'a CandidatePool,
    target: Target,
    options: &'a SearchOptions,
    signs: Vec<IntMat>,
    best_value: i64,
    best: Option<IntMat>,
    witnesses: Vec<IntMat>,
    tuples: u64,
}

impl Search<'_> {
    fn n(&self) -> usize {
        self.p.dim()
    }

    fn run(&mut self, chosen: &mut Vec<usize>, start: usize) -> Result<()> {
        for j in start..self.pool.len() {
            if self.options.width_pruning && self.pool.widths[j] > self.best_value {
                break;
            }
            if !self.compatible(chosen, j)? {
                continue;
            }
            chosen.push(j);
            if chosen.len() == self.n() {
                self.evaluate(chosen)?;
            } else {
                self.run(chosen, j + 1)?;
            }
            chosen.pop();
        }
        Ok(())
    }

    /// Cheap necessary conditions for `chosen + [j]` to extend to an optimal
    /// matrix.
    fn compatible(&self, chosen: &[usize], j: usize) -> Result<bool> {
        let v = self.pool.vectors[j];
        if self.n() == 3 && chosen.len() == 1 {
            // Two rows extend to a unimodular 3x3 matrix iff their cross
            // product is primitive.
            let u = self.pool.vectors[chosen[0]];
            let (a, b) = (u.as_slice(), v.as_slice());
            let m = |i: usize, k: usize| a[i] as i128 * b[k] as i128 - a[k] as i128 * b[i] as i128;
            let g = gcd(gcd(m(1, 2), m(2, 0)), m(0, 1));
            if g != 1 {
                return Ok(false);
            }
        }
        if self.target == Target::Simplex && self.options.sum_pruning {
            for &i in chosen {
                let u = self.pool.vectors[i];
                let plus = self.p.width(&u.checked_add(&v)?)?;
                if plus <= self.best_value {
                    continue;
                }
                let minus = self.p.width(&u.checked_sub(&v)?)?;
                if minus > self.best_value {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn evaluate(&mut self, chosen: &[usize]) -> Result<()> {
        self.tuples += 1;
        let rows: Vec<IntVec> = chosen.iter().map(|&i| self.pool.vectors[i]).collect();
        let m = IntMat::from_rows(&rows)?;
        if m.det()?.abs() != 1 {
            return Ok(());
        }
        match self.target {
            Target::Cube => {
                // Rows are canonical; signs and row order do not change the box.
                let value = chosen.iter().map(|&i| self.pool.widths[i]).max().unwrap_or(0);
                let mut sorted = rows.clone();
                sorted.sort();
                self.offer(value, IntMat::from_rows(&sorted)?);
            }
            _ => {
                for d in self.signs.clone() {
                    let mut sum = IntVec::zero(self.n())?;
                    let mut value = 0i64;
                    for (k, &i) in chosen.iter().enumerate() {
                        let s = d.get(k, k);
                        sum = sum.checked_add(&self.pool.vectors[i].checked_scale(s)?)?;
                        let lo = if s > 0 { self.pool.mins[i] } else { -self.pool.maxs[i] };
                        value = value.checked_sub(lo).ok_or(Error::Overflow)?;
                    }
                    value = value.checked_add(self.p.support(&sum)?).ok_or(Error::Overflow)?;
                    if value <= self.best_value {
                        // l1 is symmetric in the coordinates, so row order is
                        // free; sorted rows give the canonical representative.
                        let mut signed: Vec<IntVec> = rows
                            .iter()
                            .enumerate()
                            .map(|(k, r)| r.checked_scale(d.get(k, k)))
                            .collect::<Result<_>>()?;
                        signed.sort();
                        self.offer(value, IntMat::from_rows(&signed)?);
                    }
                }
            }
        }
        Ok(())
    }

    fn offer(&mut self, value: i64, m: IntMat) {
        if value > self.best_value {
            return;
        }
        if value < self.best_value || self.best.is_none() {
            if value < self.best_value {
                self.witnesses.clear();
            }
            self.best_value = value;
            self.best = Some(m);
        } else if self.best.is_some_and(|b| m < b) {
            self.best = Some(m);
        }
        if self.options.collect_witnesses {
            self.witnesses.push(m);
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_flat(p: &LatticePolytope) -> Result<()> {
    if p.is_full_dimensional() {
        Ok(())
    } else {
        Err(p.degenerate_error())
    }
}

fn initial_bound(p: &LatticePolytope, target: Target) -> Result<i64> {
    match target {
        Target::Simplex => Ok(nls_sigma_nd(p)?.value),
        Target::Cube => nls_square(p),
        Target::Width => Err(Error::Inconsistent(
            "use lattice_width_brute for the width target".into(),
        )),
    }
}

/// Exact simplex or cube lattice size of a polytope of dimension at most 3.
pub fn brute_force_search(
    p: &LatticePolytope,
    target: Target,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    require_searchable(p)?;
    let initial = initial_bound(p, target)?;
    let trivial = |cert: SizeCertificate| SearchOutcome {
        witnesses: if options.collect_witnesses { vec![*cert.map.matrix()] } else { Vec::new() },
        certificate: cert,
        bound: SearchBound {
            inradius: BigRational::from_integer(0.into()),
            initial,
            norm_cap: NormCap::integer(0),
        },
        pool_size: 0,
        tuples_examined: 0,
    };
    if let Some(c) = low_dimensional(p, target, Algorithm::Brute)? {
        return Ok(trivial(c));
    }
    check_flat(p)?;
    let inradius = p.inradius_lower_bound()?;
    let norm_cap = NormCap::for_width(initial, &inradius)?;
    let max_width = options.width_pruning.then_some(initial);
    let pool = CandidatePool::build(p, &norm_cap, max_width, options.pool_limit)?;
    let mut search = Search {
        p,
        pool: &pool,
        target,
        options,
        signs: sign_diagonals(p.dim())?,
        best_value: initial,
        best: None,
        witnesses: Vec::new(),
        tuples: 0,
    };
    search.run(&mut Vec::with_capacity(p.dim()), 0)?;
    let Some(best) = search.best else {
        return Err(Error::Inconsistent(format!(
            "search found no matrix reaching the starting bound {initial}"
        )));
    };
    let mut witnesses = search.witnesses;
    witnesses.sort();
    witnesses.dedup();
    Ok(SearchOutcome {
        certificate: SizeCertificate {
            target,
            value: search.best_value,
            map: normalizing_map(best, p)?,
            algorithm: Algorithm::Brute,
        },
        witnesses,
        bound: SearchBound {
            inradius,
            initial,
            norm_cap,
        },
        pool_size: pool.len(),
        tuples_examined: search.tuples,
    })
}

/// [`brute_force_search`] with default options.
pub fn brute_force_ls(p: &LatticePolytope, target: Target) -> Result<SizeCertificate> {
    Ok(brute_force_search(p, target, &SearchOptions::default())?.certificate)
}

/// Lattice width by enumerating every direction that could beat the best
/// coordinate direction.
pub fn lattice_width_brute(p: &LatticePolytope, pool_limit: usize) -> Result<SizeCertificate> {
    require_searchable(p)?;
    if let Some(c) = low_dimensional(p, Target::Width, Algorithm::Brute)? {
        return Ok(c);
    }
    if !p.is_full_dimensional() {
        let v = flat_direction(p)?;
        return Ok(SizeCertificate {
            target: Target::Width,
            value: 0,
            map: normalizing_map(matrix_with_first_row(&v)?, p)?,
            algorithm: Algorithm::Brute,
        });
    }
    let lo = p.coordinate_min()?;
    let hi = p.coordinate_max()?;
    let initial = (0..p.dim()).map(|i| hi.get(i) - lo.get(i)).min().unwrap_or(0);
    let cap = NormCap::for_width(initial, &p.inradius_lower_bound()?)?;
    let pool = CandidatePool::build(p, &cap, Some(initial), pool_limit)?;
    let (Some(&v), Some(&w)) = (pool.vectors.first(), pool.widths.first()) else {
        return Err(Error::Inconsistent("no direction reaches the coordinate width".into()));
    };
    Ok(SizeCertificate {
        target: Target::Width,
        value: w,
        map: normalizing_map(matrix_with_first_row(&v)?, p)?,
        algorithm: Algorithm::Brute,
    })
}

/// All canonical primitive directions inside `cap` along which `P` has width
/// at most `bound`, in lexicographic order.
pub fn directions_with_width_at_most(
    p: &LatticePolytope,
    bound: i64,
    cap: &NormCap,
    limit: usize,
) -> Result<Vec<IntVec>> {
    let mut out = Vec::new();
    for v in enumerate_primitive(p.dim(), cap, limit)? {
        if p.width(&v)? <= bound {
            out.push(v);
        }
    }
    Ok(out)
}

/// Minimum of `l1(A·P)` over unimodular `A` with entries in `{−1, 0, 1}`.
/// Matrices are visited in lexicographic order of their row-major entries
/// and the first minimum is returned.
pub fn min_l1_over_small_matrices(p: &LatticePolytope) -> Result<(i64, IntMat)> {
    let n = p.dim();
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedDimension {
            dim: n,
            supported: "1..=3",
        });
    }
    let cells = n * n;
    let mut digits = vec![0usize; cells];
    let mut best: Option<(i64, IntMat)> = None;
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|r| (0..n).map(|c| digits[r * n + c] as i64 - 1).collect())
            .collect();
        let a = IntMat::from_nested(&rows)?;
        if a.det()?.abs() == 1 {
            let image = p.transform(&AffineUnimodular::linear(a)?)?;
            let v = l1_nd(&image)?;
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                best = Some((v, a));
            }
        }
        let mut k = cells;
        loop {
            if k == 0 {
                return best.ok_or_else(|| Error::Inconsistent("no unimodular matrix".into()));
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < 3 {
                break;
            }
            digits[k] = 0;
        }
    }
}

//! Lattice polytopes given by finite point sets.
//!
//! A [`LatticePolytope`] is the convex hull of its points. Support values and
//! widths are computed over the hull vertices, which are found once and cached.

mod hull;
mod inradius;

use std::sync::OnceLock;

use num_rational::BigRational;

pub use hull::{convex_hull_2d, convex_hull_3d, orient2d, orient3d, Facet, Hull2d, Hull3d};
pub use inradius::InscribedBall;

use crate::directions::{enumerate_primitive, NormCap, DEFAULT_POOL_LIMIT};
use crate::error::{Error, Result};
use crate::lattice::{AffineUnimodular, IntVec, MAX_DIM};

/// What the hull of a point set looks like.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullKind {
    Point,
    Segment,
    /// Full-dimensional 2D polygon.
    Polygon,
    /// Full-dimensional 3D polytope.
    Polyhedron,
    /// Not full-dimensional and not a point or segment, or a dimension with no
    /// hull routine. Vertices are then all input points.
    Unstructured,
}

#[derive(Clone, Debug)]
struct HullData {
    kind: HullKind,
    vertices: Vec<IntVec>,
    facets: Vec<Facet>,
}

#[derive(Clone, Debug)]
pub struct LatticePolytope {
    dim: usize,
    points: Vec<IntVec>,
    affine_dim: usize,
    hull: OnceLock<std::result::Result<HullData, Error>>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    /// Build from lattice points. Duplicates are removed and the points sorted.
    pub fn new(mut points: Vec<IntVec>) -> Result<Self> {
        let first = points.first().ok_or(Error::Empty)?;
        let dim = first.dim();
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        points.sort();
        points.dedup();
        let affine_dim = affine_rank(&points)?;
        Ok(Self {
            dim,
            points,
            affine_dim,
            hull: OnceLock::new(),
        })
    }

    pub fn from_nested<R: AsRef<[i64]>>(points: &[R]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| IntVec::new(p.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(pts)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[IntVec] {
        &self.points
    }

    /// Dimension of the affine hull (0 for a point).
    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    fn hull_data(&self) -> Result<&HullData> {
        self.hull
            .get_or_init(|| self.compute_hull())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_hull(&self) -> Result<HullData> {
        let unstructured = || HullData {
            kind: HullKind::Unstructured,
            vertices: self.points.clone(),
            facets: Vec::new(),
        };
        match self.affine_dim {
            0 => {
                return Ok(HullData {
                    kind: HullKind::Point,
                    vertices: vec![self.points[0]],
                    facets: Vec::new(),
                })
            }
            1 => {
                let first = self.points[0];
                let last = *self.points.last().expect("nonempty");
                let facets = if self.dim == 1 {
                    vec![
                        Facet { normal: IntVec::from([1]), offset: first.get(0) },
                        Facet { normal: IntVec::from([-1]), offset: -last.get(0) },
                    ]
                } else {
                    Vec::new()
                };
                return Ok(HullData {
                    kind: HullKind::Segment,
                    vertices: vec![first, last],
                    facets,
                });
            }
            _ => {}
        }
        if !self.is_full_dimensional() {
            return Ok(unstructured());
        }
        match self.dim {
            2 => {
                let h = convex_hull_2d(&self.points)?;
                let facets = h.facets()?;
                Ok(HullData {
                    kind: HullKind::Polygon,
                    vertices: h.vertices,
                    facets,
                })
            }
            3 => {
                let h = convex_hull_3d(&self.points)?;
                Ok(HullData {
                    kind: HullKind::Polyhedron,
                    vertices: h.vertices,
                    facets: h.facets,
                })
            }
            _ => Ok(unstructured()),
        }
    }

    pub fn hull_kind(&self) -> Result<HullKind> {
        Ok(self.hull_data()?.kind)
    }

    /// Extreme points (counterclockwise in 2D), or all points where no hull
    /// routine applies.
    pub fn vertices(&self) -> Result<&[IntVec]> {
        Ok(&self.hull_data()?.vertices)
    }

    /// Facet inequalities `normal · x >= offset` of a full-dimensional
    /// polytope in dimension 1, 2 or 3.
    pub fn facets(&self) -> Result<&[Facet]> {
        let h = self.hull_data()?;
        if !self.is_full_dimensional() {
            return Err(self.degenerate_error());
        }
        if h.facets.is_empty() {
            return Err(Error::UnsupportedDimension {
                dim: self.dim,
                supported: "1..=3",
            });
        }
        Ok(&h.facets)
    }

    pub(crate) fn degenerate_error(&self) -> Error {
        Error::Degenerate {
            dim: self.dim,
            affine_dim: self.affine_dim,
        }
    }

    fn check_dim(&self, v: &IntVec) -> Result<()> {
        if v.dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.dim(),
            })
        }
    }

    /// `max v·x` over the polytope.
    pub fn support(&self, v: &IntVec) -> Result<i64> {
        self.check_dim(v)?;
        let mut best = i64::MIN;
        for x in self.vertices()? {
            best = best.max(v.dot(x)?);
        }
        Ok(best)
    }

    /// `min v·x` over the polytope.
    pub fn min_dot(&self, v: &IntVec) -> Result<i64> {
        self.check_dim(v)?;
        let mut best = i64::MAX;
        for x in self.vertices()? {
            best = best.min(v.dot(x)?);
        }
        Ok(best)
    }

    /// Width `max v·x − min v·x` in direction `v`.
    pub fn width(&self, v: &IntVec) -> Result<i64> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        self.support(v)?
            .checked_sub(self.min_dot(v)?)
            .ok_or(Error::Overflow)
    }

    pub fn coordinate_min(&self) -> Result<IntVec> {
        let mut m = [i64::MAX; MAX_DIM];
        for p in self.vertices()? {
            for (i, slot) in m.iter_mut().enumerate().take(self.dim) {
                *slot = (*slot).min(p.get(i));
            }
        }
        IntVec::new(&m[..self.dim])
    }

    pub fn coordinate_max(&self) -> Result<IntVec> {
        let mut m = [i64::MIN; MAX_DIM];
        for p in self.vertices()? {
            for (i, slot) in m.iter_mut().enumerate().take(self.dim) {
                *slot = (*slot).max(p.get(i));
            }
        }
        IntVec::new(&m[..self.dim])
    }

    /// Image under an affine unimodular map.
    pub fn transform(&self, map: &AffineUnimodular) -> Result<Self> {
        let pts = self
            .points
            .iter()
            .map(|p| map.apply(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(pts)
    }

    /// Shift so every coordinate has minimum 0; also returns the shift.
    pub fn translate_min_to_origin(&self) -> Result<(Self, IntVec)> {
        let t = self.coordinate_min()?.checked_neg()?;
        let moved = self.transform(&AffineUnimodular::translation_only(t)?)?;
        Ok((moved, t))
    }

    fn image_vertices(&self, map: &AffineUnimodular) -> Result<Vec<IntVec>> {
        if map.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: map.dim(),
            });
        }
        self.vertices()?.iter().map(|p| map.apply(p)).collect()
    }

    /// Whether `map(P)` lies in `l·Σ`: all coordinates `>= 0`, sum `<= l`.
    pub fn contained_in_simplex_dilate(&self, map: &AffineUnimodular, l: i64) -> Result<bool> {
        for q in self.image_vertices(map)? {
            let mut sum: i128 = 0;
            for &x in q.as_slice() {
                if x < 0 {
                    return Ok(false);
                }
                sum += x as i128;
            }
            if sum > l as i128 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `map(P)` lies in the cube `[0, k]^n`.
    pub fn contained_in_cube_dilate(&self, map: &AffineUnimodular, k: i64) -> Result<bool> {
        for q in self.image_vertices(map)? {
            if q.as_slice().iter().any(|&x| x < 0 || x > k) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest inscribed ball, found by exact LP over the facet inequalities.
    pub fn chebyshev_ball(&self) -> Result<InscribedBall> {
        let facets = self.facets()?;
        let simplex = affinely_independent_subset(self.vertices()?, self.dim)?;
        let interior = inradius::barycenter(&simplex);
        inradius::chebyshev_ball(facets, &interior)
    }

    /// A positive rational `R` such that some ball of radius `R` lies inside
    /// the polytope. Used to bound the norm of short-width directions.
    pub fn inradius_lower_bound(&self) -> Result<BigRational> {
        Ok(self.chebyshev_ball()?.radius)
    }

    /// Minimum width over primitive directions with `‖v‖ <= cap`, and the
    /// lexicographically smallest canonical direction achieving it.
    pub fn lattice_width_exhaustive(&self, cap: &NormCap) -> Result<(i64, IntVec)> {
        self.lattice_width_exhaustive_limited(cap, DEFAULT_POOL_LIMIT)
    }

    pub fn lattice_width_exhaustive_limited(
        &self,
        cap: &NormCap,
        limit: usize,
    ) -> Result<(i64, IntVec)> {
        let dirs = enumerate_primitive(self.dim, cap, limit)?;
        let mut best: Option<(i64, IntVec)> = None;
        for v in dirs {
            let w = self.width(&v)?;
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, v));
            }
        }
        best.ok_or_else(|| Error::Inconsistent("norm cap admits no directions".into()))
    }
}

/// Rank of the differences `p_i − p_0`.
fn affine_rank(points: &[IntVec]) -> Result<usize> {
    let base = points[0];
    let rows: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| {
            p.as_slice()
                .iter()
                .zip(base.as_slice())
                .map(|(&a, &b)| a as i128 - b as i128)
                .collect()
        })
        .collect();
    rank(rows)
}

/// Integer row reduction, keeping rows gcd-normalized so entries stay small.
fn rank(mut rows: Vec<Vec<i128>>) -> Result<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let (a, b) = (rows[r][c], rows[i][c]);
            for k in 0..cols {
                let v = rows[i][k]
                    .checked_mul(a)
                    .zip(rows[r][k].checked_mul(b))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or(Error::Overflow)?;
                rows[i][k] = v;
            }
            let g = rows[i].iter().fold(0i128, |g, &x| gcd128(g, x));
            if g > 1 {
                for x in &mut rows[i] {
                    *x /= g;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(r)
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Greedily pick `dim + 1` affinely independent points.
fn affinely_independent_subset(points: &[IntVec], dim: usize) -> Result<Vec<IntVec>> {
    let mut chosen = vec![points[0]];
    for p in &points[1..] {
        let mut trial = chosen.clone();
        trial.push(*p);
        if affine_rank(&trial)? == trial.len() - 1 {
            chosen = trial;
            if chosen.len() == dim + 1 {
                return Ok(chosen);
            }
        }
    }
    Err(Error::Degenerate {
        dim,
        affine_dim: chosen.len() - 1,
    })
}

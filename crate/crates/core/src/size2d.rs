//! Lattice size of plane polygons.
//!
//! Two exact algorithms for the simplex size, both driven by cheap support
//! computations on hull vertices:
//!
//! * [`ls_sigma_fast`] reduces the polygon until its bounding box is optimal
//!   for the square and its narrowest box side is the lattice width, then
//!   reads the simplex size off the four sign-reflected fits.
//! * [`ls_sigma_ul`] descends along the shears `U = [[1,1],[0,1]]` and
//!   `L = [[1,0],[1,1]]` while they lower the naive simplex size.

use crate::certificate::{low_dimensional, normalizing_map, Algorithm, SizeCertificate, Target};
use crate::error::{Error, Result};
use crate::lattice::{AffineUnimodular, IntMat, IntVec};
use crate::polytope::LatticePolytope;

/// The four fitting quantities; `l1` fits `lΣ` itself, the others fit its
/// images under `diag(-1,-1)`, `diag(1,-1)` and `diag(-1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LValues {
    pub l1: i64,
    pub l2: i64,
    pub l3: i64,
    pub l4: i64,
}

impl LValues {
    pub fn as_array(&self) -> [i64; 4] {
        [self.l1, self.l2, self.l3, self.l4]
    }

    pub fn min(&self) -> i64 {
        self.l1.min(self.l2).min(self.l3).min(self.l4)
    }
}

/// Naive fit: the best sign-diagonal matrix plus normalizing translation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NaiveFit {
    pub value: i64,
    pub map: AffineUnimodular,
}

/// One reduction step: the matrix applied and the naive square size before
/// and after.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub matrix: IntMat,
    pub before: i64,
    pub after: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// Accumulated matrix with the translation normalizing the image.
    pub final_map: AffineUnimodular,
}

fn require_plane(p: &LatticePolytope) -> Result<()> {
    if p.dim() == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension {
            dim: p.dim(),
            supported: "2",
        })
    }
}

#[derive(Clone, Copy)]
struct Extremes {
    min_x: i64,
    max_x: i64,
    min_y: i64,
    max_y: i64,
    min_sum: i64,
    max_sum: i64,
    min_diff: i64,
    max_diff: i64,
}

fn extremes(points: &[IntVec]) -> Result<Extremes> {
    let mut e = Extremes {
        min_x: i64::MAX,
        max_x: i64::MIN,
        min_y: i64::MAX,
        max_y: i64::MIN,
        min_sum: i64::MAX,
        max_sum: i64::MIN,
        min_diff: i64::MAX,
        max_diff: i64::MIN,
    };
    for p in points {
        let (x, y) = (p.get(0), p.get(1));
        let s = x.checked_add(y).ok_or(Error::Overflow)?;
        let d = x.checked_sub(y).ok_or(Error::Overflow)?;
        e.min_x = e.min_x.min(x);
        e.max_x = e.max_x.max(x);
        e.min_y = e.min_y.min(y);
        e.max_y = e.max_y.max(y);
        e.min_sum = e.min_sum.min(s);
        e.max_sum = e.max_sum.max(s);
        e.min_diff = e.min_diff.min(d);
        e.max_diff = e.max_diff.max(d);
    }
    Ok(e)
}

fn add3(a: i64, b: i64, c: i64) -> Result<i64> {
    a.checked_add(b)
        .and_then(|x| x.checked_add(c))
        .ok_or(Error::Overflow)
}

fn l_values_of(points: &[IntVec]) -> Result<LValues> {
    let e = extremes(points)?;
    Ok(LValues {
        l1: add3(e.max_sum, -e.min_x, -e.min_y)?,
        l2: add3(e.max_x, e.max_y, -e.min_sum)?,
        l3: add3(e.max_y, -e.min_x, e.max_diff)?,
        l4: add3(e.max_x, -e.min_y, -e.min_diff)?,
    })
}

/// `l1(P) = max(x+y) − min x − min y`, and its three reflected siblings.
pub fn l_values(p: &LatticePolytope) -> Result<LValues> {
    require_plane(p)?;
    l_values_of(p.vertices()?)
}

fn l1_of(points: &[IntVec]) -> Result<i64> {
    Ok(l_values_of(points)?.l1)
}

/// Sign-diagonal witnesses for l1..l4, in that order.
const REFLECTIONS: [[i64; 2]; 4] = [[1, 1], [-1, -1], [1, -1], [-1, 1]];

fn nls_sigma_of(points: &[IntVec]) -> Result<(i64, IntMat)> {
    let lv = l_values_of(points)?.as_array();
    let mut best = 0;
    for i in 1..4 {
        if lv[i] < lv[best] {
            best = i;
        }
    }
    Ok((lv[best], IntMat::diagonal(&REFLECTIONS[best])?))
}

/// Naive simplex size: the smallest of l1..l4, with the reflection and
/// translation that realize it (ties resolved in the order l1, l2, l3, l4).
pub fn nls_sigma_2d(p: &LatticePolytope) -> Result<NaiveFit> {
    require_plane(p)?;
    let (value, d) = nls_sigma_of(p.vertices()?)?;
    Ok(NaiveFit {
        value,
        map: normalizing_map(d, p)?,
    })
}

/// Naive cube size: the longest side of the bounding box. Any dimension.
pub fn nls_square(p: &LatticePolytope) -> Result<i64> {
    let lo = p.coordinate_min()?;
    let hi = p.coordinate_max()?;
    let mut best = 0;
    for i in 0..p.dim() {
        best = best.max(hi.get(i).checked_sub(lo.get(i)).ok_or(Error::Overflow)?);
    }
    Ok(best)
}

fn apply_all(m: &IntMat, points: &[IntVec]) -> Result<Vec<IntVec>> {
    points.iter().map(|p| m.mul_vec(p)).collect()
}

/// Box side lengths as `(max, min)`.
fn box_key(e: &Extremes) -> Result<(i64, i64)> {
    let wx = e.max_x.checked_sub(e.min_x).ok_or(Error::Overflow)?;
    let wy = e.max_y.checked_sub(e.min_y).ok_or(Error::Overflow)?;
    Ok((wx.max(wy), wx.min(wy)))
}

fn shears() -> Result<[IntMat; 6]> {
    Ok([
        IntMat::from_nested(&[[1, 0], [1, 1]])?,
        IntMat::from_nested(&[[1, 0], [1, -1]])?,
        IntMat::from_nested(&[[1, 1], [0, 1]])?,
        IntMat::from_nested(&[[1, -1], [0, 1]])?,
        IntMat::from_nested(&[[0, 1], [1, 1]])?,
        IntMat::from_nested(&[[0, 1], [1, -1]])?,
    ])
}

/// Shear the polygon until both diagonal widths are at least the naive square
/// size `k`, then swap coordinates if needed so the `x`-width is the smaller
/// box side. At that point `k` is the square size and the `x`-width is the
/// lattice width.
///
/// Each step applies the candidate shear minimizing the image's box sides
/// `(longer, shorter)` lexicographically; the pair strictly decreases.
pub fn reduce_square(p: &LatticePolytope) -> Result<(ReductionTrace, i64)> {
    require_plane(p)?;
    if !p.is_full_dimensional() {
        return Err(p.degenerate_error());
    }
    let candidates = shears()?;
    let mut acc = IntMat::identity(2)?;
    let mut pts = p.vertices()?.to_vec();
    let mut steps = Vec::new();
    loop {
        let e = extremes(&pts)?;
        let key = box_key(&e)?;
        let k = key.0;
        let w_sum = e.max_sum - e.min_sum;
        let w_diff = e.max_diff - e.min_diff;
        if w_sum >= k && w_diff >= k {
            break;
        }
        let mut best: Option<((i64, i64), IntMat, Vec<IntVec>)> = None;
        for s in &candidates {
            let img = apply_all(s, &pts)?;
            let img_key = box_key(&extremes(&img)?)?;
            if best.as_ref().is_none_or(|(bk, _, _)| img_key < *bk) {
                best = Some((img_key, *s, img));
            }
        }
        let (img_key, s, img) = best.expect("six candidates");
        if img_key >= key {
            return Err(Error::Inconsistent(format!(
                "no shear shrinks the bounding box {key:?} although a diagonal width is below {k}"
            )));
        }
        steps.push(ReductionStep {
            matrix: s,
            before: k,
            after: img_key.0,
        });
        acc = s.mul(&acc)?;
        pts = img;
    }
    let e = extremes(&pts)?;
    let k = box_key(&e)?.0;
    if e.max_x - e.min_x > e.max_y - e.min_y {
        let swap = IntMat::from_nested(&[[0, 1], [1, 0]])?;
        steps.push(ReductionStep {
            matrix: swap,
            before: k,
            after: k,
        });
        acc = swap.mul(&acc)?;
    }
    let final_map = normalizing_map(acc, p)?;
    Ok((ReductionTrace { steps, final_map }, k))
}

/// Simplex lattice size by square reduction: if `B` computes the square
/// size and the lattice width, the naive simplex fit of `B·P` is optimal.
pub fn ls_sigma_fast(p: &LatticePolytope) -> Result<SizeCertificate> {
    require_plane(p)?;
    if let Some(c) = low_dimensional(p, Target::Simplex, Algorithm::Fast)? {
        return Ok(c);
    }
    let (trace, _) = reduce_square(p)?;
    let b = *trace.final_map.matrix();
    let reduced = apply_all(&b, p.vertices()?)?;
    let (value, d) = nls_sigma_of(&reduced)?;
    Ok(SizeCertificate {
        target: Target::Simplex,
        value,
        map: normalizing_map(d.mul(&b)?, p)?,
        algorithm: Algorithm::Fast,
    })
}

/// Square lattice size from the reduction.
pub fn ls_square_fast(p: &LatticePolytope) -> Result<SizeCertificate> {
    require_plane(p)?;
    if let Some(c) = low_dimensional(p, Target::Cube, Algorithm::Fast)? {
        return Ok(c);
    }
    let (trace, k) = reduce_square(p)?;
    Ok(SizeCertificate {
        target: Target::Cube,
        value: k,
        map: trace.final_map,
        algorithm: Algorithm::Fast,
    })
}

/// Lattice width from the reduction: the first row of the final matrix.
pub fn lattice_width_fast(p: &LatticePolytope) -> Result<SizeCertificate> {
    require_plane(p)?;
    if let Some(c) = low_dimensional(p, Target::Width, Algorithm::Fast)? {
        return Ok(c);
    }
    let (trace, _) = reduce_square(p)?;
    let value = p.width(&trace.final_map.matrix().row(0))?;
    Ok(SizeCertificate {
        target: Target::Width,
        value,
        map: trace.final_map,
        algorithm: Algorithm::Fast,
    })
}

/// Simplex lattice size by `U`/`L` descent. Returns the certificate and the
/// descent matrices applied (reflections not included).
pub fn ls_sigma_ul_traced(p: &LatticePolytope) -> Result<(SizeCertificate, Vec<IntMat>)> {
    require_plane(p)?;
    if let Some(c) = low_dimensional(p, Target::Simplex, Algorithm::UpperLower)? {
        return Ok((c, Vec::new()));
    }
    let upper = IntMat::from_nested(&[[1, 1], [0, 1]])?;
    let lower = IntMat::from_nested(&[[1, 0], [1, 1]])?;
    let mut acc = IntMat::identity(2)?;
    let mut pts = p.vertices()?.to_vec();
    let mut descents = Vec::new();
    let value = loop {
        let (l, d) = nls_sigma_of(&pts)?;
        acc = d.mul(&acc)?;
        pts = apply_all(&d, &pts)?;
        debug_assert_eq!(l1_of(&pts)?, l);
        let mut moved = false;
        for m in [upper, lower] {
            let img = apply_all(&m, &pts)?;
            if nls_sigma_of(&img)?.0 < l {
                acc = m.mul(&acc)?;
                pts = img;
                descents.push(m);
                moved = true;
                break;
            }
        }
        if !moved {
            break l;
        }
    };
    let cert = SizeCertificate {
        target: Target::Simplex,
        value,
        map: normalizing_map(acc, p)?,
        algorithm: Algorithm::UpperLower,
    };
    Ok((cert, descents))
}

pub fn ls_sigma_ul(p: &LatticePolytope) -> Result<SizeCertificate> {
    Ok(ls_sigma_ul_traced(p)?.0)
}

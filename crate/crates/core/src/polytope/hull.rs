//! Exact convex hulls in the plane and in 3-space.
//!
//! Both hulls only ever evaluate signs of integer determinants, widened to
//! `i128` and overflow-checked, so there is no tolerance anywhere.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lattice::{narrow, IntVec};

/// A supporting half-space `normal · x >= offset` with a primitive inward normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: IntVec,
    pub offset: i64,
}

impl Facet {
    pub fn slack(&self, p: &IntVec) -> Result<i64> {
        self.normal
            .dot(p)?
            .checked_sub(self.offset)
            .ok_or(Error::Overflow)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull2d {
    /// Extreme points in counterclockwise order, starting at the
    /// lexicographically smallest one.
    pub vertices: Vec<IntVec>,
    /// Set when the input is a single point or lies on one line.
    pub degenerate: bool,
}

impl Hull2d {
    /// Edge half-spaces of a full-dimensional polygon.
    pub fn facets(&self) -> Result<Vec<Facet>> {
        if self.degenerate {
            return Err(Error::Degenerate {
                dim: 2,
                affine_dim: if self.vertices.len() == 1 { 0 } else { 1 },
            });
        }
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                let d = b.checked_sub(&a)?;
                // Left of a counterclockwise edge is inside.
                let normal = IntVec::from([-d.get(1), d.get(0)]).primitive_part()?;
                Ok(Facet {
                    normal,
                    offset: normal.dot(&a)?,
                })
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull3d {
    /// Extreme points, sorted lexicographically.
    pub vertices: Vec<IntVec>,
    /// One entry per facet plane, sorted.
    pub facets: Vec<Facet>,
}

fn check_points(points: &[IntVec], dim: usize) -> Result<()> {
    if points.is_empty() {
        return Err(Error::Empty);
    }
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    Ok(())
}

fn sub128(a: &IntVec, b: &IntVec) -> [i128; 3] {
    let mut out = [0i128; 3];
    for (i, slot) in out.iter_mut().enumerate().take(a.dim()) {
        *slot = a.get(i) as i128 - b.get(i) as i128;
    }
    out
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Orientation of `c` relative to the directed line `a → b`; positive for a
/// left turn.
pub fn orient2d(a: &IntVec, b: &IntVec, c: &IntVec) -> Result<i128> {
    let u = sub128(b, a);
    let v = sub128(c, a);
    mul(u[0], v[1])?
        .checked_sub(mul(u[1], v[0])?)
        .ok_or(Error::Overflow)
}

fn cross3(u: [i128; 3], v: [i128; 3]) -> Result<[i128; 3]> {
    let c = |i: usize, j: usize| -> Result<i128> {
        mul(u[i], v[j])?
            .checked_sub(mul(u[j], v[i])?)
            .ok_or(Error::Overflow)
    };
    Ok([c(1, 2)?, c(2, 0)?, c(0, 1)?])
}

fn dot3(u: [i128; 3], v: [i128; 3]) -> Result<i128> {
    let mut acc: i128 = 0;
    for i in 0..3 {
        acc = acc.checked_add(mul(u[i], v[i])?).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// `det(b - a, c - a, d - a)`: positive when `d` is on the side of the plane
/// `abc` that the right-hand normal of `a → b → c` points to.
pub fn orient3d(a: &IntVec, b: &IntVec, c: &IntVec, d: &IntVec) -> Result<i128> {
    dot3(cross3(sub128(b, a), sub128(c, a))?, sub128(d, a))
}

/// Andrew's monotone chain with exact orientation tests. Collinear boundary
/// points are dropped so only extreme points remain.
pub fn convex_hull_2d(points: &[IntVec]) -> Result<Hull2d> {
    check_points(points, 2)?;
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() == 1 {
        return Ok(Hull2d {
            vertices: pts,
            degenerate: true,
        });
    }
    let mut lower: Vec<IntVec> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && orient2d(&lower[lower.len() - 2], &lower[lower.len() - 1], p)? <= 0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<IntVec> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && orient2d(&upper[upper.len() - 2], &upper[upper.len() - 1], p)? <= 0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let degenerate = lower.len() < 3;
    Ok(Hull2d {
        vertices: lower,
        degenerate,
    })
}

/// Incremental 3D hull. Faces are triangles oriented so the right-hand
/// normal points outward; a point is inserted only when it is strictly beyond
/// some face, which keeps coplanar configurations consistent. Coplanar
/// triangles are merged into facet planes at the end.
///
/// Returns [`Error::Degenerate`] when the points do not span 3-space.
pub fn convex_hull_3d(points: &[IntVec]) -> Result<Hull3d> {
    check_points(points, 3)?;
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();

    let flat = |affine_dim| Error::Degenerate { dim: 3, affine_dim };
    let i0 = 0;
    let Some(i1) = (1..pts.len()).find(|&i| pts[i] != pts[i0]) else {
        return Err(flat(0));
    };
    let mut i2 = None;
    for i in 1..pts.len() {
        if cross3(sub128(&pts[i1], &pts[i0]), sub128(&pts[i], &pts[i0]))? != [0, 0, 0] {
            i2 = Some(i);
            break;
        }
    }
    let Some(i2) = i2 else {
        return Err(flat(1));
    };
    let mut i3 = None;
    for i in 1..pts.len() {
        if orient3d(&pts[i0], &pts[i1], &pts[i2], &pts[i])? != 0 {
            i3 = Some(i);
            break;
        }
    }
    let Some(i3) = i3 else {
        return Err(flat(2));
    };

    let simplex = [i0, i1, i2, i3];
    let mut faces: Vec<[usize; 3]> = Vec::new();
    for skip in 0..4 {
        let tri: Vec<usize> = simplex.iter().copied().filter(|&k| k != simplex[skip]).collect();
        let (a, b, c) = (tri[0], tri[1], tri[2]);
        if orient3d(&pts[a], &pts[b], &pts[c], &pts[simplex[skip]])? > 0 {
            faces.push([a, c, b]);
        } else {
            faces.push([a, b, c]);
        }
    }

    for p in 0..pts.len() {
        if simplex.contains(&p) {
            continue;
        }
        let mut visible = vec![false; faces.len()];
        let mut any = false;
        for (f, face) in faces.iter().enumerate() {
            if orient3d(&pts[face[0]], &pts[face[1]], &pts[face[2]], &pts[p])? > 0 {
                visible[f] = true;
                any = true;
            }
        }
        if !any {
            continue;
        }
        let mut visible_edges = BTreeSet::new();
        for (f, face) in faces.iter().enumerate() {
            if visible[f] {
                for k in 0..3 {
                    visible_edges.insert((face[k], face[(k + 1) % 3]));
                }
            }
        }
        let mut next: Vec<[usize; 3]> = Vec::with_capacity(faces.len() + 4);
        for (f, face) in faces.iter().enumerate() {
            if !visible[f] {
                next.push(*face);
            }
        }
        for &(a, b) in &visible_edges {
            if !visible_edges.contains(&(b, a)) {
                next.push([a, b, p]);
            }
        }
        faces = next;
    }

    let mut facets = BTreeSet::new();
    let mut used = BTreeSet::new();
    for face in &faces {
        let (a, b, c) = (&pts[face[0]], &pts[face[1]], &pts[face[2]]);
        let n = cross3(sub128(b, a), sub128(c, a))?;
        let inward = IntVec::new(&[narrow(-n[0])?, narrow(-n[1])?, narrow(-n[2])?])?.primitive_part()?;
        facets.insert(Facet {
            normal: inward,
            offset: inward.dot(a)?,
        });
        used.extend(face.iter().copied());
    }
    let facets: Vec<Facet> = facets.into_iter().collect();

    // Triangle corners can be boundary points that are not extreme; a point is
    // a vertex exactly when its tight facet normals span 3-space.
    let mut vertices = Vec::new();
    for &i in &used {
        let tight: Vec<IntVec> = facets
            .iter()
            .filter(|f| f.slack(&pts[i]).map(|s| s == 0).unwrap_or(false))
            .map(|f| f.normal)
            .collect();
        if spans_space(&tight)? {
            vertices.push(pts[i]);
        }
    }
    vertices.sort();
    Ok(Hull3d { vertices, facets })
}

fn spans_space(normals: &[IntVec]) -> Result<bool> {
    for i in 0..normals.len() {
        for j in i + 1..normals.len() {
            let c = cross3(sub128(&normals[i], &zero3()), sub128(&normals[j], &zero3()))?;
            for k in j + 1..normals.len() {
                if dot3(c, sub128(&normals[k], &zero3()))? != 0 {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn zero3() -> IntVec {
    IntVec::from([0, 0, 0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v2(list: &[[i64; 2]]) -> Vec<IntVec> {
        list.iter().map(|&p| IntVec::from(p)).collect()
    }

    fn v3(list: &[[i64; 3]]) -> Vec<IntVec> {
        list.iter().map(|&p| IntVec::from(p)).collect()
    }

    /// Independent oracle: a point is extreme iff it lies in no triangle
    /// (closed) and on no segment spanned by the other points.
    fn extreme_points_oracle(points: &[IntVec]) -> Vec<IntVec> {
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let on_segment = |p: &IntVec, a: &IntVec, b: &IntVec| {
            orient2d(a, b, p).unwrap() == 0
                && (p.get(0) - a.get(0)) * (p.get(0) - b.get(0)) <= 0
                && (p.get(1) - a.get(1)) * (p.get(1) - b.get(1)) <= 0
        };
        let in_triangle = |p: &IntVec, a: &IntVec, b: &IntVec, c: &IntVec| {
            let s = [orient2d(a, b, p).unwrap(), orient2d(b, c, p).unwrap(), orient2d(c, a, p).unwrap()];
            s.iter().all(|&x| x >= 0) || s.iter().all(|&x| x <= 0)
        };
        let mut out = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            let others: Vec<&IntVec> = pts.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q).collect();
            let mut inside = false;
            for a in 0..others.len() {
                for b in a + 1..others.len() {
                    if on_segment(p, others[a], others[b]) {
                        inside = true;
                    }
                    for c in b + 1..others.len() {
                        if orient2d(others[a], others[b], others[c]).unwrap() != 0
                            && in_triangle(p, others[a], others[b], others[c])
                        {
                            inside = true;
                        }
                    }
                }
            }
            if !inside {
                out.push(*p);
            }
        }
        out
    }

    #[test]
    fn quadrilateral_with_point_above_diagonal() {
        // (2,1) lies strictly above the segment (0,0)-(5,2), so it is extreme.
        let pts = v2(&[[0, 0], [4, 1], [5, 2], [2, 1]]);
        let hull = convex_hull_2d(&pts).unwrap();
        assert_eq!(hull.vertices, v2(&[[0, 0], [4, 1], [5, 2], [2, 1]]));
        assert!(!hull.degenerate);
        let mut oracle = extreme_points_oracle(&pts);
        let mut got = hull.vertices.clone();
        oracle.sort();
        got.sort();
        assert_eq!(got, oracle);
    }

    #[test]
    fn collinear_and_point() {
        let hull = convex_hull_2d(&v2(&[[0, 0], [1, 0], [2, 0]])).unwrap();
        assert_eq!(hull.vertices, v2(&[[0, 0], [2, 0]]));
        assert!(hull.degenerate);
        assert!(hull.facets().is_err());
        let hull = convex_hull_2d(&v2(&[[3, 3], [3, 3]])).unwrap();
        assert_eq!(hull.vertices, v2(&[[3, 3]]));
        assert!(hull.degenerate);
    }

    #[test]
    fn hull_matches_oracle_on_grid_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(3..10);
            let pts: Vec<IntVec> = (0..n)
                .map(|_| IntVec::from([rng.random_range(0..8), rng.random_range(0..8)]))
                .collect();
            let hull = convex_hull_2d(&pts).unwrap();
            let mut got = hull.vertices.clone();
            got.sort();
            let oracle = extreme_points_oracle(&pts);
            if hull.degenerate {
                assert!(got.len() <= 2);
                continue;
            }
            assert_eq!(got, oracle);
            for f in hull.facets().unwrap() {
                assert!(f.normal.is_primitive().unwrap());
                for p in &pts {
                    assert!(f.slack(p).unwrap() >= 0);
                }
            }
        }
    }

    #[test]
    fn simplex_3d() {
        let pts = v3(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let hull = convex_hull_3d(&pts).unwrap();
        assert_eq!(hull.facets.len(), 4);
        assert_eq!(hull.vertices.len(), 4);
        assert!(hull.facets.contains(&Facet {
            normal: IntVec::from([-1, -1, -1]),
            offset: -1
        }));
    }

    #[test]
    fn cube_with_face_and_interior_points() {
        let mut pts = Vec::new();
        for x in 0..=2 {
            for y in 0..=2 {
                for z in 0..=2 {
                    pts.push(IntVec::from([x, y, z]));
                }
            }
        }
        let hull = convex_hull_3d(&pts).unwrap();
        assert_eq!(hull.facets.len(), 6);
        assert_eq!(hull.vertices.len(), 8);
        for f in &hull.facets {
            let tight = pts.iter().filter(|p| f.slack(p).unwrap() == 0).count();
            assert_eq!(tight, 9);
            for p in &pts {
                assert!(f.slack(p).unwrap() >= 0);
            }
        }
    }

    #[test]
    fn flat_inputs_are_reported() {
        let plane = v3(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        assert_eq!(
            convex_hull_3d(&plane).unwrap_err(),
            Error::Degenerate { dim: 3, affine_dim: 2 }
        );
        let line = v3(&[[0, 0, 0], [1, 1, 1], [2, 2, 2]]);
        assert_eq!(
            convex_hull_3d(&line).unwrap_err(),
            Error::Degenerate { dim: 3, affine_dim: 1 }
        );
    }
}

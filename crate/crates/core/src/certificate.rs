//! Size certificates: a value plus the affine unimodular map witnessing it.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{narrow, unimodular_sending_to_e1, AffineUnimodular, IntMat, IntVec};
use crate::polytope::LatticePolytope;

/// The body a polytope is fitted into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    /// Dilates of the standard simplex `conv{0, e_1, …, e_n}`.
    Simplex,
    /// Dilates of the unit cube `[0,1]^n`.
    Cube,
    /// Lattice width: the first row of the map is a minimizing direction.
    Width,
}

impl Target {
    pub fn as_str(&self) -> &'static str {
        match self {
            Target::Simplex => "sigma",
            Target::Cube => "cube",
            Target::Width => "width",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which procedure produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// 2D square reduction followed by the naive simplex fit.
    Fast,
    /// 2D descent along the shears `U` and `L`.
    UpperLower,
    /// Inradius-bounded exhaustive search over unimodular matrices.
    Brute,
}

impl Algorithm {
    pub fn as_str(&self) -> &'static str {
        match self {
            Algorithm::Fast => "fast",
            Algorithm::UpperLower => "ul",
            Algorithm::Brute => "brute",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCertificate {
    pub target: Target,
    pub value: i64,
    pub map: AffineUnimodular,
    pub algorithm: Algorithm,
}

impl SizeCertificate {
    /// Re-check the certificate against the polytope it claims to size.
    pub fn verify(&self, p: &LatticePolytope) -> Result<bool> {
        if self.value < 0 {
            return Ok(false);
        }
        match self.target {
            Target::Simplex => p.contained_in_simplex_dilate(&self.map, self.value),
            Target::Cube => p.contained_in_cube_dilate(&self.map, self.value),
            Target::Width => Ok(p.width(&self.map.matrix().row(0))? == self.value),
        }
    }
}

/// `M` paired with the translation that moves every coordinate minimum of
/// `M·P` to 0.
pub fn normalizing_map(matrix: IntMat, p: &LatticePolytope) -> Result<AffineUnimodular> {
    let linear = AffineUnimodular::linear(matrix)?;
    let mut mins = vec![i64::MAX; p.dim()];
    for x in p.vertices()? {
        let y = linear.apply(x)?;
        for (m, &c) in mins.iter_mut().zip(y.as_slice()) {
            *m = (*m).min(c);
        }
    }
    let t = IntVec::new(&mins)?.checked_neg()?;
    linear.with_translation(t)
}

/// A unimodular matrix whose first row is the primitive vector `v`.
pub fn matrix_with_first_row(v: &IntVec) -> Result<IntMat> {
    // If U·v = e_1 then the first column of U⁻¹ is v.
    let u = unimodular_sending_to_e1(v)?;
    Ok(u.inverse_unimodular()?.transpose())
}

/// Certificates for points and segments, where the general machinery does
/// not apply. Returns `None` for polytopes of affine dimension >= 2.
pub(crate) fn low_dimensional(
    p: &LatticePolytope,
    target: Target,
    algorithm: Algorithm,
) -> Result<Option<SizeCertificate>> {
    let n = p.dim();
    let cert = |value, matrix| -> Result<SizeCertificate> {
        Ok(SizeCertificate {
            target,
            value,
            map: normalizing_map(matrix, p)?,
            algorithm,
        })
    };
    match p.affine_dim() {
        0 => cert(0, IntMat::identity(n)?).map(Some),
        1 => {
            let verts = p.vertices()?;
            let d = verts[1].checked_sub(&verts[0])?;
            let length = d.content();
            let u = unimodular_sending_to_e1(&d.primitive_part()?)?;
            match target {
                // U sends the segment to [0, length]·e_1 after translation.
                Target::Simplex | Target::Cube => cert(length, u).map(Some),
                Target::Width if n == 1 => cert(length, u).map(Some),
                // Rows past the first are orthogonal to the segment.
                Target::Width => cert(0, u.swap_rows(0, 1)).map(Some),
            }
        }
        _ => Ok(None),
    }
}

/// A primitive direction along which a flat polytope has width 0.
pub(crate) fn flat_direction(p: &LatticePolytope) -> Result<IntVec> {
    if p.is_full_dimensional() {
        return Err(Error::Inconsistent("polytope is full-dimensional".into()));
    }
    let n = p.dim();
    let pts = p.points();
    let base = pts[0];
    let diffs: Vec<IntVec> = pts[1..]
        .iter()
        .map(|q| q.checked_sub(&base))
        .collect::<Result<_>>()?;
    let Some(d0) = diffs.iter().find(|d| !d.is_zero()) else {
        return IntVec::basis(n, 0);
    };
    // Rows of U past the first are orthogonal to d0; for a segment any of
    // them is orthogonal to every difference.
    let u = unimodular_sending_to_e1(&d0.primitive_part()?)?;
    for row in 1..n {
        let r = u.row(row);
        if diffs.iter().all(|d| r.dot(d).map(|x| x == 0).unwrap_or(false)) {
            return r.canonical_sign();
        }
    }
    if n == 3 {
        // Planar: the normal is the cross product of two independent diffs.
        for d1 in &diffs {
            let (a, b) = (d0.as_slice(), d1.as_slice());
            let m = |i: usize, j: usize| a[i] as i128 * b[j] as i128 - a[j] as i128 * b[i] as i128;
            let c = IntVec::new(&[narrow(m(1, 2))?, narrow(m(2, 0))?, narrow(m(0, 1))?])?;
            if !c.is_zero() {
                return c.primitive_part()?.canonical_sign();
            }
        }
    }
    Err(Error::Inconsistent("no flat direction found".into()))
}

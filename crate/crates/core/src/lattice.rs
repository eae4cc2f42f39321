//! Exact integer linear algebra on small fixed-dimension lattices.
//!
//! Vectors and matrices live inline (no heap) and are `Copy`. Their dimension
//! is capped at [`MAX_DIM`]; every arithmetic operation is overflow-checked and
//! reports [`Error::Overflow`] instead of wrapping.
//!
//! Matrices act on column vectors: the image of a point `x` is `A·x`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest supported dimension. The determinant uses cofactor expansion,
/// which is only reasonable for tiny matrices.
pub const MAX_DIM: usize = 4;

fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension {
            dim,
            supported: "1..=4",
        })
    }
}

fn same_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub(crate) fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// An integer vector: a lattice point or a lattice direction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec {
    dim: u8,
    // Entries past `dim` are always zero so derived comparisons stay honest.
    entries: [i64; MAX_DIM],
}

impl IntVec {
    pub fn new(entries: &[i64]) -> Result<Self> {
        check_dim(entries.len())?;
        let mut buf = [0; MAX_DIM];
        buf[..entries.len()].copy_from_slice(entries);
        Ok(Self {
            dim: entries.len() as u8,
            entries: buf,
        })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim: dim as u8,
            entries: [0; MAX_DIM],
        })
    }

    /// Standard basis vector `e_i` (0-based `i`).
    pub fn basis(dim: usize, i: usize) -> Result<Self> {
        let mut v = Self::zero(dim)?;
        if i >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: i + 1,
            });
        }
        v.entries[i] = 1;
        Ok(v)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn as_slice(&self) -> &[i64] {
        &self.entries[..self.dim()]
    }

    #[inline]
    pub fn get(&self, i: usize) -> i64 {
        self.as_slice()[i]
    }

    pub fn is_zero(&self) -> bool {
        self.as_slice().iter().all(|&x| x == 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        let mut out = *self;
        for i in 0..self.dim() {
            out.entries[i] = self.entries[i]
                .checked_add(other.entries[i])
                .ok_or(Error::Overflow)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        let mut out = *self;
        for i in 0..self.dim() {
            out.entries[i] = self.entries[i]
                .checked_sub(other.entries[i])
                .ok_or(Error::Overflow)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        self.checked_scale(-1)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let mut out = *self;
        for i in 0..self.dim() {
            out.entries[i] = self.entries[i].checked_mul(k).ok_or(Error::Overflow)?;
        }
        Ok(out)
    }

    /// Exact dot product.
    pub fn dot(&self, other: &Self) -> Result<i64> {
        same_dim(self.dim(), other.dim())?;
        let mut acc: i128 = 0;
        for i in 0..self.dim() {
            acc += self.entries[i] as i128 * other.entries[i] as i128;
        }
        narrow(acc)
    }

    /// Squared Euclidean norm, widened so it cannot overflow.
    pub fn norm_sq(&self) -> i128 {
        self.as_slice().iter().map(|&x| x as i128 * x as i128).sum()
    }

    /// Non-negative gcd of the entries; 0 only for the zero vector.
    pub fn content(&self) -> i64 {
        self.as_slice().iter().fold(0i64, |g, &x| g.gcd(&x))
    }

    /// A vector is primitive when the gcd of its entries is 1.
    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.content() == 1)
    }

    /// The primitive vector pointing the same way (`self / content`).
    pub fn primitive_part(&self) -> Result<Self> {
        let g = self.content();
        if g == 0 {
            return Err(Error::ZeroVector);
        }
        let mut out = *self;
        for x in &mut out.entries[..self.dim()] {
            *x /= g;
        }
        Ok(out)
    }

    /// The representative of `{v, -v}` whose first nonzero entry is positive.
    pub fn canonical_sign(&self) -> Result<Self> {
        match self.as_slice().iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => self.checked_neg(),
            _ => Ok(*self),
        }
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.as_slice().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

macro_rules! intvec_from_array {
    ($($n:literal),*) => {$(
        impl From<[i64; $n]> for IntVec {
            fn from(a: [i64; $n]) -> Self {
                let mut entries = [0; MAX_DIM];
                entries[..$n].copy_from_slice(&a);
                IntVec { dim: $n, entries }
            }
        }
    )*};
}
intvec_from_array!(1, 2, 3, 4);

/// Square integer matrix of dimension at most [`MAX_DIM`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMat {
    dim: u8,
    rows: [[i64; MAX_DIM]; MAX_DIM],
}

impl IntMat {
    pub fn identity(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        let mut rows = [[0; MAX_DIM]; MAX_DIM];
        for (i, row) in rows.iter_mut().enumerate().take(dim) {
            row[i] = 1;
        }
        Ok(Self {
            dim: dim as u8,
            rows,
        })
    }

    pub fn from_rows(rows: &[IntVec]) -> Result<Self> {
        let dim = rows.len();
        check_dim(dim)?;
        let mut buf = [[0; MAX_DIM]; MAX_DIM];
        for (i, r) in rows.iter().enumerate() {
            same_dim(dim, r.dim())?;
            buf[i] = r.entries;
        }
        Ok(Self {
            dim: dim as u8,
            rows: buf,
        })
    }

    /// Build from nested integer slices, e.g. `&[&[1, -2], &[0, 1]]`.
    pub fn from_nested<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<IntVec> = rows
            .iter()
            .map(|r| IntVec::new(r.as_ref()))
            .collect::<Result<_>>()?;
        Self::from_rows(&rows)
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(entries: &[i64]) -> Result<Self> {
        let mut m = Self::identity(entries.len())?;
        for (i, &d) in entries.iter().enumerate() {
            m.rows[i][i] = d;
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> IntVec {
        IntVec {
            dim: self.dim,
            entries: self.rows[i],
        }
    }

    pub fn rows(&self) -> Vec<IntVec> {
        (0..self.dim()).map(|i| self.row(i)).collect()
    }

    /// Rows as plain vectors, handy for serialization.
    pub fn to_nested(&self) -> Vec<Vec<i64>> {
        (0..self.dim())
            .map(|i| self.rows[i][..self.dim()].to_vec())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                out.rows[i][j] = self.rows[j][i];
            }
        }
        out
    }

    pub fn swap_rows(&self, i: usize, j: usize) -> Self {
        let mut out = *self;
        out.rows.swap(i, j);
        out
    }

    pub fn mul_vec(&self, v: &IntVec) -> Result<IntVec> {
        same_dim(self.dim(), v.dim())?;
        let mut out = *v;
        for i in 0..self.dim() {
            out.entries[i] = self.row(i).dot(v)?;
        }
        Ok(out)
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        let n = self.dim();
        let mut out = *self;
        for i in 0..n {
            for j in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    acc += self.rows[i][k] as i128 * other.rows[k][j] as i128;
                }
                out.rows[i][j] = narrow(acc)?;
            }
        }
        Ok(out)
    }

    /// Exact determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Result<i64> {
        let n = self.dim();
        let mut idx = [0usize; MAX_DIM];
        for (i, slot) in idx.iter_mut().enumerate().take(n) {
            *slot = i;
        }
        narrow(self.minor_det(0, &idx[..n])?)
    }

    fn minor_det(&self, row: usize, cols: &[usize]) -> Result<i128> {
        match cols.len() {
            1 => Ok(self.rows[row][cols[0]] as i128),
            2 => {
                let (a, b) = (self.rows[row][cols[0]] as i128, self.rows[row][cols[1]] as i128);
                let (c, d) = (
                    self.rows[row + 1][cols[0]] as i128,
                    self.rows[row + 1][cols[1]] as i128,
                );
                a.checked_mul(d)
                    .zip(b.checked_mul(c))
                    .and_then(|(x, y)| x.checked_sub(y))
                    .ok_or(Error::Overflow)
            }
            len => {
                let mut acc: i128 = 0;
                let mut rest = [0usize; MAX_DIM];
                for k in 0..len {
                    let entry = self.rows[row][cols[k]] as i128;
                    if entry == 0 {
                        continue;
                    }
                    let mut m = 0;
                    for (j, &c) in cols.iter().enumerate() {
                        if j != k {
                            rest[m] = c;
                            m += 1;
                        }
                    }
                    let sub = self.minor_det(row + 1, &rest[..len - 1])?;
                    let term = entry.checked_mul(sub).ok_or(Error::Overflow)?;
                    acc = if k % 2 == 0 {
                        acc.checked_add(term)
                    } else {
                        acc.checked_sub(term)
                    }
                    .ok_or(Error::Overflow)?;
                }
                Ok(acc)
            }
        }
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.det()?.abs() == 1)
    }

    /// Exact inverse of a unimodular matrix via the adjugate.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let det = self.det()?;
        if det.abs() != 1 {
            return Err(Error::NotUnimodular { det });
        }
        let n = self.dim();
        if n == 1 {
            return Ok(*self);
        }
        let mut out = *self;
        for i in 0..n {
            for j in 0..n {
                // Cofactor C_ji goes to position (i, j).
                let minor = self.without(j, i);
                let c = minor.det()?;
                let signed = if (i + j) % 2 == 0 { c } else { -c };
                out.rows[i][j] = signed * det;
            }
        }
        Ok(out)
    }

    fn without(&self, skip_row: usize, skip_col: usize) -> Self {
        let n = self.dim();
        let mut rows = [[0; MAX_DIM]; MAX_DIM];
        let mut r = 0;
        for i in 0..n {
            if i == skip_row {
                continue;
            }
            let mut c = 0;
            for j in 0..n {
                if j == skip_col {
                    continue;
                }
                rows[r][c] = self.rows[i][j];
                c += 1;
            }
            r += 1;
        }
        Self {
            dim: (n - 1) as u8,
            rows,
        }
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.dim() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.rows[i][j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// An affine unimodular map `x ↦ A·x + t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AffineUnimodular {
    matrix: IntMat,
    translation: IntVec,
}

impl AffineUnimodular {
    pub fn new(matrix: IntMat, translation: IntVec) -> Result<Self> {
        same_dim(matrix.dim(), translation.dim())?;
        let det = matrix.det()?;
        if det.abs() != 1 {
            return Err(Error::NotUnimodular { det });
        }
        Ok(Self {
            matrix,
            translation,
        })
    }

    pub fn linear(matrix: IntMat) -> Result<Self> {
        Self::new(matrix, IntVec::zero(matrix.dim())?)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::linear(IntMat::identity(dim)?)
    }

    pub fn translation_only(t: IntVec) -> Result<Self> {
        Self::new(IntMat::identity(t.dim())?, t)
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn translation(&self) -> &IntVec {
        &self.translation
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn with_translation(&self, t: IntVec) -> Result<Self> {
        Self::new(self.matrix, t)
    }

    pub fn apply(&self, p: &IntVec) -> Result<IntVec> {
        self.matrix.mul_vec(p)?.checked_add(&self.translation)
    }

    /// `compose(outer, inner)` applies `inner` first, then `outer`.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        let matrix = outer.matrix.mul(&inner.matrix)?;
        let translation = outer
            .matrix
            .mul_vec(&inner.translation)?
            .checked_add(&outer.translation)?;
        Ok(Self {
            matrix,
            translation,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.matrix.inverse_unimodular()?;
        let t = inv.mul_vec(&self.translation)?.checked_neg()?;
        Ok(Self {
            matrix: inv,
            translation: t,
        })
    }
}

/// All `2^n` diagonal matrices with entries ±1, enumerated as a binary
/// counter whose most significant bit is the first diagonal entry (`+` = 0).
pub fn sign_diagonals(n: usize) -> Result<Vec<IntMat>> {
    check_dim(n)?;
    (0..1u32 << n)
        .map(|k| {
            let signs: Vec<i64> = (0..n)
                .map(|i| if k >> (n - 1 - i) & 1 == 0 { 1 } else { -1 })
                .collect();
            IntMat::diagonal(&signs)
        })
        .collect()
}

/// A unimodular matrix `U` with `U·v = e_1`, for primitive `v`.
///
/// Runs the Euclidean algorithm on the entries of `v` using elementary row
/// operations, so the rows of `U` past the first span the orthogonal
/// complement of `v`.
pub fn unimodular_sending_to_e1(v: &IntVec) -> Result<IntMat> {
    if !v.is_primitive()? {
        return Err(Error::Inconsistent(format!("{v} is not primitive")));
    }
    let n = v.dim();
    let mut w = *v;
    let mut u = IntMat::identity(n)?;
    loop {
        let pivot = (0..n)
            .filter(|&i| w.entries[i] != 0)
            .min_by_key(|&i| w.entries[i].unsigned_abs())
            .expect("primitive vector is nonzero");
        let mut done = true;
        for j in 0..n {
            if j == pivot || w.entries[j] == 0 {
                continue;
            }
            done = false;
            let q = w.entries[j] / w.entries[pivot];
            w.entries[j] -= q * w.entries[pivot];
            for c in 0..n {
                let delta = q.checked_mul(u.rows[pivot][c]).ok_or(Error::Overflow)?;
                u.rows[j][c] = u.rows[j][c].checked_sub(delta).ok_or(Error::Overflow)?;
            }
        }
        if done {
            u = u.swap_rows(0, pivot);
            if w.entries[pivot] < 0 {
                for c in 0..n {
                    u.rows[0][c] = -u.rows[0][c];
                }
            }
            return Ok(u);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntMat {
        IntMat::from_nested(rows).unwrap()
    }

    #[test]
    fn dot_examples() {
        let a = IntVec::from([1, 2]);
        assert_eq!(a.dot(&IntVec::from([3, 4])).unwrap(), 11);
        assert_eq!(IntVec::from([2, 3]).dot(&IntVec::from([5, 2])).unwrap(), 16);
        assert_eq!(IntVec::from([1, 0]).dot(&IntVec::from([-7, 9])).unwrap(), -7);
    }

    #[test]
    fn dot_errors() {
        let a = IntVec::from([1, 2]);
        assert!(matches!(
            a.dot(&IntVec::from([1, 2, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
        let big = IntVec::from([i64::MAX, i64::MAX]);
        assert_eq!(big.dot(&big), Err(Error::Overflow));
        assert_eq!(big.checked_add(&big), Err(Error::Overflow));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(m(&[&[1, -2], &[0, 1]]).det().unwrap(), 1);
        assert_eq!(m(&[&[-1, 0, 0], &[0, -1, 0], &[0, 1, 1]]).det().unwrap(), 1);
        // Printed as unimodular in the source example, but it is not.
        assert_eq!(m(&[&[2, -1, 0], &[-1, 0, 1], &[1, 0, 1]]).det().unwrap(), -2);
        assert_eq!(
            m(&[&[2, 0, 0, 1], &[0, 1, 0, 0], &[1, 0, 3, 0], &[0, 0, 0, 1]])
                .det()
                .unwrap(),
            6
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            m(&[&[1, -2], &[0, 1]]).inverse_unimodular().unwrap(),
            m(&[&[1, 2], &[0, 1]])
        );
        let id = IntMat::identity(3).unwrap();
        assert_eq!(id.inverse_unimodular().unwrap(), id);
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse_unimodular().unwrap(), swap);
        assert_eq!(
            m(&[&[2, 0], &[0, 1]]).inverse_unimodular(),
            Err(Error::NotUnimodular { det: 2 })
        );
    }

    #[test]
    fn apply_examples() {
        let shear = AffineUnimodular::linear(m(&[&[1, -2], &[0, 1]])).unwrap();
        assert_eq!(
            shear.apply(&IntVec::from([5, 2])).unwrap(),
            IntVec::from([1, 2])
        );
        let a3 = AffineUnimodular::linear(m(&[&[-1, 0, 0], &[0, -1, 0], &[0, 1, 1]])).unwrap();
        assert_eq!(
            a3.apply(&IntVec::from([4, 4, 4])).unwrap(),
            IntVec::from([-4, -4, 8])
        );
        let shift = AffineUnimodular::translation_only(IntVec::from([1, 1])).unwrap();
        assert_eq!(
            shift.apply(&IntVec::from([0, 0])).unwrap(),
            IntVec::from([1, 1])
        );
    }

    #[test]
    fn affine_rejects_singular() {
        assert_eq!(
            AffineUnimodular::linear(m(&[&[2, -1, 0], &[-1, 0, 1], &[1, 0, 1]])),
            Err(Error::NotUnimodular { det: -2 })
        );
    }

    #[test]
    fn primitivity() {
        assert!(IntVec::from([1, -2]).is_primitive().unwrap());
        assert!(!IntVec::from([2, 4]).is_primitive().unwrap());
        assert!(IntVec::from([0, 1, 0]).is_primitive().unwrap());
        assert_eq!(IntVec::from([0, 0]).is_primitive(), Err(Error::ZeroVector));
    }

    #[test]
    fn sign_diagonal_order() {
        let d1 = sign_diagonals(1).unwrap();
        assert_eq!(d1, vec![m(&[&[1]]), m(&[&[-1]])]);
        let d2 = sign_diagonals(2).unwrap();
        let expected: Vec<IntMat> = [[1, 1], [1, -1], [-1, 1], [-1, -1]]
            .iter()
            .map(|d| IntMat::diagonal(d).unwrap())
            .collect();
        assert_eq!(d2, expected);
        assert_eq!(sign_diagonals(3).unwrap().len(), 8);
        assert!(sign_diagonals(5).is_err());
    }

    #[test]
    fn sending_to_e1() {
        for v in [[3, 5, 0], [-4, 0, 1], [6, 10, 15], [0, 0, -1], [1, 1, 1]] {
            let v = IntVec::from(v);
            let u = unimodular_sending_to_e1(&v).unwrap();
            assert!(u.is_unimodular().unwrap());
            assert_eq!(u.mul_vec(&v).unwrap(), IntVec::basis(3, 0).unwrap());
        }
        let v = IntVec::from([7, -3]);
        let u = unimodular_sending_to_e1(&v).unwrap();
        assert_eq!(u.mul_vec(&v).unwrap(), IntVec::from([1, 0]));
        assert!(unimodular_sending_to_e1(&IntVec::from([2, 4])).is_err());
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = IntMat> {
        proptest::collection::vec(-5i64..=5, n * n).prop_map(move |e| {
            let rows: Vec<&[i64]> = e.chunks(n).collect();
            IntMat::from_nested(&rows).unwrap()
        })
    }

    /// Products of elementary row operations; every unimodular matrix is one.
    fn unimodular(n: usize) -> impl Strategy<Value = IntMat> {
        proptest::collection::vec((0..n, 0..n, -2i64..=2), 0..8).prop_map(move |ops| {
            let mut rows = vec![vec![0i64; n]; n];
            for (i, r) in rows.iter_mut().enumerate() {
                r[i] = 1;
            }
            for (i, j, k) in ops {
                if i == j {
                    rows[i].iter_mut().for_each(|x| *x = -*x);
                } else {
                    for c in 0..n {
                        rows[i][c] += k * rows[j][c];
                    }
                }
            }
            IntMat::from_nested(&rows).unwrap()
        })
    }

    fn affine(n: usize) -> impl Strategy<Value = AffineUnimodular> {
        (unimodular(n), proptest::collection::vec(-6i64..=6, n))
            .prop_map(|(m, t)| AffineUnimodular::new(m, IntVec::new(&t).unwrap()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn inverse_roundtrip(m2 in unimodular(2), m3 in unimodular(3)) {
            for mat in [m2, m3] {
                let inv = mat.inverse_unimodular().unwrap();
                prop_assert_eq!(mat.det().unwrap() * inv.det().unwrap(), 1);
                prop_assert_eq!(mat.mul(&inv).unwrap(), IntMat::identity(mat.dim()).unwrap());
            }
        }

        #[test]
        fn compose_is_associative(a in affine(3), b in affine(3), c in affine(3)) {
            let left = AffineUnimodular::compose(&AffineUnimodular::compose(&a, &b).unwrap(), &c).unwrap();
            let right = AffineUnimodular::compose(&a, &AffineUnimodular::compose(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn compose_matches_sequential_application(
            a in affine(2), b in affine(2), p in proptest::collection::vec(-20i64..=20, 2)
        ) {
            let p = IntVec::new(&p).unwrap();
            let ab = AffineUnimodular::compose(&a, &b).unwrap();
            prop_assert_eq!(ab.apply(&p).unwrap(), a.apply(&b.apply(&p).unwrap()).unwrap());
            let back = ab.inverse().unwrap().apply(&ab.apply(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn transpose_adjoint(
            mat in small_matrix(3),
            u in proptest::collection::vec(-9i64..=9, 3),
            v in proptest::collection::vec(-9i64..=9, 3),
        ) {
            let (u, v) = (IntVec::new(&u).unwrap(), IntVec::new(&v).unwrap());
            let lhs = mat.mul_vec(&u).unwrap().dot(&v).unwrap();
            let rhs = u.dot(&mat.transpose().mul_vec(&v).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

//! Largest inscribed ball (Chebyshev center) by exact rational LP.
//!
//! The ball `B(c, R)` lies in `{x : n·x >= b}` iff `n·c - R·‖n‖ >= b`. Facet
//! norms are irrational in general, so each `‖n‖` is replaced by a rational
//! upper bound; the optimum of the resulting LP is then a certified lower
//! bound on the true inradius, within about one part in a million of it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::hull::Facet;
use crate::error::{Error, Result};
use crate::lattice::IntVec;

/// Denominator used for rational upper bounds on facet-normal norms.
const NORM_DENOMINATOR: u128 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InscribedBall {
    pub center: Vec<BigRational>,
    pub radius: BigRational,
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Smallest `s / D` (with `D` fixed) that is `>= sqrt(n)`.
pub(crate) fn norm_upper_bound(norm_sq: i128) -> BigRational {
    let d = NORM_DENOMINATOR;
    let scaled = BigInt::from(norm_sq) * BigInt::from(d) * BigInt::from(d);
    let mut s = scaled.sqrt();
    if &s * &s < scaled {
        s += 1;
    }
    BigRational::new(s, BigInt::from(d))
}

/// Chebyshev ball of `{x : f.normal · x >= f.offset for all f}` given a point
/// strictly inside the region.
pub(crate) fn chebyshev_ball(facets: &[Facet], interior: &[BigRational]) -> Result<InscribedBall> {
    let n = interior.len();
    if facets.is_empty() {
        return Err(Error::Inconsistent("no facets".into()));
    }
    // Shift to z = x - interior, so every right-hand side is positive and the
    // slack basis is feasible:  -n·z + u·R <= n·interior - b.
    let mut rows = Vec::with_capacity(facets.len());
    let mut rhs = Vec::with_capacity(facets.len());
    for f in facets {
        let mut lhs = BigRational::zero();
        for (i, c) in interior.iter().enumerate() {
            lhs += rat(f.normal.get(i)) * c;
        }
        let b = lhs - rat(f.offset);
        if !b.is_positive() {
            return Err(Error::Inconsistent("interior point is not strictly inside".into()));
        }
        let mut row = Vec::with_capacity(2 * n + 1);
        for i in 0..n {
            row.push(rat(-f.normal.get(i)));
        }
        for i in 0..n {
            row.push(rat(f.normal.get(i)));
        }
        row.push(norm_upper_bound(f.normal.norm_sq()));
        rows.push(row);
        rhs.push(b);
    }
    let mut objective = vec![BigRational::zero(); 2 * n + 1];
    objective[2 * n] = BigRational::one();
    let (value, x) = maximize(rows, rhs, objective)?;
    let center = (0..n)
        .map(|i| &interior[i] + &x[i] - &x[n + i])
        .collect();
    Ok(InscribedBall {
        center,
        radius: value,
    })
}

/// Dense tableau simplex for `max c·x  s.t.  A·x <= b, x >= 0` with `b >= 0`,
/// using Bland's rule so it cannot cycle.
fn maximize(
    a: Vec<Vec<BigRational>>,
    b: Vec<BigRational>,
    c: Vec<BigRational>,
) -> Result<(BigRational, Vec<BigRational>)> {
    let m = a.len();
    let nv = c.len();
    let width = nv + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, row) in a.into_iter().enumerate() {
        let mut r = row;
        r.resize(width, BigRational::zero());
        r[nv + i] = BigRational::one();
        r[width - 1] = b[i].clone();
        t.push(r);
    }
    let mut obj: Vec<BigRational> = c.iter().map(|x| -x).collect();
    obj.resize(width, BigRational::zero());
    let mut basis: Vec<usize> = (nv..nv + m).collect();

    while let Some(enter) = (0..width - 1).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            return Err(Error::Inconsistent("inscribed-ball LP is unbounded".into()));
        };
        let pivot = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let factor = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        basis[r] = enter;
    }

    let mut x = vec![BigRational::zero(); nv];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nv {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Ok((obj[width - 1].clone(), x))
}

/// Average of affinely independent points, as exact rationals.
pub(crate) fn barycenter(points: &[IntVec]) -> Vec<BigRational> {
    let dim = points[0].dim();
    let k = BigInt::from(points.len());
    (0..dim)
        .map(|i| {
            let s: i128 = points.iter().map(|p| p.get(i) as i128).sum();
            BigRational::new(BigInt::from(s), k.clone())
        })
        .collect()
}

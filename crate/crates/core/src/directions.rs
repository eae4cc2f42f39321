//! Enumeration of primitive lattice directions inside a Euclidean ball.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::lattice::{IntVec, MAX_DIM};

/// Default cap on the number of directions a single enumeration may produce.
pub const DEFAULT_POOL_LIMIT: usize = 1_000_000;

/// An exact upper bound on Euclidean norm, stored squared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormCap {
    squared: BigRational,
}

impl NormCap {
    pub fn from_squared(squared: BigRational) -> Self {
        Self { squared }
    }

    pub fn integer(cap: i64) -> Self {
        let c = BigInt::from(cap);
        Self::from_squared(BigRational::from_integer(&c * &c))
    }

    /// The cap `bound / (2R)`: any direction `v` with `w_v(P) <= bound` lies
    /// inside it whenever a ball of radius `R` fits inside `P`, because
    /// `w_v(P) >= 2·R·‖v‖`.
    pub fn for_width(bound: i64, inradius: &BigRational) -> Result<Self> {
        if !inradius.is_positive() {
            return Err(Error::Inconsistent("inradius bound must be positive".into()));
        }
        let b = BigRational::from_integer(BigInt::from(bound.max(0)));
        let ratio = b / (inradius * BigRational::from_integer(BigInt::from(2)));
        Ok(Self::from_squared(&ratio * &ratio))
    }

    pub fn squared(&self) -> &BigRational {
        &self.squared
    }

    pub fn contains(&self, v: &IntVec) -> bool {
        BigRational::from_integer(BigInt::from(v.norm_sq())) <= self.squared
    }

    /// Largest integer coordinate magnitude a vector inside the cap can have.
    pub fn max_coordinate(&self) -> Result<i64> {
        let floor = self.squared.floor().to_integer();
        if floor.is_negative() {
            return Ok(0);
        }
        floor.sqrt().to_i64().ok_or(Error::Overflow)
    }

    pub fn approx(&self) -> f64 {
        self.squared.to_f64().unwrap_or(f64::INFINITY).sqrt()
    }
}

impl From<i64> for NormCap {
    fn from(cap: i64) -> Self {
        Self::integer(cap)
    }
}

/// All primitive vectors with `‖v‖ <= cap`, one per `±` pair (first nonzero
/// entry positive), in lexicographic order.
///
/// Fails with [`Error::ResourceLimit`] once more than `limit` vectors qualify.
pub fn enumerate_primitive(dim: usize, cap: &NormCap, limit: usize) -> Result<Vec<IntVec>> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::UnsupportedDimension {
            dim,
            supported: "1..=4",
        });
    }
    let c = cap.max_coordinate()?;
    let cap_sq = cap.squared.floor().to_integer();
    let cap_sq = cap_sq.to_i128().unwrap_or(i128::MAX);
    let mut out = Vec::new();
    let mut cur = [0i64; MAX_DIM];
    cur[..dim].fill(-c);
    loop {
        let v = IntVec::new(&cur[..dim])?;
        if v.norm_sq() <= cap_sq && is_canonical(&v) && v.content() == 1 {
            out.push(v);
            if out.len() > limit {
                return Err(Error::ResourceLimit { limit });
            }
        }
        // odometer
        let mut i = dim;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < c {
                cur[i] += 1;
                break;
            }
            cur[i] = -c;
        }
    }
}

fn is_canonical(v: &IntVec) -> bool {
    matches!(v.as_slice().iter().find(|&&x| x != 0), Some(&x) if x > 0)
}

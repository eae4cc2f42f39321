//! Exact lattice size and lattice width of lattice polytopes.
//!
//! A lattice polytope `P` has simplex size `lsΣ(P) = l` when some affine
//! unimodular image of `P` fits in `l·conv{0, e_1, …, e_n}`, and cube size
//! `ls□(P) = k` when an image fits in `[0, k]^n`. Every computed size comes
//! with a [`SizeCertificate`] that can be checked independently.
//!
//! ```
//! use lattice_size::{fixtures, size2d};
//!
//! let p = fixtures::skew_triangle();
//! let cert = size2d::ls_sigma_fast(&p).unwrap();
//! assert_eq!(cert.value, 3);
//! assert!(cert.verify(&p).unwrap());
//! ```

pub mod certificate;
pub mod directions;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod polytope;
pub mod search;
pub mod size2d;

pub use certificate::{matrix_with_first_row, normalizing_map, Algorithm, SizeCertificate, Target};
pub use directions::{enumerate_primitive, NormCap, DEFAULT_POOL_LIMIT};
pub use error::{Error, Result};
pub use lattice::{sign_diagonals, unimodular_sending_to_e1, AffineUnimodular, IntMat, IntVec, MAX_DIM};
pub use polytope::{Facet, HullKind, InscribedBall, LatticePolytope};
pub use search::{SearchOptions, SearchOutcome};
pub use size2d::{LValues, NaiveFit, ReductionTrace};

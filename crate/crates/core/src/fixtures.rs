//! Small polytopes with known sizes, shared by tests, benches and the CLI.

use crate::lattice::IntMat;
use crate::polytope::LatticePolytope;

/// Triangle with l-values (7,7,5,5), naive simplex size 5 and simplex size 3.
pub fn skew_triangle() -> LatticePolytope {
    LatticePolytope::from_nested(&[[0, 0], [4, 1], [5, 2]]).expect("valid fixture")
}

/// Shear taking [`skew_triangle`] to `conv{(0,0),(2,1),(1,2)}`.
pub fn skew_triangle_shear() -> IntMat {
    IntMat::from_nested(&[[1, -2], [0, 1]]).expect("valid fixture")
}

/// 3D polytope whose square reduction is optimal (size 4) while its simplex
/// size 7 is below the naive value 8.
pub fn reduction_counterexample() -> LatticePolytope {
    LatticePolytope::from_nested(&[[1, 1, 2], [4, 4, 4], [0, 2, 2], [3, 0, 3], [4, 3, 0]])
        .expect("valid fixture")
}

/// A matrix attaining `l1 = 7` on [`reduction_counterexample`].
pub fn reduction_counterexample_matrix() -> IntMat {
    IntMat::from_nested(&[[-1, 0, 0], [0, -1, 0], [0, 1, 1]]).expect("valid fixture")
}

/// Tetrahedron with `l1 = 7` whose optimum needs matrix entries outside
/// `{-1, 0, 1}`.
pub fn descent_counterexample() -> LatticePolytope {
    LatticePolytope::from_nested(&[[0, 0, 0], [0, 1, 6], [1, 3, 1], [1, 1, 4]])
        .expect("valid fixture")
}

/// Matrix published alongside [`descent_counterexample`]. Its determinant is
/// −2, so it is not a valid certificate.
pub fn descent_counterexample_published_matrix() -> IntMat {
    IntMat::from_nested(&[[2, -1, 0], [-1, 0, 1], [1, 0, 1]]).expect("valid fixture")
}

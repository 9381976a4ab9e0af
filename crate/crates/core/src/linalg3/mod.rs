//! Fixed-size linear algebra: 3-vectors, symmetric 3x3 matrices, a
//! symmetric eigensolver and a bracketed monic-cubic root finder.

mod cubic;
mod eigen;
mod symmetric;
mod vector;

pub use cubic::{solve_bracketed_cubic, MonicCubic};
pub use eigen::{eigen_sym3, EigenDecomp3, ANALYTIC_GAP};
pub use symmetric::{reflection_across_plane, SymMat3};
pub use vector::{UnitVec3, Vec3};

/// Library-wide relative tolerance for scalar comparisons.
pub const EPS_REL: f64 = 1e-9;

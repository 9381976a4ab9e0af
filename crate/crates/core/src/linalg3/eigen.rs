//! Symmetric 3x3 eigendecomposition.
//!
//! The fast path solves the characteristic cubic in trigonometric form and
//! recovers eigenvectors from cross products of rows of `M - lambda I`.
//! Nearly repeated eigenvalues make both steps ill-conditioned, so whenever
//! the relative gap drops below [`ANALYTIC_GAP`] (or the analytic result
//! fails its own residual check) the cyclic Jacobi method takes over.

use std::f64::consts::PI;

use super::{SymMat3, UnitVec3, Vec3};

/// Relative eigenvalue gap below which the analytic path is abandoned.
pub const ANALYTIC_GAP: f64 = 1e-7;

/// Residual and orthogonality bound accepted from the analytic path.
const ANALYTIC_ACCEPT: f64 = 1e-12;

/// Eigenvalues in ascending order with a matching orthonormal eigenbasis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenDecomp3 {
    pub eigenvalues: [f64; 3],
    pub eigenvectors: [UnitVec3; 3],
}

impl EigenDecomp3 {
    /// `sum_i lambda_i v_i v_i^T`.
    pub fn reconstruct(&self) -> SymMat3 {
        SymMat3::spectral(self.eigenvalues, self.eigenvectors)
    }

    /// Largest `|M v_i - lambda_i v_i|` over the three pairs.
    pub fn max_residual(&self, m: &SymMat3) -> f64 {
        self.eigenvalues
            .iter()
            .zip(self.eigenvectors.iter())
            .map(|(&l, v)| (m.mul_vec(v.get()) - v.get() * l).norm())
            .fold(0.0, f64::max)
    }

    /// Largest `|v_i . v_j|` over `i != j`.
    pub fn max_non_orthogonality(&self) -> f64 {
        let v = &self.eigenvectors;
        [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| v[i].dot(v[j].get()).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_eigenvalue(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0_f64, |m, l| m.max(l.abs()))
    }
}

/// Eigendecomposition of a symmetric 3x3 matrix.
///
/// Eigenvalues come back ascending. Each eigenvector is oriented so its first
/// non-negligible component is positive; exactly tied eigenvalues are ordered
/// by lexicographically decreasing eigenvector.
pub fn eigen_sym3(m: &SymMat3) -> EigenDecomp3 {
    let scale = m.max_abs();
    if scale == 0.0 || !scale.is_finite() {
        return finish([0.0; 3], [Vec3::X, Vec3::Y, Vec3::Z]);
    }
    if m.m12 == 0.0 && m.m13 == 0.0 && m.m23 == 0.0 {
        return finish(m.diagonal().to_array(), [Vec3::X, Vec3::Y, Vec3::Z]);
    }
    let unit = *m * (1.0 / scale);
    let (values, vectors) = analytic(&unit).unwrap_or_else(|| jacobi(&unit));
    finish(values.map(|l| l * scale), vectors)
}

fn finish(values: [f64; 3], vectors: [Vec3; 3]) -> EigenDecomp3 {
    let mut pairs: Vec<(f64, UnitVec3)> = values
        .iter()
        .zip(vectors.iter())
        .map(|(&l, &v)| {
            let u = UnitVec3::new(v).expect("eigenvector is nonzero");
            (l, u.canonical_sign())
        })
        .collect();
    pairs.sort_by(|a, b| {
        a.0.total_cmp(&b.0).then_with(|| {
            let (va, vb) = (a.1.to_array(), b.1.to_array());
            // descending lexicographic order among exact ties
            vb.iter()
                .zip(va.iter())
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    EigenDecomp3 {
        eigenvalues: [pairs[0].0, pairs[1].0, pairs[2].0],
        eigenvectors: [pairs[0].1, pairs[1].1, pairs[2].1],
    }
}

/// Characteristic-polynomial eigenvalues of a matrix with `max_abs = 1`.
fn analytic_eigenvalues(m: &SymMat3) -> Option<[f64; 3]> {
    let q = m.trace() / 3.0;
    let b = *m - SymMat3::IDENTITY * q;
    let p2 = b.frobenius_norm().powi(2);
    let p = (p2 / 6.0).sqrt();
    if p < ANALYTIC_GAP {
        return None;
    }
    let r = ((b * (1.0 / p)).determinant() / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * PI / 3.0).cos();
    let mid = 3.0 * q - hi - lo;
    Some([lo, mid, hi])
}

fn null_vector(m: &SymMat3, lambda: f64) -> Vec3 {
    let s = *m - SymMat3::IDENTITY * lambda;
    let (r0, r1, r2) = (s.row(0), s.row(1), s.row(2));
    [r0.cross(r1), r0.cross(r2), r1.cross(r2)]
        .into_iter()
        .max_by(|a, b| a.norm_squared().total_cmp(&b.norm_squared()))
        .expect("three candidates")
}

fn analytic(m: &SymMat3) -> Option<([f64; 3], [Vec3; 3])> {
    let [lo, mid, hi] = analytic_eigenvalues(m)?;
    let spread = (hi - lo).abs().max(f64::MIN_POSITIVE);
    let gap = (mid - lo).min(hi - mid) / spread.max(lo.abs()).max(hi.abs());
    if gap < ANALYTIC_GAP {
        return None;
    }
    let v_lo = UnitVec3::new(null_vector(m, lo)).ok()?.get();
    let v_hi = null_vector(m, hi);
    let v_hi = UnitVec3::new(v_hi - v_lo * v_lo.dot(v_hi)).ok()?.get();
    let v_mid = v_hi.cross(v_lo);

    let values = [lo, mid, hi];
    let vectors = [v_lo, v_mid, v_hi];
    let residual_ok = values
        .iter()
        .zip(vectors.iter())
        .all(|(&l, &v)| (m.mul_vec(v) - v * l).norm() <= ANALYTIC_ACCEPT);
    residual_ok.then_some((values, vectors))
}

/// Cyclic Jacobi rotations; converges quadratically and handles clusters.
fn jacobi(m: &SymMat3) -> ([f64; 3], [Vec3; 3]) {
    let mut a = m.rows();
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let norm2: f64 = a.iter().flatten().map(|c| c * c).sum();
    let tol = (f64::EPSILON * f64::EPSILON) * norm2;

    for _sweep in 0..64 {
        let off = 2.0 * (a[0][1].powi(2) + a[0][2].powi(2) + a[1][2].powi(2));
        if off <= tol {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            if a[p][q] == 0.0 {
                continue;
            }
            let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let t = if theta == 0.0 { 1.0 } else { t };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            for k in 0..3 {
                let akp = a[k][p];
                let akq = a[k][q];
                a[k][p] = c * akp - s * akq;
                a[k][q] = s * akp + c * akq;
            }
            for k in 0..3 {
                let apk = a[p][k];
                let aqk = a[q][k];
                a[p][k] = c * apk - s * aqk;
                a[q][k] = s * apk + c * aqk;
            }
            for row in v.iter_mut() {
                let vp = row[p];
                let vq = row[q];
                row[p] = c * vp - s * vq;
                row[q] = s * vp + c * vq;
            }
        }
    }
    let values = [a[0][0], a[1][1], a[2][2]];
    let vectors = [0, 1, 2].map(|j| Vec3::new(v[0][j], v[1][j], v[2][j]));
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input() {
        let e = eigen_sym3(&SymMat3::diag(2.0, -1.0, 0.0));
        assert_eq!(e.eigenvalues, [-1.0, 0.0, 2.0]);
        assert!(e.eigenvectors[0].line_distance(Vec3::Y) < 1e-15);
        assert!(e.eigenvectors[1].line_distance(Vec3::Z) < 1e-15);
        assert!(e.eigenvectors[2].line_distance(Vec3::X) < 1e-15);
    }

    #[test]
    fn identity_gives_coordinate_axes_in_tie_order() {
        let e = eigen_sym3(&SymMat3::IDENTITY);
        assert_eq!(e.eigenvalues, [1.0; 3]);
        assert_eq!(e.eigenvectors[0].get(), Vec3::X);
        assert_eq!(e.eigenvectors[1].get(), Vec3::Y);
        assert_eq!(e.eigenvectors[2].get(), Vec3::Z);
    }

    #[test]
    fn circular_cone_matrix_spectrum() {
        // r = z, cos^2 = 1/4
        let c = SymMat3::outer(Vec3::Z) - SymMat3::IDENTITY * 0.25;
        let e = eigen_sym3(&c);
        let expected = [-0.25, -0.25, 0.75];
        for (a, b) in e.eigenvalues.iter().zip(expected.iter()) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(e.eigenvectors[2].line_distance(Vec3::Z) < 1e-15);
    }

    #[test]
    fn zero_matrix() {
        let e = eigen_sym3(&SymMat3::ZERO);
        assert_eq!(e.eigenvalues, [0.0; 3]);
    }

    #[test]
    fn nearly_repeated_eigenvalues_stay_orthonormal() {
        let q = [
            UnitVec3::new(Vec3::new(1.0, 1.0, 0.0)).unwrap(),
            UnitVec3::new(Vec3::new(-1.0, 1.0, 1.0)).unwrap(),
            UnitVec3::new(Vec3::new(1.0, -1.0, 2.0)).unwrap(),
        ];
        for gap in [0.0, 1e-14, 1e-9, 1e-7, 1e-5] {
            let m = SymMat3::spectral([1.0, 1.0 + gap, -3.0], q);
            let e = eigen_sym3(&m);
            assert!(e.max_residual(&m) < 1e-13, "gap {gap}");
            assert!(e.max_non_orthogonality() < 1e-13, "gap {gap}");
        }
    }

    #[test]
    fn huge_and_tiny_scales() {
        let m = SymMat3::new(1.0, 2.0, 3.0, 4.0, 5.0, 6.0);
        for s in [1e-150, 1e150] {
            let ms = m * s;
            let e = eigen_sym3(&ms);
            assert!(e.max_residual(&ms) <= 1e-13 * ms.frobenius_norm());
        }
    }
}

use std::ops::{Add, Mul, Neg, Sub};

use super::{UnitVec3, Vec3};

/// A real symmetric 3x3 matrix, stored as its upper triangle.
///
/// Cone matrices, confocal matrices `A_k`, projections `pp^T` and reflections
/// `I - 2pp^T` all live here.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SymMat3 {
    pub m11: f64,
    pub m12: f64,
    pub m13: f64,
    pub m22: f64,
    pub m23: f64,
    pub m33: f64,
}

impl SymMat3 {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    pub const IDENTITY: Self = Self::diag(1.0, 1.0, 1.0);

    #[inline]
    pub const fn new(m11: f64, m12: f64, m13: f64, m22: f64, m23: f64, m33: f64) -> Self {
        Self {
            m11,
            m12,
            m13,
            m22,
            m23,
            m33,
        }
    }

    #[inline]
    pub const fn diag(d1: f64, d2: f64, d3: f64) -> Self {
        Self::new(d1, 0.0, 0.0, d2, 0.0, d3)
    }

    pub const fn from_diagonal(d: Vec3) -> Self {
        Self::diag(d.x, d.y, d.z)
    }

    /// `v v^T`.
    pub fn outer(v: Vec3) -> Self {
        Self::new(
            v.x * v.x,
            v.x * v.y,
            v.x * v.z,
            v.y * v.y,
            v.y * v.z,
            v.z * v.z,
        )
    }

    /// Builds a matrix from a full array, averaging the two off-diagonal
    /// triangles.
    pub fn from_rows_symmetrized(r: [[f64; 3]; 3]) -> Self {
        Self::new(
            r[0][0],
            0.5 * (r[0][1] + r[1][0]),
            0.5 * (r[0][2] + r[2][0]),
            r[1][1],
            0.5 * (r[1][2] + r[2][1]),
            r[2][2],
        )
    }

    /// `sum_i w_i v_i v_i^T`.
    pub fn spectral(weights: [f64; 3], vectors: [UnitVec3; 3]) -> Self {
        weights
            .iter()
            .zip(vectors.iter())
            .fold(Self::ZERO, |acc, (&w, v)| acc + Self::outer(v.get()) * w)
    }

    pub fn rows(&self) -> [[f64; 3]; 3] {
        [
            [self.m11, self.m12, self.m13],
            [self.m12, self.m22, self.m23],
            [self.m13, self.m23, self.m33],
        ]
    }

    pub fn row(&self, i: usize) -> Vec3 {
        Vec3::from_array(self.rows()[i])
    }

    pub fn diagonal(&self) -> Vec3 {
        Vec3::new(self.m11, self.m22, self.m33)
    }

    /// The six stored entries with the off-diagonal ones weighted by `sqrt 2`,
    /// so that the Euclidean norm of the result is the Frobenius norm.
    pub fn to_frobenius_coords(&self) -> [f64; 6] {
        let s = std::f64::consts::SQRT_2;
        [
            self.m11,
            self.m22,
            self.m33,
            s * self.m12,
            s * self.m13,
            s * self.m23,
        ]
    }

    pub fn from_frobenius_coords(c: [f64; 6]) -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Self::new(c[0], s * c[3], s * c[4], c[1], s * c[5], c[2])
    }

    pub fn mul_vec(&self, v: Vec3) -> Vec3 {
        Vec3::new(
            self.m11 * v.x + self.m12 * v.y + self.m13 * v.z,
            self.m12 * v.x + self.m22 * v.y + self.m23 * v.z,
            self.m13 * v.x + self.m23 * v.y + self.m33 * v.z,
        )
    }

    /// `v^T M v`.
    pub fn quadratic_form(&self, v: Vec3) -> f64 {
        v.dot(self.mul_vec(v))
    }

    /// `u^T M v`.
    pub fn bilinear(&self, u: Vec3, v: Vec3) -> f64 {
        u.dot(self.mul_vec(v))
    }

    /// General matrix product, returned as a full array.
    pub fn matmul(&self, other: &Self) -> [[f64; 3]; 3] {
        let a = self.rows();
        let b = other.rows();
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        out
    }

    /// `S M S` for symmetric `S`, which is again symmetric.
    pub fn congruence(&self, s: &Self) -> Self {
        let sm = s.matmul(self);
        let srows = s.rows();
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| sm[i][k] * srows[k][j]).sum();
            }
        }
        Self::from_rows_symmetrized(out)
    }

    pub fn trace(&self) -> f64 {
        self.m11 + self.m22 + self.m33
    }

    pub fn determinant(&self) -> f64 {
        self.m11 * (self.m22 * self.m33 - self.m23 * self.m23)
            - self.m12 * (self.m12 * self.m33 - self.m23 * self.m13)
            + self.m13 * (self.m12 * self.m23 - self.m22 * self.m13)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.to_frobenius_coords()
            .iter()
            .map(|c| c * c)
            .sum::<f64>()
            .sqrt()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        [self.m11, self.m12, self.m13, self.m22, self.m23, self.m33]
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub fn is_finite(&self) -> bool {
        [self.m11, self.m12, self.m13, self.m22, self.m23, self.m33]
            .iter()
            .all(|c| c.is_finite())
    }

    /// Frobenius inner product `tr(A B)`.
    pub fn frobenius_dot(&self, other: &Self) -> f64 {
        let a = self.to_frobenius_coords();
        let b = other.to_frobenius_coords();
        a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
    }

    /// `|<A, B>| / (|A| |B|)`: one when the matrices agree up to a nonzero scale.
    pub fn cosine_similarity(&self, other: &Self) -> f64 {
        let na = self.frobenius_norm();
        let nb = other.frobenius_norm();
        if na == 0.0 || nb == 0.0 {
            return 0.0;
        }
        (self.frobenius_dot(other) / (na * nb)).abs()
    }
}

impl Add for SymMat3 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(
            self.m11 + o.m11,
            self.m12 + o.m12,
            self.m13 + o.m13,
            self.m22 + o.m22,
            self.m23 + o.m23,
            self.m33 + o.m33,
        )
    }
}

impl Sub for SymMat3 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for SymMat3 {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

impl Mul<f64> for SymMat3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(
            self.m11 * s,
            self.m12 * s,
            self.m13 * s,
            self.m22 * s,
            self.m23 * s,
            self.m33 * s,
        )
    }
}

impl Mul<Vec3> for SymMat3 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        self.mul_vec(v)
    }
}

/// `I - 2 p p^T`, the orthogonal reflection across the plane `p^perp`.
pub fn reflection_across_plane(p: UnitVec3) -> SymMat3 {
    SymMat3::IDENTITY - SymMat3::outer(p.get()) * 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_of_coordinate_planes() {
        assert_eq!(
            reflection_across_plane(UnitVec3::Z),
            SymMat3::diag(1.0, 1.0, -1.0)
        );
        assert_eq!(
            reflection_across_plane(UnitVec3::X),
            SymMat3::diag(-1.0, 1.0, 1.0)
        );
    }

    #[test]
    fn reflection_fixes_plane_and_flips_normal() {
        let p = UnitVec3::new(Vec3::new(1.0, 2.0, -2.0)).unwrap();
        let r = reflection_across_plane(p);
        let flipped = r.mul_vec(p.get());
        assert!((flipped + p.get()).norm() < 1e-15);
        let q = Vec3::new(2.0, -1.0, 0.0);
        assert!((r.mul_vec(q) - q).norm() < 1e-15);
        assert!((r.determinant() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn frobenius_coords_round_trip() {
        let m = SymMat3::new(1.0, -2.0, 3.0, 0.5, 7.0, -4.0);
        let back = SymMat3::from_frobenius_coords(m.to_frobenius_coords());
        assert!((back - m).max_abs() < 1e-15);
        let full: f64 = m.rows().iter().flatten().map(|c| c * c).sum();
        assert!((m.frobenius_norm() - full.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn congruence_matches_two_products() {
        let m = SymMat3::new(1.0, 0.3, -0.2, -2.0, 0.7, 0.4);
        let s = reflection_across_plane(UnitVec3::new(Vec3::new(1.0, 1.0, 0.0)).unwrap());
        let sm = s.matmul(&m);
        let srows = s.rows();
        let c = m.congruence(&s).rows();
        for i in 0..3 {
            for j in 0..3 {
                let e: f64 = (0..3).map(|k| sm[i][k] * srows[k][j]).sum();
                assert!((c[i][j] - e).abs() < 1e-14);
            }
        }
    }
}

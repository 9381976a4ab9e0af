//! Tangent cones from a point to the members of a confocal family.
//!
//! The tangent cone from `u` to `x^T A x = 1` has matrix
//! `K = A u u^T A + (1 - u^T A u) A`. For a confocal member `A_l` its
//! eigenvectors are the surface normals `A_{k_i} u` at `u`, independent of
//! `l`, which is what makes the degenerate limits `l -> a, b, c` tractable.

use nalgebra::DMatrix;

use crate::cone::QuadricCone;
use crate::confocal::{ConfocalCoords, ConfocalSystem, Critical, SURFACE_TOLERANCE};
use crate::error::{GeometryError, Result};
use crate::linalg3::{SymMat3, UnitVec3, Vec3};

/// `(x - u)^T K_{u,l} (x - u) = 0`, the tangent cone from `u` to `x^T A_l x = 1`.
pub fn tangent_cone_matrix(sys: &ConfocalSystem, u: Vec3, ell: f64) -> Result<QuadricCone> {
    let a = sys.matrix_at(ell)?;
    let g = a.quadratic_form(u) - 1.0;
    if g.abs() <= SURFACE_TOLERANCE {
        return Err(GeometryError::ApexOnSurface(g));
    }
    let au = a.mul_vec(u);
    QuadricCone::new(u, SymMat3::outer(au) - a * g)
}

/// `(x^T A u - 1)^2 - (x^T A x - 1)(u^T A u - 1)`: zero exactly on the tangent cone.
pub fn discriminant_residual(sys: &ConfocalSystem, u: Vec3, ell: f64, x: Vec3) -> Result<f64> {
    let a = sys.matrix_at(ell)?;
    let xau = a.bilinear(x, u) - 1.0;
    Ok(xau * xau - (a.quadratic_form(x) - 1.0) * (a.quadratic_form(u) - 1.0))
}

/// Closed-form eigen-data of `K_{u,l}` at a generic apex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentConeEigensystem {
    /// `A_{k_i} u`, unnormalized.
    pub eigenvectors: [Vec3; 3],
    /// `prod_{j != i} (l - k_j) / ((a-l)(b-l)(c-l))`.
    pub eigenvalues: [f64; 3],
    pub coords: ConfocalCoords,
    pub ell: f64,
    /// `u^T A_l u - 1`.
    pub apex_value: f64,
}

impl TangentConeEigensystem {
    /// `(u^T A_l u - 1) / (l - k_i)`, the same eigenvalues by a second route.
    pub fn unified_eigenvalues(&self) -> [f64; 3] {
        self.coords
            .to_array()
            .map(|k| self.apex_value / (self.ell - k))
    }

    pub fn unit_eigenvectors(&self) -> Result<[UnitVec3; 3]> {
        let [v1, v2, v3] = self.eigenvectors;
        Ok([UnitVec3::new(v1)?, UnitVec3::new(v2)?, UnitVec3::new(v3)?])
    }
}

pub fn tangent_cone_eigensystem(sys: &ConfocalSystem, u: Vec3, ell: f64) -> Result<TangentConeEigensystem> {
    let coords = sys.confocal_coords(u)?;
    let a_ell = sys.matrix_at(ell)?;
    let k = coords.to_array();
    let tol = sys.tolerance();
    if let Some(&ki) = k.iter().find(|&&ki| (ell - ki).abs() <= tol) {
        return Err(GeometryError::ApexOnConfocalSurface(ki));
    }
    let [a, b, c] = sys.canonical();
    let denom = (a - ell) * (b - ell) * (c - ell);
    let eigenvalues = [0, 1, 2].map(|i| {
        let num: f64 = (0..3).filter(|&j| j != i).map(|j| ell - k[j]).product();
        num / denom
    });
    let eigenvectors = k.map(|ki| {
        sys.matrix_at(ki)
            .expect("confocal coordinates avoid critical values")
            .mul_vec(u)
    });
    Ok(TangentConeEigensystem {
        eigenvectors,
        eigenvalues,
        coords,
        ell,
        apex_value: a_ell.quadratic_form(u) - 1.0,
    })
}

/// Eigenvalues of `lim_{l -> p} (p - l) K_{u,l}` for the critical value `p`:
/// `prod_{j != i} (p - k_j) / prod_{q != p} (q - p)`.
pub fn degenerate_eigenvalues(sys: &ConfocalSystem, coords: ConfocalCoords, critical: Critical) -> [f64; 3] {
    let can = sys.canonical();
    let p = can[critical.role()];
    let denom: f64 = (0..3)
        .filter(|&r| r != critical.role())
        .map(|r| can[r] - p)
        .product();
    let k = coords.to_array();
    [0, 1, 2].map(|i| {
        let num: f64 = (0..3).filter(|&j| j != i).map(|j| p - k[j]).product();
        num / denom
    })
}

/// The cone from a generic `u` over the focal curve of `critical`, built by
/// spectral synthesis from its known eigenvectors and eigenvalues.
///
/// `C` gives the cone over the focal ellipse, `B` over the focal hyperbola,
/// and `A` an imaginary cone (definite matrix).
pub fn degenerate_cone_matrix(sys: &ConfocalSystem, u: Vec3, critical: Critical) -> Result<QuadricCone> {
    let coords = sys.confocal_coords(u)?;
    let values = degenerate_eigenvalues(sys, coords, critical);
    let vectors = coords.to_array().map(|k| {
        sys.matrix_at(k)
            .expect("confocal coordinates avoid critical values")
            .mul_vec(u)
    });
    let units = [
        UnitVec3::new(vectors[0])?,
        UnitVec3::new(vectors[1])?,
        UnitVec3::new(vectors[2])?,
    ];
    QuadricCone::new(u, SymMat3::spectral(values, units))
}

/// Least-squares cone through sample points with a known apex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeFit {
    /// Unit Frobenius norm; the sign makes the largest coordinate positive.
    pub matrix: SymMat3,
    /// Smallest singular value of the constraint system (rows use unit directions).
    pub residual: f64,
    /// Second-smallest singular value relative to the largest.
    pub conditioning: f64,
    pub rank: usize,
}

/// Relative singular value below which a constraint direction counts as missing.
const RANK_TOLERANCE: f64 = 1e-10;

/// Fits `(p_i - u)^T C (p_i - u) = 0` over symmetric `C` with `|C|_F = 1`.
///
/// A cone with known apex has five projective degrees of freedom; the fit
/// takes the right singular vector of the smallest singular value of the
/// `n x 6` constraint matrix.
pub fn fit_cone_through_points(apex: Vec3, points: &[Vec3]) -> Result<ConeFit> {
    if points.len() < 5 {
        return Err(GeometryError::TooFewInputs {
            needed: 5,
            got: points.len(),
        });
    }
    let s2 = std::f64::consts::SQRT_2;
    // pad to at least six rows so the thin SVD keeps the full right basis
    let rows = points.len().max(6);
    let mut m = DMatrix::<f64>::zeros(rows, 6);
    for (i, p) in points.iter().enumerate() {
        let d = (*p - apex).normalize().map_err(|_| GeometryError::DegenerateRay)?;
        let row = [
            d.x * d.x,
            d.y * d.y,
            d.z * d.z,
            s2 * d.x * d.y,
            s2 * d.x * d.z,
            s2 * d.y * d.z,
        ];
        for (j, v) in row.iter().enumerate() {
            m[(i, j)] = *v;
        }
    }
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
    let sigma = |n: usize| svd.singular_values[order[n]];
    let largest = sigma(order.len() - 1);
    let rank = order
        .iter()
        .filter(|&&i| svd.singular_values[i] > RANK_TOLERANCE * largest)
        .count();
    if rank < 5 {
        return Err(GeometryError::RankDeficient(rank));
    }
    let mut coords = [0.0; 6];
    for (j, c) in coords.iter_mut().enumerate() {
        *c = v_t[(order[0], j)];
    }
    let lead = coords
        .iter()
        .copied()
        .max_by(|a, b| a.abs().total_cmp(&b.abs()))
        .unwrap_or(1.0);
    if lead < 0.0 {
        coords.iter_mut().for_each(|c| *c = -*c);
    }
    Ok(ConeFit {
        matrix: SymMat3::from_frobenius_coords(coords),
        residual: sigma(0),
        conditioning: sigma(1) / largest,
        rank,
    })
}

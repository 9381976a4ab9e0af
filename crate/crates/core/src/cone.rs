//! Circular and general quadric cones.
//!
//! A quadric cone with apex `u` is the zero set of `(x-u)^T C (x-u)` for an
//! indefinite symmetric `C`. The equation is projective: `C` and `sC` define
//! the same cone for any `s != 0`. The cone is circular exactly when two
//! eigenvalues of the same sign coincide, and its reflection symmetries are
//! the planes through the apex normal to eigenvectors of `C`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{GeometryError, Result};
use crate::linalg3::{eigen_sym3, reflection_across_plane, SymMat3, UnitVec3, Vec3, EPS_REL};

/// Relative gap under which two same-sign eigenvalues count as equal.
pub const CIRCULARITY_GAP: f64 = 1e-7;

/// Apex, unit axis and half-angle `theta` in `[0, pi/2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularCone {
    pub apex: Vec3,
    pub axis: UnitVec3,
    pub aperture: f64,
}

impl CircularCone {
    pub fn new(apex: Vec3, axis: UnitVec3, aperture: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&aperture) {
            return Err(GeometryError::InvalidAperture(aperture));
        }
        Ok(Self {
            apex,
            axis,
            aperture,
        })
    }

    pub fn matrix(&self) -> SymMat3 {
        cone_matrix(self.axis, self.aperture)
    }

    pub fn quadric(&self) -> QuadricCone {
        QuadricCone {
            apex: self.apex,
            matrix: self.matrix(),
        }
    }

    /// A point at unit distance from the apex on the ruling at azimuth `phi`.
    pub fn ruling(&self, phi: f64) -> Vec3 {
        let r = self.axis.get();
        let helper = if r.x.abs() < 0.9 { Vec3::X } else { Vec3::Y };
        let e1 = r.cross(helper).normalize().expect("helper not parallel").get();
        let e2 = r.cross(e1);
        let (s, c) = self.aperture.sin_cos();
        self.apex + r * c + (e1 * phi.cos() + e2 * phi.sin()) * s
    }
}

/// `r r^T - cos^2(theta) I`.
///
/// The endpoints `theta = 0` (a line) and `theta = pi/2` (a plane) are
/// accepted here; [`classify`] reports both as degenerate.
pub fn cone_matrix(axis: UnitVec3, aperture: f64) -> SymMat3 {
    let c = aperture.cos();
    SymMat3::outer(axis.get()) - SymMat3::IDENTITY * (c * c)
}

/// The zero set of `(x - apex)^T matrix (x - apex)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadricCone {
    pub apex: Vec3,
    pub matrix: SymMat3,
}

impl QuadricCone {
    pub fn new(apex: Vec3, matrix: SymMat3) -> Result<Self> {
        if !matrix.is_finite() || !apex.is_finite() {
            return Err(GeometryError::NonFinite("cone"));
        }
        if matrix.max_abs() == 0.0 {
            return Err(GeometryError::ZeroMatrix);
        }
        Ok(Self { apex, matrix })
    }

    /// The same cone with its matrix scaled so the largest `|eigenvalue|` is one.
    pub fn normalized(&self) -> Self {
        let e = eigen_sym3(&self.matrix);
        Self {
            apex: self.apex,
            matrix: self.matrix * (1.0 / e.max_abs_eigenvalue()),
        }
    }

    pub fn class(&self) -> ConeClass {
        classify(&self.matrix)
    }
}

/// `(x - u)^T C (x - u)`.
pub fn membership_residual(cone: &QuadricCone, x: Vec3) -> f64 {
    cone.matrix.quadratic_form(x - cone.apex)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConeClass {
    /// Definite matrix: the apex is the only real point.
    PointOnly,
    /// Indefinite with nonzero eigenvalues.
    RealCone,
    /// Some eigenvalue vanishes relative to the largest (plane pairs, lines).
    Degenerate,
}

pub fn classify(c: &SymMat3) -> ConeClass {
    let e = eigen_sym3(c);
    let scale = e.max_abs_eigenvalue();
    if scale == 0.0 || e.eigenvalues.iter().any(|l| l.abs() <= EPS_REL * scale) {
        return ConeClass::Degenerate;
    }
    let positive = e.eigenvalues.iter().filter(|&&l| l > 0.0).count();
    if positive == 0 || positive == 3 {
        ConeClass::PointOnly
    } else {
        ConeClass::RealCone
    }
}

/// Eigen-data of a real cone grouped as the isolated-sign eigenvalue and
/// the same-sign pair.
struct SignSplit {
    isolated: (f64, UnitVec3),
    pair: [(f64, UnitVec3); 2],
    scale: f64,
}

fn split_by_sign(c: &SymMat3) -> Result<SignSplit> {
    if classify(c) != ConeClass::RealCone {
        return Err(GeometryError::NotACone);
    }
    let e = eigen_sym3(c);
    let l = e.eigenvalues;
    let v = e.eigenvectors;
    let scale = e.max_abs_eigenvalue();
    // ascending order: either (-, +, +) or (-, -, +)
    Ok(if l[1] > 0.0 {
        SignSplit {
            isolated: (l[0], v[0]),
            pair: [(l[1], v[1]), (l[2], v[2])],
            scale,
        }
    } else {
        SignSplit {
            isolated: (l[2], v[2]),
            pair: [(l[0], v[0]), (l[1], v[1])],
            scale,
        }
    })
}

/// Axis and aperture of a circular cone matrix, or `None` if the cone is real
/// but not circular.
///
/// With isolated eigenvalue `lambda` and repeated eigenvalue `mu`, the aperture
/// satisfies `cos^2(theta) = mu / (mu - lambda)`. The result does not change
/// when `c` is multiplied by a nonzero scalar.
pub fn circular_parameters(c: &SymMat3) -> Result<Option<(UnitVec3, f64)>> {
    let split = split_by_sign(c)?;
    let [(mu1, _), (mu2, _)] = split.pair;
    if (mu1 - mu2).abs() > CIRCULARITY_GAP * split.scale {
        return Ok(None);
    }
    let mu = 0.5 * (mu1 + mu2);
    let lambda = split.isolated.0;
    // cos^2 = |mu| / (|mu| + |lambda|), sin^2 = |lambda| / (|mu| + |lambda|)
    let theta = lambda.abs().sqrt().atan2(mu.abs().sqrt());
    Ok(Some((split.isolated.1, theta)))
}

/// `{x : normal . x = offset}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    pub normal: UnitVec3,
    pub offset: f64,
}

impl Plane {
    pub fn through(point: Vec3, normal: UnitVec3) -> Self {
        Self {
            normal,
            offset: normal.dot(point),
        }
    }

    /// Signed distance from `x` to the plane.
    pub fn signed_distance(&self, x: Vec3) -> f64 {
        self.normal.dot(x) - self.offset
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymmetryPlanes {
    /// Distinct eigenvalues: exactly three symmetry planes.
    Principal([Plane; 3]),
    /// A circular cone: the plane normal to the axis, and a one-parameter
    /// family of planes containing the axis (two representatives given).
    Rotational {
        axis: UnitVec3,
        isolated: Plane,
        representatives: [Plane; 2],
    },
}

/// Principal planes through the apex, normal to the eigenvectors of `C`.
pub fn symmetry_planes(cone: &QuadricCone) -> Result<SymmetryPlanes> {
    let split = split_by_sign(&cone.matrix)?;
    let plane = |v: UnitVec3| Plane::through(cone.apex, v);
    let [(mu1, s), (mu2, t)] = split.pair;
    let r = split.isolated.1;
    if (mu1 - mu2).abs() <= CIRCULARITY_GAP * split.scale {
        Ok(SymmetryPlanes::Rotational {
            axis: r,
            isolated: plane(r),
            representatives: [plane(s), plane(t)],
        })
    } else {
        let e = eigen_sym3(&cone.matrix);
        Ok(SymmetryPlanes::Principal(e.eigenvectors.map(plane)))
    }
}

/// Whether reflection across the plane through the apex normal to `p` maps
/// the cone to itself, tested as `R C R = C` to relative tolerance `1e-9`.
pub fn is_reflection_symmetry(cone: &QuadricCone, p: UnitVec3) -> Result<bool> {
    if classify(&cone.matrix) != ConeClass::RealCone {
        return Err(GeometryError::NotACone);
    }
    let r = reflection_across_plane(p);
    let diff = cone.matrix.congruence(&r) - cone.matrix;
    Ok(diff.frobenius_norm() <= EPS_REL * cone.matrix.frobenius_norm())
}

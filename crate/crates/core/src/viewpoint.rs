//! Where to stand to see an ellipse or hyperbola as a circle.
//!
//! The conic `x^2/alpha + y^2/beta = 1` (with `alpha > beta`, not both
//! negative) is a focal curve of the confocal family with parameters
//! `(alpha, beta, 0)`. From any point of the *other* real focal curve the
//! cone over the conic is circular, its axis is the tangent of that curve,
//! and its aperture follows from the one free confocal coordinate of the
//! point. From anywhere else the cone is not circular.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::cone::CircularCone;
use crate::confocal::{Branch, ConfocalSystem, Critical, FocalCurve, FocalKind, VertexFlag};
use crate::error::{GeometryError, Result};
use crate::linalg3::{eigen_sym3, UnitVec3, Vec3};
use crate::tangent_cone::fit_cone_through_points;

/// Parameter range used when sampling a hyperbola.
pub const HYPERBOLA_EXTENT: f64 = 2.0;

/// `x^2/alpha + y^2/beta = 1` in the `z = 0` plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conic {
    pub alpha: f64,
    pub beta: f64,
}

impl Conic {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(GeometryError::NonFinite("conic parameter"));
        }
        // equal parameters (a circle) or a zero parameter collide in (alpha, beta, 0)
        ConfocalSystem::new(alpha, beta, 0.0)?;
        if alpha < beta {
            return Err(GeometryError::InvalidConic("alpha must exceed beta"));
        }
        if alpha < 0.0 {
            return Err(GeometryError::InvalidConic("alpha and beta are both negative"));
        }
        Ok(Self { alpha, beta })
    }

    pub fn is_ellipse(&self) -> bool {
        self.beta > 0.0
    }

    /// `(+-sqrt(alpha - beta), 0, 0)`.
    pub fn foci(&self) -> [Vec3; 2] {
        let f = (self.alpha - self.beta).sqrt();
        [Vec3::new(f, 0.0, 0.0), Vec3::new(-f, 0.0, 0.0)]
    }
}

/// A conic placed in its confocal family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Embedding {
    pub sys: ConfocalSystem,
    /// The conic itself, as a focal curve of `sys`.
    pub conic_curve: FocalCurve,
    /// The other real focal curve: the viewpoint locus.
    pub locus: FocalCurve,
    /// The critical parameter whose degenerate surface is the conic.
    pub critical: Critical,
}

pub fn embed_conic(conic: &Conic) -> Result<Embedding> {
    let sys = ConfocalSystem::new(conic.alpha, conic.beta, 0.0)?;
    let (conic_kind, locus_kind, critical) = if conic.is_ellipse() {
        (FocalKind::Ellipse, FocalKind::Hyperbola, Critical::C)
    } else {
        (FocalKind::Hyperbola, FocalKind::Ellipse, Critical::B)
    };
    Ok(Embedding {
        sys,
        conic_curve: sys.focal_curve(conic_kind),
        locus: sys.focal_curve(locus_kind),
        critical,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViewpointResult {
    pub cone: CircularCone,
    /// The free confocal coordinate at the apex (`k1` on the focal
    /// hyperbola, `k3` on the focal ellipse).
    pub confocal_parameter: f64,
    pub aperture_cos2: f64,
    /// Set when the apex sits on a principal axis.
    pub boundary: Option<VertexFlag>,
}

/// The circular cone from the point at parameter `t` of one real focal curve
/// of `sys` over the other real focal curve.
///
/// On the focal hyperbola (looking at the ellipse) `cos^2 = (k1 - c)/(k1 - b)`;
/// on the focal ellipse (looking at the hyperbola) `cos^2 = (k3 - b)/(k3 - c)`.
pub fn focal_viewpoint(sys: &ConfocalSystem, apex_curve: FocalKind, t: f64, branch: Branch) -> Result<ViewpointResult> {
    let fp = sys.focal_point_and_tangent(apex_curve, t, branch)?;
    let (a, b, c) = (sys.a(), sys.b(), sys.c());
    let _ = a;
    let (free, cos2, sin2) = match apex_curve {
        FocalKind::Hyperbola => {
            let k1 = fp.coords.k1;
            ((k1), (k1 - c) / (k1 - b), (b - c) / (b - k1))
        }
        FocalKind::Ellipse => {
            let k3 = fp.coords.k3;
            (k3, (k3 - b) / (k3 - c), (b - c) / (k3 - c))
        }
        FocalKind::Imaginary => return Err(GeometryError::ImaginaryCurve),
    };
    let aperture = sin2.max(0.0).sqrt().atan2(cos2.max(0.0).sqrt());
    Ok(ViewpointResult {
        cone: CircularCone::new(fp.point, fp.tangent, aperture.min(FRAC_PI_2))?,
        confocal_parameter: free,
        aperture_cos2: cos2,
        boundary: fp.boundary,
    })
}

/// The circular cone over `conic` from the locus point at parameter `t`.
///
/// For an ellipse the locus is a hyperbola in the `x,z`-plane and `branch`
/// selects the sign of `x`; for a hyperbola the locus is an ellipse and
/// `branch` is ignored.
pub fn viewing_cone(conic: &Conic, t: f64, branch: Branch) -> Result<ViewpointResult> {
    let emb = embed_conic(conic)?;
    focal_viewpoint(&emb.sys, emb.locus.kind, t, branch)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularityReport {
    /// Mean folded half-angle between the rays and the axis.
    pub mean: f64,
    /// `max |angle - mean|`.
    pub max_deviation: f64,
    pub samples: usize,
}

/// Measures how far the cone from `apex` over `curve` is from the circular
/// cone with the given axis.
///
/// Rays making angle `theta` or `pi - theta` with the axis are treated alike.
pub fn verify_circularity(apex: Vec3, axis: UnitVec3, curve: &FocalCurve, samples: usize) -> Result<CircularityReport> {
    if samples < 8 {
        return Err(GeometryError::TooFewInputs {
            needed: 8,
            got: samples,
        });
    }
    let points = curve.samples(samples, HYPERBOLA_EXTENT)?;
    let scale = apex.norm().max(1.0);
    let mut angles = Vec::with_capacity(points.len());
    for p in &points {
        let d = *p - apex;
        if d.norm() <= 1e-12 * scale {
            return Err(GeometryError::DegenerateRay);
        }
        let ang = d.angle_to(axis.get());
        angles.push(ang.min(PI - ang));
    }
    let mean = neumaier_sum(&angles) / angles.len() as f64;
    let max_deviation = angles.iter().map(|a| (a - mean).abs()).fold(0.0, f64::max);
    Ok(CircularityReport {
        mean,
        max_deviation,
        samples: angles.len(),
    })
}

/// Smallest circularity deviation over all candidate axes.
///
/// If the cone over `curve` were circular its axis would be an eigenvector
/// of the cone matrix, so the eigenvectors of a least-squares cone fitted
/// through the samples are the only candidates worth trying.
pub fn circularity_defect(apex: Vec3, curve: &FocalCurve, samples: usize) -> Result<f64> {
    let points = curve.samples(samples.max(8), HYPERBOLA_EXTENT)?;
    let fit = fit_cone_through_points(apex, &points)?;
    let e = eigen_sym3(&fit.matrix);
    e.eigenvectors
        .iter()
        .map(|axis| verify_circularity(apex, *axis, curve, samples).map(|r| r.max_deviation))
        .try_fold(f64::INFINITY, |m, d| d.map(|d| m.min(d)))
}

fn neumaier_sum(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MinimumAperture {
    /// The aperture tends to zero as the viewpoint runs off to infinity.
    AtInfinity,
    Attained { aperture: f64, points: [Vec3; 2] },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApertureExtremes {
    /// Viewpoints where the cone flattens into the conic's plane (`theta -> pi/2`).
    pub flat_points: [Vec3; 2],
    pub flat_aperture: f64,
    pub minimum: MinimumAperture,
}

/// Extreme apertures along the viewpoint locus.
///
/// Candidate points come from the closed forms (locus vertices); which one is
/// the minimum and which the maximum is decided by comparing them with a
/// dense sample of apertures along the locus.
pub fn aperture_extremes(conic: &Conic) -> Result<ApertureExtremes> {
    let emb = embed_conic(conic)?;
    let aperture = |t: f64, b: Branch| viewing_cone(conic, t, b).map(|v| (v.cone.aperture, v.cone.apex));

    match emb.locus.kind {
        FocalKind::Ellipse => {
            let n = 720;
            let sampled: Vec<f64> = (0..n)
                .map(|i| aperture(2.0 * PI * i as f64 / n as f64, Branch::Plus).map(|a| a.0))
                .collect::<Result<_>>()?;
            let lo = sampled.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = sampled.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let candidates = [0.0, FRAC_PI_2, PI, 3.0 * FRAC_PI_2]
                .map(|t| aperture(t, Branch::Plus))
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
            let pick = |pred: &dyn Fn(f64) -> bool| -> Vec<(f64, Vec3)> {
                candidates.iter().copied().filter(|c| pred(c.0)).collect()
            };
            let flat = pick(&|a| a >= hi - 1e-12);
            let min = pick(&|a| a <= lo + 1e-12);
            if flat.len() != 2 || min.len() != 2 {
                return Err(GeometryError::InvalidConic("aperture extremes not at locus vertices"));
            }
            Ok(ApertureExtremes {
                flat_points: [flat[0].1, flat[1].1],
                flat_aperture: flat[0].0,
                minimum: MinimumAperture::Attained {
                    aperture: min[0].0,
                    points: [min[0].1, min[1].1],
                },
            })
        }
        FocalKind::Hyperbola => {
            let (va, pa) = aperture(0.0, Branch::Plus)?;
            let (_, pb) = aperture(0.0, Branch::Minus)?;
            let ts: Vec<f64> = (0..=200).map(|i| i as f64 * 0.05).collect();
            let sampled: Vec<f64> = ts
                .iter()
                .map(|&t| aperture(t, Branch::Plus).map(|a| a.0))
                .collect::<Result<_>>()?;
            let decreasing = sampled.windows(2).all(|w| w[1] <= w[0]);
            if !decreasing || sampled[0] < va - 1e-12 {
                return Err(GeometryError::InvalidConic("aperture not monotone along locus"));
            }
            Ok(ApertureExtremes {
                flat_points: [pa, pb],
                flat_aperture: va,
                minimum: MinimumAperture::AtInfinity,
            })
        }
        FocalKind::Imaginary => Err(GeometryError::ImaginaryCurve),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};

    #[test]
    fn conic_validation() {
        assert!(Conic::new(3.0, 1.0).is_ok());
        assert!(Conic::new(3.0, -1.0).is_ok());
        assert_eq!(Conic::new(2.0, 2.0).unwrap_err().code(), "degenerate_parameters");
        assert_eq!(Conic::new(2.0, 0.0).unwrap_err().code(), "degenerate_parameters");
        assert_eq!(Conic::new(1.0, 3.0).unwrap_err().code(), "invalid_conic");
        assert_eq!(Conic::new(-1.0, -3.0).unwrap_err().code(), "invalid_conic");
    }

    #[test]
    fn embedding_of_an_ellipse() {
        let emb = embed_conic(&Conic::new(3.0, 1.0).unwrap()).unwrap();
        assert_eq!(emb.conic_curve.equation(), "x^2/3 + y^2 = 1 (z=0)");
        assert_eq!(emb.locus.equation(), "x^2/2 - z^2 = 1 (y=0)");
        assert_eq!(emb.critical, Critical::C);
    }

    #[test]
    fn embedding_of_a_hyperbola() {
        let emb = embed_conic(&Conic::new(3.0, -1.0).unwrap()).unwrap();
        assert_eq!(emb.conic_curve.equation(), "x^2/3 - y^2 = 1 (z=0)");
        // x^2/(alpha - beta) + z^2/(-beta) = 1
        assert_eq!(emb.locus.equation(), "x^2/4 + z^2 = 1 (y=0)");
        assert_eq!(emb.critical, Critical::B);
    }

    #[test]
    fn system_421_viewpoint_on_focal_ellipse() {
        let s = ConfocalSystem::new(4.0, 2.0, 1.0).unwrap();
        let v = focal_viewpoint(&s, FocalKind::Ellipse, FRAC_PI_4, Branch::Plus).unwrap();
        assert!((v.confocal_parameter - 3.0).abs() < 1e-15);
        assert!((v.aperture_cos2 - 0.5).abs() < 1e-15);
        assert!((v.cone.aperture - FRAC_PI_4).abs() < 1e-15);
        let target = s.focal_curve(FocalKind::Hyperbola);
        let r = verify_circularity(v.cone.apex, v.cone.axis, &target, 64).unwrap();
        assert!(r.max_deviation < 1e-12);
        assert!((r.mean - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn hyperbola_minimum_aperture_is_thirty_degrees() {
        let conic = Conic::new(3.0, -1.0).unwrap();
        let v = viewing_cone(&conic, FRAC_PI_2, Branch::Plus).unwrap();
        assert!((v.cone.apex - Vec3::new(0.0, 0.0, 1.0)).norm() < 1e-15);
        assert!((v.cone.aperture - FRAC_PI_6).abs() < 1e-12);
    }

    #[test]
    fn aperture_flattens_at_foci_of_ellipse() {
        let conic = Conic::new(3.0, 1.0).unwrap();
        let v = viewing_cone(&conic, 0.0, Branch::Plus).unwrap();
        assert!((v.cone.apex - Vec3::new(2.0_f64.sqrt(), 0.0, 0.0)).norm() < 1e-15);
        assert!((v.cone.aperture - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(v.boundary, Some(VertexFlag::K1AtC));
        let near = viewing_cone(&conic, 1e-4, Branch::Plus).unwrap();
        assert!(near.cone.aperture < FRAC_PI_2 && near.cone.aperture > FRAC_PI_2 - 1e-3);
    }

    #[test]
    fn off_locus_apex_is_not_circular() {
        let conic = Conic::new(3.0, 1.0).unwrap();
        let emb = embed_conic(&conic).unwrap();
        for apex in [Vec3::new(1.0, 1.0, 1.0), Vec3::new(0.0, 0.0, 2.0)] {
            let d = circularity_defect(apex, &emb.conic_curve, 64).unwrap();
            assert!(d > 1e-3, "{apex}: {d}");
        }
    }

    #[test]
    fn extremes_for_both_conic_types() {
        let e = aperture_extremes(&Conic::new(3.0, 1.0).unwrap()).unwrap();
        assert_eq!(e.minimum, MinimumAperture::AtInfinity);
        assert!((e.flat_points[0].x.abs() - 2.0_f64.sqrt()).abs() < 1e-15);
        assert!((e.flat_aperture - FRAC_PI_2).abs() < 1e-15);

        let e = aperture_extremes(&Conic::new(3.0, -1.0).unwrap()).unwrap();
        let MinimumAperture::Attained { aperture, points } = e.minimum else {
            panic!("ellipse locus attains its minimum");
        };
        assert!((aperture - FRAC_PI_6).abs() < 1e-12);
        for p in points {
            assert!((p.z.abs() - 1.0).abs() < 1e-12 && p.x.abs() < 1e-12);
        }
        for p in e.flat_points {
            assert!((p.x.abs() - 2.0).abs() < 1e-12);
        }

        let e = aperture_extremes(&Conic::new(8.0, 4.0).unwrap()).unwrap();
        assert!((e.flat_points[0].x.abs() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn rectangular_hyperbola_is_supported() {
        let conic = Conic::new(2.0, -2.0).unwrap();
        let emb = embed_conic(&conic).unwrap();
        let v = viewing_cone(&conic, 0.9, Branch::Plus).unwrap();
        let r = verify_circularity(v.cone.apex, v.cone.axis, &emb.conic_curve, 64).unwrap();
        assert!(r.max_deviation < 1e-12);
        let top = viewing_cone(&conic, FRAC_PI_2, Branch::Plus).unwrap();
        assert!((top.cone.aperture - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn too_few_samples_and_degenerate_ray() {
        let conic = Conic::new(3.0, 1.0).unwrap();
        let emb = embed_conic(&conic).unwrap();
        assert!(verify_circularity(Vec3::Z, UnitVec3::Z, &emb.conic_curve, 4).is_err());
        let on_curve = emb.conic_curve.point(0.0, Branch::Plus).unwrap();
        assert_eq!(
            verify_circularity(on_curve, UnitVec3::Z, &emb.conic_curve, 8),
            Err(GeometryError::DegenerateRay)
        );
    }
}

//! Sampled plot data and its CSV and OBJ projections.

use std::f64::consts::PI;
use std::fmt::Write as _;

use confocal_core::viewpoint::{focal_viewpoint, HYPERBOLA_EXTENT};
use confocal_core::{
    embed_conic, verify_circularity, viewing_cone, Branch, Conic, ConfocalSystem, FocalCurve, FocalKind,
    Result, Sign, ViewpointResult,
};
use serde::{Deserialize, Serialize};

const SURFACE_ROWS: usize = 12;
const SURFACE_COLS: usize = 24;
const SURFACE_EXTENT: f64 = 1.5;
const CIRCULARITY_SAMPLES: usize = 256;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneExport {
    pub surfaces: Vec<SurfacePatch>,
    pub curves: Vec<SampledCurve>,
    pub cones: Vec<ConeRulings>,
    pub metadata: SceneMetadata,
}

/// Grid rows on `x^2/(a-k) + y^2/(b-k) + z^2/(c-k) = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfacePatch {
    pub name: String,
    pub class: String,
    pub k: f64,
    pub rows: Vec<Vec<[f64; 3]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveTerm {
    pub axis: usize,
    pub denominator: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyline {
    pub branch: String,
    pub t: Vec<f64>,
    pub points: Vec<[f64; 3]>,
}

/// `sum x_axis^2 / denominator = 1` in the plane `x_plane_axis = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledCurve {
    pub name: String,
    pub kind: String,
    pub equation: String,
    pub plane_axis: usize,
    pub terms: Vec<CurveTerm>,
    pub polylines: Vec<Polyline>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConeRulings {
    pub name: String,
    pub target: String,
    pub apex: [f64; 3],
    pub axis: [f64; 3],
    pub aperture: f64,
    /// Points on the target curve; each ruling runs from the apex to one.
    pub ends: Vec<[f64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViewpointRecord {
    pub t: f64,
    pub branch: String,
    pub apex: [f64; 3],
    pub axis: [f64; 3],
    pub theta_rad: f64,
    pub theta_deg: f64,
    pub cos2: f64,
    pub confocal_parameter: f64,
    pub boundary: Option<String>,
}

impl ViewpointRecord {
    pub fn new(t: f64, branch: Branch, v: &ViewpointResult) -> Self {
        Self {
            t,
            branch: sign_label(branch).to_string(),
            apex: v.cone.apex.to_array(),
            axis: v.cone.axis.to_array(),
            theta_rad: v.cone.aperture,
            theta_deg: v.cone.aperture.to_degrees(),
            cos2: v.aperture_cos2,
            confocal_parameter: v.confocal_parameter,
            boundary: v.boundary.map(|b| format!("{b:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircularityRecord {
    pub mean: f64,
    pub max_deviation: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneMetadata {
    /// "conic" or "abc".
    pub source: String,
    /// Confocal parameters in user axis order.
    pub abc: [f64; 3],
    pub conic: Option<[f64; 2]>,
    pub viewpoint: ViewpointRecord,
    pub circularity: CircularityRecord,
}

pub fn sign_label(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

/// `n` viewpoint parameters along a locus: evenly around an ellipse, or
/// split between the two branches of a hyperbola with `|t| <= 2`.
pub fn locus_parameters(kind: FocalKind, n: usize) -> Vec<(f64, Branch)> {
    match kind {
        FocalKind::Ellipse => (0..n).map(|i| (2.0 * PI * i as f64 / n as f64, Branch::Plus)).collect(),
        _ => {
            let plus = n.div_ceil(2);
            let mut out = Vec::with_capacity(n);
            for (branch, count) in [(Branch::Plus, plus), (Branch::Minus, n - plus)] {
                for i in 0..count {
                    let t = if count == 1 {
                        0.0
                    } else {
                        -HYPERBOLA_EXTENT + 2.0 * HYPERBOLA_EXTENT * i as f64 / (count - 1) as f64
                    };
                    out.push((t, branch));
                }
            }
            out
        }
    }
}

fn sample_curve(name: &str, curve: &FocalCurve, n: usize) -> Result<SampledCurve> {
    let n = n.max(4);
    let mut polylines = Vec::new();
    match curve.kind {
        FocalKind::Ellipse => {
            // closed loop: the last point repeats the first
            let t: Vec<f64> = (0..=n).map(|i| 2.0 * PI * (i % n) as f64 / n as f64).collect();
            let points = t
                .iter()
                .map(|&t| curve.point(t, Branch::Plus).map(|p| p.to_array()))
                .collect::<Result<_>>()?;
            polylines.push(Polyline {
                branch: "closed".into(),
                t,
                points,
            });
        }
        _ => {
            let per = n.div_ceil(2).max(2);
            for branch in [Branch::Plus, Branch::Minus] {
                let t: Vec<f64> = (0..per)
                    .map(|i| -HYPERBOLA_EXTENT + 2.0 * HYPERBOLA_EXTENT * i as f64 / (per - 1) as f64)
                    .collect();
                let points = t
                    .iter()
                    .map(|&t| curve.point(t, branch).map(|p| p.to_array()))
                    .collect::<Result<_>>()?;
                polylines.push(Polyline {
                    branch: sign_label(branch).into(),
                    t,
                    points,
                });
            }
        }
    }
    Ok(SampledCurve {
        name: name.into(),
        kind: curve.kind.name().into(),
        equation: curve.equation(),
        plane_axis: curve.plane_axis,
        terms: curve
            .terms
            .iter()
            .map(|&(axis, denominator)| CurveTerm { axis, denominator })
            .collect(),
        polylines,
    })
}

fn rulings(name: &str, target: &str, v: &ViewpointResult, curve: &FocalCurve, n: usize) -> Result<ConeRulings> {
    Ok(ConeRulings {
        name: name.into(),
        target: target.into(),
        apex: v.cone.apex.to_array(),
        axis: v.cone.axis.to_array(),
        aperture: v.cone.aperture,
        ends: curve
            .samples(n.max(4), HYPERBOLA_EXTENT)?
            .into_iter()
            .map(|p| p.to_array())
            .collect(),
    })
}

fn circularity(v: &ViewpointResult, target: &FocalCurve) -> Result<CircularityRecord> {
    let r = verify_circularity(v.cone.apex, v.cone.axis, target, CIRCULARITY_SAMPLES)?;
    Ok(CircularityRecord {
        mean: r.mean,
        max_deviation: r.max_deviation,
        samples: r.samples,
    })
}

/// The conic, its viewpoint locus and the circular cone from the locus
/// point at `t`.
pub fn conic_scene(conic: &Conic, t: f64, branch: Branch, samples: usize, n_rulings: usize) -> Result<SceneExport> {
    let emb = embed_conic(conic)?;
    let v = viewing_cone(conic, t, branch)?;
    Ok(SceneExport {
        surfaces: Vec::new(),
        curves: vec![
            sample_curve("conic", &emb.conic_curve, samples)?,
            sample_curve("locus", &emb.locus, samples)?,
        ],
        cones: vec![rulings("viewing_cone", "conic", &v, &emb.conic_curve, n_rulings)?],
        metadata: SceneMetadata {
            source: "conic".into(),
            abc: emb.sys.params(),
            conic: Some([conic.alpha, conic.beta]),
            viewpoint: ViewpointRecord::new(t, branch, &v),
            circularity: circularity(&v, &emb.conic_curve)?,
        },
    })
}

/// One sampled surface per real class, both real focal curves, and the
/// circular cone from the focal ellipse point at `t` over the focal
/// hyperbola.
pub fn family_scene(sys: &ConfocalSystem, t: f64, branch: Branch, samples: usize, n_rulings: usize) -> Result<SceneExport> {
    let [a, b, c] = sys.canonical();
    let mut surfaces = Vec::new();
    for k in [c - 0.5 * (b - c), 0.5 * (b + c), 0.5 * (a + b)] {
        let class = sys.classify_surface(k).name();
        let rows = sys
            .sample_surface(k, SURFACE_ROWS, SURFACE_COLS, SURFACE_EXTENT)?
            .into_iter()
            .map(|row| row.into_iter().map(|p| p.to_array()).collect())
            .collect();
        surfaces.push(SurfacePatch {
            name: class.into(),
            class: class.into(),
            k,
            rows,
        });
    }
    let ellipse = sys.focal_curve(FocalKind::Ellipse);
    let hyperbola = sys.focal_curve(FocalKind::Hyperbola);
    let v = focal_viewpoint(sys, FocalKind::Ellipse, t, branch)?;
    Ok(SceneExport {
        surfaces,
        curves: vec![
            sample_curve("focal_ellipse", &ellipse, samples)?,
            sample_curve("focal_hyperbola", &hyperbola, samples)?,
        ],
        cones: vec![rulings("viewing_cone", "focal_hyperbola", &v, &hyperbola, n_rulings)?],
        metadata: SceneMetadata {
            source: "abc".into(),
            abc: sys.params(),
            conic: None,
            viewpoint: ViewpointRecord::new(t, branch, &v),
            circularity: circularity(&v, &hyperbola)?,
        },
    })
}

impl SceneExport {
    pub fn point_count(&self) -> usize {
        let s: usize = self.surfaces.iter().flat_map(|p| &p.rows).map(Vec::len).sum();
        let c: usize = self.curves.iter().flat_map(|c| &c.polylines).map(|p| p.points.len()).sum();
        let r: usize = self.cones.iter().map(|c| c.ends.len() + 2).sum();
        s + c + r
    }

    /// One row per point: `role,x,y,z,param`.
    ///
    /// Roles are `surface_<name>` (param `k`), `curve_<name>` (param `t`),
    /// and per cone `apex` (param aperture), `axis_point` (apex + axis,
    /// param `cos^2`) and `ruling` (ruling end, param its index).
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["role", "x", "y", "z", "param"]).expect("writing to memory");
        let mut row = |role: &str, p: [f64; 3], param: f64| {
            w.write_record([
                role.to_string(),
                p[0].to_string(),
                p[1].to_string(),
                p[2].to_string(),
                param.to_string(),
            ])
            .expect("writing to memory");
        };
        for s in &self.surfaces {
            let role = format!("surface_{}", s.name);
            for p in s.rows.iter().flatten() {
                row(&role, *p, s.k);
            }
        }
        for c in &self.curves {
            let role = format!("curve_{}", c.name);
            for line in &c.polylines {
                for (p, t) in line.points.iter().zip(&line.t) {
                    row(&role, *p, *t);
                }
            }
        }
        for cone in &self.cones {
            let axis_point = [0, 1, 2].map(|i| cone.apex[i] + cone.axis[i]);
            row("apex", cone.apex, cone.aperture);
            row("axis_point", axis_point, self.metadata.viewpoint.cos2);
            for (j, p) in cone.ends.iter().enumerate() {
                row("ruling", *p, j as f64);
            }
        }
        drop(row);
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 csv")
    }

    /// Wavefront OBJ: per group, `v` lines then `l` polylines. Surface groups
    /// carry their parameter in a `# k <value>` comment.
    pub fn to_obj(&self) -> String {
        let mut out = String::from("# confocal scene\n");
        let mut next = 1usize;
        let mut vertex = |out: &mut String, p: [f64; 3]| {
            let _ = writeln!(out, "v {} {} {}", p[0], p[1], p[2]);
            next += 1;
            next - 1
        };
        let line = |out: &mut String, idx: &[usize]| {
            let list: Vec<String> = idx.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "l {}", list.join(" "));
        };

        for s in &self.surfaces {
            let _ = writeln!(out, "g surface_{}", s.name);
            let _ = writeln!(out, "# k {}", s.k);
            let ids: Vec<Vec<usize>> = s
                .rows
                .iter()
                .map(|r| r.iter().map(|p| vertex(&mut out, *p)).collect())
                .collect();
            for r in &ids {
                let mut ring = r.clone();
                ring.push(r[0]);
                line(&mut out, &ring);
            }
        }
        for c in &self.curves {
            let _ = writeln!(out, "g curve_{}", c.name);
            for poly in &c.polylines {
                let ids: Vec<usize> = poly.points.iter().map(|p| vertex(&mut out, *p)).collect();
                line(&mut out, &ids);
            }
        }
        for cone in &self.cones {
            let _ = writeln!(out, "g cone_{}", cone.name);
            let apex = vertex(&mut out, cone.apex);
            let axis_point = vertex(&mut out, [0, 1, 2].map(|i| cone.apex[i] + cone.axis[i]));
            let ends: Vec<usize> = cone.ends.iter().map(|p| vertex(&mut out, *p)).collect();
            line(&mut out, &[apex, axis_point]);
            for e in ends {
                line(&mut out, &[apex, e]);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locus_parameters_cover_both_branches() {
        let p = locus_parameters(FocalKind::Hyperbola, 5);
        assert_eq!(p.len(), 5);
        assert_eq!(p.iter().filter(|(_, b)| *b == Branch::Minus).count(), 2);
        assert_eq!(locus_parameters(FocalKind::Ellipse, 4)[1].0, PI / 2.0);
    }

    #[test]
    fn conic_scene_is_consistent() {
        let conic = Conic::new(3.0, 1.0).unwrap();
        let scene = conic_scene(&conic, 0.7, Branch::Plus, 32, 12).unwrap();
        assert!(scene.metadata.circularity.max_deviation < 1e-12);
        assert_eq!(scene.cones[0].ends.len(), 12);
        let curve = &scene.curves[0];
        for p in curve.polylines.iter().flat_map(|l| &l.points) {
            let r: f64 = curve.terms.iter().map(|t| p[t.axis].powi(2) / t.denominator).sum();
            assert!((r - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn family_scene_has_three_classes() {
        let sys = ConfocalSystem::new(4.0, 2.0, 1.0).unwrap();
        let scene = family_scene(&sys, 0.7, Branch::Plus, 32, 12).unwrap();
        let names: Vec<&str> = scene.surfaces.iter().map(|s| s.class.as_str()).collect();
        assert_eq!(names, ["ellipsoid", "hyperboloid_one_sheet", "hyperboloid_two_sheets"]);
        let obj = scene.to_obj();
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), scene.point_count());
        let csv = scene.to_csv();
        assert_eq!(csv.lines().count(), scene.point_count() + 1);
        assert!(csv.starts_with("role,x,y,z,param\n"));
    }
}

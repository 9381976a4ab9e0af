//! Re-reading exported files and checking every point against its equation.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::Path;

use confocal_core::{embed_conic, Conic, ConfocalSystem, FocalCurve, FocalKind, Vec3};
use confocal_cli::scene::SceneExport;

pub const POINT_TOLERANCE: f64 = 1e-6;

pub fn run(args: &[&str]) -> confocal_cli::Outcome {
    let mut argv = vec!["confocal"];
    argv.extend_from_slice(args);
    confocal_cli::run(argv)
}

/// Largest equation residual over a scene read back from JSON.
pub fn json_scene_residual(path: &Path) -> Result<(SceneExport, f64), String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let doc: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let scene: SceneExport = serde_json::from_value(doc["result"].clone()).map_err(|e| e.to_string())?;
    let sys = system(scene.metadata.abc)?;
    let mut worst: f64 = 0.0;
    for s in &scene.surfaces {
        let a = sys.matrix_at(s.k).map_err(|e| e.to_string())?;
        for p in s.rows.iter().flatten() {
            worst = worst.max((a.quadratic_form(Vec3::from_array(*p)) - 1.0).abs());
        }
    }
    for c in &scene.curves {
        for p in c.polylines.iter().flat_map(|l| &l.points) {
            let r: f64 = c.terms.iter().map(|t| p[t.axis] * p[t.axis] / t.denominator).sum();
            worst = worst.max((r - 1.0).abs()).max(p[c.plane_axis].abs());
        }
    }
    for cone in &scene.cones {
        let target = scene
            .curves
            .iter()
            .find(|c| c.name == cone.target)
            .ok_or("cone target missing")?;
        for p in &cone.ends {
            let r: f64 = target.terms.iter().map(|t| p[t.axis] * p[t.axis] / t.denominator).sum();
            worst = worst.max((r - 1.0).abs());
        }
    }
    Ok((scene, worst))
}

fn system(abc: [f64; 3]) -> Result<ConfocalSystem, String> {
    ConfocalSystem::new(abc[0], abc[1], abc[2]).map_err(|e| e.to_string())
}

/// The two named curves of a scene source: (`conic`, `locus`) for a conic,
/// (`focal_ellipse`, `focal_hyperbola`) for a family.
pub fn named_curves(conic: Option<[f64; 2]>, abc: [f64; 3]) -> Result<BTreeMap<String, FocalCurve>, String> {
    let mut out = BTreeMap::new();
    match conic {
        Some([alpha, beta]) => {
            let emb = embed_conic(&Conic::new(alpha, beta).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            out.insert("conic".to_string(), emb.conic_curve);
            out.insert("locus".to_string(), emb.locus);
        }
        None => {
            let sys = system(abc)?;
            out.insert("focal_ellipse".to_string(), sys.focal_curve(FocalKind::Ellipse));
            out.insert("focal_hyperbola".to_string(), sys.focal_curve(FocalKind::Hyperbola));
        }
    }
    Ok(out)
}

#[derive(Debug, Default)]
pub struct CsvCheck {
    pub rows: usize,
    pub worst_residual: f64,
    /// Largest `|ray angle - aperture|` over the cone rulings.
    pub worst_ruling_angle: f64,
}

/// Re-reads a CSV export; `target` names the curve the cone is over.
pub fn check_csv(path: &Path, conic: Option<[f64; 2]>, abc: [f64; 3], target: &str) -> Result<CsvCheck, String> {
    let sys = system(abc)?;
    let curves = named_curves(conic, abc)?;
    let mut rdr = csv::Reader::from_path(path).map_err(|e| e.to_string())?;
    let header: Vec<String> = rdr.headers().map_err(|e| e.to_string())?.iter().map(String::from).collect();
    if header != ["role", "x", "y", "z", "param"] {
        return Err(format!("bad header {header:?}"));
    }
    let mut out = CsvCheck::default();
    let (mut apex, mut axis_point, mut aperture) = (None, None, 0.0);
    let mut ends = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let num = |i: usize| rec[i].parse::<f64>().map_err(|e| e.to_string());
        let p = Vec3::new(num(1)?, num(2)?, num(3)?);
        let param = num(4)?;
        let role = &rec[0];
        out.rows += 1;
        if role.starts_with("surface_") {
            let a = sys.matrix_at(param).map_err(|e| e.to_string())?;
            out.worst_residual = out.worst_residual.max((a.quadratic_form(p) - 1.0).abs());
        } else if let Some(name) = role.strip_prefix("curve_") {
            let c = curves.get(name).ok_or(format!("unknown curve {name}"))?;
            out.worst_residual = out.worst_residual.max(c.residual(p).abs()).max(c.plane_offset(p).abs());
        } else if role == "apex" {
            apex = Some(p);
            aperture = param;
        } else if role == "axis_point" {
            axis_point = Some(p);
        } else if role == "ruling" {
            let c = &curves[target];
            out.worst_residual = out.worst_residual.max(c.residual(p).abs());
            ends.push(p);
        } else {
            return Err(format!("unknown role {role}"));
        }
    }
    let (apex, axis_point) = (apex.ok_or("no apex row")?, axis_point.ok_or("no axis row")?);
    let axis = axis_point - apex;
    for e in ends {
        let ang = (e - apex).angle_to(axis);
        let folded = ang.min(std::f64::consts::PI - ang);
        out.worst_ruling_angle = out.worst_ruling_angle.max((folded - aperture).abs());
    }
    Ok(out)
}

/// Re-reads an OBJ export of a family scene, checking every surface vertex
/// against its quadric and every curve vertex against its focal curve.
/// Returns (vertex count, worst residual, surface group names).
pub fn check_obj(path: &Path, abc: [f64; 3]) -> Result<(usize, f64, Vec<String>), String> {
    let sys = system(abc)?;
    let curves = named_curves(None, abc)?;
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let (mut group, mut k) = (String::new(), None::<f64>);
    let (mut count, mut worst) = (0usize, 0.0f64);
    let mut surfaces = Vec::new();
    for line in text.lines() {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("g") => {
                group = it.next().ok_or("unnamed group")?.to_string();
                k = None;
                if group.starts_with("surface_") {
                    surfaces.push(group.clone());
                }
            }
            Some("#") if it.clone().next() == Some("k") => {
                k = Some(it.nth(1).ok_or("missing k")?.parse().map_err(|_| "bad k")?);
            }
            Some("v") => {
                let c: Vec<f64> = it.map(|s| s.parse::<f64>().map_err(|_| "bad vertex")).collect::<Result<_, _>>()?;
                let p = Vec3::new(c[0], c[1], c[2]);
                count += 1;
                if group.starts_with("surface_") {
                    let a = sys.matrix_at(k.ok_or("surface without k")?).map_err(|e| e.to_string())?;
                    worst = worst.max((a.quadratic_form(p) - 1.0).abs());
                } else if let Some(name) = group.strip_prefix("curve_") {
                    let c = &curves[name];
                    worst = worst.max(c.residual(p).abs()).max(c.plane_offset(p).abs());
                }
            }
            Some("l") => {
                for idx in it {
                    let i: usize = idx.parse().map_err(|_| "bad index")?;
                    if i == 0 || i > count {
                        return Err(format!("line index {i} out of range"));
                    }
                }
            }
            _ => {}
        }
    }
    Ok((count, worst, surfaces))
}

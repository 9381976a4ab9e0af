//! The `confocal` command-line tool.
//!
//! Every command prints one JSON document `{version, command, inputs,
//! result}` on stdout. Domain errors print `{error, detail}` and exit 2;
//! IO errors exit 3.

pub mod args;
pub mod scene;

use std::ffi::OsString;
use std::fs;
use std::path::Path;

use clap::Parser;
use confocal_core::viewpoint::ApertureExtremes;
use confocal_core::{
    aperture_extremes, embed_conic, viewing_cone, Conic, ConfocalSystem, GeometryError, MinimumAperture, Vec3,
};
use serde::Serialize;

use args::{ClassifyArgs, Cli, Command, CoordsArgs, ExportArgs, Format, ViewpointsArgs};
use scene::{conic_scene, family_scene, locus_parameters, sign_label, SceneExport, ViewpointRecord};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Domain(GeometryError),
    Usage(String),
    Io { path: String, message: String },
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::Usage(_) => EXIT_DOMAIN,
            CliError::Io { .. } => EXIT_IO,
        }
    }

    fn report(&self) -> ErrorReport {
        match self {
            CliError::Domain(e) => ErrorReport {
                error: e.code().into(),
                detail: e.to_string(),
            },
            CliError::Usage(msg) => ErrorReport {
                error: "invalid_arguments".into(),
                detail: msg.clone(),
            },
            CliError::Io { path, message } => ErrorReport {
                error: "io_error".into(),
                detail: format!("{path}: {message}"),
            },
        }
    }
}

#[derive(Serialize)]
struct ErrorReport {
    error: String,
    detail: String,
}

#[derive(Serialize)]
struct Envelope<'a, I: Serialize, R: Serialize> {
    version: &'static str,
    command: &'a str,
    inputs: I,
    result: R,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn envelope<I: Serialize, R: Serialize>(command: &str, inputs: I, result: R) -> String {
    to_json(&Envelope {
        version: SCHEMA_VERSION,
        command,
        inputs,
        result,
    })
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                }
            } else {
                let err = CliError::Usage(e.kind().to_string());
                Outcome {
                    code: err.exit_code(),
                    stdout: to_json(&err.report()),
                    stderr: e.to_string(),
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Coords(a) => coords(a),
        Command::Viewpoints(a) => viewpoints(a),
        Command::Export(a) => export(a),
    };
    match result {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(err) => Outcome {
            code: err.exit_code(),
            stdout: to_json(&err.report()),
            stderr: String::new(),
        },
    }
}

fn system(abc: [f64; 3]) -> Result<ConfocalSystem, GeometryError> {
    ConfocalSystem::new(abc[0], abc[1], abc[2])
}

#[derive(Serialize)]
struct ClassifyInputs {
    abc: [f64; 3],
    k: f64,
}

#[derive(Serialize)]
struct ClassifyResult {
    class: &'static str,
    matrix_diag: [f64; 3],
}

fn classify(a: &ClassifyArgs) -> Result<String, CliError> {
    let sys = system(a.abc)?;
    let m = sys.matrix_at(a.k)?;
    Ok(envelope(
        "classify",
        ClassifyInputs { abc: a.abc, k: a.k },
        ClassifyResult {
            class: sys.classify_surface(a.k).name(),
            matrix_diag: m.diagonal().to_array(),
        },
    ))
}

#[derive(Serialize)]
struct CoordsInputs {
    abc: [f64; 3],
    point: Option<[f64; 3]>,
    confocal: Option<[f64; 3]>,
    signs: Option<[&'static str; 3]>,
}

#[derive(Serialize)]
struct CoordsResult {
    cartesian: [f64; 3],
    confocal: [f64; 3],
    /// `phi_u(k_i)` for each confocal coordinate.
    residuals: [f64; 3],
    surfaces: [&'static str; 3],
}

fn coords(a: &CoordsArgs) -> Result<String, CliError> {
    let sys = system(a.abc)?;
    let (u, k) = match (a.point, a.confocal) {
        (Some(p), None) => {
            let u = Vec3::from_array(p);
            (u, sys.confocal_coords(u)?)
        }
        (None, Some(k)) => {
            let coords = confocal_core::ConfocalCoords::new(k[0], k[1], k[2]);
            (sys.cartesian_from_confocal(coords, a.signs)?, coords)
        }
        _ => return Err(CliError::Usage("give exactly one of --point and --confocal".into())),
    };
    let phi = sys.phi(u);
    let ks = k.to_array();
    Ok(envelope(
        "coords",
        CoordsInputs {
            abc: a.abc,
            point: a.point,
            confocal: a.confocal,
            signs: a.confocal.map(|_| a.signs.map(sign_label)),
        },
        CoordsResult {
            cartesian: u.to_array(),
            confocal: ks,
            residuals: ks.map(|ki| phi.eval(ki)),
            surfaces: ks.map(|ki| sys.classify_surface(ki).name()),
        },
    ))
}

#[derive(Serialize)]
struct ViewpointsInputs {
    conic: [f64; 2],
    at: Option<f64>,
    grid: Option<usize>,
    branch: &'static str,
}

#[derive(Serialize)]
struct CurveDescriptor {
    kind: &'static str,
    equation: String,
}

#[derive(Serialize)]
struct ExtremesReport {
    flat_points: [[f64; 3]; 2],
    flat_theta_deg: f64,
    minimum: MinimumReport,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum MinimumReport {
    AtInfinity { theta_deg: f64 },
    Attained { theta_deg: f64, points: [[f64; 3]; 2] },
}

impl From<ApertureExtremes> for ExtremesReport {
    fn from(e: ApertureExtremes) -> Self {
        Self {
            flat_points: e.flat_points.map(Vec3::to_array),
            flat_theta_deg: e.flat_aperture.to_degrees(),
            minimum: match e.minimum {
                MinimumAperture::AtInfinity => MinimumReport::AtInfinity { theta_deg: 0.0 },
                MinimumAperture::Attained { aperture, points } => MinimumReport::Attained {
                    theta_deg: aperture.to_degrees(),
                    points: points.map(Vec3::to_array),
                },
            },
        }
    }
}

#[derive(Serialize)]
struct ViewpointsResult {
    conic: CurveDescriptor,
    locus: CurveDescriptor,
    foci: [[f64; 3]; 2],
    extremes: ExtremesReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    viewpoint: Option<ViewpointRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grid: Option<Vec<ViewpointRecord>>,
}

fn viewpoints(a: &ViewpointsArgs) -> Result<String, CliError> {
    let conic = Conic::new(a.conic[0], a.conic[1])?;
    let emb = embed_conic(&conic)?;
    let viewpoint = a
        .at
        .map(|t| viewing_cone(&conic, t, a.branch).map(|v| ViewpointRecord::new(t, a.branch, &v)))
        .transpose()?;
    let grid = a
        .grid
        .map(|n| {
            locus_parameters(emb.locus.kind, n)
                .into_iter()
                .map(|(t, b)| viewing_cone(&conic, t, b).map(|v| ViewpointRecord::new(t, b, &v)))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    Ok(envelope(
        "viewpoints",
        ViewpointsInputs {
            conic: a.conic,
            at: a.at,
            grid: a.grid,
            branch: sign_label(a.branch),
        },
        ViewpointsResult {
            conic: CurveDescriptor {
                kind: emb.conic_curve.kind.name(),
                equation: emb.conic_curve.equation(),
            },
            locus: CurveDescriptor {
                kind: emb.locus.kind.name(),
                equation: emb.locus.equation(),
            },
            foci: conic.foci().map(Vec3::to_array),
            extremes: aperture_extremes(&conic)?.into(),
            viewpoint,
            grid,
        },
    ))
}

#[derive(Serialize)]
struct ExportInputs<'a> {
    conic: Option<[f64; 2]>,
    abc: Option<[f64; 3]>,
    at: f64,
    branch: &'static str,
    grid: usize,
    rulings: usize,
    format: &'static str,
    output: &'a str,
}

#[derive(Serialize)]
struct ExportSummary<'a> {
    path: &'a str,
    format: &'static str,
    surfaces: usize,
    curves: usize,
    cones: usize,
    points: usize,
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Obj => "obj",
    }
}

/// Builds the scene an `export` invocation describes.
pub fn build_scene(a: &ExportArgs) -> Result<SceneExport, GeometryError> {
    match (a.conic, a.abc) {
        (Some([alpha, beta]), _) => conic_scene(&Conic::new(alpha, beta)?, a.at, a.branch, a.grid, a.rulings),
        (None, Some(abc)) => family_scene(&system(abc)?, a.at, a.branch, a.grid, a.rulings),
        (None, None) => Err(GeometryError::InvalidConic("no scene source")),
    }
}

fn export(a: &ExportArgs) -> Result<String, CliError> {
    let scene = build_scene(a)?;
    let path = a.output.display().to_string();
    let inputs = ExportInputs {
        conic: a.conic,
        abc: a.abc,
        at: a.at,
        branch: sign_label(a.branch),
        grid: a.grid,
        rulings: a.rulings,
        format: format_name(a.format),
        output: &path,
    };
    let body = match a.format {
        Format::Json => envelope("export", &inputs, &scene),
        Format::Csv => scene.to_csv(),
        Format::Obj => scene.to_obj(),
    };
    write_file(&a.output, &body)?;
    Ok(envelope(
        "export",
        &inputs,
        ExportSummary {
            path: &path,
            format: format_name(a.format),
            surfaces: scene.surfaces.len(),
            curves: scene.curves.len(),
            cones: scene.cones.len(),
            points: scene.point_count(),
        },
    ))
}

fn write_file(path: &Path, body: &str) -> Result<(), CliError> {
    fs::write(path, body).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json(o: &Outcome) -> serde_json::Value {
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn classify_examples() {
        let o = run(["confocal", "classify", "--abc", "4,2,1", "--k", "0"]);
        assert_eq!(o.code, 0);
        assert_eq!(json(&o)["result"]["class"], "ellipsoid");
        let o = run(["confocal", "classify", "--abc", "4,2,1", "--k", "3"]);
        assert_eq!(json(&o)["result"]["class"], "hyperboloid_two_sheets");
        let o = run(["confocal", "classify", "--abc", "4,2,2", "--k", "0"]);
        assert_eq!(o.code, 2);
        assert_eq!(json(&o)["error"], "degenerate_parameters");
        let o = run(["confocal", "classify", "--abc", "4,2,1", "--k", "2"]);
        assert_eq!(json(&o)["error"], "critical_parameter");
    }

    #[test]
    fn coords_examples() {
        let o = run(["confocal", "coords", "--abc", "4,2,1", "--point", "1,1,1"]);
        assert_eq!(o.code, 0);
        let v = json(&o);
        let k: Vec<f64> = v["result"]["confocal"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
        assert!(k[0] < 1.0 && 1.0 < k[1] && k[1] < 2.0 && 2.0 < k[2] && k[2] < 4.0);
        for r in v["result"]["residuals"].as_array().unwrap() {
            assert!(r.as_f64().unwrap().abs() < 1e-9);
        }
        let o = run(["confocal", "coords", "--abc", "4,2,1", "--point", "1,0,1"]);
        assert_eq!(o.code, 2);
        assert_eq!(json(&o)["error"], "non_generic_point");
    }

    #[test]
    fn viewpoints_rejects_circle() {
        let o = run(["confocal", "viewpoints", "--conic", "2,2"]);
        assert_eq!(o.code, 2);
        assert_eq!(json(&o)["error"], "degenerate_parameters");
    }

    #[test]
    fn usage_errors_are_json() {
        let o = run(["confocal", "classify", "--abc", "4,2"]);
        assert_eq!(o.code, 2);
        assert_eq!(json(&o)["error"], "invalid_arguments");
        assert_eq!(run(["confocal", "--help"]).code, 0);
    }
}

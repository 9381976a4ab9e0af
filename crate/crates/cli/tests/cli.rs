mod common;

use std::process::Command;

use serde_json::Value;

fn confocal(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_confocal"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(confocal(&["classify", "--abc", "4,2,1", "--k", "0"]).0, 0);
    let (code, out) = confocal(&["classify", "--abc", "4,2,2", "--k", "0"]);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["error"], "degenerate_parameters");
    let (code, out) = confocal(&["viewpoints", "--conic", "2,2"]);
    assert_eq!(code, 2);
    assert!(json(&out)["detail"].as_str().unwrap().contains('2'));
    let (code, out) = confocal(&["export", "--conic", "3,1", "-o", "/nonexistent-dir/scene.json"]);
    assert_eq!(code, 3);
    assert_eq!(json(&out)["error"], "io_error");
    assert_eq!(confocal(&["frobnicate"]).0, 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["viewpoints", "--conic", "5,-2", "--grid", "9"];
    assert_eq!(confocal(&args), confocal(&args));
}

#[test]
fn envelope_shape() {
    let v = json(&confocal(&["viewpoints", "--conic", "3,1", "--grid", "5"]).1);
    assert_eq!(v["version"], "1");
    assert_eq!(v["command"], "viewpoints");
    assert_eq!(v["inputs"]["grid"], 5);
    assert_eq!(v["result"]["locus"]["equation"], "x^2/2 - z^2 = 1 (y=0)");
    let f = v["result"]["foci"][0][0].as_f64().unwrap();
    assert!((f - 2.0f64.sqrt()).abs() < 1e-15);
    assert_eq!(v["result"]["grid"].as_array().unwrap().len(), 5);
}

#[test]
fn hyperbola_minimum_is_thirty_degrees() {
    let v = json(&confocal(&["viewpoints", "--conic", "3,-1", "--at", "1.5707963267948966"]).1);
    let deg = v["result"]["viewpoint"]["theta_deg"].as_f64().unwrap();
    assert!((deg - 30.0).abs() < 1e-9);
    assert_eq!(v["result"]["extremes"]["minimum"]["kind"], "attained");
}

#[test]
fn coords_round_trip_from_confocal() {
    let v = json(&confocal(&["coords", "--abc", "4,2,1", "--confocal", "0,1.5,3", "--signs", "+,-,+"]).1);
    let p: Vec<String> = v["result"]["cartesian"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap().to_string())
        .collect();
    let back = json(&confocal(&["coords", "--abc", "4,2,1", "--point", &p.join(",")]).1);
    for (k, want) in back["result"]["confocal"].as_array().unwrap().iter().zip([0.0, 1.5, 3.0]) {
        assert!((k.as_f64().unwrap() - want).abs() < 1e-12);
    }
    assert!(p[1].starts_with('-'));
}

#[test]
fn csv_export_rulings_are_circular() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scene.csv");
    let (code, out) = confocal(&["export", "--conic", "3,1", "--at", "0.7", "--format", "csv", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let check = common::check_csv(&path, Some([3.0, 1.0]), [3.0, 1.0, 0.0], "conic").unwrap();
    assert!(check.worst_ruling_angle <= 1e-9, "{}", check.worst_ruling_angle);
    assert!(check.worst_residual <= common::POINT_TOLERANCE);
    assert_eq!(json(&out)["result"]["points"].as_u64().unwrap() as usize, check.rows);
}

#[test]
fn obj_export_has_three_patches_on_their_quadrics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fam.obj");
    let (code, _) = confocal(&["export", "--abc", "4,2,1", "--format", "obj", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, worst, surfaces) = common::check_obj(&path, [4.0, 2.0, 1.0]).unwrap();
    assert_eq!(
        surfaces,
        ["surface_ellipsoid", "surface_hyperboloid_one_sheet", "surface_hyperboloid_two_sheets"]
    );
    assert!(worst <= common::POINT_TOLERANCE, "{worst}");
}

#[test]
fn json_export_of_a_hyperbola_scene() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    let (code, _) = confocal(&["export", "--conic", "5,-2", "--at", "2.1", "--format", "json", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (scene, worst) = common::json_scene_residual(&path).unwrap();
    assert!(worst <= common::POINT_TOLERANCE);
    assert!(scene.metadata.circularity.max_deviation <= 1e-9);
    assert_eq!(scene.curves[0].kind, "hyperbola");
    assert_eq!(scene.curves[1].kind, "ellipse");
}

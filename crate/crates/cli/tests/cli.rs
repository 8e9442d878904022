use std::process::{Command, Output};

use ssvis_cli::IfsConfig;

fn ssvis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssvis")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ssvis(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn count_class(doc: &roxmltree::Document, class: &str) -> usize {
    doc.descendants().filter(|n| n.attribute("class") == Some(class)).count()
}

#[test]
fn svg_is_well_formed_with_one_shape_per_cylinder() {
    let svg = stdout(&["render", "--depth", "2"]);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    assert_eq!(count_class(&doc, "cylinder"), 16);
    assert_eq!(count_class(&doc, "ray"), 0);

    let svg = stdout(&["render", "--depth", "0"]);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(count_class(&doc, "cylinder"), 1);
}

#[test]
fn svg_rays_bracket_each_cylinder() {
    let svg = stdout(&["render", "--depth", "1", "--viewpoint=-1,-1"]);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(count_class(&doc, "cylinder"), 4);
    assert_eq!(count_class(&doc, "ray"), 8);
    assert_eq!(count_class(&doc, "viewpoint"), 1);
}

#[test]
fn rotated_cylinders_render_as_paths() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rot.json");
    let mut cfg = IfsConfig::four_corner();
    cfg.maps[0].angle = ssvis_cli::config::AngleConfig::RationalPi { num: 1, den: 3 };
    std::fs::write(&path, cfg.emit()).unwrap();
    let svg = stdout(&["render", "--depth", "1", "--ifs", path.to_str().unwrap()]);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let paths =
        doc.descendants().filter(|n| n.tag_name().name() == "path" && n.attribute("class") == Some("cylinder")).count();
    assert_eq!(paths, 1);
    assert_eq!(count_class(&doc, "cylinder"), 4);
}

#[test]
fn project_csv_layout() {
    let csv = stdout(&["project", "--theta", "0", "--rho-ladder", "4^-n:1..3"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "# ssvis-csv v1");
    assert_eq!(lines[1], "rho,cylinders,length,ms");
    assert_eq!(lines.len(), 5);
    let fields: Vec<&str> = lines[3].split(',').collect();
    assert_eq!(fields[0], "1/16");
    assert_eq!(fields[1], "16");
    assert!((fields[2].parse::<f64>().unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    assert_eq!(fields[3], "");
}

#[test]
fn radial_csv_reports_decay() {
    let csv = stdout(&["radial", "--viewpoint=-1,-1", "--rho-ladder", "4^-n:1..3"]);
    let lengths: Vec<f64> = csv.lines().skip(2).map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
    assert_eq!(lengths.len(), 3);
    assert!((lengths[0] - 0.8852).abs() < 1e-4);
    assert!((lengths[1] - 0.6891).abs() < 1e-4);
    assert!((lengths[2] - 0.5724).abs() < 1e-4);
    assert!(csv.lines().skip(2).all(|l| l.ends_with(",ok")));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let args = ["project", "--theta", "1.0", "--rho-ladder", "4^-n:1..4"];
    let direct = stdout(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(stdout(&with_out), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
}

#[test]
fn config_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("four.json");
    let cfg = IfsConfig::four_corner();
    std::fs::write(&path, cfg.emit()).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(IfsConfig::parse(&text).unwrap(), cfg);
    let from_file = stdout(&["dimension", "--ifs", path.to_str().unwrap()]);
    assert_eq!(from_file, stdout(&["dimension"]));
    assert!(from_file.starts_with("similarity dimension 1\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"maps": [{"ratio": 0.25}]}"#).unwrap();
    let out = ssvis(&["dimension", "--ifs", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("maps"));

    assert_eq!(ssvis(&["project", "--theta", "0", "--rho-ladder", "4:1..2"]).status.code(), Some(2));
    assert_eq!(ssvis(&["render", "--depth", "12"]).status.code(), Some(3));
    assert_eq!(ssvis(&["claim", "--theta", "1.0", "--n", "4", "--budget", "50"]).status.code(), Some(4));
    assert_eq!(ssvis(&["recurrence", "--word", "15"]).status.code(), Some(2));
}

#[test]
fn classify_and_recurrence_reports() {
    assert_eq!(stdout(&["classify"]), "case A, K=0, finite, |S|=1\n");
    let rec = stdout(&["recurrence", "--word", "12"]);
    assert!(rec.contains("omega 121 (length 3)"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["claim", "--theta", "0", "--n", "2", "--format", "json"])).unwrap();
    assert_eq!(json["r"], "1/4");
}

#[test]
fn overlap_rows() {
    let csv = stdout(&["overlap", "--theta", "0", "--branches", "1,3", "--rho-ladder", "4^-n:1..3"]);
    let bounds: Vec<f64> = csv.lines().skip(2).map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(bounds, vec![0.25; 3]);
    assert_eq!(
        ssvis(&["overlap", "--theta", "0", "--branches", "1", "--rho-ladder", "4^-n:1..3"]).status.code(),
        Some(2)
    );
}

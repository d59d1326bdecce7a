use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use surfsat::elliptic::catalog;
use surfsat::input::{hironaka_document, CurveRef, CurveSpec, InputDocument, SCHEMA_VERSION};
use surfsat::rational::{ratio, JsonRational};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn surfsat(command: &str, input: &std::path::Path) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_surfsat"))
        .args([command, input.to_str().unwrap(), "--format", "json"])
        .output()
        .expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{command} {}: bad json ({e}): {}", input.display(), String::from_utf8_lossy(&out.stdout))
    });
    (out.status.code().unwrap(), report)
}

fn run(command: &str, name: &str) -> (i32, Value) {
    surfsat(command, &fixture(name))
}

#[test]
fn affdim_exit_codes() {
    let cases = [
        ("hironaka9_nontorsion", 0, "Zero"),
        ("hironaka9_torsion", 2, "OneOrZero"),
        ("hironaka9_torsion_fibration", 0, "One"),
        ("serre_like", 2, "OneOrZero"),
        ("plane_line", 0, "Two"),
        ("ruled_two_sections", 0, "Zero"),
        ("n10", 0, "Zero"),
    ];
    for (name, code, verdict) in cases {
        let (c, r) = run("affdim", name);
        assert_eq!((c, r["verdict"].as_str()), (code, Some(verdict)), "{name}: {r}");
        assert_eq!(r["command"], "affdim");
        assert!(r["criterion"].is_string(), "{name}");
    }
}

#[test]
fn inconsistent_claims_exit_one_with_criterion() {
    for cmd in ["affdim", "validate", "analyze"] {
        let (c, r) = run(cmd, "three_false_fibres");
        assert_eq!(c, 1, "{cmd}: {r}");
        assert_eq!(r["error"]["kind"], "inconsistent");
        assert_eq!(r["error"]["criterion"], "at-most-two-disjoint-false-fibres");
    }
    // the fibre command still reports every component alongside the contradiction
    let (c, r) = run("fibre", "three_false_fibres");
    assert_eq!(c, 1);
    assert_eq!(r["claims"]["verdict"], "contradiction");
    assert_eq!(r["claims"]["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn saturate_reports_a_plan() {
    let (c, r) = run("saturate", "a2_chain");
    assert_eq!(c, 0);
    assert_eq!(r["saturated"], false);
    assert_eq!(r["plan"]["contract"], serde_json::json!([["E1", "E2"]]));
    let (c, r) = run("saturate", "mixed_boundary");
    assert_eq!(c, 0);
    assert_eq!(r["plan"]["points_to_remove"], 1);
}

#[test]
fn mumford_pullback_of_a2_chain() {
    let (c, r) = run("mumford", "a2_chain");
    assert_eq!(c, 0);
    assert_eq!(r["gram"], serde_json::json!([["-1/3"]]));
    assert_eq!(r["pullbacks"][0]["pullback"]["E1"], "2/3");
    assert_eq!(r["pullbacks"][0]["pullback"]["E2"], "1/3");
}

#[test]
fn hironaka_command() {
    let (c, r) = run("hironaka", "n10");
    assert_eq!(c, 0, "{r}");
    assert_eq!(r["n"], 10);
    assert_eq!(r["obstruction"]["verdict"], "obstruction_found");
    let (c, r) = run("hironaka", "n10_mixed_signs");
    assert_eq!(c, 2, "{r}");
    let (c, r) = run("hironaka", "plane_line");
    assert_eq!(c, 1);
    assert_eq!(r["error"]["criterion"], "hironaka-input");
}

#[test]
fn every_fixture_validates_or_reports_inconsistency() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let (c, r) = surfsat("validate", &path);
        let expected = if path.ends_with("three_false_fibres.json") { 1 } else { 0 };
        assert_eq!(c, expected, "{}: {r}", path.display());
    }
}

#[test]
fn schema_errors_carry_a_path() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"schema_version":1,"curves":[{"name":"A","self":"x"}],"intersections":[],"boundary":[]}"#)
        .unwrap();
    let (c, r) = surfsat("validate", &bad);
    assert_eq!(c, 1);
    assert_eq!(r["error"]["kind"], "input");
    assert_eq!(r["error"]["path"], "$.curves[0].self");
    let (c, r) = surfsat("affdim", &dir.path().join("missing.json"));
    assert_eq!(c, 1);
    assert_eq!(r["error"]["kind"], "input");
}

#[test]
fn human_output_is_flat() {
    let out = Command::new(env!("CARGO_BIN_EXE_surfsat"))
        .args(["affdim", fixture("plane_line").to_str().unwrap()])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "verdict: Two"), "{text}");
}

fn document() -> impl Strategy<Value = InputDocument> {
    (1usize..=5).prop_flat_map(|n| {
        (
            proptest::collection::vec((-4i64..=2, 0u32..=2, any::<bool>()), n),
            proptest::collection::vec((0..n, 0..n, 1i64..=3, 1i64..=2), 0..=n),
            proptest::collection::vec(any::<bool>(), n),
            0u32..=2,
        )
            .prop_map(move |(curves, meets, in_boundary, points)| {
                let mut doc = hironaka_document(&catalog::rank_one().0, &[], None, false);
                doc.elliptic = None;
                doc.curves = curves
                    .into_iter()
                    .enumerate()
                    .map(|(i, (s, genus, proper))| CurveSpec {
                        name: format!("C{i}"),
                        genus,
                        self_intersection: JsonRational(ratio(s, 1)),
                        proper,
                    })
                    .collect();
                doc.intersections = meets
                    .into_iter()
                    .filter(|(a, b, _, _)| a != b)
                    .map(|(a, b, p, q)| {
                        (CurveRef::Index(a), CurveRef::Name(format!("C{b}")), JsonRational(ratio(p, q)))
                    })
                    .collect();
                doc.boundary = (0..n).filter(|&i| in_boundary[i]).map(CurveRef::Index).collect();
                doc.isolated_boundary_points = points;
                doc
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_round_trip(doc in document()) {
        prop_assert_eq!(doc.schema_version, SCHEMA_VERSION);
        let back = InputDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(back, doc);
    }
}

#[test]
fn human_output_matches_golden_files() {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (name, command) in [("serre_like", "affdim"), ("a2_chain", "affdim"), ("a2_chain", "mumford")] {
        let out = Command::new(env!("CARGO_BIN_EXE_surfsat"))
            .args([command, fixture(name).to_str().unwrap()])
            .output()
            .unwrap();
        let want = std::fs::read_to_string(golden.join(format!("{name}.{command}.txt"))).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), want, "{name} {command}");
    }
}

/// The shipped schema documents every top-level field the parser accepts.
#[test]
fn schema_lists_every_field() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/input-schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let documented = schema["properties"].as_object().unwrap();
    let text = std::fs::read_to_string(fixture("a2_chain")).unwrap();
    let mut doc = InputDocument::from_json(&text).unwrap();
    doc.complete_surface = Some(true);
    doc.elliptic = hironaka_document(&catalog::rank_one().0, &[], None, false).elliptic;
    doc.scheme_contractibility = vec![surfsat::input::ContractibilitySpec {
        component: vec![CurveRef::Index(0)],
        verdict: surfsat::saturation::Contractibility::Unknown,
    }];
    let full: Value = serde_json::from_str(&doc.to_json()).unwrap();
    for key in full.as_object().unwrap().keys() {
        assert!(documented.contains_key(key), "{key} missing from docs/input-schema.json");
    }
    assert_eq!(schema["properties"]["schema_version"]["const"], SCHEMA_VERSION);
}

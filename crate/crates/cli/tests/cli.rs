//! End-to-end CLI tests: exit codes, pipe round trips, determinism, and
//! schema validation of the JSON outputs.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gapset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gapset_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gapset"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

/// Tiny structural validator for the subset of JSON Schema the shipped
/// schemas use: type, properties, required, items, enum, oneOf.
fn validate(value: &serde_json::Value, schema: &serde_json::Value) -> Result<(), String> {
    if let Some(one_of) = schema.get("oneOf").and_then(|v| v.as_array()) {
        return if one_of.iter().any(|s| validate(value, s).is_ok()) {
            Ok(())
        } else {
            Err("no oneOf branch matched".into())
        };
    }
    if let Some(options) = schema.get("enum").and_then(|v| v.as_array()) {
        return if options.contains(value) {
            Ok(())
        } else {
            Err(format!("{value} not in enum"))
        };
    }
    if let Some(ty) = schema.get("type").and_then(|v| v.as_str()) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            other => return Err(format!("unsupported type {other}")),
        };
        if !ok {
            return Err(format!("expected {ty}, got {value}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(|v| v.as_array()) {
        for key in required {
            let key = key.as_str().unwrap();
            if value.get(key).is_none() {
                return Err(format!("missing required field {key}"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(|v| v.as_object()) {
        for (key, sub) in props {
            if let Some(field) = value.get(key) {
                validate(field, sub).map_err(|e| format!("{key}: {e}"))?;
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(arr) = value.as_array() {
            for (i, item) in arr.iter().enumerate() {
                validate(item, items).map_err(|e| format!("[{i}]: {e}"))?;
            }
        }
    }
    Ok(())
}

fn schema(name: &str) -> serde_json::Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schemas/");
    let text = std::fs::read_to_string(format!("{path}{name}")).unwrap();
    serde_json::from_str(&text).unwrap()
}

#[test]
fn families_gen_then_gapcheck_reproduces_catalog_verdicts() {
    // Every catalog member's CLI verdict must match the library's exact
    // decision (hj_plus(2) is the known upstream defect and checks false).
    for (g, name) in gapset::families::catalog(14).unwrap() {
        let g6 = gapset::graph6::encode(&g).unwrap();
        let out = gapset_stdin(&["gapcheck"], &g6);
        let expect = gapset::spectral::gap_avoids_unit_interval(&g).0;
        assert_eq!(
            code(&out),
            i32::from(!expect),
            "verdict drift for {name}: {}",
            stdout(&out)
        );
    }
}

#[test]
fn gapcheck_rejects_p3_with_a_witness() {
    let p3 = gapset::graph6::encode(&gapset::graph::path(3)).unwrap();
    let out = gapset_stdin(&["gapcheck", "--json"], &p3);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["avoids_unit_interval"], serde_json::json!(false));
    assert_eq!(v["certificate"]["verdict"], serde_json::json!("not_psd"));
    validate(&v["certificate"], &schema("certificate.schema.json")).unwrap();
}

#[test]
fn gapcheck_accepts_catalog_members_and_certificates_validate() {
    let out = gapset(&["families", "gen", "--family", "hj_plus", "--n", "1"]);
    assert_eq!(code(&out), 0);
    let g6 = stdout(&out).trim().to_string();
    let check = gapset_stdin(&["gapcheck", "--json"], &g6);
    assert_eq!(code(&check), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&check).trim()).unwrap();
    assert_eq!(v["avoids_unit_interval"], serde_json::json!(true));
    validate(&v["certificate"], &schema("certificate.schema.json")).unwrap();
}

#[test]
fn spectrum_pipes_from_families_json() {
    let gen = gapset(&["families", "gen", "--family", "gm", "--n", "2", "--format", "json"]);
    assert_eq!(code(&gen), 0);
    let g = stdout(&gen);
    validate(
        &serde_json::from_str(g.trim()).unwrap(),
        &schema("graph.schema.json"),
    )
    .unwrap();
    let spec = gapset_stdin(&["spectrum", "--format", "json"], &g);
    assert_eq!(code(&spec), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&spec).trim()).unwrap();
    let values: Vec<f64> = v["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let expect = [3.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -3.0];
    assert_eq!(values.len(), expect.len());
    for (a, b) in values.iter().zip(expect) {
        assert!((a - b).abs() < 1e-8);
    }
}

#[test]
fn certify_reports_the_associated_matrix_surface() {
    // The two antipodal classes of C6 form a PSD triangle of roots.
    let c6 = gapset::graph6::encode(&gapset::graph::cycle(6)).unwrap();
    let out = gapset_stdin(&["certify", "--subset", "0,2,4", "--json"], &c6);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["psd"], serde_json::json!(true));
    assert_eq!(v["roots"], serde_json::json!([0, 1, 2]));

    // A double edge with roots is not PSD: exit 1.
    let c4 = gapset::graph6::encode(&gapset::graph::cycle(4)).unwrap();
    let out = gapset_stdin(&["certify", "--subset", "0,2"], &c4);
    assert_eq!(code(&out), 1);

    // Degree preconditions are usage errors: exit 2.
    let p4 = gapset::graph6::encode(&gapset::graph::path(4)).unwrap();
    let out = gapset_stdin(&["certify", "--subset", "0,1"], &p4);
    assert_eq!(code(&out), 2);
}

#[test]
fn decompose_lists_the_k4_decomposition() {
    let k4 = gapset::graph6::encode(&gapset::graph::complete(4)).unwrap();
    let out = gapset_stdin(&["decompose", "--roots", "0,1,2", "--json"], &k4);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["count"], serde_json::json!(1));
    assert_eq!(v["decompositions"][0]["incidence_graph"], serde_json::json!("G?yQ`_"));
}

#[test]
fn linegraph_modes() {
    let claw = gapset::graph6::encode(&gapset::graph::complete_bipartite(1, 3)).unwrap();
    let out = gapset_stdin(&["linegraph", "--check"], &claw);
    assert_eq!(code(&out), 1);

    let c6 = gapset::graph6::encode(&gapset::graph::cycle(6)).unwrap();
    let out = gapset_stdin(&["linegraph", "--check"], &c6);
    assert_eq!(code(&out), 0);
    let out = gapset_stdin(&["linegraph", "--root-graph"], &c6);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let f6 = text
        .lines()
        .find_map(|l| l.strip_prefix("root graph: "))
        .unwrap();
    let f = gapset::graph6::decode(f6).unwrap();
    assert!(gapset::canon::are_isomorphic(&f, &gapset::graph::cycle(6)).unwrap());

    let k4 = gapset::graph6::encode(&gapset::graph::complete(4)).unwrap();
    let out = gapset_stdin(&["linegraph", "--generalized", "--roots", "0,1,2"], &k4);
    assert_eq!(code(&out), 0);

    let p3 = gapset::graph6::encode(&gapset::graph::path(3)).unwrap();
    let out = gapset_stdin(&["linegraph", "--generalized", "--roots", "0,1,2"], &p3);
    assert_eq!(code(&out), 1);
}

#[test]
fn double_and_quotient_are_inverse_on_k3() {
    let k3 = gapset::graph6::encode(&gapset::graph::complete(3)).unwrap();
    let doubled = gapset_stdin(&["double"], &k3);
    assert_eq!(code(&doubled), 0);
    let d6 = stdout(&doubled).trim().to_string();
    let d = gapset::graph6::decode(&d6).unwrap();
    assert!(gapset::canon::are_isomorphic(&d, &gapset::graph::cycle(6)).unwrap());

    let q = gapset_stdin(&["quotient"], &d6);
    assert_eq!(code(&q), 0);
    let back = gapset::graph6::decode(stdout(&q).trim()).unwrap();
    assert!(gapset::canon::are_isomorphic(&back, &gapset::graph::complete(3)).unwrap());

    // hj(1) is bipartite but has no free involution: exit 1.
    let hj1 = gapset::graph6::encode(&gapset::families::hj(1).unwrap()).unwrap();
    let out = gapset_stdin(&["quotient"], &hj1);
    assert_eq!(code(&out), 1);
}

#[test]
fn census_writes_validating_reports_deterministically() {
    let dir = std::env::temp_dir().join("gapset-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let run = |path: &std::path::Path| {
        let out = gapset(&[
            "census",
            "--max-n",
            "6",
            "--workers",
            "2",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
        std::fs::read_to_string(path).unwrap()
    };
    let first = run(&out_path);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    validate(&v, &schema("census_report.schema.json")).unwrap();
    // Survivors file sits next to the report.
    let survivors = std::fs::read_to_string(out_path.with_extension("g6")).unwrap();
    assert!(survivors.lines().any(|l| l == "A_")); // K2
    // Identical inputs give byte-identical outputs.
    let second_path = dir.join("report2.json");
    let second = run(&second_path);
    assert_eq!(first, second);
}

#[test]
fn probe_json_validates_and_unit_interval_is_clean() {
    let out = gapset(&[
        "probe", "--lo", "-1", "--hi", "1", "--n-max", "6", "--json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    validate(&v, &schema("probe_report.schema.json")).unwrap();
    for row in v["rows"].as_array().unwrap() {
        assert!(row["inside"].as_array().unwrap().is_empty());
    }
}

#[test]
fn malformed_inputs_exit_2() {
    let out = gapset_stdin(&["gapcheck"], "A "); // bad graph6 byte
    assert_eq!(code(&out), 2);
    let out = gapset_stdin(&["spectrum"], "");
    assert_eq!(code(&out), 2);
    let out = gapset(&["families", "gen", "--family", "hj", "--n", "0"]);
    assert_eq!(code(&out), 2);
    let out = gapset(&["families", "gen", "--family", "nope", "--n", "1"]);
    assert_eq!(code(&out), 2);
    let out = gapset(&["families", "gen", "--family", "hj_plus", "--n", "3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn deterministic_family_output() {
    let a = gapset(&["families", "catalog", "--max-n", "12", "--format", "json"]);
    let b = gapset(&["families", "catalog", "--max-n", "12", "--format", "json"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(code(&a), 0);
}

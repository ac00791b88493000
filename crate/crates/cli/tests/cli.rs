//! End-to-end tests of the `coinvar` binary: output shapes and exit codes.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn coinvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coinvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

/// `y = J` (ones below the diagonal), `w* = e_n*`, `ξ = (1, …, n)ᵀ`.
fn canonical_glvv(n: usize) -> String {
    let y: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j + 1 { "1" } else { "0" }.to_owned()).collect())
        .collect();
    let w: Vec<String> = (0..n).map(|j| if j + 1 == n { "1" } else { "0" }.to_owned()).collect();
    let xi: Vec<Vec<String>> = (1..=n).map(|i| vec![i.to_string()]).collect();
    serde_json::json!({
        "algebra": "glvv",
        "n": n,
        "y": {"rows": n, "cols": n, "entries": y},
        "wstar": {"rows": 1, "cols": n, "entries": [w]},
        "xi": {"rows": n, "cols": 1, "entries": xi},
    })
    .to_string()
}

#[test]
fn eval_canonical_point_reads_off_xi() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=4 {
        let input = write(dir.path(), &format!("c{n}.json"), &canonical_glvv(n));
        let out = coinvar(&["eval", "--input", &input]);
        assert_eq!(out.status.code(), Some(0));
        let values: Vec<String> = json_stdout(&out)
            .as_array()
            .unwrap()
            .iter()
            .map(|r| {
                assert_eq!(r["invariant"], "F");
                r["value"].as_str().unwrap().to_owned()
            })
            .collect();
        let expected: Vec<String> = (1..=n).rev().map(|i| i.to_string()).collect();
        assert_eq!(values, expected, "n = {n}");
    }
}

#[test]
fn eval_selects_one_generator_and_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "c.json", &canonical_glvv(3));
    let output = dir.path().join("out.json");
    let out = coinvar(&["eval", "--input", &input, "--which", "F_1", "--output", output.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(written, serde_json::json!([{"invariant": "F", "k": 1, "value": "2"}]));
}

#[test]
fn eval_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("empty.json", String::new()),
        ("garbage.json", "{not json".to_owned()),
        ("unknown_field.json", canonical_glvv(2).replace("\"xi\"", "\"zeta\"")),
        ("bad_rational.json", canonical_glvv(2).replace("\"2\"", "\"2/0\"")),
        (
            "wrong_shape.json",
            r#"{"algebra":"glvv","n":2,"y":{"rows":1,"cols":1,"entries":[["0"]]}}"#.to_owned(),
        ),
    ];
    for (name, text) in cases {
        let input = write(dir.path(), name, &text);
        let out = coinvar(&["eval", "--input", &input]);
        assert_eq!(out.status.code(), Some(2), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    let out = coinvar(&["eval", "--input", "/nonexistent/point.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn slice_point_round_trips_through_eval() {
    let dir = tempfile::tempdir().unwrap();
    let out = coinvar(&["slice", "--algebra", "iso", "--n", "5", "--a", "1,2", "--scale", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let slice = json_stdout(&out);
    let input = write(dir.path(), "slice.json", &slice["point"].to_string());
    let evaluated = json_stdout(&coinvar(&["eval", "--input", &input]));
    assert_eq!(evaluated, slice["invariants"]);
    // φ_ℓ = a₀a₁a₂ and Φ = −φ_ℓ on the slice
    let phi = slice["slice"].as_array().unwrap().last().unwrap();
    assert_eq!(phi["value"], "6");
    let exotic = evaluated.as_array().unwrap().iter().find(|r| r["invariant"] == "Phi").unwrap();
    assert_eq!(exotic["value"], "-6");
}

#[test]
fn slice_rejects_wrong_parameter_count() {
    let out = coinvar(&["slice", "--algebra", "isl", "--n", "3", "--a", "1", "--scale", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = coinvar(&["slice", "--algebra", "glvv", "--n", "3", "--a", "1,2", "--scale", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_index_reports_n() {
    let out = coinvar(&["verify", "--suite", "index", "--algebra", "glvv", "--n", "3", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_stdout(&out);
    assert_eq!(v["passed"], true);
    let report = &v["reports"][0];
    assert_eq!(report["suite"], "index");
    assert_eq!(report["failures"], serde_json::json!([]));
    assert_eq!(report["details"][0]["key"], "index");
    assert_eq!(report["details"][0]["value"], 3);
}

#[test]
fn verify_is_deterministic_for_a_seed() {
    let run = || {
        let mut v = json_stdout(&coinvar(&[
            "verify", "--suite", "dual-path", "--algebra", "io", "--n-max", "4", "--samples", "5", "--seed", "7",
        ]));
        v["reports"][0]["elapsed_ms"] = Value::Null;
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn verify_all_small_sizes_passes() {
    let out = coinvar(&["verify", "--all", "--n-max", "3", "--samples", "3", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json_stdout(&out);
    assert_eq!(v["passed"], true);
    assert!(v["reports"].as_array().unwrap().len() > 16);
}

#[test]
fn verify_usage_errors() {
    for args in [
        &["verify", "--suite", "nope", "--algebra", "glvv"][..],
        &["verify", "--suite", "index", "--algebra", "nope"],
        &["verify", "--suite", "index", "--algebra", "glvv", "--n-min", "4", "--n-max", "2"],
        &["verify", "--suite", "theta", "--algebra", "aff"],
        &["verify", "--suite", "index", "--algebra", "glvv", "--samples", "0"],
        &["verify", "--suite", "index", "--algebra", "glvv", "--n", "99"],
    ] {
        let out = coinvar(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn orbit_of_a_normal_form_is_trivial() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "c.json", &canonical_glvv(3));
    let out = coinvar(&["orbit", "--input", &input]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    let identity = serde_json::json!({"rows": 3, "cols": 3, "entries": [["1","0","0"],["0","1","0"],["0","0","1"]]});
    assert_eq!(v["g"], identity);
    assert!(v["u"]["entries"].as_array().unwrap().iter().all(|r| r[0] == "0"));
    let point: Value = serde_json::from_str(&canonical_glvv(3)).unwrap();
    assert_eq!(v["normal_form"]["xi"], point["xi"]);
}

#[test]
fn orbit_moves_a_generic_point_to_normal_form() {
    let dir = tempfile::tempdir().unwrap();
    let text = serde_json::json!({
        "algebra": "glvv",
        "n": 2,
        "y": {"rows": 2, "cols": 2, "entries": [["1","2"],["-1","3"]]},
        "wstar": {"rows": 1, "cols": 2, "entries": [["1","1"]]},
        "xi": {"rows": 2, "cols": 1, "entries": [["2"],["-5"]]},
    })
    .to_string();
    let input = write(dir.path(), "p.json", &text);
    let v = json_stdout(&coinvar(&["orbit", "--input", &input]));
    assert_eq!(v["normal_form"]["y"]["entries"], serde_json::json!([["0", "0"], ["1", "0"]]));
    assert_eq!(v["normal_form"]["wstar"]["entries"], serde_json::json!([["0", "1"]]));
    // the invariants of the input are the last coordinates of the normal form
    let invariants = json_stdout(&coinvar(&["eval", "--input", &input]));
    let xi = &v["normal_form"]["xi"]["entries"];
    assert_eq!(invariants[0]["value"], xi[1][0]);
    assert_eq!(invariants[1]["value"], xi[0][0]);
}

#[test]
fn orbit_outside_the_open_set_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let text = serde_json::json!({
        "algebra": "glvv",
        "n": 2,
        "y": {"rows": 2, "cols": 2, "entries": [["0","0"],["0","0"]]},
        "wstar": {"rows": 1, "cols": 2, "entries": [["0","1"]]},
        "xi": {"rows": 2, "cols": 1, "entries": [["1"],["2"]]},
    })
    .to_string();
    let input = write(dir.path(), "s.json", &text);
    let out = coinvar(&["orbit", "--input", &input]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("open orbit"));
}

#[test]
fn sign_and_index_commands() {
    let v = json_stdout(&coinvar(&["sign", "--pair", "psi-vs-phi(0)", "--n", "4"]));
    assert_eq!(v["sign"], -1);
    let v = json_stdout(&coinvar(&["sign", "--pair", "exotic-vs-slice", "--n", "3"]));
    assert_eq!(v["sign"], -1);
    let v = json_stdout(&coinvar(&["sign", "--pair", "f-vs-t", "--n", "3"]));
    assert_eq!(v["sign"], 1);
    assert_eq!(coinvar(&["sign", "--pair", "exotic-vs-slice", "--n", "4"]).status.code(), Some(2));
    assert_eq!(coinvar(&["sign", "--pair", "nope", "--n", "4"]).status.code(), Some(2));

    for (algebra, n, index) in [("aff", 3, 0), ("isl", 3, 1), ("glvv", 3, 3), ("io", 5, 3), ("iso", 4, 2)] {
        let v = json_stdout(&coinvar(&["index", "--algebra", algebra, "--n", &n.to_string()]));
        assert_eq!(v["index"], index, "{algebra}({n})");
    }
}

#[test]
fn unknown_flags_and_missing_subcommand_are_usage_errors() {
    assert_eq!(coinvar(&["--bogus"]).status.code(), Some(2));
    assert_eq!(coinvar(&[]).status.code(), Some(2));
    assert_eq!(coinvar(&["eval"]).status.code(), Some(2));
    assert_eq!(coinvar(&["--help"]).status.code(), Some(0));
}

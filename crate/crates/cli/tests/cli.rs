use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semigrowth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn write(dir: &tempfile::TempDir, name: &str, body: &Value) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body.to_string()).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn example_verdicts() {
    let expected = [
        ("exex1.json", true, true, true),
        ("exex2.json", false, true, false),
        ("exex3.json", true, false, true),
        ("exex4.json", true, false, false),
    ];
    for (file, b0, fg, finite) in expected {
        let r = report(&["classify", data(file).to_str().unwrap()]);
        assert_eq!(r["b0_trivial"], json!(b0), "{file}");
        assert_eq!(r["b_fg"], json!(fg), "{file}");
        assert_eq!(r["bd_all_finite"], json!(finite), "{file}");
        assert_eq!(r["some_bd_infinite"], json!(!finite), "{file}");
    }
}

#[test]
fn genus_hint_settles_the_moment_status() {
    let file = data("exex2.json");
    let f = file.to_str().unwrap();
    assert_eq!(report(&["classify", f])["moment_status"], "needs_genus");
    assert_eq!(
        report(&["classify", f, "--genus", "0"])["moment_status"],
        "solvable_outside_compact"
    );
    assert_eq!(
        report(&["classify", f, "--genus", "2"])["moment_status"],
        "not_solvable_finitely"
    );
}

#[test]
fn hilbert_generators_of_the_strips_and_the_full_cone() {
    let r = report(&["hilbert", data("strips.json").to_str().unwrap()]);
    assert_eq!(
        r["generators"],
        json!([[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]])
    );
    assert_eq!(
        r["algebra_generators"],
        json!(["t", "x1*t", "x2*t", "x1*x2*t"])
    );
    let r = report(&["hilbert", data("fullcone.json").to_str().unwrap()]);
    assert_eq!(r["algebra_generators"], json!(["t", "x1*t", "x2*t"]));
}

#[test]
fn eval_on_the_two_tentacle_set() {
    let r = report(&[
        "eval",
        "--poly",
        "y^2-x^6",
        data("two_tentacles.json").to_str().unwrap(),
    ]);
    assert_eq!(r["delta_star"], json!(["1", "1"]));
    assert_eq!(r["delta_S"], json!(1));
    assert_eq!(r["delta_bar"], json!("1"));
}

#[test]
fn eval_reads_the_polynomial_from_the_file_and_mixes_tentacle_kinds() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        &dir,
        "set.json",
        &json!({
            "tentacles": [
                {"type": "standard", "z": [1, -1]},
                {"type": "puiseux", "phi": [{"c": "1", "e": "5/2"}], "omega": "-5/2"}
            ],
            "poly": "x^2*y"
        }),
    );
    let r = report(&["eval", &f]);
    assert_eq!(r["delta_star"], json!(["1", "9/2"]));
    assert_eq!(r["delta_S"], json!(5));
}

#[test]
fn keyforms_of_a_plan_match_the_plan() {
    let r = report(&["keyforms", data("exex4.json").to_str().unwrap()]);
    assert_eq!(r["matches_plan"], json!(true));
    assert_eq!(r["keyforms"]["values"], json!(["1", "5/2", "3/2", "0"]));
    assert_eq!(
        r["boundaries"]["region"],
        json!("x >= 1, y >= 0, 1 >= y^2 - x^-1*y - x^5 >= 0")
    );
}

#[test]
fn boundaries_given_as_term_lists() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        &dir,
        "b.json",
        &json!({
            "type": "boundaries",
            "f1": [{"c": "1", "y": 2}, {"c": "-1", "x": 5}],
            "f2": "y^2 - x^5 - x"
        }),
    );
    let spec = report(&["spec", &f]);
    assert_eq!(spec["omega"], json!("-3/2"));
    assert_eq!(spec["phi"], json!([{"c": "1", "e": "5/2"}]));
    let k = report(&["keyforms", &f]);
    assert_eq!(k["keyforms"]["forms"], json!(["x", "y", "y^2 - x^5"]));
}

#[test]
fn expand_reports_real_branches() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "e.json", &json!({"poly": "y^2 - x^3"}));
    let r = report(&["expand", &f]);
    let series: Vec<&str> = r["branches"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["series"].as_str().unwrap())
        .collect();
    assert_eq!(series, ["x^(3/2)", "-x^(3/2)"]);
    assert!(r["branches"][0]["exact"].as_bool().unwrap());
}

#[test]
fn witness_and_low_degree_space() {
    let f = data("two_tentacles.json");
    let f = f.to_str().unwrap();
    let r = report(&["witness", "--Dmax", "12", f]);
    assert_eq!(r["basis"], json!(["1"]));
    let r = report(&[
        "witness",
        "--d",
        "1",
        "--Dmin",
        "8",
        "--Dmax",
        "24",
        "--weights",
        "1,3",
        f,
    ]);
    assert_eq!(r["witness"]["y_degree"], json!(8));
    assert_eq!(
        r["witness"]["leading_form"],
        json!("y^8 - 4*x^6*y^6 + 6*x^12*y^4 - 4*x^18*y^2 + x^24")
    );
    assert_eq!(r["witness"]["delta_star"], json!(["1", "1"]));
}

#[test]
fn lift_and_basis() {
    let r = report(&["lift", data("lift.json").to_str().unwrap()]);
    assert_eq!(r["lifted"], json!("x1*x2*t"));
    assert_eq!(r["coefficient_bound"], json!(["3", "4"]));
    let r = report(&[
        "basis",
        "--d",
        "1",
        "--degree-cap",
        "4",
        data("strips.json").to_str().unwrap(),
    ]);
    assert_eq!(r["polynomials"], json!(["1", "x1", "x2", "x1*x2"]));
}

#[test]
fn oracle_agrees_with_the_exact_value() {
    let r = report(&[
        "oracle",
        "--seed",
        "3",
        data("oracle.json").to_str().unwrap(),
    ]);
    assert_eq!(r["delta_star"], json!("1"));
    assert_eq!(r["agrees"], json!(true));
}

#[test]
fn reports_are_deterministic_and_out_matches_stdout() {
    let f = data("exex3.json");
    let args = ["keyforms", f.to_str().unwrap()];
    let a = run(&args).stdout;
    assert_eq!(a, run(&args).stdout);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&[
        "keyforms",
        f.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), a);
    let s = data("oracle.json");
    let args = ["oracle", "--seed", "9", s.to_str().unwrap()];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn text_format() {
    let out = run(&[
        "classify",
        data("exex4.json").to_str().unwrap(),
        "--format",
        "text",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("moment_status: open_new_methods\n"), "{text}");
    assert!(
        text.contains("keyforms: [x, y, y^2 - x^5, y^2 - x^-1*y - x^5]\n"),
        "{text}"
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        run(&["classify", "/nonexistent/input.json"]).status.code(),
        Some(2)
    );

    let bad = write(
        &dir,
        "bad.json",
        &json!({"type": "plan", "steps": [{"omega": "5/2", "c": "one"}], "tail": {"omega": "1", "c1": "0", "c2": "1"}}),
    );
    let out = run(&["classify", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("steps[0].c"));

    let untyped = write(&dir, "u.json", &json!({"phi": [], "omega": "1"}));
    assert_eq!(run(&["spec", &untyped]).status.code(), Some(2));

    let syntax = dir.path().join("s.json");
    std::fs::write(&syntax, "{\n  \"poly\": \n").unwrap();
    let out = run(&["expand", syntax.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let cone = write(&dir, "c.json", &json!({"directions": [[1, -3], [-3, 1]]}));
    let out = run(&["hilbert", "--search-bound", "2", &cone]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound too small"));

    let same = write(
        &dir,
        "same.json",
        &json!({"type": "boundaries", "f1": "y - x", "f2": "y - x"}),
    );
    assert_eq!(run(&["spec", &same]).status.code(), Some(2));

    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

use holf2_cli::{run, Output, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn holf2(args: &[&str]) -> Output {
    run(std::iter::once("holf2").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&holf2(&all).stdout).expect("valid json")
}

#[test]
fn order_of_order_three_representative() {
    let out = holf2(&["order", "y^2 tb' a"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "3\n");
    assert_eq!(holf2(&["order", "b"]).stdout, "infinite\n");
    assert_eq!(json(&["order", "x"])["order"], 4);
}

#[test]
fn nf_of_p_squared_is_trivial() {
    let out = holf2(&["nf", "p p"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "(0, [], 0, 1, 1)\n1\n");
    let v = json(&["nf", "p x^3 tb a"]);
    assert_eq!(v["normal_form"]["r"], 1);
    assert_eq!(v["normal_form"]["z"], "a");
}

#[test]
fn verify_upu_is_evidence() {
    let out = holf2(&["verify", "upu", "--bound", "10"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.starts_with("[evidence(10)] upu"));
    let v = json(&["verify", "upu", "--bound", "10"]);
    let r = &v["reports"][0];
    assert_eq!(r["status"], "evidence");
    assert_eq!(r["bound"], 10);
    assert_eq!(r["certificate"], Value::Null);
}

#[test]
fn json_has_schema_and_fixed_key_order() {
    let out = holf2(&["verify", "zxz", "--json"]);
    assert!(
        out.stdout
            .starts_with("{\n  \"schema\": 1,\n  \"command\": \"verify\""),
        "{}",
        out.stdout
    );
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let keys: Vec<&str> = v["reports"][0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        keys,
        ["claim_id", "status", "bound", "details", "certificate"]
    );
}

#[test]
fn failing_suites_exit_one() {
    let out = holf2(&["verify", "decompositions"]);
    assert_eq!(out.code, EXIT_FAIL);
    assert!(out.stdout.contains("[fail] tietze.zeta2-xi3"));
    let lemma = json(&["verify", "lemma"]);
    let failed: Vec<&Value> = lemma["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "fail")
        .collect();
    assert!(failed.iter().all(|r| r["certificate"].is_string()));
}

#[test]
fn passing_suites_exit_zero() {
    for suite in ["presentations", "zxz", "swap"] {
        let out = holf2(&["verify", suite, "--bound", "6"]);
        assert_eq!(out.code, EXIT_OK, "{suite}: {}", out.stdout);
    }
}

#[test]
fn usage_errors_exit_two() {
    let bad = holf2(&["order", "y2tb'"]);
    assert_eq!(bad.code, EXIT_USAGE);
    assert!(bad.stderr.contains("position 1"), "{}", bad.stderr);
    assert_eq!(holf2(&["order", "x^0"]).code, EXIT_USAGE);
    assert_eq!(holf2(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(holf2(&["project", "x"]).code, EXIT_USAGE);
    assert_eq!(holf2(&["verify", "upu", "--bound", "0"]).code, EXIT_USAGE);
    assert_eq!(holf2(&["--help"]).code, EXIT_OK);
}

#[test]
fn classify_prints_verified_certificate() {
    let v = json(&["classify", "p x^3 tb b", "--depth", "4"]);
    assert_eq!(v["result"], "classified");
    assert_eq!(v["class"], "p x ta a");
    assert_eq!(v["verified"], true);
    assert_eq!(json(&["classify", "b"])["result"], "not-torsion");
}

#[test]
fn projections() {
    assert_eq!(
        holf2(&["project", "x", "--to", "gl2z"]).stdout,
        "[[0, 1], [-1, 0]]\n"
    );
    assert_eq!(
        holf2(&["project", "p b", "--to", "aut"]).stdout,
        "a -> b\nb -> a\n"
    );
    let v = json(&["gl2z-nf", "x y'"]);
    assert_eq!(v["word"], "X Y'");
    assert_eq!(v["normal_form"]["syllables"][1], "y'");
}

#[test]
fn eval_prints_images_and_z() {
    let v = json(&["eval", "p a"]);
    assert_eq!(v["images"]["a"], "b");
    assert_eq!(v["images"]["b"], "a");
    assert_eq!(v["z"], "a");
}

#[test]
fn verify_all_is_deterministic_for_a_seed() {
    let a = holf2(&["verify", "all", "--bound", "4", "--seed", "3", "--json"]);
    let b = holf2(&["verify", "all", "--bound", "4", "--seed", "3", "--json"]);
    assert_eq!(a, b);
    assert_eq!(a.code, EXIT_FAIL);
}

#[test]
fn scan_small_radius() {
    let out = holf2(&["scan", "--radius", "2", "--depth", "4"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("unclassified []"));
}

use std::io::Write;
use std::process::{Command, Stdio};

use heightlab::cli::{run, ProblemDocument};
use serde_json::Value;

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["heightlab"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn jordan_doc(a: &str, b: &str) -> String {
    let (code, out, _) = call(&["jordan", "--a", a, "--b", b, "--op", "document"], "");
    assert_eq!(code, 0);
    out
}

const NON_COMMUTING: &str =
    r#"{"schema_version":"1","rep":{"rank":2,"r":2,"logs":[[["0","1"],["0","0"]],[["0","0"],["1","0"]]]}}"#;

const TORSION: &str = r#"{"schema_version":"1","rep":{"rank":2,"r":1,"unipotents":[[["1","0"],["2","1"]]]},"alpha":[["0","1"]],"beta":[["1","0"]]}"#;

#[test]
fn builtin_values() {
    let (code, out, _) = call(&["jordan", "--a", "0,1", "--b", "0,1", "--t", "1,1"], "");
    assert_eq!(code, 0);
    assert_eq!(json(&out)["value"], "1/2");
    let (_, out, _) = call(&["jordan", "--a", "0,1", "--b", "0,1", "--t", "0,0"], "");
    assert_eq!(json(&out)["value"], "0");
    let (code, out, _) = call(&["ceresa", "--g", "3", "--h", "1", "--symbolic"], "");
    assert_eq!(code, 0);
    assert_eq!(json(&out)["value"], "(4*t1*t2)/(t1+t2)");
    let (_, out, _) = call(&["ceresa", "--g", "3", "--h", "1", "--t", "1,1"], "");
    assert_eq!(json(&out)["value"], "2");
    let (_, out, _) = call(&["ceresa", "--g", "3", "--h", "1", "--stratum", "1"], "");
    assert_eq!(json(&out)["value"], "0");
}

#[test]
fn jump_report() {
    let (code, out, _) = call(&["jordan", "--a", "0,1", "--b", "0,1", "--op", "jump", "--t", "1,1"], "");
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!((v["h"].as_str(), v["mu"].as_str(), v["sum_t_mu"].as_str()), (Some("1/2"), Some("1/2"), Some("1")));
    assert_eq!(v["holds"], true);
    assert_eq!(v["tau_tilde"], "1/2");
    let (code, out, _) = call(&["jordan", "--a", "0,1,3", "--b", "2,0,-1", "--gamma", "1,0,-2", "--op", "jump", "--symbolic"], "");
    assert_eq!(code, 0);
    assert_eq!(json(&out)["holds"], true);
}

#[test]
fn intersection_cohomology() {
    let (_, out, _) = call(&["jordan", "--a", "0,1,2", "--b", "0,0,0", "--op", "ih"], "");
    assert_eq!(json(&out)["dim"], 2);
    let zero = r#"{"schema_version":"1","rep":{"rank":2,"r":2,"logs":[[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}}"#;
    let (code, out, _) = call(&["ih", "-"], zero);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["dim"], 0);
    let (_, out, _) = call(&["ceresa", "--g", "3", "--h", "1", "--op", "ih"], "");
    assert_eq!(json(&out)["dim"], 5);
}

#[test]
fn validation_and_exit_codes() {
    let (code, out, _) = call(&["validate", "-"], &jordan_doc("0,1", "0,1"));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["valid"], true);

    let (code, out, err) = call(&["validate", "-"], NON_COMMUTING);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["valid"], false);
    assert!(err.contains("N1 and N2"), "{err}");

    let (code, _, err) = call(&["validate", "-"], &NON_COMMUTING.replacen("\"1\"", "\"1/0\"", 1));
    assert_eq!(code, 3, "{err}");
    let (code, _, _) = call(&["validate", "-"], &NON_COMMUTING.replace("\"r\":2", "\"r\":2,\"extra\":true"));
    assert_eq!(code, 3);
    let (code, _, _) = call(&["validate", "-"], &NON_COMMUTING.replace("\"1\",\"rep\"", "\"2\",\"rep\""));
    assert_eq!(code, 3);
    let (code, _, _) = call(&["validate", "-"], "{not json");
    assert_eq!(code, 3);

    let bad_shape = TORSION.replace("[[\"0\",\"1\"]]", "[[\"0\",\"1\",\"2\"]]");
    assert_eq!(call(&["validate", "-"], &bad_shape).0, 2);
    assert_eq!(call(&["frobnicate"], "").0, 2);
    assert_eq!(call(&["--help"], "").0, 0);
}

#[test]
fn torsion_command() {
    let (code, out, _) = call(&["torsion", "-"], TORSION);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["value"], "1/2");
    let not_torsion = TORSION.replace(r#""alpha":[["0","1"]]"#, r#""alpha":[["1","0"]]"#);
    assert_eq!(call(&["torsion", "-"], &not_torsion).0, 4);
}

#[test]
fn not_admissible_exit_code() {
    // N₂ = −N₁, so N(1,1) = 0 while α(1,1) = v ≠ 0.
    let doc = r#"{"schema_version":"1","rep":{"rank":2,"r":2,"logs":[[["0","0"],["1","0"]],[["0","0"],["-1","0"]]]},
        "alpha":[["0","1"],["0","0"]],"beta":[["1","0"],["0","0"]]}"#;
    assert_eq!(call(&["validate", "-"], doc).0, 0);
    let (code, _, err) = call(&["height", "-", "--t", "1,1"], doc);
    assert_eq!(code, 4, "{err}");
    assert_eq!(call(&["height", "-", "--t", "1,2"], doc).0, 0);
}

#[test]
fn round_trip_is_byte_identical() {
    for (a, b, t) in [("0,1", "0,1", "2,1/3"), ("3,-1,4", "1,5,-9", "2,1/3,5")] {
        let doc_text = jordan_doc(a, b);
        let first = call(&["height", "-", "--t", t], &doc_text);
        assert_eq!(first.0, 0, "{}", first.2);
        let report = json(&first.1);
        let mut doc: ProblemDocument = serde_json::from_str(&doc_text).unwrap();
        doc.alpha = serde_json::from_value(report["representatives"]["alpha"].clone()).unwrap();
        doc.beta = serde_json::from_value(report["representatives"]["beta"].clone()).unwrap();
        let again = call(&["height", "-", "--t", t], &serde_json::to_string(&doc).unwrap());
        assert_eq!(first.1, again.1);
    }
    let (_, doc_text, _) = call(&["ceresa", "--g", "3", "--h", "1", "--op", "document"], "");
    let first = call(&["height", "-", "--symbolic"], &doc_text);
    let report = json(&first.1);
    assert_eq!(report["pairing"], "hQ");
    let mut doc: ProblemDocument = serde_json::from_str(&doc_text).unwrap();
    doc.alpha = serde_json::from_value(report["representatives"]["alpha"].clone()).unwrap();
    doc.beta = serde_json::from_value(report["representatives"]["beta"].clone()).unwrap();
    assert_eq!(call(&["height", "-", "--symbolic"], &serde_json::to_string(&doc).unwrap()).1, first.1);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["jordan", "--a", "1,-2,3", "--b", "0,4,1", "--symbolic"],
        vec!["ceresa", "--g", "4", "--h", "2", "--t", "3,5"],
        vec!["selftest", "--criterion", "7"],
    ] {
        assert_eq!(call(&args, ""), call(&args, ""));
    }
}

#[test]
fn selftest_command() {
    let (code, out, err) = call(&["selftest", "--criterion", "1"], "");
    assert_eq!(code, 0);
    assert_eq!(json(&out)["passed"], true);
    assert!(err.starts_with("PASS 1"));
    assert_eq!(call(&["selftest", "--criterion", "12"], "").0, 2);
}

#[test]
fn binary_reads_stdin_and_sets_exit_code() {
    let bin = env!("CARGO_BIN_EXE_heightlab");
    let spawn = |args: &[&str], input: &str| {
        let mut child = Command::new(bin).args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
        let out = child.wait_with_output().unwrap();
        (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
    };
    let (code, out) = spawn(&["height", "-", "--t", "1,1"], &jordan_doc("0,1", "0,1"));
    assert_eq!(code, 0);
    assert_eq!(json(&out)["value"], "1/2");
    assert_eq!(spawn(&["validate", "-"], NON_COMMUTING).0, 2);
    assert!(spawn(&["torsion", "-"], TORSION).1.contains("\"1/2\""));
}

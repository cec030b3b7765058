use assert_cmd::Command;

use zz_core::rational::int;
use zz_core::words::{word_length, zeta_word, BirWord};
use zz_core::{PairClass, Poly};

const W_W: &str = r#"{"P":["0/1","1/1"],"Q":["0/1","1/1"]}"#;
const CARPET: &str = r#"{"P":["-2","0","1"],"Q":["-3","0","1"]}"#;

fn zz() -> Command {
    Command::cargo_bin("zz").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = zz().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    zz().args(args).output().unwrap().status.code().unwrap()
}

#[test]
fn classify_prints_the_case() {
    assert_eq!(stdout(&["classify", "--pair", W_W]), "III\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["classify", "--pair", CARPET, "--format", "json"])).unwrap();
    assert_eq!(v["case"], "I");
    assert_eq!(v["surface"]["smooth"], true);
}

#[test]
fn revert_prints_the_target_class() {
    let pair = r#"{"P":["-1","0","1"],"Q":["1","0","0","1"]}"#;
    let out = stdout(&["revert", "--pair", pair, "--center", "2/1"]);
    let t: PairClass = serde_json::from_str(&out).unwrap();
    let want = PairClass::new(Poly::from_ints(&[1, 0, 0, 1]).shift(&int(2)), Poly::from_ints(&[-1, 0, 1])).unwrap();
    assert!(t.same_rep(&want));
}

#[test]
fn certify_free_emits_a_certificate() {
    let out = stdout(&["certify-free", "--pair", CARPET, "--family", "0,1,2,3", "--syllables", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 18);
    assert_eq!(code(&["certify-free", "--pair", CARPET, "--family", "0,1,1"]), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["classify", "--pair", "{not json"]), 2);
    assert_eq!(code(&["classify", "--pair", r#"{"P":["x"],"Q":["1"]}"#]), 2);
    assert_eq!(code(&["classify", "--pair", r#"{"P":["3"],"Q":["0","1"]}"#]), 1);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["iso", "--pair", W_W]), 2);
    assert_eq!(code(&["iso", "--pair", W_W, "--pair", W_W, "--format", "dot"]), 2);
    assert_eq!(code(&["certify-free", "--pair", W_W, "--family", "0,1"]), 1);
    assert_eq!(code(&["trace-type", "--type", "0,-1,-1"]), 1);
    assert_eq!(code(&["reduce", "--word", "{}", "--strategy", "sideways"]), 2);
}

#[test]
fn graph_json_round_trips() {
    let args = ["graph-fibrations", "--pair", CARPET, "--centers", "0,1", "--depth", "2"];
    let json = stdout(&args);
    let again = zz()
        .args(["graph-fibrations", "--graph", "-", "--format", "json"])
        .write_stdin(json.clone())
        .output()
        .unwrap();
    assert!(again.status.success());
    assert_eq!(String::from_utf8(again.stdout).unwrap(), json);

    let dot = stdout(&[&args[..], &["--format", "dot"]].concat());
    let golden = include_str!("../../core/tests/golden/carpet_0_1.dot");
    assert_eq!(dot, golden);
    let text = stdout(&[&args[..], &["--format", "text"]].concat());
    assert!(text.contains("cycle rank: 1"));
}

#[test]
fn output_is_deterministic() {
    let args = ["graph-fibrations", "--pair", CARPET, "--centers", "0,1,2", "--depth", "2"];
    let a = stdout(&args);
    let b = stdout(&[&["--jobs", "1"], &args[..]].concat());
    assert_eq!(a, b);
    let c = stdout(&["aut", "--pair", CARPET, "--family", "0,1,2,3", "--format", "json"]);
    assert_eq!(c, stdout(&["aut", "--pair", CARPET, "--family", "0,1,2,3", "--format", "json"]));
}

#[test]
fn iso_reports_witnesses() {
    let a = r#"{"P":["-1","0","1"],"Q":["0","0","0","1"]}"#;
    let b = r#"{"P":["-1","0","4"],"Q":["1","3","3","1"]}"#;
    let v: serde_json::Value = serde_json::from_str(&stdout(&["iso", "--pair", a, "--pair", b])).unwrap();
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["witness"]["beta"], "2/1");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["iso", "--pair", W_W, "--pair", r#"{"P":["0","1"],"Q":["1","1"]}"#])).unwrap();
    assert_eq!(v["isomorphic"], false);
}

#[test]
fn reduce_reads_words_from_stdin() {
    let base: PairClass = serde_json::from_str(CARPET).unwrap();
    let z = zeta_word(&base, &int(1)).unwrap();
    let w = z.then(&z.inverse()).unwrap();
    for strategy in ["leftmost", "rightmost", "seed:7"] {
        let out = zz().args(["reduce", "--word", "-", "--strategy", strategy]).write_stdin(w.to_json()).output().unwrap();
        assert!(out.status.success());
        let r = BirWord::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
        assert_eq!(word_length(&r), 0);
    }
    let out = stdout(&["reduce", "--word", &z.to_json(), "--format", "text"]);
    assert_eq!(out, "length 4 -> 4\n");
}

#[test]
fn text_reports() {
    let pair = r#"{"P":["0","-1","1"],"Q":["0","-1","1"]}"#;
    assert_eq!(stdout(&["equations", "--pair", pair]), "yu = x^3 - x^2\nvx = u^3 - u^2\nyv = x^2*u^2 - x^2*u - x*u^2 + x*u\n");
    let aut = stdout(&["aut", "--pair", pair]);
    assert!(aut.contains("Aut(S) ≅ ℤ/2 ⋆ G_a^∞"));
    assert!(aut.contains("Diag(S) trivial: true"));
    let trace = stdout(&["trace-type", "--type", "0,-1,-2,-3"]);
    assert!(trace.ends_with("final [0, -1, -3, -2]\n"));
    let dual = stdout(&["graph-dual", "--pair", W_W]);
    assert!(dual.starts_with("graph"));
}

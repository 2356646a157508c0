//! End-to-end tests of the `pq` binary: stdout text is golden-file stable,
//! JSON mode emits one valid document, and failures map to the right exit
//! codes (1 for domain errors, 2 for usage errors).

use std::process::{Command, Output};

fn pq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pq"))
        .args(args)
        .output()
        .expect("spawn pq")
}

fn stdout(args: &[&str]) -> String {
    let out = pq(args);
    assert!(
        out.status.success(),
        "pq {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).expect("valid JSON document")
}

#[test]
fn product_and_traces() {
    assert_eq!(stdout(&["product", "yxxyxy", "xyxyyx"]), "xxyxyy\n");
    assert_eq!(
        stdout(&["product", "yxxyxy", "xyxyyx", "--traced"]),
        "|xxy|xyy|\n"
    );
    let doc = json(&["product", "yxxyxy", "xyxyyx", "--json"]);
    assert_eq!(doc["product"], "xxyxyy");
    assert_eq!(doc["bars"], serde_json::json!([0, 3, 6]));
}

#[test]
fn oplus_output() {
    assert_eq!(stdout(&["oplus", "yxxyxy", "xyxyyx"]), "yxxyyx\n");
}

#[test]
fn check_json_fields() {
    let doc = json(&["check", "xyxy", "--json"]);
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["m"], 2);
    assert_eq!(doc["idempotent"], false);
    assert_eq!(doc["upper_zigzag"], false);
    assert_eq!(doc["nilpotent"], true);
    assert_eq!(doc["descents"], 1);

    let doc = json(&["check", "xyyxyxxy", "--json"]);
    assert_eq!(doc["idempotent"], true);
    assert_eq!(doc["emmentaler"], "0-1;2-2;3-4");
    assert_eq!(doc["zigzag"], "1m11m");
}

#[test]
fn check_text_output() {
    assert_eq!(
        stdout(&["check", "yx"]),
        "word: yx\ndimensions: (1,1)\ndescents: 1\nmap: 0,1/1\nidempotent: true\n\
         upper_zigzag: true\nnilpotent: false\naperiodicity_index: 1\n\
         emmentaler: 0-0;1-1\nzigzag: 11\n"
    );
}

#[test]
fn map_and_path_round_trip() {
    assert_eq!(stdout(&["map", "yxxxyxyyxy"]), "0,1,1,1,2,4/5\n");
    assert_eq!(stdout(&["path", "0,1,1,1,2,4/5"]), "yxxxyxyyxy\n");
    assert_eq!(stdout(&["path", "0,0,0/3"]), "xxyyy\n");
}

#[test]
fn idempotent_listing() {
    assert_eq!(stdout(&["idempotents", "2", "--count"]), "5\n");
    let lines: Vec<String> = stdout(&["idempotents", "2", "--list"])
        .lines()
        .map(String::from)
        .collect();
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(sorted, vec!["xxyy", "xyyx", "yxxy", "yxyx", "yyxx"]);
    let doc = json(&["idempotents", "3", "--count", "--json"]);
    assert_eq!(doc["count"], 13);
}

#[test]
fn emmentaler_round_trip() {
    assert_eq!(stdout(&["emmentaler", "xyyxyxxy"]), "0-1;2-2;3-4\n");
    assert_eq!(stdout(&["from-emmentaler", "0-1;2-2;3-4"]), "xyyxyxxy\n");
    let doc = json(&["emmentaler", "xyyxyxxy", "--json"]);
    assert_eq!(doc["map"], "0,0,2,3,3/4");
    assert_eq!(doc["adjoint"], "1,1,2,4,4/4");
}

#[test]
fn count_families() {
    assert_eq!(
        stdout(&["count", "idempotents", "2"]),
        "idempotents(2): formula=5 oracle=5 agree=yes\n"
    );
    let doc = json(&["count", "nilpotents", "3", "--json"]);
    assert_eq!(doc["formula"], "5");
    assert_eq!(doc["oracle"], "5");
    assert_eq!(doc["agree"], true);
    let doc = json(&["count", "preimages", "xxyxyy", "--m", "3", "--json"]);
    assert_eq!(doc["formula"], "28");
    assert_eq!(doc["oracle"], "28");
    // oracle skipped beyond the cap
    let doc = json(&["count", "idempotents", "4", "--oracle-cap", "2", "--json"]);
    assert_eq!(doc["oracle"], serde_json::Value::Null);
    assert_eq!(doc["agree"], true);
}

#[test]
fn identity_verbs() {
    assert_eq!(
        stdout(&["identity", "2", "2", "2"]),
        "identity-rect(2,2,2): formula=36 oracle=36 agree=yes\n"
    );
    assert_eq!(
        stdout(&["identity", "2"]),
        "identity-square(2): formula=36 oracle=36 agree=yes\n"
    );
    let out = pq(&["identity", "1", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn factor_output() {
    assert_eq!(
        stdout(&["factor", "xxyxyy"]),
        "left: xxyx\nright: yxyy\ndescents: 1\n"
    );
}

#[test]
fn residual_output() {
    assert_eq!(stdout(&["residual", "right", "xxyy", "yxyx"]), "xxyy\n");
    assert_eq!(stdout(&["residual", "left", "yxyx", "xyxy"]), "xyxy\n");
}

#[test]
fn render_golden() {
    assert_eq!(
        stdout(&["render", "yxxxyxyyxy"]),
        include_str!("golden/render_fig1.txt")
    );
    assert_eq!(stdout(&["render", "xy"]), ". |\n._.\n");
    assert_eq!(stdout(&["render", ""]), ".\n");
}

#[test]
fn verify_quick_run() {
    let out = pq(&["verify", "--n", "2", "--oracle-cap", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("27 of 27 checks passed"));
    let doc = json(&["verify", "--n", "2", "--oracle-cap", "1", "--json"]);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["checks"].as_array().unwrap().len(), 27);
}

#[test]
fn domain_errors_exit_one() {
    let out = pq(&["product", "xy", "xxyy"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension mismatch"));

    let out = pq(&["check", "xz"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("illegal character at position 1"));

    let out = pq(&["emmentaler", "xyxy"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not idempotent"));

    let out = pq(&["from-emmentaler", "0-2;1-3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let out = pq(&["count", "bogus", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = pq(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = pq(&["product", "xy"]);
    assert_eq!(out.status.code(), Some(2));

    let out = pq(&["count", "descents", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use sha2::{Digest, Sha256};

fn sgcrit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgcrit"))
        .args(args)
        .current_dir(dir)
        .env_remove("SGCRIT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn gen(dir: &Path, family: &str, k: Option<&str>, file: &str) {
    let mut args = vec!["gen", family, "-o", file];
    if let Some(k) = k {
        args.extend(["--k", k]);
    }
    assert_eq!(sgcrit(dir, &args).status.code(), Some(0));
}

#[test]
fn gen_writes_canonical_sg1() {
    let dir = tempfile::tempdir().unwrap();
    let o = sgcrit(dir.path(), &["gen", "anti_complete", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "sg1\nv v0\nv v1\nv v2\nv v3\n\
         e v0-v1 v0 v1 -\ne v0-v2 v0 v2 -\ne v0-v3 v0 v3 -\n\
         e v1-v2 v1 v2 -\ne v1-v3 v1 v3 -\ne v2-v3 v2 v3 -\n"
    );
    gen(dir.path(), "anti_complete", Some("4"), "k4.sg");
    assert_eq!(std::fs::read_to_string(dir.path().join("k4.sg")).unwrap(), stdout(&o));
}

#[test]
fn petersen_frustration() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "petersen_sigma2", None, "petersen_s2.sg");
    let o = sgcrit(dir.path(), &["--json", "frustration", "petersen_s2.sg"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["index"], 3);
    assert_eq!(v["result"]["witness"].as_array().unwrap().len(), 3);
    assert_eq!(v["certified"], true);
    let bytes = std::fs::read(dir.path().join("petersen_s2.sg")).unwrap();
    assert_eq!(v["input"]["sha256"], hex::encode(Sha256::digest(&bytes)));
}

#[test]
fn escher_wall_is_critical() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "escher_wall", Some("4"), "e4.sg");
    let o = sgcrit(dir.path(), &["critical", "e4.sg"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4-critical"));
    let o = sgcrit(dir.path(), &["verify-wall", "e4.sg"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn petersen_sigma1_is_not_in_s_star() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "petersen_sigma1", None, "petersen_s1.sg");
    let o = sgcrit(dir.path(), &["--json", "sstar", "petersen_s1.sg"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["verdict"], "fail");
    let w = &v["result"]["report"]["disjoint_circuits"];
    assert_eq!(w["first"].as_array().unwrap().len(), 5);
    assert_eq!(w["second"].as_array().unwrap().len(), 5);
    gen(dir.path(), "petersen_sigma2", None, "petersen_s2.sg");
    assert_eq!(sgcrit(dir.path(), &["sstar", "petersen_s2.sg"]).status.code(), Some(0));
}

#[test]
fn json_keys_are_sorted() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "anti_complete", Some("4"), "k4.sg");
    let o = sgcrit(dir.path(), &["--json", "critical", "--cuts", "k4.sg"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    // reserialising a parsed value sorts keys, so equality means sorted input
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    assert_eq!(v["result"]["cuts"].as_array().unwrap().len(), 4);
    let again = sgcrit(dir.path(), &["--json", "critical", "--cuts", "k4.sg"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn non_critical_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("pendant.sg"),
        "sg1\nv a\nv b\nv c\nv d\ne ab a b -\ne bc b c -\ne ca c a -\ne cd c d +\n",
    )
    .unwrap();
    let o = sgcrit(dir.path(), &["--json", "critical", "pendant.sg"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["result"]["failing_edge"], "cd");
    let o = sgcrit(dir.path(), &["balance", "pendant.sg"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("unbalanced"));
}

#[test]
fn json_input_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "anti_wheel", Some("2"), "w5.json");
    let text = std::fs::read_to_string(dir.path().join("w5.json")).unwrap();
    assert!(text.contains("\"format\": \"sg1\""));
    let o = sgcrit(dir.path(), &["--json", "frustration", "--method", "oracle", "w5.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["index"], 3);
}

#[test]
fn errors_exit_two_with_a_reason() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.sg"), "sg1\nv a\nv b\ne e1 a b *\n").unwrap();
    let o = sgcrit(dir.path(), &["--json", "balance", "bad.sg"]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["detail"]["line"], 4);

    let o = sgcrit(dir.path(), &["balance", "missing.sg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.sg"));

    gen(dir.path(), "anti_complete", Some("4"), "k4.sg");
    let o = sgcrit(dir.path(), &["--json", "decompose", "--max-edges", "3", "k4.sg"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "budget");

    gen(dir.path(), "neg_loops", Some("3"), "l3.sg");
    let o = sgcrit(dir.path(), &["--json", "classify", "l3.sg"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "precondition");

    assert_eq!(sgcrit(dir.path(), &["gen", "no_such_family"]).status.code(), Some(2));
}

#[test]
fn budget_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "anti_complete", Some("4"), "k4.sg");
    let run = |val: &str| {
        Command::new(env!("CARGO_BIN_EXE_sgcrit"))
            .args(["--json", "frustration", "--method", "bnb", "k4.sg"])
            .current_dir(dir.path())
            .env("SGCRIT_BUDGET", val)
            .output()
            .unwrap()
    };
    assert_eq!(run("5").status.code(), Some(0));
    let o = run("-1");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "malformed-input");
}

#[test]
fn reduce_classify_decompose() {
    let dir = tempfile::tempdir().unwrap();
    // -K4 with the edge ab replaced by a path through m
    std::fs::write(
        dir.path().join("sub.sg"),
        "sg1\nv a\nv b\nv c\nv d\nv m\n\
         e am a m +\ne mb m b -\ne ac a c -\ne ad a d -\ne bc b c -\ne bd b d -\ne cd c d -\n",
    )
    .unwrap();
    let o = sgcrit(dir.path(), &["reduce", "sub.sg", "-o", "red.sg"]);
    assert_eq!(o.status.code(), Some(0));
    let red = std::fs::read_to_string(dir.path().join("red.sg")).unwrap();
    assert_eq!(red.lines().filter(|l| l.starts_with("v ")).count(), 4);
    assert_eq!(red.lines().filter(|l| l.starts_with("e ")).count(), 6);

    let o = sgcrit(dir.path(), &["--json", "classify", "sub.sg"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["archetype"], "anti-k4");
    assert_eq!(v["result"]["suppressions"], serde_json::json!(["m"]));

    gen(dir.path(), "neg_loops", Some("2"), "l2.sg");
    let o = sgcrit(dir.path(), &["--json", "decompose", "l2.sg"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["decomposable"], true);
    assert_eq!(v["result"]["witness"]["indices"], serde_json::json!([1, 1]));
}

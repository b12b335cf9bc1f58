use std::process::{Command, Output};

fn cppo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cppo")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_atlas_group() {
    let o = cppo(&["classify", "atlas:s4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("Fitting height: 3"), "{s}");
    assert!(s.contains("theorem 1: pass"), "{s}");
}

#[test]
fn classify_spec_file_structured() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("g.json");
    std::fs::write(&spec, r#"{"name": "f21", "degree": 7, "generators": ["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]}"#).unwrap();
    let out = dir.path().join("out.json");
    let o = cppo(&["classify", spec.to_str().unwrap(), "--format", "structured", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["reports"][0]["name"], "f21");
    assert_eq!(v["reports"][0]["order"], 21);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), stdout(&o));
}

#[test]
fn skips_only_fail_under_strict() {
    assert_eq!(cppo(&["classify", "atlas:sym(6)", "--cap", "100"]).status.code(), Some(0));
    assert_eq!(cppo(&["classify", "atlas:sym(6)", "--cap", "100", "--strict"]).status.code(), Some(1));
}

#[test]
fn operational_errors_exit_2() {
    assert_eq!(cppo(&["classify", "atlas:nonexistent(3)"]).status.code(), Some(2));
    assert_eq!(cppo(&["classify", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(cppo(&["verify", "lemmas", "--ids", "no_such_lemma"]).status.code(), Some(2));
}

#[test]
fn verify_lemmas_subset() {
    let o = cppo(&["verify", "lemmas", "--ids", "autodoquaternion,a6case", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 fail, 0 undecided"));
}

#[test]
fn verify_theorems_on_corpus() {
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/data/corpus.json");
    let o = cppo(&["verify", "theorems", "--corpus", corpus]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 fail"));
}

#[test]
fn commutators_and_towers() {
    let o = cppo(&["commutators", "atlas:psl2(7)", "--orders-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("168 commutators"));
    let o = cppo(&["tower", "find", "atlas:sl2_3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("height 2, valid true"));
}

#[test]
fn atlas_list_and_build() {
    assert!(stdout(&cppo(&["atlas", "list"])).contains("psl3_4"));
    let o = cppo(&["atlas", "build", "m10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 720"));
}

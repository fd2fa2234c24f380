use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_interpcat"))
        .args(args)
        .env_remove("INTERPCAT_SEED")
        .output()
        .expect("spawn interpcat")
}

fn ok(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const P6: &str = r#"{"flavor":"S","top":6,"bottom":2,"blocks":[[1,3],[2,-2],[4,-1],[5],[6]]}"#;
const Q3: &str = r#"{"flavor":"S","top":3,"bottom":6,"blocks":[[1,3,-2],[2,-4,-5],[-1],[-3,-6]]}"#;

#[test]
fn compose_worked_example() {
    let v = ok(&["compose", "-P", P6, "-Q", Q3]);
    assert_eq!(v["t_power"], 1);
    assert_eq!(v["diagram"], json!({"flavor":"S","top":3,"bottom":2,"blocks":[[1,3,-2],[2,-1]]}));
}

#[test]
fn scalar_outputs() {
    assert_eq!(ok(&["simple-dim", "--lambda", "[2]"])["dimension"], "(t^2 - 3*t)/(2)");
    assert_eq!(ok(&["dim", "--flavor", "GL", "-m", "2,1"])["dimension"], "t^3");
    assert_eq!(ok(&["lr", "--lambda", "[2,1]", "--mu", "[1]", "--nu", "[1,1]"])["lr"], 1);
    let g = ok(&["gram", "--flavor", "S", "-l", "1", "-m", "1", "--symbolic"]);
    assert_eq!(g["determinant"], "t^3 - t^2");
    let g1 = ok(&["gram", "--flavor", "S", "-l", "1", "-m", "1", "--t", "1"]);
    assert_eq!((g1["rank"].as_u64(), g1["nullity"].as_u64()), (Some(1), Some(1)));
    assert_eq!(ok(&["triple", "--lambda", "[4,3,1]", "-k", "1", "-l", "1"])["gamma"], json!([2]));
}

#[test]
fn emitted_morphisms_read_back() {
    let y = ok(&["young", "--lambda", "[2]"]);
    let e = y["idempotent"].to_string();
    assert_eq!(ok(&["idem-check", "-P", &e])["idempotent"], true);
    let d = ok(&["basis-change", "-P", &e, "--to", "delta"]);
    assert_eq!(d["basis"], "delta");
    let back = ok(&["basis-change", "-P", &d.to_string(), "--to", "e"]);
    assert_eq!(back, y["idempotent"]);
}

#[test]
fn payload_from_file_is_left_untouched() {
    let path = std::env::temp_dir().join(format!("interpcat-cli-{}.json", std::process::id()));
    std::fs::write(&path, P6).unwrap();
    let before = std::fs::read(&path).unwrap();
    let v = ok(&["compose", "-P", path.to_str().unwrap(), "-Q", Q3]);
    assert_eq!(v["t_power"], 1);
    assert_eq!(std::fs::read(&path).unwrap(), before);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn exit_codes() {
    let bad_json = run(&["compose", "-P", "{", "-Q", Q3]);
    assert_eq!(bad_json.status.code(), Some(2));
    let bad_partition = run(&["simple-dim", "--lambda", "[1,2]"]);
    assert_eq!(bad_partition.status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    // Well formed but not composable.
    let mismatch = run(&["compose", "-P", P6, "-Q", P6]);
    assert_eq!(mismatch.status.code(), Some(1));
    assert!(!mismatch.stderr.is_empty());
}

#[test]
fn character_moments() {
    let m = ok(&["char-moments", "--flavor", "gl", "--b", "[0]", "--c", "[]", "-K", "3"]);
    let s = ok(&["char-search", "--moments", &m.to_string(), "-r", "1", "-s", "0"]);
    assert_eq!(s, json!({"b":[0],"c":[]}));
}

#[test]
fn selftest_is_deterministic() {
    let a = run(&["selftest", "quick", "--seed", "7"]);
    let b = run(&["selftest", "quick", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_interpcat")).args(["selftest", "quick"]).env("INTERPCAT_SEED", "7").output().unwrap();
    assert_eq!(env.stdout, a.stdout);
    let j = ok(&["selftest", "quick", "--seed", "7", "--json"]);
    assert_eq!(j["seed"], 7);
}

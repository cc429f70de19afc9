use std::path::PathBuf;
use std::process::{Command, Output};

fn qacodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qacodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qacodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_then_analyze() {
    let path = scratch("c17.qam");
    let p = path.to_str().unwrap();
    let o = qacodes(&["construct", "--ct", "17", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("qam n=67 rows=7"));
    let o = qacodes(&["analyze", p]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["n"], 67);
    assert_eq!(report["d"], 50);
    assert_eq!(report["gpo"], true);
    let keys: Vec<&str> = report
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys.len(), 10);
}

#[test]
fn construct_family_and_binary_image() {
    let path = scratch("eq6.qam");
    let p = path.to_str().unwrap();
    let o = qacodes(&["construct", "--family", "1", "--k", "3", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    let o = qacodes(&["concat-binary", p]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        (v["length"].as_u64(), v["dimension"].as_u64()),
        (Some(21), Some(3))
    );
    assert_eq!(v["min_distance"], 12);
}

#[test]
fn punctured_chain_member() {
    let o = qacodes(&["construct", "--ct", "31", "--n", "125"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[125,3.5,94]"));
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        vec!["construct", "--family", "11", "--k", "5"],
        vec!["construct", "--family", "7", "--k", "4"],
        vec!["construct", "--ct", "63"],
        vec!["construct", "--ct", "5"],
        vec!["construct", "--ct", "31", "--n", "10"],
        vec!["analyze", "/nonexistent/file.qam"],
        vec!["griesmer", "--dim2", "0", "--d", "3"],
        vec!["no-such-command"],
    ] {
        assert_eq!(qacodes(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_qam_exit_2() {
    let path = scratch("bad.qam");
    std::fs::write(&path, "qam n=3 rows=2\n011\n").unwrap();
    assert_eq!(
        qacodes(&["analyze", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn griesmer_value() {
    let o = qacodes(&["griesmer", "--dim2", "7", "--d", "96"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["g"], 381);
    assert_eq!(v["min_length"], 127);
}

#[test]
fn tables_and_examples_pass() {
    for args in [
        vec!["table2"],
        vec!["verify-examples"],
        vec!["table1", "--max-k", "9"],
    ] {
        let o = qacodes(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    let a = qacodes(&["table2"]);
    let b = qacodes(&["table2"]);
    assert_eq!(a.stdout, b.stdout);
    let a = qacodes(&["table1", "--max-k", "9"]);
    let b = qacodes(&["table1", "--max-k", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

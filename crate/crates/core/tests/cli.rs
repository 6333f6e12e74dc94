use std::process::{Command, Output};

fn isotypic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isotypic")).args(args).output().unwrap()
}

#[test]
fn table_text_output() {
    let out = isotypic(&["table", "--group", "S3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stdout.is_empty());
}

#[test]
fn json_has_schema() {
    let out = isotypic(&["decompose", "--group", "D4", "--rep", "perm", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(isotypic(&["table", "--group", "Z9"]).status.code(), Some(2));
    assert_eq!(isotypic(&["table", "--group", "S3", "--prime", "5"]).status.code(), Some(2));
    assert_eq!(isotypic(&["decompose", "--group", "S3", "--rep", "/nonexistent"]).status.code(), Some(2));
}

#[test]
fn report_written_to_file() {
    let path = std::env::temp_dir().join(format!("isotypic-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = isotypic(&["cyclic", "--n", "3", "--format", "json", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    std::fs::remove_file(path).ok();
}

#[test]
fn matrix_file_rep() {
    let path = std::env::temp_dir().join(format!("isotypic-rep-{}.txt", std::process::id()));
    // C2 acting on F_3^2 by swapping coordinates.
    std::fs::write(&path, "p 3\n0 1\n1 0\n").unwrap();
    let out = isotypic(&["decompose", "--group", "C2", "--rep", path.to_str().unwrap(), "--format", "json"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn multiplication_table_group() {
    let path = std::env::temp_dir().join(format!("isotypic-table-{}.txt", std::process::id()));
    // Z/4 under addition.
    std::fs::write(&path, "0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n").unwrap();
    let out = isotypic(&["table", "--table", path.to_str().unwrap(), "--format", "json"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["modulus"], 5);
    assert_eq!(v["order"], 4);
}

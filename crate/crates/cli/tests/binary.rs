//! Runs the built binary, so the S-pair limit stays out of other test processes.

use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn koszul() -> Command {
    Command::new(env!("CARGO_BIN_EXE_koszul"))
}

#[test]
fn exit_codes_from_the_binary() {
    let ok = koszul()
        .args(["bei", "--filtration"])
        .arg(data("path3.graph"))
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let not_closed = koszul()
        .arg("closed")
        .arg(data("example24.graph"))
        .output()
        .unwrap();
    assert_eq!(not_closed.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&not_closed.stdout).contains("3, 4, 6"));
    let usage = koszul().arg("frobnicate").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn spair_limit_aborts_with_input_error() {
    let out = koszul()
        .env("KOSZUL_GB_LIMIT", "1")
        .args(["bei", "--quadratic-gb", "--json"])
        .arg(data("k3.graph"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let report: koszul_cli::Report = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.failures[0].reason.contains("S-pair limit"));
    let bad = koszul()
        .env("KOSZUL_GB_LIMIT", "lots")
        .args(["bei", "--quadratic-gb"])
        .arg(data("k3.graph"))
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let roomy = koszul()
        .env("KOSZUL_GB_LIMIT", "100000")
        .args(["bei", "--quadratic-gb"])
        .arg(data("k3.graph"))
        .output()
        .unwrap();
    assert_eq!(roomy.status.code(), Some(0));
}

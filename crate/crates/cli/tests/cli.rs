use std::path::Path;
use std::process::{Command, Output};

use ncharm::frobenius::Module;
use ncharm::Basis;
use ncharm_cli::formats::{self, FrobJson, KernelJson};

fn ncharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncharm")).args(args).env_remove("NCHARM_BUDGET").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hilbert_lines() {
    let o = ncharm(&["series", "mhar", "--n", "2", "--deg", "8", "--hilbert"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1,1,1,3,6,12,24,48,96");
    let o = ncharm(&["series", "nchar", "--n", "2", "--deg", "5", "--hilbert"]);
    assert_eq!(stdout(&o).trim(), "1,1,1,1,1,1");
    let o = ncharm(&["series", "qxn", "--n", "1", "--deg", "3", "--hilbert"]);
    assert_eq!(stdout(&o).trim(), "1,1,1,1");
    let o = ncharm(&["series", "glchar", "--n", "2", "--deg", "5", "--hilbert"]);
    assert_eq!(stdout(&o).trim(), "1,0,1,2,4,8");
}

#[test]
fn json_round_trips() {
    for m in Module::ALL {
        let o = ncharm(&["series", m.name(), "--n", "3", "--deg", "4", "--format", "json"]);
        assert!(o.status.success());
        let j: FrobJson = serde_json::from_slice(&o.stdout).unwrap();
        let back = formats::frob_from_json(&j).unwrap();
        assert!(back.value.equals(&m.frob(3, 4).value), "{}", m);
        assert_eq!(j.label, format!("{}_3", m.name()));
    }
    let o = ncharm(&["series", "mhar", "--n", "2", "--deg", "3", "--format", "json", "--basis", "h"]);
    let j: FrobJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j.value.basis, "h");
    let o = ncharm(&["kernel", "--n", "2", "--deg", "3", "--flavor", "twisted", "--format", "json"]);
    let k: KernelJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(k.dim, 1);
    for b in &k.basis {
        assert!(!formats::ncpoly_from_json(b).unwrap().is_zero());
    }
}

#[test]
fn csv_output() {
    let o = ncharm(&["series", "mhar", "--n", "2", "--deg", "2", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text, "degree,basis,partition,coeff\n0,s,2,1\n1,s,1 1,1\n2,s,1 1,1\n");
    let f = formats::symfunc_from_csv(&text, 2).unwrap();
    assert!(f.equals(&Module::MHar.frob(2, 2).value.to_basis(Basis::S)));
}

#[test]
fn basis_commands() {
    let o = ncharm(&["basis", "p", "12"]);
    assert_eq!(stdout(&o).trim(), "x1*x2 - x2*x1");
    let o = ncharm(&["basis", "h", "211", "--expand"]);
    assert_eq!(stdout(&o).trim(), "6*P[211] + 6*P[121] + 2*P[112]");
    let o = ncharm(&["lyndon", "2112"]);
    assert_eq!(stdout(&o).trim(), "(2)(112)");
}

#[test]
fn exit_codes() {
    assert_eq!(ncharm(&["series", "nope", "--n", "2", "--deg", "3"]).status.code(), Some(2));
    assert_eq!(ncharm(&["series", "mhar", "--n", "0", "--deg", "3"]).status.code(), Some(2));
    assert_eq!(ncharm(&["series", "mhar"]).status.code(), Some(2));
    assert_eq!(ncharm(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(ncharm(&["basis", "p", "1x"]).status.code(), Some(2));
    assert_eq!(ncharm(&["oeis-check", "A122391", "--bfile", "/nonexistent/b.txt"]).status.code(), Some(2));
    assert_eq!(ncharm(&["oeis-check", "A000045", "--bfile", "/nonexistent/b.txt"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = ncharm(&["verify", "chevalley", "--nmax", "4", "--deg", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = ncharm(&["verify", "triangularity", "--n", "3", "--len", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("max leading coefficient 120"));
    let o = ncharm(&["verify", "kernels", "--n", "2", "--deg", "5"]);
    assert_eq!(o.status.code(), Some(0));
    // A tiny budget turns kernel computations into skips, not failures.
    let o = Command::new(env!("CARGO_BIN_EXE_ncharm"))
        .args(["verify", "kernels", "--n", "2", "--deg", "4"])
        .env("NCHARM_BUDGET", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SKIP hausdorff n=2 d=4"));
    let o = Command::new(env!("CARGO_BIN_EXE_ncharm"))
        .args(["kernel", "--n", "2", "--deg", "4", "--flavor", "twisted"])
        .env("NCHARM_BUDGET", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_ncharm"))
        .args(["verify", "kernels"])
        .env("NCHARM_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn oeis_check_against_local_files() {
    let dir = std::env::temp_dir().join(format!("ncharm-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = write(&dir, "good.txt", "# MHar_2\n0 1\n1 1\n2 1\n3 3\n4 6\n5 12\n6 24\n");
    let o = ncharm(&["oeis-check", "A122391", "--bfile", &good]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS A122391"));
    let bad = write(&dir, "bad.txt", "0 1\n1 1\n2 1\n3 3\n4 7\n");
    let o = ncharm(&["oeis-check", "A122391", "--bfile", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("index 4"));
    let broken = write(&dir, "broken.txt", "0 1\n1 one\n");
    let o = ncharm(&["oeis-check", "A122391", "--bfile", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    write(&dir, "b122367.txt", "0 1\n1 1\n2 1\n3 1\n");
    let o = ncharm(&["oeis-check", "A122367", "--dir", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

use std::path::PathBuf;
use std::process::{Command, Output};

use mpc_hull::cli::{self, RunOptions};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpc-hull"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mpc-hull-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn example1_reports() {
    let path = data("example1_z30.spec");
    let out = run(&[path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("lcd: true"));
    assert!(text.contains("condition 3 (AAᵗ diagonal-units): true"), "{text}");
}

#[test]
fn every_data_file_runs_cleanly() {
    for name in ["example1_z30.spec", "example2_z25.spec", "torsion_z4.spec", "turyn_f2.spec"] {
        let path = data(name);
        let out = run(&[path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!stdout(&out).is_empty(), "{name}");
    }
}

#[test]
fn torsion_command_prints_reduced_generators() {
    let path = data("torsion_z4.spec");
    let out = run(&[path.to_str().unwrap(), "torsion", "C", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let expected = "gens\n1 0 0 0 0 1 0 1\n0 1 0 0 1 0 1 1\n0 0 1 0 0 0 1 0\n0 0 0 1 0 1 1 1\nend";
    assert!(text.contains(expected), "{text}");
    assert!(text.contains("parameters: (8, 2^4, 2)"));
}

#[test]
fn exit_codes() {
    let good = data("torsion_z4.spec");
    let good = good.to_str().unwrap();
    assert_eq!(run(&[good, "info", "C"]).status.code(), Some(0));
    assert_eq!(run(&[good, "hull", "missing"]).status.code(), Some(2));
    assert_eq!(run(&[good, "frobnicate", "C"]).status.code(), Some(2));

    let z6 = scratch("z6.spec", "ring 6\ncode C\ngens\n1 2\nend\n");
    assert_eq!(run(&[z6.to_str().unwrap(), "torsion", "C", "1"]).status.code(), Some(1));

    let bad = scratch("bad.spec", "ring 6\ncode C\ngens\n1 2 x\nend\n");
    let out = run(&[bad.to_str().unwrap(), "info", "C"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    assert_eq!(run(&["/nonexistent/file.spec", "info", "C"]).status.code(), Some(2));
}

#[test]
fn printed_codes_parse_back() {
    let text = std::fs::read_to_string(data("example2_z25.spec")).unwrap();
    let doc = cli::parse_spec(&text).unwrap();
    for (name, code) in &doc.codes {
        let reprinted = format!("ring {}\n{}", code.ring().modulus(), cli::code_block(name, code));
        let again = cli::parse_spec(&reprinted).unwrap();
        assert_eq!(again.code(name).unwrap(), code, "{name}");
    }
}

#[test]
fn dual_output_parses_back() {
    let path = data("example1_z30.spec");
    let doc = cli::parse_spec(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let name = doc.codes.keys().next().unwrap().clone();
    let report = cli::run_command(&doc, &["dual".into(), name.clone()], RunOptions::default()).unwrap();
    let block: String = report
        .lines()
        .skip_while(|l| !l.starts_with("code "))
        .take_while(|l| *l != "end")
        .chain(["end"])
        .map(|l| format!("{l}\n"))
        .collect();
    let again = cli::parse_spec(&format!("ring 30\n{block}")).unwrap();
    let code = again.codes.values().next().unwrap();
    assert_eq!(code, &doc.code(&name).unwrap().dual());
}

#[test]
fn verify_suite_passes() {
    let out = run(&["--suite", "howell"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 failures"));
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use xagdepth_core::{samples, write_native, Xag};

fn xagdepth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xagdepth"))
        .args(args)
        .env_remove("XAGDEPTH_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn save(dir: &TempDir, name: &str, net: &Xag) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, write_native(net)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Second line of the report, split into cells.
fn row(out: &Output) -> Vec<String> {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(out);
    let line = text.lines().nth(1).expect("report row");
    line.split('\t').map(String::from).collect()
}

const CHAIN_AAG: &str = "aag 15 8 0 1 7\n2\n4\n6\n8\n10\n12\n14\n16\n30\n\
18 2 4\n20 18 6\n22 20 8\n24 22 10\n26 24 12\n28 26 14\n30 28 16\n";

#[test]
fn stats_rows() {
    let dir = TempDir::new().unwrap();
    let maj5 = save(&dir, "maj5.xag", &samples::maj5_depth2());
    let xor = save(&dir, "xor.xag", &samples::parity(4));
    let chain = dir.path().join("chain.aag");
    std::fs::write(&chain, CHAIN_AAG).unwrap();
    let out = xagdepth(&["stats", s(&maj5), s(&xor), s(&chain)]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "name\tinputs\tgates\tMC\tMD\tdepth\n\
         maj5\t5\t14\t3\t2\t7\n\
         xor\t4\t3\t0\t0\t2\n\
         chain\t8\t7\t7\t7\t7\n"
    );
}

#[test]
fn balance_rows() {
    let dir = TempDir::new().unwrap();
    let and_or = save(&dir, "maj5_and_or.xag", &samples::maj5_and_or());
    let dec = save(&dir, "dec.xag", &samples::decoder(8));
    let chain = dir.path().join("chain.aag");
    std::fs::write(&chain, CHAIN_AAG).unwrap();

    let r = row(&xagdepth(&["balance", s(&and_or)]));
    let before = samples::maj5_and_or().mult_depth();
    assert_eq!(r[2], format!("2 ({before})"));
    let r = row(&xagdepth(&["balance", s(&dec), "--jobs", "2"]));
    assert_eq!(r[2], "3 (3)");
    let r = row(&xagdepth(&[
        "balance",
        s(&chain),
        "--strategy",
        "espp",
        "--esop-cost",
        "literals",
    ]));
    assert_eq!((r[1].as_str(), r[2].as_str()), ("7 (7)", "3 (7)"));
    let runtime = &r[4];
    assert_eq!(runtime.split('.').nth(1).map(str::len), Some(2), "{runtime}");
}

#[test]
fn balance_output_is_equivalent() {
    let dir = TempDir::new().unwrap();
    let and_or = save(&dir, "maj5_and_or.xag", &samples::maj5_and_or());
    let out = dir.path().join("out/opt.xag");
    let r = xagdepth(&["balance", s(&and_or), "--out", s(&out)]);
    assert!(r.status.success());
    let check = xagdepth(&["check-equiv", s(&and_or), s(&out)]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(stdout(&check), "equivalent\texhaustive\t32\n");
    let stats = row(&xagdepth(&["stats", s(&out)]));
    assert_eq!(stats[4], "2");

    // Several inputs write one file per input into a directory.
    let chain = dir.path().join("chain.aag");
    std::fs::write(&chain, CHAIN_AAG).unwrap();
    let outdir = dir.path().join("many");
    let r = xagdepth(&["balance", s(&and_or), s(&chain), "--out", s(&outdir), "--no-verify"]);
    assert!(r.status.success());
    assert!(outdir.join("maj5_and_or.xag").exists() && outdir.join("chain.xag").exists());
}

#[test]
fn map_rows() {
    let dir = TempDir::new().unwrap();
    let maj5 = save(&dir, "maj5.xag", &samples::maj5_depth2());
    let xor = save(&dir, "xor.xag", &samples::parity(3));
    let out = xagdepth(&["map", s(&maj5)]);
    assert_eq!(
        stdout(&out),
        "name\tT-count\tT-depth\tqubits\tschedule\nmaj5\t12\t2\t11\tasap\n"
    );
    let alap = row(&xagdepth(&["map", s(&maj5), "--schedule", "alap", "--report-copies"]));
    assert_eq!(alap[2], "2");
    assert_eq!(alap[4], "alap");
    assert_eq!(alap[5], "0");
    let r = row(&xagdepth(&["map", s(&xor)]));
    assert_eq!((r[1].as_str(), r[2].as_str()), ("0", "0"));
}

#[test]
fn map_writes_circuit() {
    let dir = TempDir::new().unwrap();
    let maj5 = save(&dir, "maj5.xag", &samples::maj5_depth2());
    let qc = dir.path().join("maj5.qc");
    assert!(xagdepth(&["map", s(&maj5), "--qc-out", s(&qc)]).status.success());
    let text = std::fs::read_to_string(&qc).unwrap();
    assert!(text.starts_with("qc 11\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("and ")).count(), 3);
}

#[test]
fn map_normalizes_complemented_fanins() {
    let dir = TempDir::new().unwrap();
    let aag = dir.path().join("nand.aag");
    // NAND(x1, x2) feeding NAND(., x3)
    std::fs::write(&aag, "aag 5 3 0 1 2\n2\n4\n6\n11\n8 2 4\n10 9 6\n").unwrap();
    let r = row(&xagdepth(&["map", s(&aag)]));
    assert_eq!((r[1].as_str(), r[2].as_str()), ("8", "2"));
}

#[test]
fn check_equiv_reports_counterexample() {
    let dir = TempDir::new().unwrap();
    let a = samples::maj5_depth2();
    let mut b = a.clone();
    b.set_outputs(vec![!a.outputs()[0]]).unwrap();
    let pa = save(&dir, "a.xag", &a);
    let pb = save(&dir, "b.xag", &b);
    let out = xagdepth(&["check-equiv", s(&pa), s(&pb)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "different\tinputs=00000\ta=0\tb=1\n");
}

#[test]
fn check_equiv_seeded_runs_repeat() {
    let dir = TempDir::new().unwrap();
    let pa = save(&dir, "a.xag", &samples::maj5_and_or());
    let pb = save(&dir, "b.xag", &samples::maj5_depth2());
    let args = [
        "check-equiv",
        s(&pa),
        s(&pb),
        "--exhaustive-max",
        "2",
        "--vectors",
        "300",
        "--seed",
        "9",
    ];
    let first = xagdepth(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), "equivalent\trandom\t300\tseed=9\n");
    assert_eq!(stdout(&xagdepth(&args)), stdout(&first));

    let env = Command::new(env!("CARGO_BIN_EXE_xagdepth"))
        .args(&args[..7])
        .env("XAGDEPTH_SEED", "4")
        .output()
        .unwrap();
    assert_eq!(stdout(&env), "equivalent\trandom\t300\tseed=4\n");
}

#[test]
fn input_errors_exit_with_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.aag");
    std::fs::write(&bad, "aag 1 0 1 0 0\n2 3\n").unwrap();
    let out = xagdepth(&["stats", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let missing = dir.path().join("missing.xag");
    assert_eq!(xagdepth(&["map", s(&missing)]).status.code(), Some(2));

    let pa = save(&dir, "a.xag", &samples::maj5_depth2());
    let pb = save(&dir, "b.xag", &samples::parity(4));
    assert_eq!(xagdepth(&["check-equiv", s(&pa), s(&pb)]).status.code(), Some(2));
    assert_eq!(xagdepth(&["balance"]).status.code(), Some(2));
}

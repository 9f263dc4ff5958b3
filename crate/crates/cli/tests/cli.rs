use std::process::Command;

use serde::de::DeserializeOwned;
use serde::Serialize;
use toricreg::formats::FiltrationFile;
use toricreg::DegreeSet;
use toricreg_cli::{run, GotzmannReport, HilbertReport, LexReport, Outcome, RegularityReport, StanleyReport, VarietyReport};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("toricreg").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

/// Parses `--json` output into `T` and checks that re-serializing gives the same text.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let text = ok(args);
    let value: T = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    assert_eq!(serde_json::to_string(&value).unwrap() + "\n", text, "{args:?}");
    value
}

#[test]
fn enumerate_reports_thirty_ideals() {
    let out = ok(&["enumerate", "--variety", "P(2)", "--poly", "3*t+1"]);
    assert!(out.ends_with("count=30 gotzmann=4\n"));
    assert!(out.contains("<x1^4, x1^3*x2>"));
    let files: Vec<FiltrationFile> = round_trip(&["enumerate", "--variety", "P(2)", "--poly", "3*t+1", "--json"]);
    assert_eq!(files.len(), 30);
    assert!(files.iter().all(|f| f.pairs.len() == 4));
    assert_eq!(cli(&["enumerate", "--variety", "P(2)", "--poly", "3*t+1", "--json"]).stderr, "count=30 gotzmann=4\n");
}

#[test]
fn hirzebruch_ring_polynomial() {
    assert_eq!(ok(&["hilbert", "--variety", "Hirzebruch(2)", "--ring"]), "t1*t2 + t2^2 + t1 + 2*t2 + 1\n");
    let h: HilbertReport = round_trip(&["hilbert", "--variety", "P(2)", "--ideal", "x1^4, x1^3*x2", "--at", "5", "--json"]);
    assert_eq!(h.polynomial, "3*t + 1");
    assert_eq!(h.value, Some(16));
    assert_eq!(ok(&["hilbert", "--variety", "P(3)", "--face", "1,2"]), "t + 1\n");
}

#[test]
fn stanley_on_the_line() {
    assert_eq!(ok(&["stanley", "--variety", "P(1)", "--ideal", "x1"]), "(1, {2})\n");
    let ideal = "x1^2*x2, x1*x2*x3, x2^2*x3, x1^2*x4, x1*x2*x4, x2^2*x4";
    let s: StanleyReport = round_trip(&["stanley", "--vars", "4", "--ideal", ideal, "--choices", "1,2,2,1,2", "--json"]);
    assert_eq!(s.choices, vec![1, 2, 2, 1, 2]);
    assert_eq!(s.filtration.pairs.len(), 6);
    assert!(s.verified);
    let nice: StanleyReport = round_trip(&["stanley", "--variety", "P(2)", "--ideal", "x1^4, x1^3*x2", "--nice", "--json"]);
    assert!(nice.verified);
}

#[test]
fn regularity_bounds() {
    let out = ok(&["regularity", "--variety", "P(3)", "--ideal", "x1*x4^2, x2*x4^2, x3*x4^2"]);
    assert!(out.contains("{(2)} + K"));
    assert!(out.contains("assumed baselines: default-K"));
    let r: RegularityReport = round_trip(&["regularity", "--variety", "PxP(2,1)", "--poly", "3*t1+1", "--json"]);
    assert_eq!(r.bound.generators, vec![vec![3, 3]]);
    assert_eq!(r.gotzmann_number, Some(4));
    let custom = r#"{"default_nef": true, "baselines": []}"#;
    let out = ok(&["regularity", "--variety", "P(2)", "--poly", "2", "--assume-baseline", custom]);
    assert!(out.contains("{(1)} + K"));
}

#[test]
fn gotzmann_and_lex() {
    let out = ok(&["gotzmann", "--poly", "3*t+1", "--vars", "3"]);
    assert!(out.starts_with("m = 4\nq = (1,1,1,0)\n"));
    assert!(out.contains("lex ideal = <x1^4, x1^3*x2>"));
    let g: GotzmannReport = round_trip(&["gotzmann", "--poly", "2*t1+t2+1", "--variety", "PxP(2,1)", "--json"]);
    assert_eq!(g.multigraded, Some(3));
    assert!(g.upper_bound.unwrap() >= 3);
    let l: LexReport = round_trip(&["lex", "--poly", "3*t+1", "--vars", "3", "--json"]);
    assert_eq!((l.l, l.b.clone()), (2, vec![3, 1]));
    assert_eq!(l.filtration.generators, vec![vec![4, 0, 0], vec![3, 1, 0]]);
}

#[test]
fn degree_sets() {
    let out = ok(&["degset", "--variety", "P(2)", "--poly", "t+1"]);
    assert!(out.contains("D = {0, 1, 3}\n"));
    assert!(out.contains("check: passed"));
    let ds: DegreeSet = round_trip(&["degset", "--variety", "P(1)", "--poly", "2", "--seed", "7", "--json"]);
    assert_eq!(ds.seed, 7);
    assert!(ds.check.passed());
}

#[test]
fn variety_json() {
    let v: VarietyReport = round_trip(&["variety", "--variety", "Hirzebruch(2)", "--json"]);
    assert_eq!(v.file.grading, Some(vec![vec![1, -2, 1, 0], vec![0, 1, 0, 1]]));
    assert_eq!(v.c, vec![1, 1]);
    let inline = serde_json::to_string(&v.file).unwrap();
    let again: VarietyReport = round_trip(&["variety", "--variety", &inline, "--json"]);
    assert_eq!(again, v);
}

#[test]
fn exit_codes() {
    let e = cli(&["lex", "--poly", "t^2+1", "--vars", "3"]);
    assert_eq!(e.code, 1);
    assert!(e.stderr.starts_with("error: NotAHilbertPolynomial"));
    let e = cli(&["enumerate", "--variety", "PxP(2,1)", "--poly", "t+1"]);
    assert_eq!(e.code, 2);
    assert!(e.stderr.starts_with("error: Parse"));
    assert_eq!(cli(&["regularity", "--variety", "PxP(2,1)", "--poly", "3*t2+1"]).code, 1);
    assert_eq!(cli(&["hilbert", "--variety", "P(x)", "--ring"]).code, 2);
    assert_eq!(cli(&["hilbert", "--variety", "{not json", "--ring"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["stanley", "--vars", "2", "--ideal", "x3"]).code, 2);
    let bad_fan = r#"{"rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[1,2],[2,3]]}"#;
    let e = cli(&["variety", "--variety", bad_fan]);
    assert_eq!(e.code, 1, "{}", e.stderr);
    assert!(e.stderr.starts_with("error: NotComplete"));
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn binary_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_toricreg");
    let args = ["degset", "--variety", "P(2)", "--poly", "2", "--seed", "5", "--json"];
    let a = Command::new(exe).args(args).output().unwrap();
    let b = Command::new(exe).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let e = Command::new(exe).args(["lex", "--poly", "2*t+2", "--vars", "2"]).output().unwrap();
    assert_eq!(e.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&e.stderr).contains("NotRealizable"));
    let e = Command::new(exe).args(["lex", "--poly", "2*t+", "--vars", "3"]).output().unwrap();
    assert_eq!(e.status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("toricreg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ideal = dir.join("ideal.json");
    std::fs::write(&ideal, r#"{"generators": [[4,0,0],[3,1,0]]}"#).unwrap();
    let out = Command::new(exe).args(["hilbert", "--variety", "P(2)", "--ideal"]).arg(&ideal).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "3*t + 1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

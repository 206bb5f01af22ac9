use std::io::Write;
use std::process::{Command, Output};

use monge_cli::commands::{exit_status, Payload};
use monge_cli::report::Report;
use monge_core::tables::TableCheck;
use monge_core::Error;

fn monge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monge")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Report {
    let out = monge(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid report")
}

#[test]
fn c3_has_two_monge_gradings() {
    let r = report(&["monge", "--family", "C", "--rank", "3", "--enumerate"]);
    let Payload::MongeList { algebras } = r.result else { panic!("wrong payload") };
    assert_eq!(algebras.len(), 1);
    let sigmas: Vec<Vec<usize>> = algebras[0].gradings.iter().map(|g| g.sigma.clone()).collect();
    assert_eq!(sigmas, vec![vec![1, 2, 3], vec![2, 3]]);
}

#[test]
fn g2_sigma1_weight_four() {
    let r = report(&["cohomology", "--family", "G", "--rank", "2", "--sigma", "1", "--weights"]);
    let Payload::Cohomology(c) = r.result else { panic!("wrong payload") };
    assert_eq!(c.classes.len(), 1);
    assert_eq!(c.classes[0].sigma, "σ12");
    assert_eq!(c.classes[0].homogeneity_weight, 4);
    assert!(c.classes[0].highest_weight.is_none());
}

#[test]
fn va_symmetries_fourteen() {
    let r = report(&["sym", "--case", "Va"]);
    let Payload::Sym(s) = r.result else { panic!("wrong payload") };
    assert_eq!(s.dim, 14);
    assert!(s.point_symmetries);
}

#[test]
fn reproduce_tables_all_pass() {
    let r = report(&["reproduce-tables"]);
    let Payload::Tables { tables } = r.result else { panic!("wrong payload") };
    assert_eq!(tables.len(), 7);
    assert!(tables.iter().all(|t| t.passed));
}

#[test]
fn same_request_same_bytes() {
    for args in [
        &["monge", "--family", "B", "--rank-min", "2", "--rank-max", "5", "--enumerate"][..],
        &["cohomology", "--family", "C", "--rank", "3", "--sigma", "1,2,3", "--q", "2"],
        &["realize", "--case", "IIIc", "--rank", "3", "--format", "markdown"],
        &["sym", "--case", "Ia", "--rank", "3", "--format", "text"],
    ] {
        let a = monge(args);
        let b = monge(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    for args in [
        &["roots", "--family", "E", "--rank", "6"][..],
        &["grade", "--family", "B", "--rank", "3", "--sigma", "2,3"],
        &["monge", "--family", "D", "--rank", "5", "--sigma", "3,4,5"],
        &["cohomology", "--family", "A", "--rank", "2", "--sigma", "1,2"],
        &["realize", "--case", "Va"],
        &["mc", "--case", "IIIc", "--rank", "3"],
        &["sym", "--case", "IIIb", "--bound", "2"],
    ] {
        let out = monge(args);
        let text = String::from_utf8(out.stdout).unwrap();
        let r: Report = serde_json::from_str(&text).expect("parses");
        assert_eq!(r.render(r.request.format), text, "{args:?}");
    }
}

#[test]
fn config_file_under_flags() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# batch job\nfamily = A\nrank_min = 2\nrank_max = 4\nenumerate = yes").unwrap();
    let path = f.path().to_str().unwrap();
    let r = report(&["monge", "--config", path]);
    let Payload::MongeList { algebras } = &r.result else { panic!("wrong payload") };
    assert_eq!(algebras.iter().map(|a| a.algebra.as_str()).collect::<Vec<_>>(), ["A2", "A3", "A4"]);
    let r = report(&["monge", "--config", path, "--family", "C", "--rank-min", "3"]);
    let Payload::MongeList { algebras } = &r.result else { panic!("wrong payload") };
    assert_eq!(algebras.iter().map(|a| a.algebra.as_str()).collect::<Vec<_>>(), ["C3", "C4"]);
}

#[test]
fn bad_config_key_exits_one() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "colour = red").unwrap();
    let out = monge(&["roots", "--family", "A", "--rank", "3", "--config", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["frobnicate"][..],
        &[],
        &["grade", "--family", "B", "--rank", "3"],
        &["roots", "--family", "Q", "--rank", "3"],
        &["roots", "--family", "G", "--rank", "3"],
        &["grade", "--family", "A", "--rank", "3", "--sigma", "4"],
        &["sym", "--case", "Vz"],
        &["realize", "--case", "Va", "--rank", "3"],
    ] {
        let out = monge(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(monge(&["--help"]).status.code(), Some(0));
    assert_eq!(monge(&["--version"]).status.code(), Some(0));
}

#[test]
fn exit_status_mapping() {
    let ok = TableCheck { name: "w2_a".into(), passed: true, diff: vec![] };
    let bad = TableCheck { name: "w2_c".into(), passed: false, diff: vec!["-x".into(), "+y".into()] };
    assert_eq!(exit_status(&Ok(Payload::Tables { tables: vec![ok.clone()] })), 0);
    assert_eq!(exit_status(&Ok(Payload::Tables { tables: vec![ok, bad] })), 2);
    assert_eq!(exit_status(&Err(Error::Invalid("x".into()))), 1);
    assert_eq!(exit_status(&Err(Error::Internal("x".into()))), 2);
}

#[test]
fn markdown_and_text() {
    let md = String::from_utf8(monge(&["sym", "--case", "Va", "--format", "markdown"]).stdout).unwrap();
    assert!(md.starts_with("# monge sym\n"));
    assert!(md.contains("- **dim**: 14"));
    let txt = String::from_utf8(monge(&["grade", "--family", "G", "--rank", "2", "--sigma", "1", "--format", "text"]).stdout).unwrap();
    assert!(txt.contains("depth: 3"));
    assert!(txt.contains("case: Va (ℓ=2)"));
}

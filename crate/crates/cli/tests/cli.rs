use std::process::Command;

use serde_json::Value;
use spinor_cli::{run, Outcome};

fn spinors(args: &[&str]) -> Outcome {
    run(std::iter::once("spinors").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = spinors(&full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn evaluates_expressions() {
    let out = spinors(&["mv", "eval", "--sig", "2,0", "e1 * e1"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "1\n"));
    assert_eq!(spinors(&["mv", "eval", "--sig", "2,0", "e2 * e1"]).stdout, "-e12\n");
    assert_eq!(spinors(&["mv", "grade", "2", "1 + 2e1 + 3e12"]).stdout, "3e12\n");
    assert_eq!(spinors(&["mv", "rev", "1 + e1 + e12 + e123"]).stdout, "1 + e1 - e12 - e123\n");
    assert_eq!(spinors(&["mv", "inv", "1 + e1 + e12 + e123"]).stdout, "1 - e1 + e12 - e123\n");
    assert_eq!(spinors(&["mv", "conj", "1 + e1 + e12 + e123"]).stdout, "1 - e1 - e12 + e123\n");
    assert_eq!(spinors(&["mv", "exp", "--sig", "2,0", "0e12"]).stdout, "1\n");
    assert_eq!(spinors(&["mv", "exp", "--minus", "--sig", "2,0", "0e12"]).stdout, "-1\n");
    let v = json(&["mv", "eval", "--sig", "2,0", "1 + 2e12"]);
    assert_eq!(v["coeffs"], serde_json::json!([1.0, 0.0, 0.0, 2.0]));
    assert_eq!(v["sig"], "Cl(2,0)");
}

#[test]
fn exit_codes() {
    assert_eq!(spinors(&["mv", "eval", "e1 +"]).code, 2);
    assert_eq!(spinors(&["mv", "eval", "e7"]).code, 2);
    assert_eq!(spinors(&["frobnicate"]).code, 2);
    assert_eq!(spinors(&[]).code, 2);
    assert_eq!(spinors(&["mv", "grade", "9", "e1"]).code, 1);
    assert_eq!(spinors(&["spin", "rotate", "1 + e1", "e2"]).code, 1);
    assert_eq!(spinors(&["pauli", "observables", "--axis", "2e3", "1"]).code, 1);
    assert_eq!(spinors(&["rep", "lookup", "--sig", "5,5"]).code, 1);
    assert_eq!(spinors(&["mv", "eval", "--eps", "-1", "1"]).code, 2);
    let help = spinors(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("dirac"));
}

#[test]
fn spin_commands() {
    assert!(spinors(&["spin", "check", "e12"]).stdout.starts_with("spin "));
    assert!(spinors(&["spin", "check", "1"]).stdout.starts_with("spin_plus"));
    assert!(spinors(&["spin", "check", "--sig", "3,0", "e1"]).stdout.starts_with("pin"));
    assert_eq!(json(&["spin", "check", "1 + e1"])["tag"], "not_versor");
    assert_eq!(spinors(&["spin", "rotate", "--sig", "3,0", "e12", "e1"]).stdout, "-e1\n");
}

#[test]
fn pauli_commands() {
    let v = json(&["pauli", "observables", "1 + e12"]);
    assert_eq!(v["rho"], 2.0);
    assert_eq!(v["spin"], serde_json::json!([0.0, 0.0, 2.0]));
    assert_eq!(spinors(&["pauli", "reconstruct", "--rho", "1", "--spin", "e3"]).stdout, "1\n");
    assert_eq!(spinors(&["pauli", "reconstruct", "--rho", "1", "--spin", "-e3"]).code, 1);
}

#[test]
fn dirac_commands() {
    let v = json(&["dirac", "bilinears", "1"]);
    assert_eq!(v["rho"], 1.0);
    assert_eq!(v["J"], serde_json::json!([1.0, 0.0, 0.0, 0.0]));
    assert_eq!(v["K"], serde_json::json!([0.0, 0.0, 0.0, 1.0]));
    assert_eq!(v["S"].as_array().unwrap().len(), 6);

    let psi = "0.3 - 1.2e12 + 0.8e13 + 0.1e14 - 0.4e23 + 2e24 + 0.6e34 - 0.9e1234";
    let f = json(&["dirac", "fierz", psi]);
    assert!(f["max"].as_f64().unwrap() < 1e-9);
    assert_eq!(f["residuals"].as_object().unwrap().len(), 9);

    assert_eq!(json(&["dirac", "classify", "1"])["class"], "dirac");
    let weyl = json(&["dirac", "classify", "0.5 + 0.5e41"]);
    assert_eq!(weyl["class"], "weyl");
    assert_eq!(weyl["h"], 1.0);
    assert_eq!(json(&["dirac", "classify", "0.5 + 0.5e31"])["class"], "flag_pole");

    let out = spinors(&["dirac", "reconstruct", "--rho", "1", "--j", "e1", "--s", "-e23", "--k", "e4"]);
    assert_eq!(out.stdout, "1\n");
    assert_eq!(spinors(&["dirac", "bilinears", "e1"]).code, 1);
}

#[test]
fn two_spinor_commands() {
    let t = json(&["tetrad"]);
    assert_eq!(
        t["metric"],
        serde_json::json!([[0.0, 1.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, -1.0], [0.0, 0.0, -1.0, 0.0]])
    );
    assert!(json(&["twospinor", "tetrad", "--e", "e31"])["metric_residual"].as_f64().unwrap() < 1e-12);

    let split = json(&["twospinor", "split", "1"]);
    assert_eq!(split["eta"]["value"], "0.5 - 0.5e14");
    assert_eq!(split["eta"]["components"], serde_json::json!([[1.0, 0.0], [0.0, 0.0]]));

    let flag = json(&["twospinor", "flag", "--eta", "1,0,0,0", "--chi", "0,0,1,0"]);
    assert_eq!(flag["bracket"], serde_json::json!([1.0, 0.0]));
    assert_eq!(spinors(&["twospinor", "flag", "--eta", "1,0,0,0", "--chi", "2,0,0,0"]).code, 1);
    assert_eq!(spinors(&["twospinor", "flag", "--eta", "1,0", "--chi", "2,0,0,0"]).code, 2);

    let c = json(&["twospinor", "classify", "0.5 + 0.5e31"]);
    assert_eq!(c["charge_conjugation"], 1.0);
    assert_eq!(spinors(&["tetrad", "--e", "e23"]).code, 1);
}

#[test]
fn representation_commands() {
    assert_eq!(spinors(&["rep", "lookup", "--sig", "1,3"]).stdout, "H(2)\n");
    assert_eq!(spinors(&["rep", "lookup", "--sig", "3,1"]).stdout, "R(4)\n");
    assert_eq!(spinors(&["rep", "lookup", "--sig", "0,3"]).stdout, "2H\n");
    for sig in ["2,0", "0,2", "3,0", "1,3"] {
        let v = json(&["rep", "verify", "--sig", sig]);
        assert_eq!(v["max_relation"], 0.0);
        assert_eq!(v["max_product"], 0.0);
        assert_eq!(v["injective"], true);
    }
    assert_eq!(spinors(&["rep", "verify", "--sig", "4,1"]).code, 1);
}

#[test]
fn wick_commands() {
    assert_eq!(spinors(&["wick", "e1"]).stdout, "e1\n");
    assert_eq!(spinors(&["wick", "2e2 - e4"]).stdout, "2e2 - e4\n");
    assert_eq!(json(&["wick", "bridge"])["mismatches"], 0);
    assert_eq!(spinors(&["wick", "e12"]).code, 1);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_spinors");
    let ok = Command::new(bin).args(["rep", "lookup", "--sig", "1,3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "H(2)\n");
    let bad = Command::new(bin).args(["mv", "eval", "(e1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("byte"));
    let domain = Command::new(bin).args(["wick", "e12"]).output().unwrap();
    assert_eq!(domain.status.code(), Some(1));
}

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_preradical")).args(args).env_remove("PRERADICAL_LIMITS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--quiver", &fixture("a2.json")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("8 preradicals"), "{out}");
    for table in ["[0,0,0]", "[S₂,P,S₁]", "[0,S₁,S₁]", "[S₂,S₁,S₁]", "[0,S₁,0]", "[S₂,0,0]", "[S₂,P,0]", "[S₂,S₁,0]"] {
        assert!(out.contains(table), "{table} missing");
    }
    assert!(stdout(&run(&["enumerate", "--quiver", &fixture("a1.json")])).starts_with("2 preradicals"));
    let count = |p: &str| {
        let o = run(&["enumerate", "--quiver", &fixture("a3.json"), "--field", p, "--format", "json"]);
        serde_json::from_str::<Value>(&stdout(&o)).unwrap()["count"].as_u64().unwrap()
    };
    assert_eq!(count("2"), count("3"));
}

#[test]
fn lattice_outputs() {
    let o = run(&["lattice", "--quiver", &fixture("a2.json"), "--format", "dot"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("a2.dot")).unwrap());

    let json: Value = serde_json::from_str(&stdout(&run(&["lattice", "--format", "json"]))).unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 8);
    assert_eq!(json["covers"].as_array().unwrap().len(), 10);
    assert_eq!(json["idempotent"].as_array().unwrap().len(), 6);
    assert_eq!(json["radical"].as_array().unwrap().len(), 6);

    let idem: Value = serde_json::from_str(&stdout(&run(&["lattice", "--format", "json", "--only", "idempotent"]))).unwrap();
    assert_eq!(idem["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(idem["covers"].as_array().unwrap().len(), 7);
}

#[test]
fn operations() {
    let first_line = |args: &[&str]| {
        let o = run(args);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        stdout(&o).lines().next().unwrap().to_string()
    };
    assert_eq!(first_line(&["op", "product", "rho1", "rho1", "--quiver", &fixture("a2.json")]), "[0,0,0]");
    assert_eq!(first_line(&["op", "alpha", "--identity", "S1"]), "[0,S₁,S₁]");
    assert_eq!(first_line(&["op", "omega", "--identity", "S2"]), "[0,S₁,S₁]");
    assert_eq!(first_line(&["op", "join", "rho1", "gamma0"]), "[S₂,S₁,0]");
    assert_eq!(first_line(&["op", "coproduct", "gamma0", "gamma0"]), "[S₂,0,0]");
    let delta = stdout(&run(&["op", "delta", "xi"]));
    assert!(delta.contains("opposite, A2[1→0]"), "{delta}");
    let flagged = stdout(&run(&["op", "meet", "[S₂,S₁,S₁]", "gamma1"]));
    assert!(flagged.contains("idempotent: no") && flagged.contains("radical: no"), "{flagged}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["op", "product", "nonsense", "rho1"])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["enumerate", "--field", "4"])), 1);
    assert_eq!(code(&run(&["enumerate", "--quiver", "/no/such/file.json"])), 1);
    assert_eq!(code(&run(&["verify", "everything"])), 1);
    assert_eq!(code(&run(&["galois", "--adjunction", "lan-res:0,2", "--quiver", &fixture("a3.json")])), 1);
    assert_eq!(code(&run(&["enumerate", "--limits", &fixture("limits_tight.json")])), 2);
    let env = Command::new(env!("CARGO_BIN_EXE_preradical"))
        .args(["enumerate"])
        .env("PRERADICAL_LIMITS", r#"{"preradical_product": 2}"#)
        .output()
        .unwrap();
    assert_eq!(code(&env), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn galois_reports() {
    let o = run(&["galois", "--quiver", &fixture("a2.json"), "--adjunction", "lan-res:1"]);
    assert_eq!(code(&o), 0);
    assert!(!stdout(&o).contains("FAIL"));
    let id = stdout(&run(&["galois", "--adjunction", "iso:identity"]));
    assert!(id.contains("φ = ψ⁻¹"), "{id}");
    let op = run(&["galois", "--opposite"]);
    assert_eq!(code(&op), 0);
    assert!(stdout(&op).contains("PASS  Δ∘φ = ψ̄∘Δ"));
    let json: Value = serde_json::from_str(&stdout(&run(&["galois", "--format", "json"]))).unwrap();
    assert_eq!(json["passed"], Value::Bool(true));
    assert_eq!(json["source"]["size"], 2);
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "delta", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let json: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["passed"], Value::Bool(true));
    assert_eq!(json["quivers"].as_array().unwrap().len(), 2);

    let o = run(&["verify", "joins", "--quiver", &fixture("a3.json")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for check in ["closure under binary join and meet", "joins of idempotents are idempotent", "meets of radicals are radical"] {
        assert!(out.contains(&format!("joins: {check}")), "{check}");
    }
    assert!(out.lines().last().unwrap().contains("result=pass"));
}

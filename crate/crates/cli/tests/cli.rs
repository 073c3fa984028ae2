use std::process::{Command, Output};

fn qrd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrd"))
        .args(args)
        .env_remove("QRD_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_reports_dimensions() {
    let o = qrd(&["construct", "--r", "2", "--p", "13"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["d1"]["k"], 7);
    assert_eq!(v["e1"]["n"], 14);
    assert_eq!(v["e1"]["labels"][13], "inf");

    let o = qrd(&["construct", "--r", "3", "--p", "5", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("code,n,k\n"));
    assert!(text.contains("E1,6,3\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(qrd(&["construct", "--r", "2", "--p", "2"]).status.code(), Some(2));
    assert_eq!(qrd(&["construct", "--r", "4", "--p", "7"]).status.code(), Some(2));
    assert_eq!(qrd(&["verify-theorem", "--r", "2", "--p", "29"]).status.code(), Some(3));
    assert_eq!(
        qrd(&["verify-theorem", "--r", "2", "--p", "29", "--budget", "2^28"]).status.code(),
        Some(3)
    );
    let o = qrd(&["verify-theorem", "--r", "2", "--p", "17"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"inapplicable\""));
    assert_eq!(qrd(&["intersect", "--q", "12", "--p", "7"]).status.code(), Some(2));
    assert_eq!(qrd(&["search", "--r", "6", "--pmax", "100"]).status.code(), Some(2));
    // clap usage errors
    assert_eq!(qrd(&["am", "--n", "10"]).status.code(), Some(2));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qrd"))
        .args(["verify-theorem", "--r", "3", "--p", "5"])
        .env("QRD_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_qrd"))
        .args(["verify-theorem", "--r", "3", "--p", "5"])
        .env("QRD_BUDGET", "3^6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify-theorem", "--r", "2", "--p", "13"][..],
        &["survey", "--q", "3", "--p", "13"],
        &["intersect", "--r", "2", "--p", "17"],
    ] {
        let a = qrd(args);
        let b = qrd(args);
        let mut seq = args.to_vec();
        seq.extend(["--workers", "1"]);
        let c = qrd(&seq);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stdout, c.stdout);
    }
}

#[test]
fn output_file_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let o = qrd(&[
        "verify-theorem",
        "--r",
        "3",
        "--p",
        "5",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().next(), Some("weight,count,lambda3,lambda2,lambda1,is_design"));
    assert!(csv.contains("4,120,24,48,80,true"));
}

#[test]
fn am_from_distribution_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hamming.txt");
    std::fs::write(&path, "# extended Hamming\n0 1\n4 14\n8 1\n").unwrap();
    let o = qrd(&["am", "--n", "8", "--q", "2", "--t", "3", "--dual-dist", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["applicable"], true);
    assert_eq!(v["design_weights_primal"], serde_json::json!([4, 8]));

    std::fs::write(&path, "0 1\n4 13\n").unwrap();
    let o = qrd(&["am", "--n", "8", "--q", "2", "--dual-dist", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = qrd(&["am", "--n", "38", "--q", "4", "--t", "3", "--dual-weights", "12..38:even", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "inapplicable, s=12 > 9");
}

#[test]
fn duality_and_search() {
    let o = qrd(&["duality", "--r", "3", "--p", "5", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("CONFIRMED: part (2)"));
    let o = qrd(&["search", "--r", "5", "--pmax", "40", "--format", "csv"]);
    assert_eq!(stdout(&o), "p\n13\n17\n37\n");
}

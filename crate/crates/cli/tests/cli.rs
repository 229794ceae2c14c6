use std::process::{Command, Output};

fn fd2p(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fd2p")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_p3_passes() {
    let o = fd2p(&["verify", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["params"]["p"], 3);
    assert_eq!(report["summary"]["fail"], 0);
    assert!(report["summary"]["pass"].as_u64().unwrap() >= 20);
    for r in report["records"].as_array().unwrap() {
        assert!(r["check_id"].is_string() && r["paper_ref"].is_string());
        assert!(r["elapsed_ms"].is_number());
    }
}

#[test]
fn verify_writes_report_file() {
    let dir = std::env::temp_dir().join(format!("fd2p-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = fd2p(&["verify", "--p", "5", "--n", "2", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("verify p=5 n=2:"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let skipped = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "skipped")
        .collect::<Vec<_>>();
    assert!(!skipped.is_empty());
    assert!(skipped.iter().all(|r| r["reason"].is_string()));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn config_errors_exit_2() {
    for p in ["4", "2"] {
        let o = fd2p(&["verify", "--p", p]);
        assert_eq!(o.status.code(), Some(2));
        assert!(stderr(&o).contains("characteristic p > 2"), "{}", stderr(&o));
    }
    let o = fd2p(&["verify", "--p", "5", "--n", "2", "--poly", "1,0,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fd2p(&["basis", "--p", "5", "--family", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown family"));
}

#[test]
fn basis_listings() {
    let o = fd2p(&["basis", "--p", "3", "--family", "unitary"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 1);
    let coeffs: Vec<Vec<u32>> = serde_json::from_str(lines[0].split('\t').next().unwrap()).unwrap();
    assert_eq!(coeffs, vec![vec![0], vec![1], vec![0], vec![0], vec![0], vec![0]]);

    let count = |p: &str, family: &str| {
        let o = fd2p(&["basis", "--p", p, "--family", family]);
        assert_eq!(o.status.code(), Some(0));
        stdout(&o).lines().count()
    };
    assert_eq!(count("3", "center"), 2);
    assert_eq!(count("5", "gamma"), 8);
    assert_eq!(count("7", "symmetric"), 3);
}

#[test]
fn factorize_round_trips() {
    let o = fd2p(&["factorize", "--p", "5", "--count", "100", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "100/100 exact");
    let o = fd2p(&["factorize", "--p", "3", "--exhaustive"]);
    assert_eq!(stdout(&o).trim(), "81/81 exact");
    let o = fd2p(&["factorize", "--p", "7", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0/0 exact");
    let o = fd2p(&["factorize", "--p", "7", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(2));
}

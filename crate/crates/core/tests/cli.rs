use std::path::Path;
use std::process::{Command, Output};

fn defset(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defset")).args(args).current_dir(dir).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = defset(
        &[
            "construct",
            "--family",
            "t1",
            "--k",
            "5",
            "--t",
            "0",
            "--out",
            "h.json",
            "--defining",
            "s.json",
            "--trace",
            "t.json",
            "--dot",
            "h.dot",
        ],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n=14 r=8 k=5 |S|=4\n");
    for f in ["h.json", "s.json", "t.json", "h.dot"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let g = defset::io::read_graph(&dir.path().join("h.json")).unwrap();
    assert_eq!(g.n(), 14);

    let o = defset(&["verify-defining", "--graph", "h.json", "--coloring", "s.json"], dir.path());
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "UNIQUE chi=5 |S|=4\n".to_string()));
    let o = defset(&["chi", "--graph", "h.json"], dir.path());
    assert_eq!(stdout(&o), "chi=5\n");
}

#[test]
fn construct_infeasible() {
    let dir = tempfile::tempdir().unwrap();
    let o = defset(&["construct", "--family", "t1", "--k", "5", "--t", "3", "--out", "x.json"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("TEqualsKMinus2"));
    assert!(!dir.path().join("x.json").exists());
    let o = defset(&["construct", "--family", "t4", "--k", "6", "--s", "3", "--t", "1", "--out", "x.json"], dir.path());
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn theorem2_graph6_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let o = defset(
        &["construct", "--family", "t2", "--k", "7", "--s", "1", "--out", "g.g6", "--defining", "s.json"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let o = defset(&["verify-defining", "--graph", "g.g6", "--coloring", "s.json", "--chi", "7"], dir.path());
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn octahedron_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let o = defset(&["construct", "--family", "glk", "--k", "3", "--l", "2", "--out", "oct.json"], dir.path());
    assert_eq!(stdout(&o), "n=6 r=4 k=3 |S|=2\n");
    std::fs::write(dir.path().join("one.json"), r#"{"k":3,"colors":{"u1":1}}"#).unwrap();
    std::fs::write(dir.path().join("none.json"), r#"{"k":3,"colors":{}}"#).unwrap();
    std::fs::write(dir.path().join("bad.json"), r#"{"k":3,"colors":{"u1":1,"u2":1}}"#).unwrap();
    let o = defset(&["verify-defining", "--graph", "oct.json", "--coloring", "one.json"], dir.path());
    assert_eq!((o.status.code(), stdout(&o)), (Some(1), "MULTIPLE chi=3 |S|=1\n".to_string()));
    let o = defset(&["verify-defining", "--graph", "oct.json", "--coloring", "none.json", "--chi", "3"], dir.path());
    assert!(stdout(&o).starts_with("MULTIPLE"));
    let o = defset(&["verify-defining", "--graph", "oct.json", "--coloring", "bad.json"], dir.path());
    assert_eq!((o.status.code(), stdout(&o)), (Some(1), "NONE chi=3 |S|=2\n".to_string()));
    let o = defset(&["defining-number", "--graph", "oct.json", "--witness", "w.json"], dir.path());
    assert!(stdout(&o).starts_with("d=2 chi=3 "));
    let o = defset(&["verify-defining", "--graph", "oct.json", "--coloring", "w.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_inputs() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("junk.json"), "{").unwrap();
    assert_eq!(defset(&["chi", "--graph", "junk.json"], dir.path()).status.code(), Some(2));
    assert_eq!(defset(&["chi", "--graph", "missing.json"], dir.path()).status.code(), Some(2));
    assert_eq!(defset(&["construct", "--family", "t9", "--k", "3", "--out", "a"], dir.path()).status.code(), Some(2));
    assert_eq!(defset(&["construct", "--family", "t2", "--k", "5", "--out", "a"], dir.path()).status.code(), Some(2));
    assert_eq!(defset(&["chi", "--graph", "x", "--node-limit", "0"], dir.path()).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    defset(&["construct", "--family", "t4", "--k", "7", "--s", "4", "--t", "2", "--out", "g.json"], dir.path());
    let o = defset(&["defining-number", "--graph", "g.json", "--node-limit", "1"], dir.path());
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn repro_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = defset(&["repro", "--table", "1"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains(" ok ")).count(), 5);
    let o = defset(&["repro", "--table", "2"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains(" ok ")).count(), 6);
    assert_eq!(defset(&["repro", "--table", "3"], dir.path()).status.code(), Some(2));
}

#[test]
fn feasible_verb() {
    let dir = tempfile::tempdir().unwrap();
    let o = defset(&["feasible", "--n", "14", "--r", "11", "--k", "5"], dir.path());
    assert_eq!((o.status.code(), stdout(&o)), (Some(3), "feasible=false reason=TEqualsKMinus2\n".to_string()));
}

#[test]
fn audit_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = defset(&["audit", "--kmax", "6"], dir.path());
    let b = defset(&["audit", "--kmax", "6"], dir.path());
    assert_eq!(stdout(&a), stdout(&b));
    let small = defset(&["audit", "--kmax", "3"], dir.path());
    assert_eq!(small.status.code(), Some(0));
    assert!(stdout(&small).contains("failed=0"));
    assert_eq!(defset(&["audit", "--kmax", "2"], dir.path()).status.code(), Some(2));
}

#[test]
fn audit_reports_known_failure() {
    let dir = tempfile::tempdir().unwrap();
    let o = defset(&["audit", "--kmax", "6"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL t3(k=4,s=2)"));
    assert!(out.ends_with("first_failure=t3(k=4,s=2)\n"));
}

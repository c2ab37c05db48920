use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn deftree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deftree")).args(args).current_dir(root()).output().unwrap()
}

fn status(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn check_exit_statuses() {
    assert_eq!(status(&deftree(&["check", "corpus/sample_tree.pft"])), 0);
    let bad = deftree(&["check", "mutants/sample_tree_signflip.pft"]);
    assert_eq!(status(&bad), 1);
    assert_eq!(String::from_utf8_lossy(&bad.stderr).lines().count(), 1);
    assert_eq!(status(&deftree(&["check", "nosuch.pft"])), 2);
    assert_eq!(status(&deftree(&["check"])), 2);
    assert_eq!(status(&deftree(&["check", "corpus/sample_tree.pft", "--report", "yaml"])), 2);
}

#[test]
fn machine_report_is_stable_json() {
    let a = deftree(&["check", "mutants/sample_tree_signflip.pft", "--report", "machine"]);
    let b = deftree(&["check", "mutants/sample_tree_signflip.pft", "--report", "machine"]);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["valid"], false);
    let v = doc["violations"].as_array().unwrap();
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["node"], "n9");
    assert_eq!(v[0]["clause"], "branch.not_dual");
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 11);
}

#[test]
fn text_report_marks_contradictions_and_assumptions() {
    let o = deftree(&["check", "corpus/russell_2.pft"]);
    assert_eq!(status(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("a1: y ( y ) = y  [deduction]  contradiction(a0, a1)"));
    assert!(out.contains("assumptions: t\n"));
}

#[test]
fn options_reach_the_checker() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "naming.pft", "root r: a = a ; rule=root\nsucc s of r: xi != a ; rule=elem_add\n");
    assert_eq!(status(&deftree(&["check", &p])), 0);
    assert_eq!(status(&deftree(&["check", &p, "--strict-naming"])), 1);
    assert_eq!(status(&deftree(&["check", "corpus/choice.pft", "--choice-step5", "prose"])), 1);
    assert_eq!(status(&deftree(&["check", "corpus/choice.pft", "--choice-step5", "diagram"])), 0);
}

#[test]
fn render_matches_golden_files() {
    for name in ["sample_tree", "russell_1"] {
        let corpus = format!("corpus/{name}.pft");
        for (fmt, ext) in [("text", "txt"), ("dot", "dot")] {
            let o = deftree(&["render", &corpus, "--format", fmt]);
            assert_eq!(status(&o), 0);
            let golden = std::fs::read_to_string(root().join(format!("crates/cli/tests/golden/{name}.{ext}"))).unwrap();
            assert_eq!(stdout(&o), golden, "{name}.{ext}");
        }
    }
    let dot = stdout(&deftree(&["render", "corpus/russell_2.pft", "--format", "dot"]));
    assert_eq!(dot.matches("peripheries=2").count(), 2);
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.pft", "");
    assert_eq!(status(&deftree(&["render", &empty])), 2);
}

#[test]
fn prove_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = write(dir.path(), "root.pft", "root n0: a = a ; rule=root\n");
    let o = deftree(&["prove", &fresh, "--goal", "[ xi = xi ] xi = xi"]);
    assert_eq!(status(&o), 0);
    let fragment = stdout(&o);
    assert_eq!(fragment.lines().count(), 5);
    let extended = write(dir.path(), "ext.pft", &format!("root n0: a = a ; rule=root\n{fragment}"));
    assert_eq!(status(&deftree(&["check", &extended])), 0);

    let o = deftree(&["prove", "corpus/sample_tree.pft", "--goal", "b = b"]);
    assert_eq!((status(&o), stdout(&o)), (0, String::new()));
    assert_eq!(status(&deftree(&["prove", &fresh, "--goal", "a = "])), 2);
    assert_eq!(status(&deftree(&["prove", &fresh, "--refute", "--max-depth", "3"])), 1);
    assert_eq!(status(&deftree(&["prove", &fresh, "--goal", "a = a", "--max-depth", "0"])), 2);
    assert_eq!(status(&deftree(&["prove", &fresh, "--goal", "a = a", "--rules", "elem_add,nonsense"])), 2);
    assert_eq!(status(&deftree(&["prove", &fresh, "--goal", "a = a", "--from", "zz"])), 2);
    let o = deftree(&["prove", "corpus/russell_2.pft", "--from", "t", "--refute"]);
    assert_eq!(status(&o), 2, "the chain of t ends in pair children");
    let assumed = write(dir.path(), "commuted.pft", "assume t: [ eta = eta ] < xi = xi > eta != xi\n");
    assert_eq!(status(&deftree(&["prove", &assumed, "--refute"])), 0);
}

#[test]
fn fmt_rewrites_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "messy.pft", "root   n0 :a=a;rule=root\n   succ n1 of n0:b!=a ; rule=elem_add\n");
    assert_eq!(status(&deftree(&["fmt", "--check", &p])), 1);
    let before = stdout(&deftree(&["check", &p, "--report", "machine"]));
    assert_eq!(status(&deftree(&["fmt", &p])), 0);
    let once = std::fs::read_to_string(&p).unwrap();
    assert_eq!(once, "root n0: a = a ; rule=root\nsucc n1 of n0: b != a ; rule=elem_add\n");
    assert_eq!(status(&deftree(&["fmt", "--check", &p])), 0);
    assert_eq!(status(&deftree(&["fmt", &p])), 0);
    assert_eq!(std::fs::read_to_string(&p).unwrap(), once);
    let after = stdout(&deftree(&["check", &p, "--report", "machine"]));
    let verdict = |s: &str| serde_json::from_str::<serde_json::Value>(s).unwrap()["valid"].clone();
    assert_eq!(verdict(&before), verdict(&after));
    let broken = write(dir.path(), "broken.pft", "root n0: a = ; rule=root\n");
    assert_eq!(status(&deftree(&["fmt", &broken])), 2);
}

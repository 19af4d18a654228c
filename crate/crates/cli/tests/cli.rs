use std::path::Path;
use std::process::{Command, Output};

fn isoext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoext")).args(args).env("ISOEXT_THREADS", "2").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn body(o: &Output) -> Vec<String> {
    stdout(o).lines().filter(|l| !l.starts_with('#')).map(String::from).collect()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn sphere_chart_contains_h0() {
    let o = isoext(&["chart", "--sphere", "--max-stem", "6", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(body(&o).contains(&"1\t2\t1\t1".to_string()));
    assert!(stdout(&o).starts_with("# isoext chart\n"));
    assert!(stdout(&o).contains("# engine resolution\n"));
}

#[test]
fn engines_give_the_same_tsv_body() {
    let a = isoext(&["chart", "--sphere", "--max-stem", "9"]);
    let b = isoext(&["chart", "--sphere", "--max-stem", "9", "--engine", "cobar"]);
    assert_eq!(body(&a), body(&b));
}

#[test]
fn mbp_has_one_class() {
    let o = isoext(&["chart", "--module", "mbp.cofree", "--max-stem", "6"]);
    assert_eq!(body(&o), vec!["0\t0\t0\t1"]);
}

#[test]
fn empty_bounds_give_header_only() {
    let o = isoext(&["chart", "--sphere", "--max-stem", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(body(&o).is_empty());
}

#[test]
fn weight_window_filters() {
    let o = isoext(&["chart", "--sphere", "--max-stem", "8", "--weight-min", "2", "--weight-max", "2"]);
    assert_eq!(body(&o), vec!["1\t4\t2\t1", "2\t4\t2\t1"]);
}

#[test]
fn failures_leave_no_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("chart.tsv");
    let o = isoext(&["chart", "--module", "mbp.cofree", "--max-stem", "6", "--window", "8", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!out.exists());
    let o = isoext(&["chart", "--sphere", "--max-stem", "4", "--generators", "explicit:0,0,inf", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(!out.exists());
    let o = isoext(&["chart", "--sphere", "--max-stem", "4", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&out).unwrap().contains("1\t2\t1\t1"));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn finite_generator_sets_pass_the_gate() {
    let o = isoext(&["chart", "--sphere", "--max-stem", "4", "--generators", "linear:0,0,2,1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn svg_has_one_dot_per_dimension() {
    let o = isoext(&["chart", "--sphere", "--max-stem", "6", "--format", "svg"]);
    let text = stdout(&o);
    assert!(text.starts_with("<svg"));
    let tsv = isoext(&["chart", "--sphere", "--max-stem", "6"]);
    let dims: usize = body(&tsv).iter().map(|l| l.rsplit('\t').next().unwrap().parse::<usize>().unwrap()).sum();
    assert_eq!(text.matches("<circle").count(), dims);
}

#[test]
fn comodule_files() {
    let dir = tempfile::tempdir().unwrap();
    let vw = write(dir.path(), "vw.txt", "elem v 0 0\nelem w 2 1\n  act 1 -> v\n");
    let o = isoext(&["chart", "--module", &vw, "--max-stem", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(body(&o).contains(&"0\t0\t0\t1".to_string()));

    let o = isoext(&["series", &vw]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(body(&o), vec!["0\t0\t0\tv\t0", "1\t2\t1\tw\tξ₁:v"]);

    let split = write(dir.path(), "split.txt", "elem a 0 0\nelem b 4 2\n");
    assert_eq!(body(&isoext(&["series", &split])), vec!["0\t0\t0\ta\t0", "1\t4\t2\tb\t0"]);

    let empty = write(dir.path(), "empty.txt", "# nothing\n");
    let o = isoext(&["series", &empty]);
    assert_eq!(o.status.code(), Some(0));
    assert!(body(&o).is_empty());

    let broken = write(dir.path(), "broken.txt", "elem v 0 0\nelem w 2 1\n  act 2 -> v\n");
    let o = isoext(&["verify", "--module", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a comodule"));
    let o = isoext(&["verify", "--module", &vw]);
    assert_eq!(o.status.code(), Some(0));
    let garbage = write(dir.path(), "garbage.txt", "elem v zero 0\n");
    assert_eq!(isoext(&["chart", "--module", &garbage, "--max-stem", "2"]).status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let o = isoext(&["verify", "--hopf", "G", "--max-p", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS hopf axioms of G"));
    let o = isoext(&["verify", "--oracle", "--max-stem", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS resolution = cobar"));
    assert_eq!(isoext(&["verify", "--hopf", "AISO"]).status.code(), Some(1));
    assert_eq!(isoext(&["verify", "--hopf", "nope"]).status.code(), Some(2));
}

#[test]
fn checkpoints() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("r.res");
    let c = ckpt.to_str().unwrap();
    let o = isoext(&["chart", "--sphere", "--max-stem", "5", "--checkpoint", c]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&ckpt).unwrap();
    assert!(text.starts_with("ISOEXT-RES 1\nalgebra G\n"));
    // wrong module
    let o = isoext(&["chart", "--module", "mbp.cofree", "--max-stem", "5", "--resume", c]);
    assert_eq!(o.status.code(), Some(1));
    // truncated
    std::fs::write(&ckpt, &text[..text.len() - 8]).unwrap();
    let o = isoext(&["chart", "--sphere", "--max-stem", "5", "--resume", c]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("corrupt checkpoint"));
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run_in(dir: &Path, args: &[&str]) -> Run {
    let o = Command::new(env!("CARGO_BIN_EXE_posetbundle")).args(args).current_dir(dir).output().unwrap();
    Run {
        code: o.status.code().unwrap(),
        out: String::from_utf8(o.stdout).unwrap(),
        err: String::from_utf8(o.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_in(&fixtures(), args)
}

/// Fresh copy of the fixtures directory under the system temp dir.
fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("posetbundle-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    for e in fs::read_dir(fixtures()).unwrap() {
        let e = e.unwrap();
        fs::copy(e.path(), dir.join(e.file_name())).unwrap();
    }
    dir
}

#[test]
fn winding_fixture_is_a_cocycle() {
    let r = run(&["check-cocycle", "circle2.poset", "z3.group", "winding.cochain"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("verdict cocycle: true"));
}

#[test]
fn chain2_has_five_one_simplices() {
    let r = run(&["simplices", "chain2.poset", "--dim", "1"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("count: 5\n"));
    let listed = r.out.split("simplices:\n").nth(1).unwrap().lines().count();
    assert_eq!(listed, 5);
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate", "circle2.poset"]).code, 0);
    let dir = scratch("validate");
    fs::write(dir.join("bad.poset"), "poset bad\nelem x y\nle x y\nle y x\n").unwrap();
    let r = run_in(&dir, &["validate", "bad.poset"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("verdict valid: false"));
    assert_eq!(run_in(&dir, &["validate", "absent.poset"]).code, 2);
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn broken_cocycle_is_a_false_verdict() {
    let dir = scratch("broken");
    let text = fs::read_to_string(dir.join("winding.cochain")).unwrap();
    let broken = text.replace("(o2;a1,a2) = 1", "(o2;a1,a2) = 2");
    assert_ne!(text, broken);
    fs::write(dir.join("winding.cochain"), broken).unwrap();
    let r = run_in(&dir, &["check-cocycle", "circle2.poset", "z3.group", "winding.cochain"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("violated-at:") && r.out.contains("verdict cocycle: false"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_two_and_name_the_flag() {
    let r = run(&["simplices", "chain2.poset", "--dim", "x"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("--dim"));
    let r = run(&["nonflat", "circle2.poset", "s3.group", "--g", "(12)", "--edge", "(o1;a1"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("--edge"), "{}", r.err);
    let r = run(&["nonflat", "circle2.poset", "s3.group", "--g", "(14)"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("--g"));
    assert_eq!(run(&["check-cocycle", "circle2.poset", "s3.group", "winding.cochain"]).code, 2);
}

#[test]
fn limits_are_hard_errors() {
    let r = run(&["--limit", "10", "gauge-group", "theta.poset", "s3.group", "theta_full.cochain", "--raw"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("limit"), "{}", r.err);
}

#[test]
fn reports_are_deterministic_and_json_matches_text() {
    let args = ["holonomy", "circle2.poset", "z3.group", "winding.cochain", "--restricted", "--to", "o1"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);

    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let j = run(&json_args);
    let v: serde_json::Value = serde_json::from_str(&j.out).unwrap();
    assert!(v["inputs"].as_str().unwrap().starts_with("sha256:"));
    assert!(a.out.contains(&format!("inputs: {}\n", v["inputs"].as_str().unwrap())));
    for rec in v["records"].as_array().unwrap() {
        let line = format!("{}: {}\n", rec["key"].as_str().unwrap(), rec["value"].as_str().unwrap());
        assert!(a.out.contains(&line), "{line}");
    }
    for verdict in v["verdicts"].as_array().unwrap() {
        let line = format!("verdict {}: {}\n", verdict["name"].as_str().unwrap(), verdict["value"]);
        assert!(a.out.contains(&line), "{line}");
    }
}

#[test]
fn digest_tracks_input_contents() {
    let dir = scratch("digest");
    let args = ["check-cocycle", "circle2.poset", "z3.group", "winding.cochain"];
    let before = run_in(&dir, &args).out;
    let text = fs::read_to_string(dir.join("winding.cochain")).unwrap();
    fs::write(dir.join("winding.cochain"), format!("# edited\n{text}")).unwrap();
    let after = run_in(&dir, &args).out;
    assert_ne!(before.lines().nth(1), after.lines().nth(1));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn generated_posets_round_trip() {
    let dir = scratch("gen");
    let r = run_in(&dir, &["gen", "circle", "--n", "3", "--out", "c3.poset"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v = run_in(&dir, &["validate", "c3.poset"]);
    assert_eq!(v.code, 0);
    assert!(v.out.contains("elements: 6\n"));
    let p = run_in(&dir, &["pi1", "c3.poset"]);
    assert!(p.out.contains("abelianization: Z\n"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn connection_commands_on_fixtures() {
    let r = run(&["nonflat", "circle2.poset", "s3.group", "--edge", "(o1;a1,a2)", "--g", "(12)"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("curvature-at-witness: (12)"));
    let r = run(&["reduce", "circle2.poset", "z3.group", "winding.cochain"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("verdict morphism-verified: true"));
    let r = run(&["gauge-group", "theta.poset", "s3.group", "theta_full.cochain", "--raw"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("order: 1\n"));
    let r = run(&["gauge-act", "circle2.poset", "z3.group", "winding.cochain", "--transform", "shift.transform"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("verdict same-bundle: true"));
    let r = run(&["path-independent", "circle2.poset", "z3.group", "winding.cochain"]);
    assert_eq!(r.code, 1);
    let r = run(&["homotopic", "circle2.poset", "--p", "winding.path", "--q", "winding.path"]);
    assert_eq!(r.code, 0);
}

#[test]
fn suite_passes_on_fixtures() {
    let r = run(&["suite", "."]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert_eq!(r.out.lines().filter(|l| l.starts_with("verdict ")).count(), 13);
}

#[test]
fn suite_flags_corrupted_group_table() {
    let dir = scratch("corrupt");
    fs::write(dir.join("z3.group"), "group Z3\nelems 0 1 2\ntable\n0: 0 1 2\n1: 1 2 0\n2: 2 1 0\n").unwrap();
    let r = run_in(&dir, &["suite", "."]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("verdict G: false"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn suite_rejects_missing_cochain_entry() {
    let dir = scratch("missing");
    let text = fs::read_to_string(dir.join("winding.cochain")).unwrap();
    let trimmed: String = text.lines().filter(|l| !l.starts_with("(o2;a1,a2)")).map(|l| format!("{l}\n")).collect();
    fs::write(dir.join("winding.cochain"), trimmed).unwrap();
    let r = run_in(&dir, &["suite", "."]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("error"));
    fs::remove_dir_all(dir).unwrap();
}

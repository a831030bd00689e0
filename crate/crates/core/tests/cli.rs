use std::fs;
use std::path::Path;

use linfty::cli::{builtin_document, run};
use linfty::document::AlgebraDocument;
use tempfile::TempDir;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn linfty(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("linfty").chain(args.iter().copied()), &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn builtin_text(name: &str) -> String {
    builtin_document(name).unwrap().serialize()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn every_builtin_is_listed_and_loads() {
    let listed = linfty(&["builtin", "--list"]);
    assert_eq!(listed.code, 0);
    let names: Vec<&str> = listed.stdout.lines().collect();
    assert_eq!(names, linfty::zoo::BUILTIN_NAMES);
    for name in names {
        let shown = linfty(&["builtin", name]);
        assert_eq!(shown.code, 0, "{name}");
        assert_eq!(shown.stdout.trim_end(), builtin_text(name).trim_end());
    }
    assert_eq!(linfty(&["builtin", "sedenions"]).code, 2);
}

#[test]
fn check_exit_codes() {
    assert_eq!(linfty(&["check", "octonions-theorem1"]).code, 0);
    assert_eq!(linfty(&["check", "rflux-linfty", "--max-n", "6"]).code, 0);
    assert_eq!(linfty(&["check", "octonions-star", "--type", "ainfty", "--max-n", "3"]).code, 1);

    let broken = linfty(&["check", "rflux-no-l3", "--max-n", "3"]);
    assert_eq!(broken.code, 1);
    assert!(broken.stdout.contains("witness (x1, x2, x3) residual (3)*I"), "{}", broken.stdout);

    // A plain 2-bracket with nonzero Jacobiator is not L-infinity.
    assert_eq!(linfty(&["check", "octonions", "--max-n", "3"]).code, 1);
}

#[test]
fn input_errors_exit_2() {
    let missing = linfty(&["check", "/nonexistent/algebra.txt"]);
    assert_eq!(missing.code, 2);
    assert!(missing.stderr.starts_with("error:"));
    assert_eq!(linfty(&["check", "octonions", "--type", "ainfty"]).code, 2);
    assert_eq!(linfty(&["jacobiator", "octonions", "e1", "e2", "e9"]).code, 2);
    assert_eq!(linfty(&["frobnicate"]).code, 2);

    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "name bad\nring Q\ntype linfty\nbasis a:0 b:0\nl2 (a b) -> {c: 1}\n").unwrap();
    let out = linfty(&["check", path_str(&bad)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 5: unknown label `c`"), "{}", out.stderr);

    fs::write(&bad, "basis a:0 b:0\nl2 (a, b) -> {a: 1}\n").unwrap();
    let out = linfty(&["check", path_str(&bad)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2, column"), "{}", out.stderr);
}

#[test]
fn json_report_schema() {
    let out = linfty(&["check", "rflux-no-l3", "--max-n", "3", "--json"]);
    assert_eq!(out.code, 1);
    let reports: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for (k, r) in reports.iter().enumerate() {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 5);
        for key in ["type", "n", "status", "witnesses", "residuals"] {
            assert!(keys.contains(&key), "missing {key}");
        }
        assert_eq!(r["type"], "linfty");
        assert_eq!(r["n"], k + 1);
    }
    assert_eq!(reports[2]["status"], "fail");
    assert_eq!(reports[2]["witnesses"], serde_json::json!([["x1", "x2", "x3"]]));
    assert_eq!(reports[2]["residuals"], serde_json::json!(["(3)*I"]));
    assert_eq!(reports[0]["status"], "pass");
}

#[test]
fn jacobiator_command() {
    let out = linfty(&["jacobiator", "rflux", "x1", "x2", "x3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "Jac(x1, x2, x3) = (3)*I");
    let oct = linfty(&["jacobiator", "octonions", "e1", "e2", "e4"]);
    assert_eq!(oct.stdout.trim(), "Jac(e1, e2, e4) = (-12)*e5");
}

#[test]
fn constructions_reproduce_builtins() {
    let dir = TempDir::new().unwrap();
    let out = |name: &str| dir.path().join(name);

    let t1 = out("t1.txt");
    assert_eq!(linfty(&["extend1", "octonions", "-o", path_str(&t1)]).code, 0);
    assert_eq!(fs::read_to_string(&t1).unwrap(), builtin_text("octonions-theorem1"));
    assert_eq!(linfty(&["check", path_str(&t1)]).code, 0);

    let contracted = out("rflux.txt");
    assert_eq!(linfty(&["contract", "octonions", "--weights", "rflux-weights", "-o", path_str(&contracted)]).code, 0);
    assert_eq!(fs::read_to_string(&contracted).unwrap(), builtin_text("rflux"));

    let t2 = out("t2.txt");
    let args = ["extend2", path_str(&contracted), "--map", "rflux-theorem2-map", "--f", "rflux-theorem2-section"];
    assert_eq!(linfty(&[&args[..], &["-o", path_str(&t2)]].concat()).code, 0);
    assert_eq!(fs::read_to_string(&t2).unwrap(), builtin_text("rflux-theorem2"));
    assert_eq!(linfty(&["check", path_str(&t2), "--max-n", "7"]).code, 0);

    let doubled = out("ainfty.txt");
    assert_eq!(linfty(&["ainfty-double", "octonions-star", "-o", path_str(&doubled)]).code, 0);
    let doc = AlgebraDocument::parse(&fs::read_to_string(&doubled).unwrap()).unwrap();
    assert_eq!(doc.basis().unwrap().len(), 16);
    assert_eq!(linfty(&["check", path_str(&doubled), "--max-n", "4"]).code, 0);
}

#[test]
fn extend2_with_files_and_stdout() {
    let dir = TempDir::new().unwrap();
    let map = dir.path().join("map.txt");
    let section = dir.path().join("f.txt");
    fs::write(&map, builtin_text("rflux-theorem2-map")).unwrap();
    fs::write(&section, builtin_text("rflux-theorem2-section")).unwrap();
    let out = linfty(&["extend2", "rflux", "--map", path_str(&map), "--f", path_str(&section)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.trim_end(), builtin_text("rflux-theorem2").trim_end());

    // Without --f the pivot section is used; still a valid extension.
    let pivot = dir.path().join("pivot.txt");
    assert_eq!(linfty(&["extend2", "rflux", "--map", path_str(&map), "-o", path_str(&pivot)]).code, 0);
    assert_eq!(linfty(&["check", path_str(&pivot), "--max-n", "7"]).code, 0);

    // A map whose image misses a Jacobiator.
    let narrow = dir.path().join("narrow.txt");
    fs::write(&narrow, "domain a:1\nmap (a) -> {p1: 1}\n").unwrap();
    let bad = linfty(&["extend2", "rflux", "--map", path_str(&narrow)]);
    assert_eq!(bad.code, 2, "{}", bad.stdout);
    assert!(bad.stderr.contains("image"), "{}", bad.stderr);
}

#[test]
fn help_succeeds() {
    let out = linfty(&["--help"]);
    assert_eq!(out.code, 0);
    for sub in ["check", "jacobiator", "extend1", "extend2", "contract", "ainfty-double", "builtin"] {
        assert!(out.stdout.contains(sub) || out.stderr.contains(sub), "help lacks {sub}");
    }
}

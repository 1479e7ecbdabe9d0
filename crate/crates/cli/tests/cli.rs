use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_morita"))
}

fn example(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn run(manifest: &Path, out: &Path) -> Output {
    bin()
        .arg("run")
        .arg(manifest)
        .arg("--out")
        .arg(out)
        .arg("--no-timestamp")
        .output()
        .expect("binary runs")
}

fn report(out: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(out.join("report.json")).expect("report written")).expect("json")
}

fn write_manifest(dir: &Path, v: &Value) -> PathBuf {
    let p = dir.join("manifest.json");
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p
}

fn dual_base(tasks: Value) -> Value {
    json!({
        "schema_version": 1,
        "field": { "modulus": 101 },
        "algebras": {
            "D": { "structure_constants": { "dim": 2, "constants": [1, 0, 0, 1, 0, 1, 0, 0], "unit": [1, 0] } }
        },
        "modules": { "k": { "top": { "algebra": "D" } } },
        "morita": { "delta": { "delta": { "algebra": "D" } } },
        "tuples": { "xx": { "regular": { "morita": "delta", "cf": [0, 1], "cg": [0, 1] } } },
        "tasks": tasks,
    })
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn dual_numbers_example_passes_and_certificates_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&example("dual_numbers.json"), dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(dir.path());
    let reports = r["reports"].as_array().unwrap();
    assert!(reports.iter().all(|t| t["verdict"] == "pass"));
    let ids: Vec<&str> = reports.iter().map(|t| t["task"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let certs: Vec<&str> = reports
        .iter()
        .flat_map(|t| t["certificates"].as_array().unwrap())
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(certs, ["construct.cert.json", "gproj-xx.cert.json"]);
    for c in certs {
        let v = bin().arg("verify").arg(dir.path().join(c)).output().unwrap();
        assert_eq!(code(&v), 0);
        assert_eq!(String::from_utf8_lossy(&v.stdout).trim(), "pass");
    }
}

#[test]
fn a2_example_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&example("a2.json"), dir.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(dir.path());
    let gor = r["reports"].as_array().unwrap().iter().find(|t| t["task"] == "gorenstein").unwrap();
    assert_eq!(gor["values"]["dimension"], 1);
}

#[test]
fn reports_are_reproducible() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let m = example("dual_numbers.json");
    run(&m, a.path());
    run(&m, b.path());
    for f in ["report.json", "gproj-xx.cert.json"] {
        assert_eq!(
            std::fs::read(a.path().join(f)).unwrap(),
            std::fs::read(b.path().join(f)).unwrap()
        );
    }
}

#[test]
fn flipped_certificate_entry_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(
        dir.path(),
        &dual_base(json!([{ "id": "g", "kind": "gproj", "morita": "delta", "tuple": "xx", "bound": 3, "width": 2 }])),
    );
    assert_eq!(code(&run(&m, dir.path())), 0);
    let path = dir.path().join("g.cert.json");
    let mut cert: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let diffs = cert["certificate"]["differentials"].as_array_mut().unwrap();
    let d = diffs.iter_mut().find(|d| !d.as_array().unwrap().is_empty()).unwrap();
    let e = &mut d.as_array_mut().unwrap()[0];
    *e = json!((e.as_u64().unwrap() + 1) % 101);
    std::fs::write(&path, serde_json::to_string(&cert).unwrap()).unwrap();
    let v = bin().arg("verify").arg(&path).output().unwrap();
    assert_eq!(code(&v), 1);
    assert!(String::from_utf8_lossy(&v.stdout).starts_with("fail:"));
}

#[test]
fn unreadable_certificate_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\"schema_version\": 1}").unwrap();
    assert_eq!(code(&bin().arg("verify").arg(&p).output().unwrap()), 3);
}

#[test]
fn zero_width_is_rejected_at_load() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(
        dir.path(),
        &dual_base(json!([{ "id": "g", "kind": "gproj", "morita": "delta", "tuple": "xx", "width": 0 }])),
    );
    let o = run(&m, dir.path());
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("width must be positive"));
    assert!(!dir.path().join("report.json").exists());
}

#[test]
fn tampered_structure_constants_name_the_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = dual_base(json!([]));
    v["algebras"]["D"]["structure_constants"]["constants"] = json!([1, 0, 0, 0, 0, 1, 0, 0]);
    let o = run(&write_manifest(dir.path(), &v), dir.path());
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid object 'D'"));
}

#[test]
fn empty_task_list_is_valid() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&write_manifest(dir.path(), &dual_base(json!([]))), dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(report(dir.path())["reports"], json!([]));
}

#[test]
fn gorenstein_dimension_of_dual_numbers_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(dir.path(), &dual_base(json!([{ "id": "g", "kind": "gorenstein", "algebra": "D" }])));
    assert_eq!(code(&run(&m, dir.path())), 0);
    let t = &report(dir.path())["reports"][0];
    assert_eq!(t["verdict"], "pass");
    assert_eq!(t["values"]["dimension"], 0);
}

#[test]
fn homological_embedding_fails_at_degree_two() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(
        dir.path(),
        &dual_base(json!([{ "id": "h", "kind": "hom-embedding", "morita": "delta", "side": "b",
            "samples": [["k", "k"]], "n_max": 3 }])),
    );
    assert_eq!(code(&run(&m, dir.path())), 1);
    let t = &report(dir.path())["reports"][0];
    assert_eq!(t["verdict"], "fail");
    assert_eq!(t["values"]["first_divergence"], json!({ "pair": 0, "n": 2 }));
}

#[test]
fn inconclusive_gorenstein_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    // k[x, y] / (x, y)^2
    let mut c = vec![0u64; 27];
    for i in 0..3 {
        c[i * 3 + i] = 1;
        c[(i * 3) * 3 + i] = 1;
    }
    let v = json!({
        "schema_version": 1,
        "field": { "modulus": 101 },
        "algebras": { "R": { "structure_constants": { "dim": 3, "constants": c, "unit": [1, 0, 0] } } },
        "tasks": [{ "id": "g", "kind": "gorenstein", "algebra": "R", "bound": 2 }],
    });
    assert_eq!(code(&run(&write_manifest(dir.path(), &v), dir.path())), 2);
    let t = &report(dir.path())["reports"][0];
    assert_eq!(t["verdict"], "inconclusive");
    assert_eq!(t["bound"], 2);
    assert_eq!(t["values"]["dimension"], json!({ "at_least": 2 }));
}

#[test]
fn unknown_task_kind_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(dir.path(), &dual_base(json!([{ "id": "q", "kind": "quantum" }])));
    let o = run(&m, dir.path());
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown kind 'quantum'"));
}

#[test]
fn unknown_reference_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(dir.path(), &dual_base(json!([{ "id": "g", "kind": "gorenstein", "algebra": "E" }])));
    let o = run(&m, dir.path());
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown algebra 'E'"));
}

#[test]
fn parse_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("m.json");
    std::fs::write(&p, "{\n  \"schema_version\": 1,\n  oops\n}").unwrap();
    let o = run(&p, dir.path());
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn wrong_schema_version_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = dual_base(json!([]));
    v["schema_version"] = json!(2);
    assert_eq!(code(&run(&write_manifest(dir.path(), &v), dir.path())), 3);
}

#[test]
fn check_subcommand_loads_without_running() {
    let o = bin().arg("check").arg(example("a2.json")).output().unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "ok: 10 tasks");
}

#[test]
fn single_task_selection() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin()
        .args(["run", "--task", "gorenstein-base", "--no-timestamp", "--out"])
        .arg(dir.path())
        .arg(example("dual_numbers.json"))
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let r = report(dir.path());
    assert_eq!(r["reports"].as_array().unwrap().len(), 1);
    let missing = bin()
        .args(["run", "--task", "nope"])
        .arg(example("dual_numbers.json"))
        .output()
        .unwrap();
    assert_eq!(code(&missing), 3);
}

#[test]
fn width_zero_certificate_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(
        dir.path(),
        &dual_base(json!([{ "id": "g", "kind": "gproj", "morita": "delta", "tuple": "xx", "bound": 3, "width": 1 }])),
    );
    assert_eq!(code(&run(&m, dir.path())), 0);
    let path = dir.path().join("g.cert.json");
    let mut cert: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    cert["certificate"]["width"] = json!(0);
    std::fs::write(&path, serde_json::to_string(&cert).unwrap()).unwrap();
    let v = bin().arg("verify").arg(&path).output().unwrap();
    assert_eq!(code(&v), 1);
}

#[test]
fn stdout_report_without_out_dir() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(dir.path(), &dual_base(json!([{ "id": "v", "kind": "validate" }])));
    let o = bin().arg("run").arg(&m).arg("--no-timestamp").current_dir(dir.path()).output().unwrap();
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["reports"][0]["verdict"], "pass");
    assert!(r.get("timestamp").is_none());
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(code(&bin().arg("frobnicate").output().unwrap()), 3);
    assert_eq!(code(&bin().arg("run").output().unwrap()), 3);
    assert_eq!(code(&bin().arg("--help").output().unwrap()), 0);
}

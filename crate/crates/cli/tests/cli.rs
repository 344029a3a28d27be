use std::fs;
use std::path::{Path, PathBuf};

use aqlam_cli::descriptor::Descriptor;
use aqlam_cli::golden::{default_golden_dir, CLASSIFICATION_FILE, ODD_CENTER_FILE};
use aqlam_cli::run_with_cap;
use aqlam::aq::CASE_LIST_FILE;
use serde_json::Value;

struct Run {
    status: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn lines(&self) -> Vec<Value> {
        self.stdout
            .lines()
            .map(|l| serde_json::from_str(l).expect("each line is JSON"))
            .collect()
    }
}

fn aqlam_with_cap(args: &[&str], cap: Option<&str>) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("aqlam").chain(args.iter().copied());
    let status = run_with_cap(argv, cap, &mut out, &mut err);
    Run {
        status,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn aqlam(args: &[&str]) -> Run {
    aqlam_with_cap(args, None)
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("aqlam-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn copy_golden(to: &Path) {
    for f in [CLASSIFICATION_FILE, ODD_CENTER_FILE, CASE_LIST_FILE] {
        fs::copy(default_golden_dir().join(f), to.join(f)).unwrap();
    }
}

#[test]
fn fs_b2_spin_is_quaternionic() {
    let r = aqlam(&["fs", "--type", "B2", "--form", "sc", "--lambda", "0,1"]);
    assert_eq!(r.status, 0, "{}", r.stderr);
    let rec = &r.lines()[0];
    assert_eq!(rec["result"]["indicator"], -1);
    assert_eq!(rec["provenance"], "engine");
}

#[test]
fn local_global_hamilton_quaternions() {
    let r = aqlam(&["local-global", "--a", "-1", "--b", "-1"]);
    assert_eq!(r.status, 0);
    let res = &r.lines()[0]["result"];
    assert_eq!(res["ramified"], serde_json::json!([2, "inf"]));
    assert_eq!(res["parity_ok"], true);
}

#[test]
fn classify_forms_one_record_per_row() {
    let r = aqlam(&["classify-forms", "--max-rank", "3"]);
    assert_eq!(r.status, 0);
    let lines = r.lines();
    // A1 2, A2 2, A3 3, B2 2, B3 2, C2 2, C3 2, D3 3, G2 1
    assert_eq!(lines.len(), 19);
    for l in &lines {
        for field in ["series", "rank_residue", "form_label", "verdict"] {
            assert!(!l["result"][field].is_null(), "{l}");
        }
    }
}

#[test]
fn every_record_reparses_and_has_a_trace() {
    let cases: &[&[&str]] = &[
        &["classify-forms", "--max-rank", "2"],
        &["fs", "--type", "D4", "--form", "half-spin", "--lambda", "0,0,0,2", "--check-oracle"],
        &["descend", "--curated", "S3 standard over Q(i)"],
        &["descend", "--curated", "quaternion group over Q(i)"],
        &["local-global", "--a", "3/2", "--b", "-7"],
        &["aq-report", "--type", "A2", "--form-kind", "equal_rank_inner", "--marks", "1", "--levi", "2"],
        &["aq-report", "--type", "C3", "--form-kind", "equal_rank_inner", "--marks", "3",
          "--levi", "1,2", "--semi-admissible", "true"],
        &["character", "--type", "B2", "--levi", "1", "--lambda", "1,1"],
    ];
    for args in cases {
        let r = aqlam(args);
        assert_eq!(r.status, 0, "{args:?}: {}", r.stderr);
        for line in r.stdout.lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            let query: Descriptor = serde_json::from_value(v["query"].clone()).unwrap();
            assert_eq!(query.kind(), v["kind"]);
            let trace = v["rule_trace"].as_array().unwrap();
            assert!(!trace.is_empty(), "{args:?}");
            // feeding the echoed query back reproduces the line
            let dir = scratch_dir("reparse");
            let path = dir.join("q.json");
            fs::write(&path, v["query"].to_string()).unwrap();
            let again = aqlam(&["--file", path.to_str().unwrap()]);
            assert!(again.stdout.lines().any(|l| l == line), "{args:?}");
        }
    }
}

#[test]
fn runs_are_byte_identical() {
    let args = ["character", "--type", "A3", "--levi", "2", "--lambda", "1,0,1"];
    assert_eq!(aqlam(&args).stdout, aqlam(&args).stdout);
    let args = ["aq-report", "--type", "B2", "--form-kind", "complex", "--levi", "1"];
    assert_eq!(aqlam(&args).stdout, aqlam(&args).stdout);
}

#[test]
fn exit_statuses() {
    assert_eq!(aqlam(&["no-such-command"]).status, 1);
    assert_eq!(aqlam(&["--help"]).status, 0);
    // wrong rank is a validation failure
    let r = aqlam(&["fs", "--type", "A2", "--lambda", "1"]);
    assert_eq!(r.status, 1);
    assert_eq!(r.lines()[0]["error"]["class"], "validation");
    assert!(r.stderr.contains("validation"));
    assert_eq!(aqlam(&["fs", "--type", "X9", "--lambda", "1"]).status, 1);
    assert_eq!(aqlam(&["aq-report", "--type", "A2", "--levi", "0"]).status, 1);
    assert_eq!(aqlam(&["local-global", "--a", "0", "--b", "1"]).status, 1);
    // an enumeration cap that is too small is a computation error
    let r = aqlam_with_cap(&["character", "--type", "B3", "--lambda", "1,0,0"], Some("3"));
    assert_eq!(r.status, 2, "{}", r.stdout);
    assert_eq!(r.lines()[0]["error"]["class"], "computation");
    assert_eq!(aqlam_with_cap(&["fs", "--type", "A1", "--lambda", "1"], Some("lots")).status, 1);
}

#[test]
fn descriptor_files() {
    let dir = scratch_dir("files");
    let batch = dir.join("batch.jsonl");
    fs::write(
        &batch,
        concat!(
            "{\"kind\":\"fs\",\"cartan_type\":\"C3\",\"form\":\"sc\",\"lambda\":[1,0,0]}\n",
            "{\"kind\":\"local-global\",\"a\":2,\"b\":5}\n",
        ),
    )
    .unwrap();
    let r = aqlam(&["--file", batch.to_str().unwrap()]);
    assert_eq!(r.status, 0, "{}", r.stderr);
    let lines = r.lines();
    assert_eq!(lines[0]["result"]["indicator"], -1);
    assert_eq!(lines[1]["kind"], "local-global");

    // a module file without a kind tag, fed to `descend`
    let module = dir.join("module.json");
    fs::write(
        &module,
        r#"{"d": -1, "dimension": 1, "generators": [[[[0, 1]]]]}"#,
    )
    .unwrap();
    let r = aqlam(&["descend", "--file", module.to_str().unwrap()]);
    assert_eq!(r.status, 0, "{}", r.stderr);
    assert_eq!(r.lines()[0]["result"]["verdict"], "no_model");

    let r = aqlam(&["fs", "--file", module.to_str().unwrap()]);
    assert_eq!(r.status, 1);
}

#[test]
fn verify_fresh_golden_tables() {
    let r = aqlam(&["verify"]);
    let lines = r.lines();
    let table = |name: &str| {
        lines
            .iter()
            .find(|l| l["result"]["table"] == name)
            .unwrap_or_else(|| panic!("no record for {name}"))
            .clone()
    };
    assert_eq!(table(ODD_CENTER_FILE)["result"]["status"], "pass");
    assert_eq!(table(CASE_LIST_FILE)["result"]["status"], "pass");
    // The transcribed B-series residues disagree with the engine on B3, B5
    // and B7 (simply connected); see README.
    let classification = table(CLASSIFICATION_FILE);
    assert_eq!(classification["result"]["status"], "fail");
    assert_eq!(classification["result"]["first_divergence"]["row"], "B3 sc");
    assert_eq!(classification["result"]["divergent_rows"], 3);
    assert_eq!(r.status, 1);
    assert!(r.stderr.contains("B3 sc"));
}

#[test]
fn verify_names_a_mutated_row() {
    let dir = scratch_dir("mutated");
    copy_golden(&dir);
    let path = dir.join(ODD_CENTER_FILE);
    let text = fs::read_to_string(&path).unwrap();
    let needle = r#"{"series":"A","rank":3,"rank_residue":3,"form_label":"SU(4)/mu_2","center_order":2,"verdict":false}"#;
    assert!(text.contains(needle));
    fs::write(&path, text.replace(needle, &needle.replace("false", "true"))).unwrap();
    let r = aqlam(&["verify", "--max-rank", "4", "--golden-dir", dir.to_str().unwrap()]);
    assert_eq!(r.status, 1);
    let rec = r
        .lines()
        .into_iter()
        .find(|l| l["result"]["table"] == ODD_CENTER_FILE)
        .unwrap();
    assert_eq!(rec["result"]["status"], "fail");
    assert_eq!(rec["result"]["first_divergence"]["row"], "A3 SU(4)/mu_2");
    assert!(r.stderr.contains("A3 SU(4)/mu_2"));

    // a tampered case list fails its checksum
    let cases = dir.join(CASE_LIST_FILE);
    let text = fs::read_to_string(&cases).unwrap();
    fs::write(&cases, text.replacen("\"version\"", " \"version\"", 1)).unwrap();
    let r = aqlam(&["verify", "--max-rank", "2", "--golden-dir", dir.to_str().unwrap()]);
    let rec = r
        .lines()
        .into_iter()
        .find(|l| l["result"]["table"] == CASE_LIST_FILE)
        .unwrap();
    assert_eq!(rec["result"]["status"], "fail");
}

#[test]
fn verify_flags_rows_beyond_golden_coverage() {
    let dir = scratch_dir("truncated");
    copy_golden(&dir);
    for f in [CLASSIFICATION_FILE, ODD_CENTER_FILE] {
        let path = dir.join(f);
        let kept: String = fs::read_to_string(&path)
            .unwrap()
            .lines()
            .filter(|l| serde_json::from_str::<Value>(l).unwrap()["rank"].as_u64().unwrap() <= 2)
            .map(|l| format!("{l}\n"))
            .collect();
        fs::write(&path, kept).unwrap();
    }
    let r = aqlam(&["verify", "--max-rank", "3", "--golden-dir", dir.to_str().unwrap()]);
    assert_eq!(r.status, 0, "{}", r.stdout);
    for l in r.lines().iter().filter(|l| l["result"]["table"] != CASE_LIST_FILE) {
        assert_eq!(l["result"]["status"], "pass");
        let uncovered: Vec<&str> = l["result"]["uncovered"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect();
        assert!(uncovered.contains(&"A3 sc") && uncovered.contains(&"D3 SO(2n)"), "{uncovered:?}");
        assert!(!uncovered.contains(&"A2 sc"));
    }
}

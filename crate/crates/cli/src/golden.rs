//! Checked-in golden tables and the `verify` subcommand.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::json;

use aqlam::aq::{sha256_hex, CASE_LIST_FILE, CASE_LIST_SHA256};
use aqlam::fs::{classify_admissible_forms, unconditional_form_table, ClassificationRow};

use crate::descriptor::Descriptor;
use crate::error::CliError;
use crate::report::{to_json, Outcome, Provenance, Record};

pub const CLASSIFICATION_FILE: &str = "classification.jsonl";
pub const ODD_CENTER_FILE: &str = "odd_center_forms.jsonl";
pub const DEFAULT_MAX_RANK: usize = 8;

pub fn default_golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

/// `(series, rank, form label)`.
pub type RowKey = (char, usize, String);

fn key(r: &ClassificationRow) -> RowKey {
    (r.series, r.rank, r.form_label.clone())
}

fn key_text(k: &RowKey) -> String {
    format!("{}{} {}", k.0, k.1, k.2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub row: String,
    pub golden: Option<ClassificationRow>,
    pub engine: Option<ClassificationRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableDiff {
    pub table: String,
    pub passed: bool,
    pub rows_checked: usize,
    /// Engine rows with no golden counterpart.
    pub uncovered: Vec<String>,
    /// All divergent rows, in engine order; the first one is reported.
    pub divergences: Vec<Divergence>,
}

impl TableDiff {
    pub fn first_divergence(&self) -> Option<&Divergence> {
        self.divergences.first()
    }
}

pub fn read_golden_rows(path: &Path) -> Result<Vec<ClassificationRow>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("golden file {}: {e}", path.display())))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| {
                CliError::Validation(format!("golden file {} line {}: {e}", path.display(), i + 1))
            })
        })
        .collect()
}

/// Compares engine rows against golden rows of rank at most `max_rank`.
pub fn diff_rows(
    table: &str,
    engine: &[ClassificationRow],
    golden: &[ClassificationRow],
    max_rank: usize,
) -> TableDiff {
    let golden_by_key: HashMap<RowKey, &ClassificationRow> = golden
        .iter()
        .filter(|r| r.rank <= max_rank)
        .map(|r| (key(r), r))
        .collect();
    let mut uncovered = Vec::new();
    let mut divergences = Vec::new();
    let mut checked = 0;
    for row in engine {
        match golden_by_key.get(&key(row)) {
            None => uncovered.push(key_text(&key(row))),
            Some(g) => {
                checked += 1;
                if *g != row {
                    divergences.push(Divergence {
                        row: key_text(&key(row)),
                        golden: Some((*g).clone()),
                        engine: Some(row.clone()),
                    });
                }
            }
        }
    }
    let engine_keys: std::collections::HashSet<RowKey> = engine.iter().map(key).collect();
    for g in golden.iter().filter(|r| r.rank <= max_rank) {
        if !engine_keys.contains(&key(g)) {
            divergences.push(Divergence {
                row: key_text(&key(g)),
                golden: Some(g.clone()),
                engine: None,
            });
        }
    }
    TableDiff {
        table: table.into(),
        passed: divergences.is_empty(),
        rows_checked: checked,
        uncovered,
        divergences,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChecksumCheck {
    pub table: String,
    pub passed: bool,
    pub expected: String,
    pub found: String,
}

pub fn check_case_list(dir: &Path) -> Result<ChecksumCheck, CliError> {
    let path = dir.join(CASE_LIST_FILE);
    let bytes = fs::read(&path)
        .map_err(|e| CliError::Validation(format!("golden file {}: {e}", path.display())))?;
    let found = sha256_hex(&bytes);
    Ok(ChecksumCheck {
        table: CASE_LIST_FILE.into(),
        passed: found == CASE_LIST_SHA256,
        expected: CASE_LIST_SHA256.into(),
        found,
    })
}

pub fn verify_classification(dir: &Path, max_rank: usize) -> Result<TableDiff, CliError> {
    let golden = read_golden_rows(&dir.join(CLASSIFICATION_FILE))?;
    let engine = classify_admissible_forms(max_rank)?;
    Ok(diff_rows(CLASSIFICATION_FILE, &engine, &golden, max_rank))
}

pub fn verify_odd_center(dir: &Path, max_rank: usize) -> Result<TableDiff, CliError> {
    let golden = read_golden_rows(&dir.join(ODD_CENTER_FILE))?;
    let engine = unconditional_form_table(max_rank)?;
    Ok(diff_rows(ODD_CENTER_FILE, &engine, &golden, max_rank))
}

fn diff_record(d: &Descriptor, diff: &TableDiff) -> Record {
    let mut result = json!({
        "table": diff.table,
        "status": if diff.passed { "pass" } else { "fail" },
        "rows_checked": diff.rows_checked,
        "uncovered": diff.uncovered,
        "divergent_rows": diff.divergences.len(),
    });
    if let Some(first) = diff.first_divergence() {
        result["first_divergence"] = to_json(first);
    }
    let trace = if diff.passed {
        "engine table regenerated and matched row by row".to_string()
    } else {
        format!("engine table diverges from the golden table at {}", diff.divergences[0].row)
    };
    Record {
        kind: d.kind().into(),
        query: d.clone(),
        result,
        rule_trace: vec![trace],
        provenance: Provenance::GoldenTable,
    }
}

/// Records for every golden table, plus whether all of them passed.
pub fn verify_all(
    d: &Descriptor,
    max_rank: Option<usize>,
    golden_dir: Option<&str>,
) -> Result<(Vec<Record>, bool), CliError> {
    let max_rank = max_rank.unwrap_or(DEFAULT_MAX_RANK);
    if max_rank == 0 {
        return Err(CliError::Validation("max_rank must be positive".into()));
    }
    let dir = golden_dir.map(PathBuf::from).unwrap_or_else(default_golden_dir);
    let tables = [verify_classification(&dir, max_rank)?, verify_odd_center(&dir, max_rank)?];
    let checksum = check_case_list(&dir)?;
    let mut ok = checksum.passed;
    let mut records: Vec<Record> = tables
        .iter()
        .map(|t| {
            ok &= t.passed;
            diff_record(d, t)
        })
        .collect();
    let mut result = to_json(&checksum);
    result["status"] = json!(if checksum.passed { "pass" } else { "fail" });
    records.push(Record {
        kind: d.kind().into(),
        query: d.clone(),
        result,
        rule_trace: vec!["case list is rule input: checksum compared, not regenerated".into()],
        provenance: Provenance::CaseListData,
    });
    Ok((records, ok))
}

/// The verification records, whether or not every table passed.
pub fn verify_records(d: &Descriptor, max_rank: Option<usize>, golden_dir: Option<&str>) -> Outcome {
    let (records, _) = verify_all(d, max_rank, golden_dir)?;
    Ok(records)
}

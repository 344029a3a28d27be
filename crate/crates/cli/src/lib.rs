//! The `aqlam` command line: descriptor parsing, report emission and golden
//! table verification.

pub mod args;
pub mod descriptor;
pub mod error;
pub mod golden;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde_json::{Map, Value};

use aqlam::aq::ArithmeticFlags;
use aqlam::aq::RealWeylGroup;
use aqlam::root_core::DEFAULT_ORBIT_CAP;

use args::{Cli, Command};
use descriptor::{parse_descriptor_file, Descriptor, Number};
use error::CliError;
use report::{ErrorBody, ErrorRecord, Record};

/// Environment variable overriding the orbit enumeration cap.
pub const ORBIT_CAP_VAR: &str = "AQLAM_ORBIT_CAP";

/// Runs the command line with the process environment.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cap = std::env::var(ORBIT_CAP_VAR).ok();
    run_with_cap(argv, cap.as_deref(), out, err)
}

/// Runs the command line with an explicit orbit-cap override.
pub fn run_with_cap<I, T>(argv: I, cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let cap = match cap.map(str::trim) {
        None => DEFAULT_ORBIT_CAP,
        Some(s) => match s.parse::<usize>() {
            Ok(c) if c > 0 => c,
            _ => {
                let _ = writeln!(err, "{ORBIT_CAP_VAR} must be a positive integer, got {s:?}");
                return 1;
            }
        },
    };
    let descriptors = match collect_descriptors(&cli) {
        Ok(ds) => ds,
        Err(e) => {
            emit_error(out, err, "descriptor", None, &e);
            return e.exit_status();
        }
    };
    let mut status = 0;
    for d in &descriptors {
        let (records, failure) = process(d, cap);
        for r in &records {
            emit(out, r);
        }
        if let Some(e) = failure {
            emit_error(out, err, d.kind(), Some(d), &e);
            status = status.max(e.exit_status());
        }
    }
    status
}

/// Runs one descriptor. Verification emits its diff records even when a
/// table fails.
pub fn process(d: &Descriptor, cap: usize) -> (Vec<Record>, Option<CliError>) {
    if let Descriptor::Verify { max_rank, golden_dir } = d {
        return match golden::verify_all(d, *max_rank, golden_dir.as_deref()) {
            Ok((records, true)) => (records, None),
            Ok((records, false)) => {
                let failed: Vec<String> = records
                    .iter()
                    .filter(|r| r.result["status"] == "fail")
                    .map(|r| {
                        let table = r.result["table"].as_str().unwrap_or("?");
                        match r.result["first_divergence"]["row"].as_str() {
                            Some(row) => format!("{table} (first divergent row {row})"),
                            None => table.to_string(),
                        }
                    })
                    .collect();
                let e = CliError::Validation(format!("golden diff in {}", failed.join(", ")));
                (records, Some(e))
            }
            Err(e) => (Vec::new(), Some(e)),
        };
    }
    match report::execute(d, cap) {
        Ok(records) => (records, None),
        Err(e) => (Vec::new(), Some(e)),
    }
}

fn emit(out: &mut dyn Write, r: &Record) {
    let line = serde_json::to_string(r).expect("records serialize");
    let _ = writeln!(out, "{line}");
}

fn emit_error(out: &mut dyn Write, err: &mut dyn Write, kind: &str, d: Option<&Descriptor>, e: &CliError) {
    let rec = ErrorRecord {
        kind: kind.into(),
        query: d.cloned(),
        error: ErrorBody {
            class: e.class().into(),
            message: e.to_string(),
        },
    };
    let _ = writeln!(out, "{}", serde_json::to_string(&rec).expect("records serialize"));
    let _ = writeln!(err, "aqlam: {} error: {e}", e.class());
}

fn missing(flag: &str) -> CliError {
    CliError::Validation(format!("missing --{flag}"))
}

fn number(s: &str) -> Number {
    match s.trim().parse::<i64>() {
        Ok(n) => Number::Int(n),
        Err(_) => Number::Text(s.trim().to_string()),
    }
}

fn collect_descriptors(cli: &Cli) -> Result<Vec<Descriptor>, CliError> {
    if let Some(path) = &cli.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
        return match &cli.command {
            None => parse_descriptor_file(&text).map_err(CliError::Validation),
            Some(cmd) => file_for_subcommand(&text, subcommand_kind(cmd)),
        };
    }
    let cmd = cli
        .command
        .as_ref()
        .ok_or_else(|| CliError::Validation("no subcommand given; see --help".into()))?;
    Ok(vec![descriptor_from_flags(cmd)?])
}

fn subcommand_kind(cmd: &Command) -> &'static str {
    match cmd {
        Command::ClassifyForms { .. } => "classify-forms",
        Command::Fs { .. } => "fs",
        Command::Descend { .. } => "descend",
        Command::LocalGlobal { .. } => "local-global",
        Command::AqReport { .. } => "aq-report",
        Command::Character { .. } => "character",
        Command::Verify { .. } => "verify",
    }
}

/// File descriptors under a subcommand may omit `kind`; a different kind is rejected.
fn file_for_subcommand(text: &str, kind: &str) -> Result<Vec<Descriptor>, CliError> {
    let values: Vec<Value> = match serde_json::from_str::<Value>(text) {
        Ok(Value::Array(xs)) => xs,
        Ok(v) => vec![v],
        Err(_) => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::Validation(format!("descriptor file: {e}")))?,
    };
    values
        .into_iter()
        .map(|v| {
            let Value::Object(mut obj) = v else {
                return Err(CliError::Validation("descriptor must be a JSON object".into()));
            };
            match obj.get("kind") {
                None => {
                    obj.insert("kind".into(), Value::String(kind.into()));
                }
                Some(k) if k == kind => {}
                Some(k) => {
                    return Err(CliError::Validation(format!(
                        "descriptor of kind {k} given to the {kind} subcommand"
                    )))
                }
            }
            // the module file format names its field discriminant `d`
            if kind == "descend" {
                rename(&mut obj, "d", "field");
                obj.remove("dimension");
            }
            serde_json::from_value(Value::Object(obj))
                .map_err(|e| CliError::Validation(format!("descriptor: {e}")))
        })
        .collect()
}

fn rename(obj: &mut Map<String, Value>, from: &str, to: &str) {
    if let Some(v) = obj.remove(from) {
        obj.insert(to.into(), v);
    }
}

fn descriptor_from_flags(cmd: &Command) -> Result<Descriptor, CliError> {
    Ok(match cmd {
        Command::ClassifyForms { max_rank } => Descriptor::ClassifyForms { max_rank: *max_rank },
        Command::Fs { cartan_type, form, lambda, check_oracle } => Descriptor::Fs {
            cartan_type: cartan_type.clone().ok_or_else(|| missing("type"))?,
            form: form.clone(),
            lambda: lambda.clone(),
            check_oracle: *check_oracle,
        },
        Command::Descend { curated } => Descriptor::Descend {
            curated: Some(curated.clone().ok_or_else(|| missing("curated (or --file)"))?),
            field: None,
            generators: None,
        },
        Command::LocalGlobal { a, b } => Descriptor::LocalGlobal {
            a: number(a.as_deref().ok_or_else(|| missing("a"))?),
            b: number(b.as_deref().ok_or_else(|| missing("b"))?),
        },
        Command::AqReport {
            cartan_type,
            form,
            form_kind,
            marks,
            levi,
            lambda,
            full_weyl,
            include_center,
            semi_admissible,
            quasi_split,
            declared_case,
        } => {
            let cartan_type = cartan_type.clone().ok_or_else(|| missing("type"))?;
            let mut lambda_coords: Vec<Number> = lambda.iter().map(|s| number(s)).collect();
            if lambda_coords.is_empty() {
                let rank = report::root_system(&cartan_type)?.rank();
                lambda_coords = vec![Number::Int(0); rank];
            }
            Descriptor::AqReport {
                cartan_type,
                form: form.clone(),
                form_kind: form_kind.clone(),
                noncompact_marks: marks.clone(),
                levi_subset: levi.clone(),
                lambda_coords,
                real_weyl_group: if *full_weyl {
                    RealWeylGroup::Full
                } else {
                    RealWeylGroup::IdentityComponent
                },
                include_center: *include_center,
                arithmetic_flags: ArithmeticFlags {
                    semi_admissible: *semi_admissible,
                    quasi_split: *quasi_split,
                    declared_case: declared_case.clone(),
                },
            }
        }
        Command::Character { cartan_type, levi, lambda } => Descriptor::Character {
            cartan_type: cartan_type.clone().ok_or_else(|| missing("type"))?,
            levi_subset: levi.clone(),
            lambda: lambda.clone(),
        },
        Command::Verify { max_rank, golden_dir } => Descriptor::Verify {
            max_rank: *max_rank,
            golden_dir: golden_dir.as_ref().map(|p| p.display().to_string()),
        },
    })
}

//! Query descriptors, one variant per subcommand. A report echoes its
//! descriptor, so every emitted `query` parses back into a [`Descriptor`].

use serde::{Deserialize, Serialize};

use aqlam::aq::{ArithmeticFlags, RealWeylGroup};

/// A rational number given either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    pub fn as_text(&self) -> String {
        match self {
            Number::Int(n) => n.to_string(),
            Number::Text(s) => s.trim().to_string(),
        }
    }
}

impl From<i64> for Number {
    fn from(n: i64) -> Self {
        Number::Int(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Descriptor {
    ClassifyForms {
        max_rank: usize,
    },
    Fs {
        cartan_type: String,
        #[serde(default = "default_form")]
        form: String,
        lambda: Vec<i64>,
        /// Also run the independent invariant-counting computation.
        #[serde(default)]
        check_oracle: bool,
    },
    Descend {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        curated: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<i64>,
        /// Generators as matrices whose entries are pairs `[a, b]` standing
        /// for `a + b sqrt(field)`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generators: Option<Vec<Vec<Vec<[Number; 2]>>>>,
    },
    LocalGlobal {
        a: Number,
        b: Number,
    },
    AqReport {
        cartan_type: String,
        #[serde(default = "default_form")]
        form: String,
        form_kind: String,
        /// 1-based simple-root indices.
        #[serde(default)]
        noncompact_marks: Vec<usize>,
        /// 1-based simple-root indices of the Levi.
        #[serde(default)]
        levi_subset: Vec<usize>,
        lambda_coords: Vec<Number>,
        #[serde(default)]
        real_weyl_group: RealWeylGroup,
        #[serde(default)]
        include_center: bool,
        #[serde(default)]
        arithmetic_flags: ArithmeticFlags,
    },
    Character {
        cartan_type: String,
        /// 1-based simple-root indices of the Levi.
        #[serde(default)]
        levi_subset: Vec<usize>,
        lambda: Vec<i64>,
    },
    Verify {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_rank: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        golden_dir: Option<String>,
    },
}

fn default_form() -> String {
    "sc".into()
}

impl Descriptor {
    pub fn kind(&self) -> &'static str {
        match self {
            Descriptor::ClassifyForms { .. } => "classify-forms",
            Descriptor::Fs { .. } => "fs",
            Descriptor::Descend { .. } => "descend",
            Descriptor::LocalGlobal { .. } => "local-global",
            Descriptor::AqReport { .. } => "aq-report",
            Descriptor::Character { .. } => "character",
            Descriptor::Verify { .. } => "verify",
        }
    }
}

/// Descriptors in a file: one JSON document, a JSON array, or one document per line.
pub fn parse_descriptor_file(text: &str) -> Result<Vec<Descriptor>, String> {
    if let Ok(d) = serde_json::from_str::<Descriptor>(text) {
        return Ok(vec![d]);
    }
    if let Ok(ds) = serde_json::from_str::<Vec<Descriptor>>(text) {
        return Ok(ds);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str::<Descriptor>(l).map_err(|e| format!("line {}: {e}", i + 1))
        })
        .collect()
}

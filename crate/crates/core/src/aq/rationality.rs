//! Field of definition of `A_q(lambda)`: `F` or the quadratic extension `F'`.
//!
//! The decision runs in three steps. The bottom layer of `A_q(0)` decides
//! self-duality; a self-dual module is then descended to `F` when its real
//! group appears in the case list and `K` is semi-admissible; finally the
//! translation step adjoins the field generated by the `lambda` data.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::form::{AqDescriptor, FormKind, RealWeylGroup};
use super::invariants::{bottom_layer_weight, range_check, rho_u};
use crate::error::{Error, Result};
use crate::root_core::{Root, RootSystem, Series, Weight, DEFAULT_ORBIT_CAP, Q};

pub const CASE_LIST_FILE: &str = "case_list.json";
pub const CASE_LIST_JSON: &str = include_str!("../../data/case_list.json");
pub const CASE_LIST_SHA256: &str =
    "fc2bda5ff50903ec0d4f78d65fffe15840b3abd6208d9126f5d3413b70579504";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRow {
    pub id: String,
    pub case: String,
    pub groups: String,
    /// Whether the engine recognizes the row from a descriptor; other rows
    /// must be declared through [`ArithmeticFlags::declared_case`].
    pub inferred: bool,
    /// Rows under which `A_q(0)` is known to be self-dual (with a Borel `q`
    /// when `borel_required` is set).
    pub forces_self_dual: bool,
    pub borel_required: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseList {
    pub version: u32,
    pub rows: Vec<CaseRow>,
}

impl CaseList {
    pub fn row(&self, id: &str) -> Option<&CaseRow> {
        self.rows.iter().find(|r| r.id == id)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Parses a case list after checking it against the pinned checksum.
pub fn parse_case_list(text: &str) -> Result<CaseList> {
    let sum = sha256_hex(text.as_bytes());
    if sum != CASE_LIST_SHA256 {
        return Err(Error::CorruptData {
            file: CASE_LIST_FILE.into(),
            reason: format!("checksum {sum} does not match {CASE_LIST_SHA256}"),
        });
    }
    serde_json::from_str(text).map_err(|e| Error::CorruptData {
        file: CASE_LIST_FILE.into(),
        reason: e.to_string(),
    })
}

/// The bundled case list.
pub fn case_list() -> Result<CaseList> {
    parse_case_list(CASE_LIST_JSON)
}

/// Arithmetic facts about the global model that the descriptor does not carry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticFlags {
    pub semi_admissible: Option<bool>,
    pub quasi_split: Option<bool>,
    /// A case-list row id asserted by the caller.
    pub declared_case: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldVerdict {
    F,
    #[serde(rename = "F'")]
    FPrime,
    #[serde(rename = "undecided")]
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldReport {
    /// Field of definition of `A_q(lambda)`.
    pub verdict: FieldVerdict,
    /// Field of definition of `A_q(0)`.
    pub base_verdict: FieldVerdict,
    /// Highest weight of the bottom layer, where the compact Cartan is the
    /// Cartan of the descriptor.
    pub bottom_layer: Option<Weight>,
    pub self_dual: bool,
    pub case: Option<String>,
    pub rule_trace: Vec<String>,
}

pub const RULE_NOT_SELF_DUAL: &str =
    "bottom layer not self-dual: A_q(0) has no model over F, so F0 = F'";
pub const RULE_DESCENT: &str =
    "self-dual A_q(0) for a listed group with semi-admissible K is defined over F";
pub const RULE_TRANSLATION_DOMINANT: &str =
    "translation from A_q(0), dominant integral lambda: adjoin the field of (lambda, lambda + rho(u))";
pub const RULE_TRANSLATION_WEAKLY_GOOD: &str =
    "translation from A_q(0), weakly good integral lambda: adjoin the field of (w lambda, lambda + rho(u))";
pub const RULE_QUASI_SPLIT_BOREL: &str =
    "quasi-split group with Borel q: A_q(lambda) is defined over F0(lambda)";

fn compact_positive_roots(desc: &AqDescriptor) -> Vec<&Root> {
    let rs = desc.root_system();
    rs.positive_roots()
        .iter()
        .filter(|r| desc.form().is_noncompact(r) == Some(false))
        .collect()
}

/// Dominant representative for the Weyl group generated by `roots`.
fn dominant_for(rs: &RootSystem, roots: &[&Root], lambda: &Weight) -> Weight {
    let mut mu = lambda.clone();
    while let Some(r) = roots
        .iter()
        .find(|r| rs.coroot_pairing(&mu, r) < Q::from_integer(0))
    {
        mu = rs.reflect_root(&mu, r);
    }
    mu
}

/// Whether the bottom layer of `A_q(0)` is isomorphic to its dual, that is
/// whether `-mu` lies in the orbit of `mu` under the Weyl group of `K`.
pub fn bottom_layer_self_duality(desc: &AqDescriptor) -> Result<(Option<Weight>, bool)> {
    let rs = desc.root_system();
    let full_weyl = desc.form().real_weyl_group() == RealWeylGroup::Full;
    match desc.form().kind() {
        // the maximal compact O(n) makes every K-type self-dual
        FormKind::GlNReal { .. } => Ok((None, true)),
        FormKind::Compact | FormKind::EqualRankInner { .. } if !full_weyl => {
            let mu = bottom_layer_weight(desc)?;
            let compact = compact_positive_roots(desc);
            let a = dominant_for(rs, &compact, &mu);
            let b = dominant_for(rs, &compact, &-&mu);
            Ok((Some(mu), a == b))
        }
        _ => {
            let mu = bottom_layer_weight(desc)?;
            let a = rs.make_dominant(&mu).0;
            let b = rs.make_dominant(&-&mu).0;
            Ok((Some(mu), a == b))
        }
    }
}

/// `mu(h)` for the weights `mu` of the first fundamental representation,
/// where `h` is the grading coweight of the noncompact marks. Integral
/// values mean the Cartan involution acts on that representation with
/// eigenvalues `±1`; half-integral values mean it acts as a complex structure.
fn vector_gradings(desc: &AqDescriptor, marks: &[usize]) -> Result<Vec<Q>> {
    let rs = desc.root_system();
    let orbit = rs.weyl_orbit(&Weight::fundamental(rs.rank(), 0), DEFAULT_ORBIT_CAP)?;
    Ok(orbit
        .iter()
        .map(|mu| {
            let c = rs.root_coords(mu);
            marks.iter().map(|&i| c[i]).sum()
        })
        .collect())
}

/// Splits the weights of the first fundamental representation by the parity
/// of their grading; `None` if the grading is half-integral.
fn vector_signature(desc: &AqDescriptor, marks: &[usize]) -> Result<Option<(usize, usize)>> {
    let g = vector_gradings(desc, marks)?;
    if g.iter().any(|x| !x.is_integer()) {
        return Ok(None);
    }
    let odd = g.iter().filter(|x| x.to_integer().rem_euclid(2) == 1).count();
    Ok(Some((g.len() - odd, odd)))
}

/// The case-list row recognized from the descriptor, if any.
pub fn infer_case(desc: &AqDescriptor) -> Result<Option<&'static str>> {
    let kind = desc.form().kind();
    if matches!(kind, FormKind::GlNReal { .. } | FormKind::GlNComplex { .. }) {
        return Ok(Some("i"));
    }
    let rs = desc.root_system();
    let factors = rs.cartan_type().factors();
    if factors.len() != 1 {
        return Ok(None);
    }
    let (series, n) = (factors[0].series, factors[0].rank);
    let label = desc.form().form().label();
    if *kind == FormKind::Complex {
        let listed = match series {
            Series::A => n == 1,
            Series::B | Series::C | Series::G | Series::F => true,
            Series::D => n % 2 == 0,
            Series::E => n == 7 || n == 8,
        };
        return Ok(listed.then_some("vi"));
    }
    let marks: Vec<usize> = match kind {
        FormKind::EqualRankInner { noncompact_marks } => noncompact_marks.clone(),
        _ => Vec::new(),
    };
    let noncompact = !marks.is_empty()
        && rs
            .positive_roots()
            .iter()
            .any(|r| desc.form().is_noncompact(r) == Some(true));
    let row = match series {
        Series::G | Series::F => Some("v"),
        Series::E if n == 8 => Some("v"),
        Series::E if n == 7 && label == "ad" => Some("iv"),
        Series::B | Series::C if label == "ad" => Some("iv"),
        Series::A if n == 1 => {
            let full = desc.form().real_weyl_group() == RealWeylGroup::Full;
            // SU(2) and SO(3) compact; SO(2,1) needs K = O(2)
            match (noncompact, label) {
                (false, _) => Some("iii-a"),
                (true, "ad") if full => Some("iii-a"),
                _ => None,
            }
        }
        Series::B if label == "sc" => match vector_signature(desc, &marks)? {
            // Spin(2p, 2q+1): the odd-graded weights span the 2p-dimensional part
            Some((_, odd)) if (odd / 2) % 2 == 0 => Some("iii-b"),
            _ => None,
        },
        Series::C if label == "sc" => vector_signature(desc, &marks)?.map(|_| "iii-c"),
        Series::D if n % 2 == 0 => match (vector_signature(desc, &marks)?, label) {
            (Some((even, odd)), "sc") if (even / 2) % 2 == 0 && (odd / 2) % 2 == 0 => {
                Some("iii-d")
            }
            (Some(_), "SO(2n)") | (_, "ad") => Some("iii-d"),
            _ => None,
        },
        _ => None,
    };
    Ok(row)
}

fn verdict_from(fixed: bool, base: FieldVerdict) -> FieldVerdict {
    match base {
        FieldVerdict::Undecided => FieldVerdict::Undecided,
        FieldVerdict::F if fixed => FieldVerdict::F,
        _ => FieldVerdict::FPrime,
    }
}

/// Whether complex conjugation fixes the infinitesimal character `eta`
/// (a Weyl orbit).
fn orbit_fixed(desc: &AqDescriptor, eta: &Weight) -> Result<bool> {
    let rs = desc.root_system();
    Ok(rs.make_dominant(&desc.form().star(eta)?).0 == rs.make_dominant(eta).0)
}

pub fn field_of_definition(desc: &AqDescriptor, flags: &ArithmeticFlags) -> Result<FieldReport> {
    let cases = case_list()?;
    let mut trace = Vec::new();
    let (bottom_layer, self_dual) = bottom_layer_self_duality(desc)?;

    let case = match &flags.declared_case {
        Some(id) => {
            if cases.row(id).is_none() {
                return Err(Error::InvalidDescriptor(format!("unknown case-list row {id}")));
            }
            Some(id.clone())
        }
        None => infer_case(desc)?.map(str::to_string),
    };
    let row = case.as_deref().and_then(|id| cases.row(id));
    let forces_self_dual = row.is_some_and(|r| {
        r.forces_self_dual && (!r.borel_required || desc.parabolic().is_borel())
    });

    let base = if !self_dual {
        trace.push(RULE_NOT_SELF_DUAL.to_string());
        if forces_self_dual {
            trace.push(format!(
                "inconsistency: case-list row {} predicts a self-dual A_q(0)",
                case.as_deref().unwrap_or("?")
            ));
        }
        FieldVerdict::FPrime
    } else {
        match row {
            None => {
                trace.push(format!(
                    "undecided: no case-list row covers the {} form of type {} with label {}",
                    desc.form().kind().name(),
                    desc.root_system().cartan_type(),
                    desc.form().form().label()
                ));
                FieldVerdict::Undecided
            }
            Some(r) => {
                trace.push(format!("case-list row {} ({}): {}", r.id, r.case, r.groups));
                match flags.semi_admissible {
                    Some(true) => {
                        trace.push(RULE_DESCENT.to_string());
                        FieldVerdict::F
                    }
                    Some(false) => {
                        trace.push("undecided: K is not semi-admissible".to_string());
                        FieldVerdict::Undecided
                    }
                    None => {
                        trace.push("undecided: missing flag semi_admissible".to_string());
                        FieldVerdict::Undecided
                    }
                }
            }
        }
    };

    let lambda = desc.lambda();
    let verdict = if lambda.is_zero() {
        base
    } else if !lambda.is_integral() {
        trace.push("undecided: lambda is not integral".to_string());
        FieldVerdict::Undecided
    } else {
        let eta = lambda + &rho_u(desc);
        let star_fixed = |w: &Weight| -> Result<bool> { Ok(&desc.form().star(w)? == w) };
        if lambda.is_dominant()
            && flags.quasi_split == Some(true)
            && desc.parabolic().is_borel()
        {
            trace.push(RULE_QUASI_SPLIT_BOREL.to_string());
            verdict_from(star_fixed(lambda)?, base)
        } else if lambda.is_dominant() {
            trace.push(RULE_TRANSLATION_DOMINANT.to_string());
            verdict_from(star_fixed(lambda)? && orbit_fixed(desc, &eta)?, base)
        } else if range_check(desc).weakly_good {
            trace.push(RULE_TRANSLATION_WEAKLY_GOOD.to_string());
            let w_lambda = desc.root_system().make_dominant(lambda).0;
            verdict_from(star_fixed(&w_lambda)? && orbit_fixed(desc, &eta)?, base)
        } else {
            trace.push(
                "undecided: lambda is neither dominant nor in the weakly good range".to_string(),
            );
            FieldVerdict::Undecided
        }
    };

    Ok(FieldReport {
        verdict,
        base_verdict: base,
        bottom_layer,
        self_dual,
        case,
        rule_trace: trace,
    })
}

/// Row ids of the bundled case list that [`infer_case`] can produce.
pub fn inferred_row_ids() -> HashSet<&'static str> {
    ["i", "iii-a", "iii-b", "iii-c", "iii-d", "iv", "v", "vi"].into()
}

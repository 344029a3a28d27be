use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use aqlam::aq::{
    field_of_definition, infinitesimal_character, range_check, rho_u, s_q,
    vz_cohomology_poincare_with_cap, AqDescriptor, ArithmeticFlags, FormKind, RealFormDescriptor,
    ThetaParabolic,
};
use aqlam::character::{euler_character_with_cap, kostant_terms_with_cap, LocalizedCharacter};
use aqlam::descent::{
    suite::curated_modules, descend_if_possible, invariant_form_symmetry, local_global_check, DescentOutcome,
    ExplicitModule, Matrix, QuadElem, QuadraticField, QuaternionClass, Rat,
};
use aqlam::fs::{classify_admissible_forms, fs_indicator_compact, fs_indicator_oracle, ORACLE_DIMENSION_BOUND};
use aqlam::lattice::IsogenyForm;
use aqlam::{RootSystem, Weight, Q};

use crate::descriptor::{Descriptor, Number};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Computed by the engine.
    Engine,
    /// Read from a checked-in golden table.
    GoldenTable,
    /// Decided by a row of the bundled case list.
    CaseListData,
}

/// One line of output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Record {
    pub kind: String,
    pub query: Descriptor,
    pub result: Value,
    pub rule_trace: Vec<String>,
    pub provenance: Provenance,
}

impl Record {
    fn new(query: &Descriptor, result: Value, rule_trace: Vec<String>, provenance: Provenance) -> Self {
        debug_assert!(!rule_trace.is_empty());
        Record {
            kind: query.kind().to_string(),
            query: query.clone(),
            result,
            rule_trace,
            provenance,
        }
    }
}

/// Emitted in place of a [`Record`] when a query fails.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub query: Option<Descriptor>,
    pub error: ErrorBody,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ErrorBody {
    pub class: String,
    pub message: String,
}

pub type Outcome = Result<Vec<Record>, CliError>;

pub(crate) fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

pub fn root_system(cartan_type: &str) -> Result<RootSystem, CliError> {
    let t = cartan_type
        .parse()
        .map_err(|e: aqlam::Error| invalid(format!("cartan type {cartan_type:?}: {e}")))?;
    Ok(RootSystem::new(t)?)
}

/// 1-based indices to 0-based, checked against the rank.
fn zero_based(indices: &[usize], rank: usize, what: &str) -> Result<Vec<usize>, CliError> {
    indices
        .iter()
        .map(|&i| {
            if i == 0 || i > rank {
                Err(invalid(format!("{what} index {i} outside 1..={rank}")))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

fn parse_rational(n: &Number) -> Result<Rat, CliError> {
    n.as_text()
        .parse::<Rat>()
        .map_err(|_| invalid(format!("not a rational number: {:?}", n.as_text())))
}

fn parse_small_rational(n: &Number) -> Result<Q, CliError> {
    n.as_text()
        .parse::<Q>()
        .map_err(|_| invalid(format!("not a rational number: {:?}", n.as_text())))
}

pub fn execute(d: &Descriptor, cap: usize) -> Outcome {
    match d {
        Descriptor::ClassifyForms { max_rank } => classify(d, *max_rank),
        Descriptor::Fs { cartan_type, form, lambda, check_oracle } => {
            fs(d, cartan_type, form, lambda, *check_oracle)
        }
        Descriptor::Descend { curated, field, generators } => {
            descend(d, curated.as_deref(), *field, generators.as_ref())
        }
        Descriptor::LocalGlobal { a, b } => local_global(d, a, b),
        Descriptor::AqReport { .. } => aq_report(d, cap),
        Descriptor::Character { cartan_type, levi_subset, lambda } => {
            character(d, cartan_type, levi_subset, lambda, cap)
        }
        Descriptor::Verify { max_rank, golden_dir } => {
            crate::golden::verify_records(d, *max_rank, golden_dir.as_deref())
        }
    }
}

pub const RULE_CENTRAL_SIGN: &str =
    "self-dual irreducibles carry the sign of the central element exp(2 pi i rho-check)";
pub const RULE_NOT_SELF_DUAL: &str = "lambda differs from -w0 lambda: the indicator is 0";
pub const RULE_CLASSIFICATION_TRIVIAL: &str =
    "every Galois-fixed class of central characters has sign +1";
pub const RULE_CLASSIFICATION_NONTRIVIAL: &str =
    "some Galois-fixed class of central characters has sign -1";

fn classify(d: &Descriptor, max_rank: usize) -> Outcome {
    if max_rank == 0 {
        return Err(invalid("max_rank must be positive"));
    }
    let rows = classify_admissible_forms(max_rank)?;
    Ok(rows
        .iter()
        .map(|row| {
            let rule = if row.verdict {
                RULE_CLASSIFICATION_TRIVIAL
            } else {
                RULE_CLASSIFICATION_NONTRIVIAL
            };
            Record::new(d, to_json(row), vec![rule.into()], Provenance::Engine)
        })
        .collect())
}

fn fs(d: &Descriptor, cartan_type: &str, label: &str, lambda: &[i64], check_oracle: bool) -> Outcome {
    let rs = root_system(cartan_type)?;
    let form = IsogenyForm::from_label(&rs, label)?;
    let lambda = Weight::from_ints(lambda);
    let indicator = fs_indicator_compact(&form, &lambda)?;
    let mut result = json!({
        "indicator": indicator.value(),
        "type": indicator,
    });
    if check_oracle {
        let oracle = fs_indicator_oracle(&form, &lambda, ORACLE_DIMENSION_BOUND)?;
        result["oracle_indicator"] = json!(oracle.value());
        result["agree"] = json!(oracle == indicator);
    }
    let rule = if indicator.value() == 0 { RULE_NOT_SELF_DUAL } else { RULE_CENTRAL_SIGN };
    Ok(vec![Record::new(d, result, vec![rule.into()], Provenance::Engine)])
}

pub const RULE_RESTRICTION: &str =
    "a rational model exists exactly when the restriction of scalars is reducible";

fn quad_entry(x: &QuadElem) -> [String; 2] {
    [x.rational_part().to_string(), x.irrational_part().to_string()]
}

fn explicit_module(field: Option<i64>, generators: Option<&Vec<Vec<Vec<[Number; 2]>>>>) -> Result<ExplicitModule, CliError> {
    let d = field.ok_or_else(|| invalid("descend needs either curated or field and generators"))?;
    let generators = generators.ok_or_else(|| invalid("descend needs generators"))?;
    let k = QuadraticField::new(d)?;
    let dimension = generators
        .first()
        .map(Vec::len)
        .ok_or_else(|| invalid("descend needs at least one generator"))?;
    let mut mats = Vec::new();
    for g in generators {
        let mut rows = Vec::new();
        for row in g {
            let mut out = Vec::new();
            for [a, b] in row {
                out.push(k.element(parse_rational(a)?, parse_rational(b)?));
            }
            rows.push(out);
        }
        mats.push(Matrix::from_rows(rows, &k.zero())?);
    }
    Ok(ExplicitModule::new(k, dimension, mats, Vec::new())?)
}

fn descend(
    d: &Descriptor,
    curated: Option<&str>,
    field: Option<i64>,
    generators: Option<&Vec<Vec<Vec<[Number; 2]>>>>,
) -> Outcome {
    let module = match curated {
        Some(name) => {
            if field.is_some() || generators.is_some() {
                return Err(invalid("give either curated or field and generators, not both"));
            }
            let suite = curated_modules()?;
            match suite.iter().find(|m| m.name == name) {
                Some(m) => m.module.clone(),
                None => {
                    let names: Vec<&str> = suite.iter().map(|m| m.name.as_str()).collect();
                    return Err(invalid(format!(
                        "unknown curated module {name:?}; known: {}",
                        names.join(", ")
                    )));
                }
            }
        }
        None => explicit_module(field, generators)?,
    };
    let symmetry = invariant_form_symmetry(&module);
    let mut trace = vec![RULE_RESTRICTION.to_string()];
    let result = match descend_if_possible(&module)? {
        DescentOutcome::Model(model) => {
            trace.push("restriction reducible: the model is the image of a rational projector".into());
            let gens: Vec<Vec<Vec<String>>> = model
                .module
                .generators()
                .iter()
                .map(|g| g.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect())
                .collect();
            let basis: Vec<Vec<[String; 2]>> = model
                .change_of_basis
                .to_rows()
                .iter()
                .map(|r| r.iter().map(quad_entry).collect())
                .collect();
            json!({
                "verdict": "rational_model",
                "certificate": { "model_generators": gens, "change_of_basis": basis },
                "invariant_form": symmetry,
            })
        }
        DescentOutcome::NoModel(cert) => {
            trace.push("restriction irreducible: its commutant is a division algebra".into());
            json!({
                "verdict": "no_model",
                "certificate": cert,
                "invariant_form": symmetry,
            })
        }
    };
    Ok(vec![Record::new(d, result, trace, Provenance::Engine)])
}

pub const RULE_HILBERT: &str = "Hilbert symbols at infinity, at 2 and at the odd primes dividing ab";
pub const RULE_PRODUCT_FORMULA: &str = "product formula: the ramified set has even size";

fn local_global(d: &Descriptor, a: &Number, b: &Number) -> Outcome {
    let class = QuaternionClass::new(&parse_rational(a)?, &parse_rational(b)?)?;
    let lg = local_global_check(&class);
    let mut result = to_json(&lg);
    result["class"] = to_json(&class);
    Ok(vec![Record::new(
        d,
        result,
        vec![RULE_HILBERT.into(), RULE_PRODUCT_FORMULA.into()],
        Provenance::Engine,
    )])
}

/// Builds the engine descriptor of an `aq-report` query.
pub fn aq_descriptor(d: &Descriptor) -> Result<(AqDescriptor, bool, ArithmeticFlags), CliError> {
    let Descriptor::AqReport {
        cartan_type,
        form,
        form_kind,
        noncompact_marks,
        levi_subset,
        lambda_coords,
        real_weyl_group,
        include_center,
        arithmetic_flags,
    } = d
    else {
        return Err(invalid("not an aq-report descriptor"));
    };
    let rs = root_system(cartan_type)?;
    let n = rs.rank();
    if form_kind != "equal_rank_inner" && !noncompact_marks.is_empty() {
        return Err(invalid(format!("noncompact_marks only apply to equal_rank_inner, not {form_kind}")));
    }
    let kind = match form_kind.as_str() {
        "compact" => FormKind::Compact,
        "equal_rank_inner" => FormKind::EqualRankInner {
            noncompact_marks: zero_based(noncompact_marks, n, "noncompact mark")?,
        },
        "complex" => FormKind::Complex,
        "gl_n_real" => FormKind::GlNReal { n: n + 1 },
        "gl_n_complex" => FormKind::GlNComplex { n: n + 1 },
        other => return Err(invalid(format!("unknown form_kind {other:?}"))),
    };
    let real = RealFormDescriptor::new(kind, IsogenyForm::from_label(&rs, form)?)?
        .with_real_weyl_group(*real_weyl_group);
    let levi = zero_based(levi_subset, n, "levi")?;
    let parabolic = ThetaParabolic::new(&rs, levi)?;
    let coords = lambda_coords
        .iter()
        .map(parse_small_rational)
        .collect::<Result<Vec<_>, _>>()?;
    let desc = AqDescriptor::new(real, parabolic, Weight::new(coords))?;
    Ok((desc, *include_center, arithmetic_flags.clone()))
}

pub const RULE_COHOMOLOGY: &str =
    "relative Lie algebra cohomology of A_q(lambda) starts in degree S_q = dim(u and p)";

fn aq_report(d: &Descriptor, cap: usize) -> Outcome {
    let (desc, include_center, flags) = aq_descriptor(d)?;
    let poincare = vz_cohomology_poincare_with_cap(&desc, include_center, cap)?;
    let field = field_of_definition(&desc, &flags)?;
    let mut trace = vec![RULE_COHOMOLOGY.to_string()];
    trace.extend(field.rule_trace.iter().cloned());
    let provenance = if field.case.is_some() {
        Provenance::CaseListData
    } else {
        Provenance::Engine
    };
    let result = json!({
        "S_q": s_q(&desc)?,
        "rho_u": rho_u(&desc),
        "range": range_check(&desc),
        "infinitesimal_character": infinitesimal_character(&desc),
        "poincare_polynomial": {
            "coefficients": poincare.coefficients(),
            "text": poincare.render(),
        },
        "field_of_definition": field,
    });
    Ok(vec![Record::new(d, result, trace, provenance)])
}

pub const RULE_KOSTANT: &str =
    "Kostant: H^q(u, V_lambda) is the sum over minimal coset representatives w of length q of the Levi irreducible with highest weight w(lambda + rho) - rho";
pub const RULE_C_Q: &str = "c_q is the Euler character of u-cohomology over the Weyl denominator of q";

fn character(d: &Descriptor, cartan_type: &str, levi: &[usize], lambda: &[i64], cap: usize) -> Outcome {
    let rs = root_system(cartan_type)?;
    let levi = zero_based(levi, rs.rank(), "levi")?;
    let lambda = Weight::from_ints(lambda);
    lambda.require_rank(rs.rank())?;
    let terms = kostant_terms_with_cap(&rs, &levi, &lambda, cap)?;
    let numerator = euler_character_with_cap(&rs, &levi, &lambda, cap)?;
    let denominator = euler_character_with_cap(&rs, &levi, &Weight::zero(rs.rank()), cap)?;
    let c = LocalizedCharacter::new(numerator, denominator)?;
    let result = json!({
        "kostant_terms": terms,
        "numerator": c.numerator(),
        "denominator": c.denominator(),
    });
    Ok(vec![Record::new(d, result, vec![RULE_KOSTANT.into(), RULE_C_Q.into()], Provenance::Engine)])
}

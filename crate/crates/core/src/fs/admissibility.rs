//! A small rule engine deciding admissibility of a number-field model of a
//! compact group from supplied arithmetic facts.

use serde::{Deserialize, Serialize};

use super::beta::form_has_no_quaternionic;
use crate::error::Result;
use crate::lattice::IsogenyForm;
use crate::root_core::{RootSystem, SimpleType};

/// A factor of the derived group (or a torus / unitary group).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FactorType {
    Simple { cartan_type: SimpleType, form: String },
    Unitary { n: usize },
    Torus { rank: usize },
}

/// Arithmetic facts about the model; `None` means not supplied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub class_s: Option<bool>,
    pub anisotropic_at_ramified_archimedean: Option<bool>,
    pub quasi_split_finite_except_one: Option<bool>,
    pub factors: Option<Vec<FactorType>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Admissibility {
    Admissible,
    SemiAdmissible,
    Neither,
    Undetermined { missing: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub verdict: Admissibility,
    /// Names of the rules that fired.
    pub rule_trace: Vec<String>,
}

pub const RULE_SEMI_ADMISSIBLE: &str =
    "semi-admissibility: class S, anisotropic at ramified real places, quasi-split at all but one finite place";
pub const RULE_UNCONDITIONAL: &str =
    "unconditional admissibility: class S, anisotropic, factors with center of odd order";
pub const RULE_UNITARY: &str =
    "unitary groups: anisotropic, factors unitary or with center of odd order";
pub const RULE_SEMI_TO_ADMISSIBLE: &str =
    "semi-admissible with no quaternionic irreducibles of the identity component";

// Three-valued conjunction.
fn and(xs: &[Option<bool>]) -> Option<bool> {
    if xs.iter().any(|x| *x == Some(false)) {
        Some(false)
    } else if xs.iter().all(|x| x.is_some()) {
        Some(true)
    } else {
        None
    }
}

fn factor_form(t: &SimpleType, label: &str) -> Result<IsogenyForm> {
    let rs = RootSystem::new((*t).into())?;
    IsogenyForm::from_label(&rs, label)
}

fn all_factors<F>(factors: Option<&Vec<FactorType>>, mut ok: F) -> Result<Option<bool>>
where
    F: FnMut(&FactorType) -> Result<bool>,
{
    let Some(list) = factors else {
        return Ok(None);
    };
    for f in list {
        if !ok(f)? {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

pub fn admissibility_report(desc: &GroupDescriptor) -> Result<AdmissibilityReport> {
    let factors = desc.factors.as_ref();
    let odd_center = all_factors(factors, |f| match f {
        FactorType::Simple { cartan_type, form } => {
            Ok(factor_form(cartan_type, form)?.center_order() % 2 == 1)
        }
        FactorType::Torus { .. } => Ok(true),
        FactorType::Unitary { .. } => Ok(false),
    })?;
    let unitary_or_odd = all_factors(factors, |f| match f {
        FactorType::Simple { cartan_type, form } => {
            Ok(factor_form(cartan_type, form)?.center_order() % 2 == 1)
        }
        FactorType::Torus { .. } | FactorType::Unitary { .. } => Ok(true),
    })?;
    // Self-dual weights of U(n) lie in the root lattice, so unitary factors
    // carry no quaternionic irreducibles either.
    let no_quaternionic = all_factors(factors, |f| match f {
        FactorType::Simple { cartan_type, form } => {
            form_has_no_quaternionic(&factor_form(cartan_type, form)?)
        }
        FactorType::Torus { .. } | FactorType::Unitary { .. } => Ok(true),
    })?;

    let cs = desc.class_s;
    let an = desc.anisotropic_at_ramified_archimedean;
    let qs = desc.quasi_split_finite_except_one;

    let semi = and(&[cs, an, qs]);
    let rules: [(&str, Option<bool>, Vec<(&str, Option<bool>)>); 3] = [
        (
            RULE_UNCONDITIONAL,
            and(&[cs, an, odd_center]),
            vec![("class_s", cs), ("anisotropic_at_ramified_archimedean", an), ("factors", odd_center)],
        ),
        (
            RULE_UNITARY,
            and(&[an, unitary_or_odd]),
            vec![("anisotropic_at_ramified_archimedean", an), ("factors", unitary_or_odd)],
        ),
        (
            RULE_SEMI_TO_ADMISSIBLE,
            and(&[semi, cs, no_quaternionic]),
            vec![
                ("class_s", cs),
                ("anisotropic_at_ramified_archimedean", an),
                ("quasi_split_finite_except_one", qs),
                ("factors", no_quaternionic),
            ],
        ),
    ];

    let mut trace = Vec::new();
    if semi == Some(true) {
        trace.push(RULE_SEMI_ADMISSIBLE.to_string());
    }
    let fired: Vec<&str> = rules
        .iter()
        .filter(|(_, v, _)| *v == Some(true))
        .map(|(name, _, _)| *name)
        .collect();
    if !fired.is_empty() {
        trace.extend(fired.iter().map(|s| s.to_string()));
        return Ok(AdmissibilityReport {
            verdict: Admissibility::Admissible,
            rule_trace: trace,
        });
    }

    let mut missing: Vec<String> = Vec::new();
    let mut note_missing = |facts: &[(&str, Option<bool>)]| {
        for (name, v) in facts {
            if v.is_none() && !missing.iter().any(|m| m == name) {
                missing.push(name.to_string());
            }
        }
    };
    for (_, v, facts) in &rules {
        if v.is_none() {
            note_missing(facts);
        }
    }
    if semi == Some(true) {
        // only an admissibility upgrade could still be missing
        if missing.is_empty() {
            return Ok(AdmissibilityReport {
                verdict: Admissibility::SemiAdmissible,
                rule_trace: trace,
            });
        }
        trace.push(format!("admissibility undecided, missing: {}", missing.join(", ")));
        return Ok(AdmissibilityReport {
            verdict: Admissibility::SemiAdmissible,
            rule_trace: trace,
        });
    }
    if semi.is_none() {
        note_missing(&[
            ("class_s", cs),
            ("anisotropic_at_ramified_archimedean", an),
            ("quasi_split_finite_except_one", qs),
        ]);
    }
    if !missing.is_empty() {
        trace.push(format!("missing facts: {}", missing.join(", ")));
        return Ok(AdmissibilityReport {
            verdict: Admissibility::Undetermined { missing },
            rule_trace: trace,
        });
    }
    let mut failed = Vec::new();
    if an == Some(false) {
        failed.push("not anisotropic at a ramified real place");
    }
    if cs == Some(false) {
        failed.push("not of class S");
    }
    if qs == Some(false) {
        failed.push("not quasi-split at almost all finite places");
    }
    if failed.is_empty() {
        failed.push("factor types outside every admissible list");
    }
    trace.push(format!("no rule applies: {}", failed.join("; ")));
    Ok(AdmissibilityReport {
        verdict: Admissibility::Neither,
        rule_trace: trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_core::Series;

    fn simple(s: Series, n: usize, form: &str) -> FactorType {
        FactorType::Simple {
            cartan_type: SimpleType::new(s, n).unwrap(),
            form: form.into(),
        }
    }

    #[test]
    fn orthogonal_model_is_admissible() {
        for factor in [simple(Series::B, 3, "ad"), simple(Series::D, 4, "SO(2n)")] {
            let d = GroupDescriptor {
                class_s: Some(true),
                anisotropic_at_ramified_archimedean: Some(true),
                quasi_split_finite_except_one: Some(true),
                factors: Some(vec![factor]),
            };
            let r = admissibility_report(&d).unwrap();
            assert_eq!(r.verdict, Admissibility::Admissible);
            assert!(r.rule_trace.iter().any(|s| s == RULE_SEMI_TO_ADMISSIBLE));
        }
    }

    #[test]
    fn unitary_model_is_admissible() {
        let d = GroupDescriptor {
            anisotropic_at_ramified_archimedean: Some(true),
            factors: Some(vec![FactorType::Unitary { n: 3 }]),
            ..Default::default()
        };
        let r = admissibility_report(&d).unwrap();
        assert_eq!(r.verdict, Admissibility::Admissible);
        assert_eq!(r.rule_trace, vec![RULE_UNITARY.to_string()]);
    }

    #[test]
    fn isotropic_is_neither() {
        let d = GroupDescriptor {
            class_s: Some(true),
            anisotropic_at_ramified_archimedean: Some(false),
            quasi_split_finite_except_one: Some(true),
            factors: Some(vec![simple(Series::G, 2, "unique")]),
        };
        assert_eq!(admissibility_report(&d).unwrap().verdict, Admissibility::Neither);
    }

    #[test]
    fn missing_facts_are_listed() {
        let d = GroupDescriptor {
            class_s: Some(true),
            ..Default::default()
        };
        match admissibility_report(&d).unwrap().verdict {
            Admissibility::Undetermined { missing } => {
                assert!(missing.contains(&"anisotropic_at_ramified_archimedean".to_string()));
                assert!(missing.contains(&"factors".to_string()));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn symplectic_sc_only_semi_admissible() {
        let d = GroupDescriptor {
            class_s: Some(true),
            anisotropic_at_ramified_archimedean: Some(true),
            quasi_split_finite_except_one: Some(true),
            factors: Some(vec![simple(Series::C, 2, "sc")]),
        };
        assert_eq!(
            admissibility_report(&d).unwrap().verdict,
            Admissibility::SemiAdmissible
        );
    }
}

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::indicator::{central_sign, dominant_weights_up_to};
use crate::error::{Error, Result};
use crate::galois::{delta_tau_class, is_selfdual};
use crate::lattice::{isogeny_forms, GroupElement, IsogenyForm};
use crate::root_core::{CartanType, RootSystem, SimpleType, Weight};

/// Coordinate-sum bound for the search of self-dual representatives.
pub const REPRESENTATIVE_SEARCH_BOUND: i64 = 4;

#[derive(Clone, Debug)]
pub struct BetaEntry {
    pub value: i8,
    /// The self-dual dominant weights in the class on which the value was checked.
    pub representatives: Vec<Weight>,
}

#[derive(Clone, Debug)]
pub struct BetaMap {
    /// Galois-fixed classes of the form's character subgroup.
    pub entries: BTreeMap<GroupElement, BetaEntry>,
    pub is_homomorphism: bool,
}

impl BetaMap {
    pub fn is_trivial(&self) -> bool {
        self.entries.values().all(|e| e.value == 1)
    }

    /// A class on which the map is nontrivial, with a representative.
    pub fn witness(&self) -> Option<(&GroupElement, &Weight)> {
        self.entries
            .iter()
            .find(|(_, e)| e.value == -1)
            .map(|(c, e)| (c, &e.representatives[0]))
    }
}

/// The sign of self-dual irreducibles on each Galois-fixed class of the
/// form's character group. Every value is checked on at least two representatives.
pub fn beta_map(form: &IsogenyForm) -> Result<BetaMap> {
    beta_map_with_bound(form, REPRESENTATIVE_SEARCH_BOUND)
}

pub fn beta_map_with_bound(form: &IsogenyForm, bound: i64) -> Result<BetaMap> {
    let rs = form.root_system();
    let q = form.quotient();
    let group = q.group();
    let fixed: Vec<GroupElement> = form
        .subgroup()
        .iter()
        .filter(|c| &delta_tau_class(rs, q, c) == *c)
        .cloned()
        .collect();

    let mut reps: BTreeMap<GroupElement, Vec<Weight>> =
        fixed.iter().map(|c| (c.clone(), Vec::new())).collect();
    for lambda in dominant_weights_up_to(rs.rank(), bound) {
        let class = q.class_of(&lambda)?;
        if let Some(list) = reps.get_mut(&class) {
            if list.len() < 2 && is_selfdual(rs, &lambda)? {
                list.push(lambda);
            }
        }
        if reps.values().all(|l| l.len() >= 2) {
            break;
        }
    }

    let mut entries = BTreeMap::new();
    for (class, list) in reps {
        if list.len() < 2 {
            return Err(Error::NoSelfDualRepresentative {
                class: format!("{class:?}"),
                bound,
            });
        }
        let signs: Vec<i8> = list.iter().map(|l| central_sign(rs, l)).collect();
        if signs.iter().any(|&s| s != signs[0]) {
            return Err(Error::InconsistentMultiplicity(format!(
                "sign not constant on class {class:?}"
            )));
        }
        entries.insert(
            class,
            BetaEntry {
                value: signs[0],
                representatives: list,
            },
        );
    }
    let is_homomorphism = entries.iter().all(|(x, ex)| {
        entries.iter().all(|(y, ey)| {
            let sum = group.add(x, y);
            entries
                .get(&sum)
                .map_or(true, |es| es.value == ex.value * ey.value)
        })
    });
    Ok(BetaMap {
        entries,
        is_homomorphism,
    })
}

/// One row of the classification of compact forms without quaternionic
/// irreducibles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub series: char,
    pub rank: usize,
    pub rank_residue: usize,
    pub form_label: String,
    pub center_order: usize,
    /// No irreducible representation is quaternionic.
    pub verdict: bool,
}

/// Every simple type of rank at most `max_rank` and each of its isogeny forms.
pub fn classify_admissible_forms(max_rank: usize) -> Result<Vec<ClassificationRow>> {
    let mut rows = Vec::new();
    for t in CartanType::simple_types_up_to(max_rank) {
        let rs = RootSystem::new(t.into())?;
        for form in isogeny_forms(&rs) {
            let beta = beta_map(&form)?;
            rows.push(row(t, &form, beta.is_trivial()));
        }
    }
    Ok(rows)
}

fn row(t: SimpleType, form: &IsogenyForm, verdict: bool) -> ClassificationRow {
    ClassificationRow {
        series: t.series.letter(),
        rank: t.rank,
        rank_residue: t.rank % 4,
        form_label: form.label().to_string(),
        center_order: form.center_order(),
        verdict,
    }
}

/// The stronger list used for unconditional admissibility: forms whose center
/// has no element of order two.
pub fn unconditional_form_table(max_rank: usize) -> Result<Vec<ClassificationRow>> {
    let mut rows = Vec::new();
    for t in CartanType::simple_types_up_to(max_rank) {
        let rs = RootSystem::new(t.into())?;
        for form in isogeny_forms(&rs) {
            rows.push(row(t, &form, form.center_order() % 2 == 1));
        }
    }
    Ok(rows)
}

/// Whether a simple factor is of a kind with no quaternionic irreducibles.
pub fn form_has_no_quaternionic(form: &IsogenyForm) -> Result<bool> {
    Ok(beta_map(form)?.is_trivial())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn d6_beta() {
        let d6 = rs("D6");
        let sc = IsogenyForm::simply_connected(&d6);
        let beta = beta_map(&sc).unwrap();
        assert!(beta.is_homomorphism);
        let q = sc.quotient();
        let class = |i| q.class_of(&Weight::fundamental(6, i)).unwrap();
        assert_eq!(beta.entries[&q.group().identity()].value, 1);
        assert_eq!(beta.entries[&class(4)].value, -1);
        assert_eq!(beta.entries[&class(5)].value, -1);
        assert_eq!(beta.entries[&class(0)].value, 1);
    }

    #[test]
    fn small_verdicts() {
        let rows = classify_admissible_forms(3).unwrap();
        let find = |s: char, n: usize, l: &str| {
            rows.iter()
                .find(|r| r.series == s && r.rank == n && r.form_label == l)
                .unwrap_or_else(|| panic!("{s}{n} {l}"))
                .verdict
        };
        assert!(find('A', 3, "sc"));
        assert!(find('A', 3, "ad"));
        assert!(!find('C', 3, "sc"));
        assert!(find('C', 3, "ad"));
        assert!(!find('A', 1, "sc"));
        assert!(!find('B', 2, "sc"));
    }

    #[test]
    fn e8_unique_form() {
        let e8 = rs("E8");
        let forms = isogeny_forms(&e8);
        assert_eq!(forms.len(), 1);
        assert_eq!(forms[0].label(), "unique");
        assert!(beta_map(&forms[0]).unwrap().is_trivial());
    }
}

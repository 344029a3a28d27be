//! `u`-cohomology of finite-dimensional modules and the localized character
//! map, by Kostant's theorem.

use std::collections::HashMap;

use serde::Serialize;

use super::ring::{CharacterElement, LocalizedCharacter};
use crate::error::{Error, Result};
use crate::root_core::{RootSystem, Weight, WeylWord, DEFAULT_ORBIT_CAP};

/// One Levi-irreducible constituent of `H^q(u, V_lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostantTerm {
    pub degree: usize,
    pub highest_weight: Weight,
    #[serde(skip)]
    pub word: WeylWord,
}

fn check_levi(rs: &RootSystem, levi: &[usize]) -> Result<()> {
    match levi.iter().find(|&&i| i >= rs.rank()) {
        Some(&i) => Err(Error::LetterOutOfRange {
            index: i,
            rank: rs.rank(),
        }),
        None => Ok(()),
    }
}

fn check_dominant_integral(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    lambda.require_rank(rs.rank())?;
    if !lambda.is_integral() {
        return Err(Error::NotIntegral(lambda.to_string()));
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

/// Minimal-length representatives `w` of `W_l \ W`, read off the regular
/// orbit of `rho`: `w` qualifies when `w rho` is dominant for the Levi.
/// Returned with their lengths.
pub fn minimal_coset_representatives(
    rs: &RootSystem,
    levi: &[usize],
    cap: usize,
) -> Result<Vec<(WeylWord, usize)>> {
    check_levi(rs, levi)?;
    if rs.weyl_group_order() > cap as u128 {
        return Err(Error::OrbitCapExceeded { cap });
    }
    let orbit: HashMap<Weight, WeylWord> = rs.weyl_orbit_with_words(rs.rho(), cap)?;
    let mut reps: Vec<(Weight, WeylWord)> = orbit
        .into_iter()
        .filter(|(w_rho, _)| levi.iter().all(|&i| w_rho.coord(i) > 0.into()))
        .collect();
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(reps
        .into_iter()
        .map(|(_, w)| {
            let l = w.len();
            (w, l)
        })
        .collect())
}

/// The constituents `w(lambda + rho) - rho`, `w` in `W^l`, of `H^*(u, V_lambda)`.
pub fn kostant_terms(rs: &RootSystem, levi: &[usize], lambda: &Weight) -> Result<Vec<KostantTerm>> {
    kostant_terms_with_cap(rs, levi, lambda, DEFAULT_ORBIT_CAP)
}

pub fn kostant_terms_with_cap(
    rs: &RootSystem,
    levi: &[usize],
    lambda: &Weight,
    cap: usize,
) -> Result<Vec<KostantTerm>> {
    check_dominant_integral(rs, lambda)?;
    let shifted = lambda + rs.rho();
    let mut out = Vec::new();
    for (word, degree) in minimal_coset_representatives(rs, levi, cap)? {
        let highest_weight = &rs.weyl_act(&word, &shifted)? - rs.rho();
        out.push(KostantTerm {
            degree,
            highest_weight,
            word,
        });
    }
    out.sort_by(|a, b| (a.degree, &a.highest_weight).cmp(&(b.degree, &b.highest_weight)));
    Ok(out)
}

fn levi_character(rs: &RootSystem, levi: &[usize], mu: &Weight, cap: usize) -> Result<CharacterElement> {
    Ok(CharacterElement::from_multiplicities(
        rs.rank(),
        &rs.levi_character(levi, mu, cap)?,
    ))
}

/// Torus character of `H^q(u, V_lambda)`; zero outside `[0, |Δ(u)|]`.
pub fn kostant_u_cohomology(
    rs: &RootSystem,
    levi: &[usize],
    lambda: &Weight,
    q: usize,
) -> Result<CharacterElement> {
    let mut out = CharacterElement::zero(rs.rank());
    for t in kostant_terms(rs, levi, lambda)?.iter().filter(|t| t.degree == q) {
        out = &out + &levi_character(rs, levi, &t.highest_weight, DEFAULT_ORBIT_CAP)?;
    }
    Ok(out)
}

/// `sum_q (-1)^q H^q(u, V_lambda)`.
pub fn euler_character(rs: &RootSystem, levi: &[usize], lambda: &Weight) -> Result<CharacterElement> {
    euler_character_with_cap(rs, levi, lambda, DEFAULT_ORBIT_CAP)
}

pub fn euler_character_with_cap(
    rs: &RootSystem,
    levi: &[usize],
    lambda: &Weight,
    cap: usize,
) -> Result<CharacterElement> {
    let mut out = CharacterElement::zero(rs.rank());
    for t in kostant_terms_with_cap(rs, levi, lambda, cap)? {
        let ch = levi_character(rs, levi, &t.highest_weight, cap)?;
        out = if t.degree % 2 == 0 { &out + &ch } else { &out - &ch };
    }
    Ok(out)
}

/// The Weyl denominator relative to `q`: the Euler character of the trivial module.
pub fn weyl_denominator(rs: &RootSystem, levi: &[usize]) -> Result<CharacterElement> {
    euler_character(rs, levi, &Weight::zero(rs.rank()))
}

/// `c_q(V_lambda) = H_q(V_lambda) / W_q`.
pub fn c_q(rs: &RootSystem, levi: &[usize], lambda: &Weight) -> Result<LocalizedCharacter> {
    LocalizedCharacter::new(euler_character(rs, levi, lambda)?, weyl_denominator(rs, levi)?)
}

/// Full torus character of `V_lambda` from Freudenthal's formula.
pub fn irreducible_character(rs: &RootSystem, lambda: &Weight) -> Result<CharacterElement> {
    check_dominant_integral(rs, lambda)?;
    Ok(CharacterElement::from_multiplicities(
        rs.rank(),
        &rs.freudenthal_multiplicities(lambda, DEFAULT_ORBIT_CAP)?,
    ))
}

/// `sum_q (-1)^q [∧^q u^* ⊗ V_lambda]` as a torus character, expanded
/// directly from the weights `-alpha`, `alpha` in `Δ(u)`. This does not use
/// Kostant's theorem.
pub fn exterior_u_dual_euler(
    rs: &RootSystem,
    levi: &[usize],
    lambda: &Weight,
) -> Result<CharacterElement> {
    check_levi(rs, levi)?;
    let n = rs.rank();
    // ∧^q u^* by subsets, accumulated with signs
    let mut exterior = CharacterElement::one(n);
    for r in rs.positive_roots().iter().filter(|r| !r.supported_on(levi)) {
        let factor = CharacterElement::from_terms(n, [(Weight::zero(n), 1), (-r.weight(), -1)])?;
        exterior = &exterior * &factor;
    }
    Ok(&exterior * &irreducible_character(rs, lambda)?)
}

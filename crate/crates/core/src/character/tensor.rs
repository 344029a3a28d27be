//! Decomposition of characters into irreducibles by repeated extraction of
//! highest weights.

use std::collections::BTreeMap;

use super::kostant::{c_q, irreducible_character};
use super::ring::{CharacterElement, LocalizedCharacter};
use crate::error::{Error, Result};
use crate::root_core::{RootSystem, Weight};

/// Multiplicities of the irreducibles in a Weyl-invariant virtual character.
pub fn decompose(rs: &RootSystem, ch: &CharacterElement) -> Result<BTreeMap<Weight, i128>> {
    let mut rest = ch.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        // a dominant weight of maximal height is a highest weight
        let top = rest
            .terms()
            .keys()
            .filter(|w| w.is_dominant())
            .max_by_key(|w| rs.two_rho_check_pairing(w))
            .cloned()
            .ok_or_else(|| {
                Error::InvalidDescriptor("character is not Weyl-invariant".into())
            })?;
        let c = rest.coefficient(&top);
        rest = &rest - &irreducible_character(rs, &top)?.scale(c);
        out.insert(top, c);
    }
    Ok(out)
}

/// `V_lambda ⊗ V_mu` as a sum of irreducibles.
pub fn tensor_decomposition(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeMap<Weight, i128>> {
    let product = &irreducible_character(rs, lambda)? * &irreducible_character(rs, mu)?;
    decompose(rs, &product)
}

/// `c_q` extended additively to a sum of irreducibles.
pub fn c_q_of_sum(
    rs: &RootSystem,
    levi: &[usize],
    parts: &BTreeMap<Weight, i128>,
) -> Result<LocalizedCharacter> {
    let mut numerator = CharacterElement::zero(rs.rank());
    let denominator = super::kostant::weyl_denominator(rs, levi)?;
    for (nu, &m) in parts {
        let c = c_q(rs, levi, nu)?;
        numerator = &numerator + &c.numerator().scale(m);
    }
    LocalizedCharacter::new(numerator, denominator)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clebsch_gordan() {
        let a1 = RootSystem::new("A1".parse().unwrap()).unwrap();
        let d = tensor_decomposition(&a1, &Weight::from_ints(&[2]), &Weight::from_ints(&[3])).unwrap();
        let expected: BTreeMap<Weight, i128> =
            [1, 3, 5].iter().map(|&k| (Weight::from_ints(&[k]), 1)).collect();
        assert_eq!(d, expected);
    }

    #[test]
    fn a2_fundamental_product() {
        // 3 ⊗ 3* = 8 + 1
        let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
        let d = tensor_decomposition(&a2, &Weight::from_ints(&[1, 0]), &Weight::from_ints(&[0, 1]))
            .unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[&Weight::from_ints(&[1, 1])], 1);
        assert_eq!(d[&Weight::zero(2)], 1);
    }
}

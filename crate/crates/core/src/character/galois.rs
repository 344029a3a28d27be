//! Complex conjugation on characters and on parabolics.

use super::kostant::c_q;
use super::ring::{CharacterElement, LocalizedCharacter};
use crate::error::Result;
use crate::galois::delta_tau;
use crate::root_core::{RootSystem, Weight};

/// `-w0` applied to every term.
pub fn galois_twist_character(rs: &RootSystem, x: &CharacterElement) -> CharacterElement {
    x.map_weights(|w| delta_tau(rs, w).expect("rank matches"))
}

pub fn galois_twist_localized(rs: &RootSystem, x: &LocalizedCharacter) -> LocalizedCharacter {
    x.map_weights(|w| delta_tau(rs, w).expect("rank matches"))
}

/// The Levi of the conjugate parabolic: its simple roots moved by the
/// diagram involution of `-w0`.
pub fn conjugate_levi(rs: &RootSystem, levi: &[usize]) -> Vec<usize> {
    let sigma = rs.diagram_involution();
    let mut out: Vec<usize> = levi.iter().map(|&i| sigma[i]).collect();
    out.sort_unstable();
    out
}

/// Both sides of the commuting square: the twist of `c_q(lambda)`, and
/// `c_{conj q}` of the twisted weight.
pub fn commuting_square(
    rs: &RootSystem,
    levi: &[usize],
    lambda: &Weight,
) -> Result<(LocalizedCharacter, LocalizedCharacter)> {
    let left = galois_twist_localized(rs, &c_q(rs, levi, lambda)?);
    let right = c_q(rs, &conjugate_levi(rs, levi), &delta_tau(rs, lambda)?)?;
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::irreducible_character;

    #[test]
    fn a2_swaps_fundamental_characters() {
        let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
        let v1 = irreducible_character(&a2, &Weight::from_ints(&[1, 0])).unwrap();
        let v2 = irreducible_character(&a2, &Weight::from_ints(&[0, 1])).unwrap();
        assert_eq!(galois_twist_character(&a2, &v1), v2);
        let adj = irreducible_character(&a2, &Weight::from_ints(&[1, 1])).unwrap();
        assert_eq!(galois_twist_character(&a2, &adj), adj);
    }

    #[test]
    fn square_commutes_for_a_non_symmetric_levi() {
        let a3 = RootSystem::new("A3".parse().unwrap()).unwrap();
        assert_eq!(conjugate_levi(&a3, &[0]), vec![2]);
        let (l, r) = commuting_square(&a3, &[0], &Weight::from_ints(&[0, 1, 2])).unwrap();
        assert_eq!(l, r);
        assert_eq!(l.numerator(), r.numerator());
    }
}

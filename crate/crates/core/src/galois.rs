//! Complex conjugation acting on weights through `-w0`, and on infinitesimal
//! characters viewed as Weyl orbits.

use crate::error::Result;
use crate::lattice::{GroupElement, LatticeQuotient};
use crate::root_core::{RootSystem, Weight};

/// `-w0(lambda)`.
pub fn delta_tau(rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
    Ok(-rs.weyl_act(rs.longest_word(), lambda)?)
}

/// Whether the irreducible of highest weight `lambda` is self-dual.
pub fn is_selfdual(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    Ok(&delta_tau(rs, lambda)? == lambda)
}

/// Action induced on `Lambda / Lambda_0`.
pub fn delta_tau_class(rs: &RootSystem, q: &LatticeQuotient, class: &[i64]) -> GroupElement {
    let rep = crate::lattice::minimal_representative(rs, q, class);
    let image = delta_tau(rs, &rep).expect("rank matches");
    q.class_of(&image).expect("integral")
}

/// An infinitesimal character, stored as the `W`-orbit of a rho-shifted parameter.
#[derive(Clone, Debug)]
pub struct InfinitesimalCharacter<'a> {
    rs: &'a RootSystem,
    representative: Weight,
}

impl<'a> InfinitesimalCharacter<'a> {
    /// The character with parameter `lambda + rho`.
    pub fn of_highest_weight(rs: &'a RootSystem, lambda: &Weight) -> Result<Self> {
        lambda.require_rank(rs.rank())?;
        Ok(InfinitesimalCharacter {
            rs,
            representative: lambda + rs.rho(),
        })
    }

    /// The character with the given (already shifted) parameter.
    pub fn from_parameter(rs: &'a RootSystem, parameter: Weight) -> Result<Self> {
        parameter.require_rank(rs.rank())?;
        Ok(InfinitesimalCharacter {
            rs,
            representative: parameter,
        })
    }

    pub fn representative(&self) -> &Weight {
        &self.representative
    }

    /// The dominant point of the orbit.
    pub fn dominant(&self) -> Weight {
        self.rs.make_dominant(&self.representative).0
    }

    /// Conjugate character: parameter `-w0` applied to the representative.
    pub fn twist(&self) -> Self {
        InfinitesimalCharacter {
            rs: self.rs,
            representative: delta_tau(self.rs, &self.representative).expect("rank matches"),
        }
    }
}

impl PartialEq for InfinitesimalCharacter<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.dominant() == other.dominant()
    }
}

impl Eq for InfinitesimalCharacter<'_> {}

pub fn twist_infinitesimal_character<'a>(
    chi: &InfinitesimalCharacter<'a>,
) -> InfinitesimalCharacter<'a> {
    chi.twist()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_core::WeylWord;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn rho_is_fixed() {
        for t in crate::CartanType::simple_types_up_to(8) {
            let r = RootSystem::new(t.into()).unwrap();
            assert_eq!(&delta_tau(&r, r.rho()).unwrap(), r.rho());
        }
    }

    #[test]
    fn a2_swaps_fundamental_weights() {
        let a2 = rs("A2");
        assert_eq!(
            delta_tau(&a2, &Weight::fundamental(2, 0)).unwrap(),
            Weight::fundamental(2, 1)
        );
        assert!(!is_selfdual(&a2, &Weight::fundamental(2, 0)).unwrap());
        assert!(is_selfdual(&a2, &Weight::zero(2)).unwrap());
        let chi = InfinitesimalCharacter::of_highest_weight(&a2, &Weight::fundamental(2, 0)).unwrap();
        let expected =
            InfinitesimalCharacter::of_highest_weight(&a2, &Weight::fundamental(2, 1)).unwrap();
        assert_eq!(twist_infinitesimal_character(&chi), expected);
    }

    #[test]
    fn b2_and_a1_are_self_dual() {
        let b2 = rs("B2");
        let l = Weight::from_ints(&[3, 5]);
        assert_eq!(delta_tau(&b2, &l).unwrap(), l);
        let a1 = rs("A1");
        assert!(is_selfdual(&a1, &Weight::from_ints(&[4])).unwrap());
    }

    #[test]
    fn twist_respects_orbit_equality() {
        let a3 = rs("A3");
        let l = Weight::from_ints(&[2, 0, 1]);
        let chi = InfinitesimalCharacter::of_highest_weight(&a3, &l).unwrap();
        let moved = a3
            .weyl_act(&WeylWord::new(vec![0, 2, 1]), chi.representative())
            .unwrap();
        let other = InfinitesimalCharacter::from_parameter(&a3, moved).unwrap();
        assert_eq!(chi, other);
        assert_eq!(chi.twist(), other.twist());
    }
}

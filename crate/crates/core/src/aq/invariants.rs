//! Numerical invariants of `A_q(lambda)`: `rho(u)`, the middle degree, the
//! ranges of `lambda` and the infinitesimal character.

use num_traits::Signed;
use serde::Serialize;

use super::form::{AqDescriptor, FormKind};
use crate::error::{Error, Result};
use crate::root_core::{Root, RootSystem, Weight, Q};

fn half_sum<'r>(rs: &RootSystem, roots: impl IntoIterator<Item = &'r Root>) -> Weight {
    roots
        .into_iter()
        .fold(Weight::zero(rs.rank()), |acc, r| &acc + r.weight())
        .scale(Q::new(1, 2))
}

pub fn rho_u(desc: &AqDescriptor) -> Weight {
    let rs = desc.root_system();
    half_sum(rs, desc.parabolic().u_roots(rs))
}

/// Half the sum of the positive roots of the Levi.
pub fn rho_levi(desc: &AqDescriptor) -> Weight {
    let rs = desc.root_system();
    half_sum(rs, desc.parabolic().levi_positive_roots(rs))
}

/// `S_q = dim(u ∩ p)`.
pub fn s_q(desc: &AqDescriptor) -> Result<usize> {
    let rs = desc.root_system();
    let u = desc.parabolic().u_roots(rs);
    match desc.form().kind() {
        FormKind::Compact | FormKind::EqualRankInner { .. } => Ok(u
            .iter()
            .filter(|r| desc.form().is_noncompact(r) == Some(true))
            .count()),
        FormKind::Complex => Ok(u.len()),
        FormKind::GlNReal { n } => {
            if desc.parabolic().is_borel() {
                // (dim of the symmetric space - (rank G - rank K)) / 2
                Ok((n * (n + 1) / 2 - n.div_ceil(2)) / 2)
            } else {
                Ok(0)
            }
        }
        FormKind::GlNComplex { n } => {
            if desc.parabolic().is_borel() {
                Ok(n * (n - 1) / 2)
            } else {
                Ok(0)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Range {
    Good,
    WeaklyGood,
    Fair,
    WeaklyFair,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RangeReport {
    pub good: bool,
    pub weakly_good: bool,
    pub fair: bool,
    pub weakly_fair: bool,
    pub strongest: Range,
}

/// Signs of `<lambda + rho(u), alpha>` over all positive roots (good ranges)
/// and over the roots of `u` (fair ranges).
pub fn range_check(desc: &AqDescriptor) -> RangeReport {
    let rs = desc.root_system();
    let shifted = desc.lambda() + &rho_u(desc);
    let pairing = |r: &Root| rs.coroot_pairing(&shifted, r);
    let all = rs.positive_roots();
    let u = desc.parabolic().u_roots(rs);
    let good = all.iter().all(|r| pairing(r).is_positive());
    let weakly_good = all.iter().all(|r| !pairing(r).is_negative());
    let fair = u.iter().all(|r| pairing(r).is_positive());
    let weakly_fair = u.iter().all(|r| !pairing(r).is_negative());
    let strongest = if good {
        Range::Good
    } else if weakly_good {
        Range::WeaklyGood
    } else if fair {
        Range::Fair
    } else if weakly_fair {
        Range::WeaklyFair
    } else {
        Range::None
    };
    RangeReport {
        good,
        weakly_good,
        fair,
        weakly_fair,
        strongest,
    }
}

/// The dominant point of the Weyl orbit of `lambda + rho(u)`.
pub fn infinitesimal_character(desc: &AqDescriptor) -> Weight {
    let rs = desc.root_system();
    rs.make_dominant(&(desc.lambda() + &rho_u(desc))).0
}

/// Highest weight `2 rho(u ∩ p)` of the bottom layer, as a weight of the
/// compact Cartan.
pub fn bottom_layer_weight(desc: &AqDescriptor) -> Result<Weight> {
    let rs = desc.root_system();
    let u = desc.parabolic().u_roots(rs);
    match desc.form().kind() {
        FormKind::Compact | FormKind::EqualRankInner { .. } => Ok(u
            .iter()
            .filter(|r| desc.form().is_noncompact(r) == Some(true))
            .fold(Weight::zero(rs.rank()), |acc, r| &acc + r.weight())),
        // u ∩ p is isomorphic to u as a module for the compact Cartan
        FormKind::Complex | FormKind::GlNComplex { .. } => Ok(u
            .iter()
            .fold(Weight::zero(rs.rank()), |acc, r| &acc + r.weight())),
        FormKind::GlNReal { .. } => Err(Error::Unsupported(
            "bottom layer of gl_n(R): the compact Cartan is not the split torus".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aq::form::{RealFormDescriptor, ThetaParabolic};
    use crate::lattice::IsogenyForm;

    fn desc(t: &str, kind: FormKind, levi: Vec<usize>, lambda: &[i64]) -> AqDescriptor {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        let form = RealFormDescriptor::new(kind, IsogenyForm::simply_connected(&rs)).unwrap();
        let q = ThetaParabolic::new(&rs, levi).unwrap();
        AqDescriptor::new(form, q, Weight::from_ints(lambda)).unwrap()
    }

    #[test]
    fn rho_u_examples() {
        let d = desc("A2", FormKind::Compact, vec![], &[0, 0]);
        assert_eq!(&rho_u(&d), d.root_system().rho());
        let d = desc("A2", FormKind::Compact, vec![0, 1], &[0, 0]);
        assert!(rho_u(&d).is_zero());
        // u-roots alpha2 = (-1,2) and alpha1+alpha2 = (1,1)
        let d = desc("A2", FormKind::Compact, vec![0], &[0, 0]);
        assert_eq!(rho_u(&d), Weight::new(vec![Q::from_integer(0), Q::new(3, 2)]));
        assert_eq!(&(&rho_u(&d) + &rho_levi(&d)), d.root_system().rho());
    }

    #[test]
    fn middle_degrees() {
        assert_eq!(s_q(&desc("B2", FormKind::Compact, vec![], &[0, 0])).unwrap(), 0);
        let su11 = FormKind::EqualRankInner {
            noncompact_marks: vec![0],
        };
        assert_eq!(s_q(&desc("A1", su11, vec![], &[0])).unwrap(), 1);
        assert_eq!(s_q(&desc("A1", FormKind::Complex, vec![], &[0])).unwrap(), 1);
        assert_eq!(s_q(&desc("A1", FormKind::GlNReal { n: 2 }, vec![], &[0])).unwrap(), 1);
        assert_eq!(s_q(&desc("A2", FormKind::GlNReal { n: 3 }, vec![], &[0, 0])).unwrap(), 2);
        assert_eq!(s_q(&desc("A2", FormKind::GlNComplex { n: 3 }, vec![], &[0, 0])).unwrap(), 3);
    }

    #[test]
    fn unitary_group_noncompact_counts() {
        // su(p, n+1-p): p(n+1-p) noncompact positive roots
        for n in 1..=3usize {
            for p in 1..=n {
                let kind = FormKind::EqualRankInner {
                    noncompact_marks: vec![p - 1],
                };
                let d = desc(&format!("A{n}"), kind, vec![], &vec![0; n]);
                assert_eq!(s_q(&d).unwrap(), p * (n + 1 - p));
            }
        }
    }

    #[test]
    fn ranges() {
        let d = desc("A2", FormKind::Compact, vec![], &[0, 0]);
        let r = range_check(&d);
        assert!(r.weakly_good && r.weakly_fair);
        let d = desc("A2", FormKind::Compact, vec![], &[1, 1]);
        assert_eq!(range_check(&d).strongest, Range::Good);
        let d = desc("A2", FormKind::Compact, vec![0], &[0, -4]);
        assert_eq!(range_check(&d).strongest, Range::None);
    }

    #[test]
    fn levi_character_required() {
        let rs = RootSystem::new("A2".parse().unwrap()).unwrap();
        let form = RealFormDescriptor::new(FormKind::Compact, IsogenyForm::simply_connected(&rs)).unwrap();
        let q = ThetaParabolic::new(&rs, vec![0]).unwrap();
        assert!(matches!(
            AqDescriptor::new(form, q, Weight::from_ints(&[1, 0])),
            Err(Error::InvalidDescriptor(_))
        ));
    }
}

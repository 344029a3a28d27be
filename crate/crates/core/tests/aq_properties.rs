use aqlam::aq::{
    binomial_multiplicity, field_of_definition, range_check, rho_levi, rho_u, s_q,
    vz_cohomology_poincare, AqDescriptor, ArithmeticFlags, FieldVerdict, FormKind, RealFormDescriptor,
    RealWeylGroup, ThetaParabolic,
};
use aqlam::lattice::IsogenyForm;
use aqlam::root_core::{CartanType, RootSystem, Weight};
use proptest::prelude::*;

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
}

fn descriptor(rs: &RootSystem, kind: FormKind, levi: Vec<usize>, lambda: Weight) -> AqDescriptor {
    let form = RealFormDescriptor::new(kind, IsogenyForm::simply_connected(rs)).unwrap();
    AqDescriptor::new(form, ThetaParabolic::new(rs, levi).unwrap(), lambda).unwrap()
}

#[test]
fn rho_splits_over_every_parabolic() {
    for t in CartanType::simple_types_up_to(6) {
        let rs = RootSystem::new(t.into()).unwrap();
        for levi in subsets(rs.rank()) {
            let d = descriptor(&rs, FormKind::Compact, levi.clone(), Weight::zero(rs.rank()));
            assert_eq!(&(&rho_u(&d) + &rho_levi(&d)), rs.rho(), "{t} {levi:?}");
        }
    }
}

/// Noncompact roots counted from the grading by marks, independently of the descriptor.
fn noncompact_count(rs: &RootSystem, marks: &[usize], support: impl Fn(&[i64]) -> bool) -> usize {
    rs.positive_roots()
        .iter()
        .filter(|r| support(r.root_coords()))
        .filter(|r| marks.iter().map(|&i| r.root_coords()[i]).sum::<i64>() % 2 != 0)
        .count()
}

#[test]
fn s_q_is_half_the_codimension_of_the_levi_symmetric_space() {
    for t in ["A2", "A3", "B2", "B3", "C3", "D4", "G2"] {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        for marks in subsets(rs.rank()).filter(|m| !m.is_empty()) {
            for levi in subsets(rs.rank()) {
                let kind = FormKind::EqualRankInner { noncompact_marks: marks.clone() };
                let d = descriptor(&rs, kind, levi.clone(), Weight::zero(rs.rank()));
                let dim_p = 2 * noncompact_count(&rs, &marks, |_| true);
                let in_levi = |c: &[i64]| c.iter().enumerate().all(|(i, &x)| x == 0 || levi.contains(&i));
                let dim_l_p = 2 * noncompact_count(&rs, &marks, in_levi);
                assert_eq!(s_q(&d).unwrap() * 2, dim_p - dim_l_p, "{t} {marks:?} {levi:?}");
            }
        }
    }
}

fn kinds(rank: usize) -> Vec<FormKind> {
    let mut out = vec![FormKind::Compact, FormKind::Complex];
    for m in subsets(rank).filter(|m| m.len() == 1) {
        out.push(FormKind::EqualRankInner { noncompact_marks: m });
    }
    out
}

#[test]
fn zero_is_weakly_good_and_weakly_fair() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"] {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        for kind in kinds(rs.rank()) {
            for levi in subsets(rs.rank()) {
                let d = descriptor(&rs, kind.clone(), levi, Weight::zero(rs.rank()));
                let r = range_check(&d);
                assert!(r.weakly_good && r.weakly_fair);
            }
        }
    }
}

fn pascal(n: usize) -> Vec<u128> {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

// For a Borel, l ∩ p is the part of the Cartan in p, a trivial module, so the
// cohomology is t^{S_q} times an exterior algebra on dim(h ∩ p) generators.
#[test]
fn borel_poincare_polynomials_are_exterior() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"] {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        for kind in kinds(rs.rank()) {
            let h_p = if kind == FormKind::Complex { rs.rank() } else { 0 };
            let d = descriptor(&rs, kind.clone(), vec![], Weight::zero(rs.rank()));
            let p = vz_cohomology_poincare(&d, true).unwrap();
            let (lo, hi) = (p.q_min().unwrap(), p.q_max().unwrap());
            assert_eq!((lo, hi - lo), (s_q(&d).unwrap(), h_p), "{t} {kind:?}");
            assert!(p.is_palindromic() && p.is_exterior_pattern());
            assert_eq!((p.coefficient(lo), p.coefficient(hi)), (1, 1));
            assert_eq!(p.value_at_one(), 1u128 << (hi - lo));
            for (k, c) in pascal(h_p).into_iter().enumerate() {
                assert_eq!(p.coefficient(lo + k), c);
                assert_eq!(binomial_multiplicity(lo as i64, hi as i64, (lo + k) as i64), c);
            }
        }
    }
}

#[test]
fn poincare_polynomials_are_palindromic() {
    for t in ["A1", "A2", "A3", "B2", "C3", "G2"] {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        for kind in kinds(rs.rank()) {
            for levi in subsets(rs.rank()) {
                let d = descriptor(&rs, kind.clone(), levi.clone(), Weight::zero(rs.rank()));
                let p = vz_cohomology_poincare(&d, true).unwrap();
                assert!(p.is_palindromic(), "{t} {kind:?} {levi:?}");
                assert_eq!(p.q_min(), Some(s_q(&d).unwrap()));
            }
        }
    }
}

#[test]
fn gl_n_borel_coefficients_are_binomial() {
    for n in 2..=6 {
        let rs = RootSystem::new(format!("A{}", n - 1).parse().unwrap()).unwrap();
        for kind in [FormKind::GlNReal { n }, FormKind::GlNComplex { n }] {
            for include_center in [false, true] {
                let d = descriptor(&rs, kind.clone(), vec![], Weight::zero(n - 1));
                let p = vz_cohomology_poincare(&d, include_center).unwrap();
                let (lo, hi) = (p.q_min().unwrap() as i64, p.q_max().unwrap() as i64);
                assert_eq!(lo as usize, s_q(&d).unwrap());
                let expected = pascal((hi - lo) as usize);
                for q in 0..=hi + 1 {
                    let c = if q < lo || q > hi { 0 } else { expected[(q - lo) as usize] };
                    assert_eq!(p.coefficient(q as usize), c);
                    assert_eq!(binomial_multiplicity(lo, hi, q), c);
                }
            }
        }
    }
}

fn case() -> impl Strategy<Value = (&'static str, usize, u32, Vec<i64>)> {
    (
        prop::sample::select(vec!["A2", "A3", "B2", "B3", "C3", "D4", "G2"]),
        0usize..4,
        0u32..16,
        prop::collection::vec(0i64..3, 4),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    // The Galois conjugate module has the same field of definition.
    #[test]
    fn field_of_definition_is_galois_invariant((t, kind_ix, levi_mask, coords) in case(), semi in any::<bool>()) {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        let n = rs.rank();
        let kind = kinds(n)[kind_ix % kinds(n).len()].clone();
        let levi: Vec<usize> = (0..n).filter(|i| levi_mask & (1 << i) != 0).collect();
        // lambda vanishes on the Levi
        let lambda: Vec<i64> = (0..n).map(|i| if levi.contains(&i) { 0 } else { coords[i % 4] }).collect();
        let form = RealFormDescriptor::new(kind, IsogenyForm::simply_connected(&rs))
            .unwrap()
            .with_real_weyl_group(RealWeylGroup::IdentityComponent);
        let d = AqDescriptor::new(form, ThetaParabolic::new(&rs, levi).unwrap(), Weight::from_ints(&lambda)).unwrap();
        let flags = ArithmeticFlags { semi_admissible: Some(semi), ..Default::default() };
        let here = field_of_definition(&d, &flags).unwrap();
        let there = field_of_definition(&d.galois_conjugate().unwrap(), &flags).unwrap();
        prop_assert_eq!(here.verdict, there.verdict);
        prop_assert!(!here.rule_trace.is_empty());
        if here.verdict == FieldVerdict::F {
            prop_assert_eq!(here.base_verdict, FieldVerdict::F);
        }
    }

    #[test]
    fn ranges_are_nested((t, kind_ix, levi_mask, coords) in case()) {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        let n = rs.rank();
        let kind = kinds(n)[kind_ix % kinds(n).len()].clone();
        let levi: Vec<usize> = (0..n).filter(|i| levi_mask & (1 << i) != 0).collect();
        let lambda: Vec<i64> = (0..n).map(|i| if levi.contains(&i) { 0 } else { coords[i % 4] - 1 }).collect();
        let d = descriptor(&rs, kind, levi, Weight::from_ints(&lambda));
        let r = range_check(&d);
        prop_assert!(!r.good || r.weakly_good);
        prop_assert!(!r.good || r.fair);
        prop_assert!(!r.weakly_good || r.weakly_fair);
        prop_assert!(!r.fair || r.weakly_fair);
    }
}

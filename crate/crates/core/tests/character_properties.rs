use std::collections::{HashMap, VecDeque};

use aqlam::character::{
    c_q, c_q_of_sum, commuting_square, euler_character, exterior_u_dual_euler, irreducible_character,
    tensor_decomposition, weyl_denominator, CharacterElement,
};
use aqlam::galois::delta_tau;
use aqlam::root_core::{RootSystem, Weight};
use proptest::prelude::*;

/// `sum_w sign(w) e^{w(lambda + rho) - rho}` by breadth-first search over the
/// regular orbit of `lambda + rho`.
fn alternating_sum(rs: &RootSystem, lambda: &Weight) -> CharacterElement {
    let start = lambda + rs.rho();
    let mut sign: HashMap<Weight, i128> = HashMap::from([(start.clone(), 1)]);
    let mut queue = VecDeque::from([start]);
    while let Some(mu) = queue.pop_front() {
        for i in 0..rs.rank() {
            let mut nu = mu.clone();
            rs.reflect_in_place(&mut nu, i);
            if !sign.contains_key(&nu) {
                sign.insert(nu.clone(), -sign[&mu]);
                queue.push_back(nu);
            }
        }
    }
    CharacterElement::from_terms(rs.rank(), sign.into_iter().map(|(w, s)| (&w - rs.rho(), s))).unwrap()
}

fn product_over_positive_roots(rs: &RootSystem) -> CharacterElement {
    let n = rs.rank();
    rs.positive_roots().iter().fold(CharacterElement::one(n), |acc, r| {
        let f = CharacterElement::from_terms(n, [(Weight::zero(n), 1), (-r.weight(), -1)]).unwrap();
        &acc * &f
    })
}

fn rs(t: &str) -> RootSystem {
    RootSystem::new(t.parse().unwrap()).unwrap()
}

#[test]
fn borel_denominator_is_the_product_formula() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
        let rs = rs(t);
        assert_eq!(weyl_denominator(&rs, &[]).unwrap(), product_over_positive_roots(&rs), "{t}");
        assert_eq!(alternating_sum(&rs, &Weight::zero(rs.rank())), product_over_positive_roots(&rs));
    }
}

fn case() -> impl Strategy<Value = (&'static str, Vec<i64>, u32)> {
    (
        prop::sample::select(vec!["A1", "A2", "A3", "B2", "B3", "C3", "G2"]),
        prop::collection::vec(0i64..3, 3),
        0u32..8,
    )
}

fn unpack(t: &str, coords: &[i64], mask: u32) -> (RootSystem, Weight, Vec<usize>) {
    let rs = rs(t);
    let n = rs.rank();
    let lambda = Weight::from_ints(&coords[..n]);
    let levi = (0..n).filter(|i| mask & (1 << i) != 0).collect();
    (rs, lambda, levi)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_character_formula((t, coords, _) in case()) {
        let (rs, lambda, _) = unpack(t, &coords, 0);
        let numerator = c_q(&rs, &[], &lambda).unwrap().numerator().clone();
        prop_assert_eq!(&numerator, &alternating_sum(&rs, &lambda));
        let ch = irreducible_character(&rs, &lambda).unwrap();
        prop_assert_eq!(&ch * &weyl_denominator(&rs, &[]).unwrap(), numerator);
    }

    #[test]
    fn euler_character_matches_exterior_algebra((t, coords, mask) in case()) {
        let (rs, lambda, levi) = unpack(t, &coords, mask);
        prop_assert_eq!(
            euler_character(&rs, &levi, &lambda).unwrap(),
            exterior_u_dual_euler(&rs, &levi, &lambda).unwrap()
        );
    }

    #[test]
    fn c_q_is_multiplicative((t, a, mask) in case(), b in prop::collection::vec(0i64..2, 3)) {
        let (rs, lambda, levi) = unpack(t, &a, mask);
        let mu = Weight::from_ints(&b[..rs.rank()]);
        let lhs = &c_q(&rs, &levi, &lambda).unwrap() * &c_q(&rs, &levi, &mu).unwrap();
        let parts = tensor_decomposition(&rs, &lambda, &mu).unwrap();
        prop_assert_eq!(lhs, c_q_of_sum(&rs, &levi, &parts).unwrap());
    }

    #[test]
    fn c_q_commutes_with_duality((t, coords, mask) in case()) {
        let (rs, lambda, levi) = unpack(t, &coords, mask);
        let dual = delta_tau(&rs, &lambda).unwrap();
        prop_assert_eq!(c_q(&rs, &levi, &dual).unwrap(), c_q(&rs, &levi, &lambda).unwrap().dual());
    }

    #[test]
    fn galois_square_commutes((t, coords, mask) in case()) {
        let (rs, lambda, levi) = unpack(t, &coords, mask);
        let (left, right) = commuting_square(&rs, &levi, &lambda).unwrap();
        prop_assert_eq!(left, right);
    }
}

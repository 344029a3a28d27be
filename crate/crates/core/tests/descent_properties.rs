use aqlam::descent::suite::curated_modules;
use aqlam::descent::{
    descend_if_possible, hilbert_symbol, hilbert_symbol_oracle, local_global_check, multiplicity_degree_arithmetic,
    DescentOutcome, ExplicitModule, Matrix, Place, QuadElem, QuaternionClass,
};
use proptest::prelude::*;

fn nonzero() -> impl Strategy<Value = i64> {
    (-60i64..=60).prop_filter("nonzero", |x| *x != 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hilbert_reciprocity(a in nonzero(), b in nonzero()) {
        let q = QuaternionClass::from_ints(a, b).unwrap();
        let product: i8 = q.candidate_places().into_iter().map(|v| hilbert_symbol(a, b, v)).product();
        prop_assert_eq!(product, 1);
        prop_assert!(local_global_check(&q).parity_ok);
    }

    #[test]
    fn hilbert_symbol_is_bimultiplicative(a in nonzero(), b in nonzero(), c in nonzero()) {
        for v in [Place::Prime(2), Place::Prime(3), Place::Prime(5), Place::Infinity] {
            prop_assert_eq!(hilbert_symbol(a, b * c, v), hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
            prop_assert_eq!(hilbert_symbol(a, b, v), hilbert_symbol(b, a, v));
        }
    }

    #[test]
    fn two_adic_symbol_matches_solubility_search(a in nonzero(), b in nonzero()) {
        prop_assert_eq!(
            hilbert_symbol(a, b, Place::Prime(2)),
            hilbert_symbol_oracle(a, b, Place::Prime(2), 8)
        );
    }

    #[test]
    fn multiplicity_arithmetic(m in 1u64..=12, c in 1u64..=12, n in 1u64..=12) {
        match multiplicity_degree_arithmetic(m, c, n) {
            Ok(r) => {
                prop_assert_eq!(n * c, m);
                prop_assert!(r.divides_isotypic_length);
                prop_assert_eq!(r.algebra_dimension, n * n * c);
            }
            Err(_) => prop_assert_ne!(n * c, m),
        }
    }
}

fn lift_rational(m: &Matrix<aqlam::descent::Rat>, like: &QuadElem) -> Matrix<QuadElem> {
    let k = like.field();
    m.map(&k.zero(), |x| k.from_rational(x.clone()))
}

/// A random invertible matrix over the module's field, from small integer pairs.
fn change_of_basis(m: &ExplicitModule, seed: &[(i64, i64)]) -> Option<Matrix<QuadElem>> {
    let k = m.field();
    let n = m.dimension();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (a, b) = seed[(i * n + j) % seed.len()];
                    let diag = if i == j { 3 } else { 0 };
                    k.from_ints(a + diag, b)
                })
                .collect()
        })
        .collect();
    let p = Matrix::from_rows(rows, &k.zero()).unwrap();
    p.is_invertible().then_some(p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Descent depends only on the isomorphism class, and every model found
    // intertwines with the original generators.
    #[test]
    fn descent_is_invariant_under_change_of_basis(
        index in 0usize..30,
        seed in prop::collection::vec((-2i64..3, -2i64..3), 1..10),
    ) {
        let suite = curated_modules().unwrap();
        let entry = &suite[index % suite.len()];
        let Some(p) = change_of_basis(&entry.module, &seed) else { return Ok(()); };
        let moved = entry.module.conjugate_by(&p).unwrap();
        let before = descend_if_possible(&entry.module).unwrap();
        let after = descend_if_possible(&moved).unwrap();
        match (&before, &after) {
            (DescentOutcome::Model(_), DescentOutcome::Model(model)) => {
                let zero = moved.field().zero();
                for (g, g0) in moved.generators().iter().zip(model.module.generators()) {
                    let g0 = lift_rational(g0, &zero);
                    prop_assert_eq!(g * &model.change_of_basis, &model.change_of_basis * &g0);
                }
            }
            (DescentOutcome::NoModel(a), DescentOutcome::NoModel(b)) => {
                // certificates agree up to the quaternion class
                prop_assert_eq!(std::mem::discriminant(a), std::mem::discriminant(b));
            }
            _ => prop_assert!(false, "{}: outcome changed under change of basis", entry.name),
        }
    }
}

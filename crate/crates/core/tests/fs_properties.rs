use aqlam::fs::{fs_indicator_compact, fs_indicator_oracle, FsIndicator, ORACLE_DIMENSION_BOUND};
use aqlam::galois::delta_tau;
use aqlam::lattice::IsogenyForm;
use aqlam::root_core::{RootSystem, Weight};
use proptest::prelude::*;

fn simply_connected(t: &str) -> IsogenyForm {
    IsogenyForm::simply_connected(&RootSystem::new(t.parse().unwrap()).unwrap())
}

fn case() -> impl Strategy<Value = (&'static str, Vec<i64>)> {
    (
        prop::sample::select(vec!["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"]),
        prop::collection::vec(0i64..3, 4),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn indicator_is_invariant_under_duality((t, coords) in case()) {
        let form = simply_connected(t);
        let n = form.root_system().rank();
        let lambda = Weight::from_ints(&coords[..n]);
        let dual = delta_tau(form.root_system(), &lambda).unwrap();
        prop_assert_eq!(
            fs_indicator_compact(&form, &lambda).unwrap(),
            fs_indicator_compact(&form, &dual).unwrap()
        );
    }

    #[test]
    fn indicator_agrees_with_invariant_counting((t, coords) in case()) {
        let form = simply_connected(t);
        let n = form.root_system().rank();
        let lambda = Weight::from_ints(&coords[..n]);
        let dim = form.root_system().weyl_dimension_u64(&lambda).unwrap().unwrap();
        prop_assume!(dim <= 300);
        prop_assert_eq!(
            fs_indicator_compact(&form, &lambda).unwrap(),
            fs_indicator_oracle(&form, &lambda, ORACLE_DIMENSION_BOUND).unwrap()
        );
    }

    // The indicator of an outer tensor product is the product of indicators.
    #[test]
    fn indicator_is_multiplicative_on_products(
        (s, a) in case(),
        (t, b) in case(),
    ) {
        let (fs, ft) = (simply_connected(s), simply_connected(t));
        let (ns, nt) = (fs.root_system().rank(), ft.root_system().rank());
        let joint = simply_connected(&format!("{s}x{t}"));
        let lambda: Vec<i64> = a[..ns].iter().chain(&b[..nt]).copied().collect();
        let left = fs_indicator_compact(&fs, &Weight::from_ints(&a[..ns])).unwrap();
        let right = fs_indicator_compact(&ft, &Weight::from_ints(&b[..nt])).unwrap();
        prop_assert_eq!(
            fs_indicator_compact(&joint, &Weight::from_ints(&lambda)).unwrap(),
            left.product(right)
        );
    }
}

#[test]
fn adjoint_representation_is_real() {
    for t in ["A1", "A5", "B2", "C3", "D6", "E7", "F4", "G2"] {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        let highest_root = rs.positive_roots().iter().max_by_key(|r| r.height()).unwrap().weight().clone();
        for form in [IsogenyForm::adjoint(&rs), IsogenyForm::simply_connected(&rs)] {
            assert_eq!(fs_indicator_compact(&form, &highest_root).unwrap(), FsIndicator::Real, "{t}");
        }
    }
}

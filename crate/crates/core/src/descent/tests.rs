use super::suite::{curated_modules, split_twist_modules};
use super::*;
use crate::fs::FsIndicator;

fn gaussian() -> QuadraticField {
    QuadraticField::new(-1).unwrap()
}

fn hamilton_module() -> ExplicitModule {
    let k = gaussian();
    let z = k.zero();
    let i = k.sqrt_d();
    let a = Matrix::from_rows(vec![vec![i.clone(), z.clone()], vec![z.clone(), -i]], &z).unwrap();
    let b = Matrix::from_rows(vec![vec![z.clone(), k.one()], vec![-k.one(), z.clone()]], &z).unwrap();
    ExplicitModule::new(k, 2, vec![a, b], vec!["i".into(), "j".into()]).unwrap()
}

fn same_algebra(a: i64, b: i64, c: i64, d: i64) -> bool {
    let x = local_global_check(&QuaternionClass::from_ints(a, b).unwrap());
    let y = local_global_check(&QuaternionClass::from_ints(c, d).unwrap());
    x.ramified == y.ramified
}

#[test]
fn gaussian_character_gives_quadratic_field() {
    let k = gaussian();
    let m = ExplicitModule::new(k, 1, vec![Matrix::scalar(1, k.sqrt_d())], vec![]).unwrap();
    let c = commutant(&restrict_scalars(&m));
    assert_eq!(
        classify_endomorphism_algebra(&c.basis).unwrap(),
        EndomorphismAlgebra::QuadraticField { d: -1 }
    );
    match descend_if_possible(&m).unwrap() {
        DescentOutcome::NoModel(NoModelCertificate::IndicatorZero { d }) => assert_eq!(d, -1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn hamilton_quaternions_have_no_model() {
    let m = hamilton_module();
    let c = commutant(&restrict_scalars(&m));
    assert_eq!(c.dimension(), 4);
    match classify_endomorphism_algebra(&c.basis).unwrap() {
        EndomorphismAlgebra::Quaternion { a, b } => assert!(same_algebra(a, b, -1, -1)),
        other => panic!("{other:?}"),
    }
    match descend_if_possible(&m).unwrap() {
        DescentOutcome::NoModel(NoModelCertificate::Quaternion { a, b }) => {
            assert!(same_algebra(a, b, -1, -1))
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(invariant_form_symmetry(&m), FormSymmetry::Antisymmetric);
}

#[test]
fn base_change_descends() {
    let m = RationalModule::from_int_rows(&[
        vec![vec![0, -1], vec![1, -1]],
        vec![vec![0, 1], vec![1, 0]],
    ])
    .unwrap();
    let x = ExplicitModule::base_change(&m, gaussian());
    let c = commutant(&restrict_scalars(&x));
    assert!(matches!(
        classify_endomorphism_algebra(&c.basis).unwrap(),
        EndomorphismAlgebra::SplitMatrixAlgebra { .. }
    ));
    let DescentOutcome::Model(model) = descend_if_possible(&x).unwrap() else {
        panic!("expected a model");
    };
    assert_eq!(model.module.dimension(), 2);
    assert_eq!(invariant_form_symmetry(&x), FormSymmetry::Symmetric);
}

#[test]
fn curated_suite_kinds() {
    let suite = curated_modules().unwrap();
    assert_eq!(suite.len(), 30);
    for case in suite {
        assert_eq!(commutant_dimension_over_field(&case.module), 1, "{}", case.name);
        let c = commutant(&restrict_scalars(&case.module));
        let algebra = classify_endomorphism_algebra(&c.basis).unwrap();
        assert_eq!(algebra.indicator(), Some(case.kind), "{}: {algebra:?}", case.name);
        let outcome = descend_if_possible(&case.module).unwrap();
        assert_eq!(
            matches!(outcome, DescentOutcome::Model(_)),
            case.kind == FsIndicator::Real,
            "{}",
            case.name
        );
    }
}

#[test]
fn split_twists_descend_without_forms() {
    for case in split_twist_modules().unwrap() {
        let DescentOutcome::Model(model) = descend_if_possible(&case.module).unwrap() else {
            panic!("{} should descend", case.name);
        };
        // the rational model restricted back has the same commutant dimension
        let back = ExplicitModule::base_change(&model.module, case.module.field());
        assert_eq!(commutant_dimension_over_field(&back), 1);
    }
}

#[test]
fn reducible_module_is_rejected() {
    let k = gaussian();
    let m = ExplicitModule::new(k, 2, vec![Matrix::scalar(2, k.from_ints(2, 0))], vec![]).unwrap();
    assert!(matches!(descend_if_possible(&m), Err(crate::Error::MalformedModule(_))));
}

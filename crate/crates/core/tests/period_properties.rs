use aqlam::aq::{ratio, same_double_coset, translate, PeriodStructure, MAX_PERIOD_SIZE};
use aqlam::descent::{rat, Matrix, QuadElem, QuadraticField, Rat};
use proptest::prelude::*;

fn gaussian() -> QuadraticField {
    QuadraticField::new(-1).unwrap()
}

fn gaussian_matrix(m: usize, entries: &[(i64, i64)]) -> Matrix<QuadElem> {
    let k = gaussian();
    let rows = entries
        .chunks(m)
        .map(|r| r.iter().map(|&(a, b)| k.from_ints(a, b)).collect())
        .collect();
    Matrix::from_rows(rows, &k.zero()).unwrap()
}

fn rational_matrix(m: usize, entries: &[i64]) -> Matrix<Rat> {
    let rows = entries.chunks(m).map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    Matrix::from_rows(rows, &rat(0)).unwrap()
}

fn periods(m: usize, entries: &[(i64, i64)]) -> Option<PeriodStructure> {
    PeriodStructure::new(gaussian(), gaussian_matrix(m, entries)).ok()
}

fn size_and_entries() -> impl Strategy<Value = (usize, Vec<(i64, i64)>, Vec<(i64, i64)>)> {
    (1..=MAX_PERIOD_SIZE).prop_flat_map(|m| {
        let entry = (-4i64..=4, -4i64..=4);
        (
            Just(m),
            prop::collection::vec(entry.clone(), m * m),
            prop::collection::vec(entry, m * m),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn scaling_multiplies_every_entry(
        (m, p, _) in size_and_entries(),
        c in (-5i64..=5, -5i64..=5).prop_filter("nonzero", |c| *c != (0, 0)),
    ) {
        let Some(p) = periods(m, &p) else { return Ok(()) };
        let k = gaussian();
        let c = k.from_ints(c.0, c.1);
        let scaled = p.scale(&c).unwrap();
        for i in 0..m {
            for j in 0..m {
                // (a + bi)(x + yi) = (ax - by) + (ay + bx)i
                let (a, b) = (c.rational_part(), c.irrational_part());
                let e = p.omega().get(i, j);
                let (x, y) = (e.rational_part(), e.irrational_part());
                let expected = k.element(a * x - b * y, a * y + b * x);
                prop_assert_eq!(scaled.omega().get(i, j), &expected);
            }
        }
    }

    #[test]
    fn double_coset_contains_rational_translates(
        (m, p, _) in size_and_entries(),
        a in prop::collection::vec(-3i64..=3, 16),
        b in prop::collection::vec(-3i64..=3, 16),
    ) {
        let Some(p) = periods(m, &p) else { return Ok(()) };
        let (a, b) = (rational_matrix(m, &a[..m * m]), rational_matrix(m, &b[..m * m]));
        prop_assume!(a.is_invertible() && b.is_invertible());
        let q = translate(&p, &a, &b).unwrap();
        prop_assert!(same_double_coset(&p, &q).unwrap());
        prop_assert!(same_double_coset(&q, &p).unwrap());
    }

    #[test]
    fn rational_periods_never_meet_their_i_multiple(
        (m, _, _) in size_and_entries(),
        a in prop::collection::vec(-3i64..=3, 16),
    ) {
        let a: Vec<(i64, i64)> = a[..m * m].iter().map(|&x| (x, 0)).collect();
        let Some(p) = periods(m, &a) else { return Ok(()) };
        let k = gaussian();
        // A p B = i p with rational A, B would make i rational
        prop_assert!(!same_double_coset(&p, &p.scale(&k.sqrt_d()).unwrap()).unwrap());
    }

    #[test]
    fn ratio_is_independent_of_the_embedding(
        (m, p, t) in size_and_entries(),
        c in (-5i64..=5, -5i64..=5).prop_filter("nonzero", |c| *c != (0, 0)),
    ) {
        let (Some(p), Some(t)) = (periods(m, &p), periods(m, &t)) else { return Ok(()) };
        let c = gaussian().from_ints(c.0, c.1);
        let r = ratio(&p, &t).unwrap();
        prop_assert_eq!(&ratio(&p.scale(&c).unwrap(), &t.scale(&c).unwrap()).unwrap(), &r);
        prop_assert_eq!(&(t.omega() * &r), p.omega());
    }
}

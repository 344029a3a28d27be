//! Bookkeeping for multiplicities, centers and splitting fields of the
//! endomorphism algebra of a rational isotypic component.

use serde::Serialize;

use crate::error::{Error, Result};

/// Rational multiplicities for which the divisibility of isotypic lengths is checked.
pub const LENGTH_CHECK_RANGE: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplicityCase {
    MultiplicityOne,
    /// Commutative endomorphism algebra: the field of definition is its center.
    Commutative,
    /// Noncommutative: a division algebra of index `n` over its center.
    Noncommutative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityRecord {
    pub multiplicity: u64,
    pub center_degree: u64,
    pub index: u64,
    /// Degree of a minimal splitting field over the base.
    pub field_degree: u64,
    /// Dimension of the endomorphism algebra over the base.
    pub algebra_dimension: u64,
    pub case: MultiplicityCase,
    /// The field degree divides every complex isotypic length
    /// `field_degree * k` for `k` up to [`LENGTH_CHECK_RANGE`].
    pub divides_isotypic_length: bool,
}

/// Validates `index * center_degree = multiplicity`.
pub fn multiplicity_degree_arithmetic(
    multiplicity: u64,
    center_degree: u64,
    index: u64,
) -> Result<MultiplicityRecord> {
    if multiplicity == 0 || center_degree == 0 || index == 0 {
        return Err(Error::InconsistentMultiplicity("entries must be positive".into()));
    }
    let field_degree = index
        .checked_mul(center_degree)
        .ok_or(Error::Overflow("field degree"))?;
    if field_degree != multiplicity {
        return Err(Error::InconsistentMultiplicity(format!(
            "index {index} times center degree {center_degree} is {field_degree}, not {multiplicity}"
        )));
    }
    let case = match (multiplicity, index) {
        (1, _) => MultiplicityCase::MultiplicityOne,
        (_, 1) => MultiplicityCase::Commutative,
        _ => MultiplicityCase::Noncommutative,
    };
    let divides_isotypic_length =
        (1..=LENGTH_CHECK_RANGE).all(|k| (multiplicity * k) % field_degree == 0);
    Ok(MultiplicityRecord {
        multiplicity,
        center_degree,
        index,
        field_degree,
        algebra_dimension: index * index * center_degree,
        case,
        divides_isotypic_length,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let r = multiplicity_degree_arithmetic(1, 1, 1).unwrap();
        assert_eq!((r.field_degree, r.case), (1, MultiplicityCase::MultiplicityOne));
        let r = multiplicity_degree_arithmetic(2, 2, 1).unwrap();
        assert_eq!((r.field_degree, r.case), (2, MultiplicityCase::Commutative));
        assert!(r.divides_isotypic_length);
        let r = multiplicity_degree_arithmetic(2, 1, 2).unwrap();
        assert_eq!((r.field_degree, r.case), (2, MultiplicityCase::Noncommutative));
        assert_eq!(r.algebra_dimension, 4);
        assert!(matches!(
            multiplicity_degree_arithmetic(3, 2, 1),
            Err(Error::InconsistentMultiplicity(_))
        ));
    }
}

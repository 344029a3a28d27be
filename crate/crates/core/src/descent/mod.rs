//! Quadratic descent for matrix modules: restriction of scalars, commutants,
//! quaternion algebras and Hilbert symbols.

mod algebra;
mod arith;
mod conic;
mod field;
mod hilbert;
mod matrix;
mod model;
mod module;
mod multiplicity;
pub mod suite;

pub use algebra::{classify_endomorphism_algebra, coordinates_in, EndomorphismAlgebra};
pub use arith::{is_prime, is_squarefree, prime_factors, square_class, squarefree_part};
pub use conic::{solve_conic, ConicPoint};
pub use field::{rat, rat_frac, QuadElem, QuadraticField, Rat, Scalar};
pub use hilbert::{
    hilbert_symbol, hilbert_symbol_oracle, hilbert_symbol_rational, local_global_check,
    LocalGlobal, Place, QuaternionClass,
};
pub use matrix::{combine, flatten_columns, Matrix};
pub use model::{descend_if_possible, DescentOutcome, NoModelCertificate, RationalModel};
pub use module::{
    commutant, commutant_dimension_over_field, commutant_element, commutant_of,
    invariant_bilinear_forms, invariant_form_symmetry, regular_block, restrict_matrix,
    restrict_scalars, word_matrix, Commutant, ExplicitModule, FormSymmetry, RationalModule,
};
pub use multiplicity::{
    multiplicity_degree_arithmetic, MultiplicityCase, MultiplicityRecord, LENGTH_CHECK_RANGE,
};

#[cfg(test)]
mod tests;

//! Real forms, theta-stable parabolics and the invariants of `A_q(lambda)`.

mod cohomology;
mod form;
mod invariants;
mod periods;
mod rationality;

pub use cohomology::{
    binomial_multiplicity, cuspidal_multiplicity, vz_cohomology_poincare,
    vz_cohomology_poincare_with_cap, InfinityTypeRecord, Poincare, MAX_EXTERIOR_WEIGHTS,
};
pub use form::{AqDescriptor, FormKind, RealFormDescriptor, RealWeylGroup, ThetaParabolic};
pub use invariants::{
    bottom_layer_weight, infinitesimal_character, range_check, rho_levi, rho_u, s_q, Range,
    RangeReport,
};
pub use periods::{
    identity_periods, ratio, same_double_coset, translate, PeriodStructure, MAX_PERIOD_SIZE,
};
pub use rationality::{
    bottom_layer_self_duality, case_list, field_of_definition, infer_case, inferred_row_ids,
    parse_case_list, sha256_hex, ArithmeticFlags, CaseList, CaseRow, FieldReport, FieldVerdict,
    CASE_LIST_FILE, CASE_LIST_JSON, CASE_LIST_SHA256, RULE_DESCENT, RULE_NOT_SELF_DUAL,
    RULE_QUASI_SPLIT_BOREL, RULE_TRANSLATION_DOMINANT, RULE_TRANSLATION_WEAKLY_GOOD,
};

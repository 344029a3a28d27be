//! Frobenius-Schur indicators of compact groups, the sign map on Galois-fixed
//! central classes, and the admissibility rules built on them.

mod admissibility;
mod beta;
mod class_s;
mod indicator;

pub use admissibility::{
    admissibility_report, Admissibility, AdmissibilityReport, FactorType, GroupDescriptor,
    RULE_SEMI_ADMISSIBLE, RULE_SEMI_TO_ADMISSIBLE, RULE_UNCONDITIONAL, RULE_UNITARY,
};
pub use beta::{
    beta_map, beta_map_with_bound, classify_admissible_forms, form_has_no_quaternionic,
    unconditional_form_table, BetaEntry, BetaMap, ClassificationRow, REPRESENTATIVE_SEARCH_BOUND,
};
pub use class_s::{
    class_s_indicator, ClassSCase, ClassSIndicator, ComponentData, CompactFormDescriptor,
};
pub use indicator::{
    central_sign, dominant_weights_up_to, dominant_weights_with_dimension_at_most,
    fs_indicator_compact, fs_indicator_oracle, FsIndicator, ORACLE_DIMENSION_BOUND,
};

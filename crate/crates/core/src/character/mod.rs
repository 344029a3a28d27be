//! Characters of finite-dimensional modules, their `u`-cohomology and the
//! localized character map.

mod galois;
mod kostant;
mod ring;
mod tensor;

pub use galois::{commuting_square, conjugate_levi, galois_twist_character, galois_twist_localized};
pub use kostant::{
    c_q, euler_character, euler_character_with_cap, exterior_u_dual_euler, irreducible_character,
    kostant_terms, kostant_terms_with_cap, kostant_u_cohomology, minimal_coset_representatives,
    weyl_denominator, KostantTerm,
};
pub use ring::{CharacterElement, LocalizedCharacter};
pub use tensor::{c_q_of_sum, decompose, tensor_decomposition};

//! Codes over finite rings and the MacWilliams extension problem.

mod code;
mod extension;
mod hom;
mod search;

pub use code::{
    add_words, enumerate_codes, hamming_weight, scale_word, span_code, zero_word, Code, Word,
};
pub use extension::{
    coordinate_kernels, exhaustive_extension_oracle, extend_to_monomial, kernel_containment,
    kernel_match, preserves_weight, unit_between, unit_between_values, MonomialTransform,
};
pub use hom::{all_homs, is_weight_preserving, weight_preserving_homs, CodeHom, HomBudget};
pub use search::{
    search_counterexample, verify_macwilliams, Counterexample, MacWilliamsVerdict, Scope,
    VerifyConfig,
};

pub(crate) use hom::{enumerate_homs, HomFilter};

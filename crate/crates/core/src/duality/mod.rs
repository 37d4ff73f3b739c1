//! Exact character theory of finite rings.

mod character;
mod dual;
mod qz;
mod rootsum;

pub use character::{
    dual_is_cyclic, find_torsion_free_character, find_with_classification, haar_character_sum,
    hamming_weight_via_characters, is_left_torsion_free, is_right_torsion_free,
    right_torsion_free_via_density, scan_torsion_free_character, semisimple_character,
    torsion_free_via_density, CharacterSource, HaarSum, MinimalIdeals, SemisimpleCharacter,
    TorsionFreeCharacter,
};
pub use dual::{Character, DualModule};
pub use qz::QZ;
pub use rootsum::{cyclotomic, RootSum};

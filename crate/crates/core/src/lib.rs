//! Computations in the Artin braid groups `B_n`.
//!
//! Braid words are read left to right: the first letter is applied first.
//! Every module shares this convention, including the permutation of a word
//! and the action of a braid on the free group.

pub mod curve;
pub mod embedding;
pub mod error;
pub mod garside;
pub mod perm;
pub mod rewrite;
pub mod rng;
pub mod word;

pub use curve::{
    artin_action, classify, curve_class_round, is_periodic, preserves_curve_class,
    ClassificationResult, CurveClass, FreeWord,
};
pub use embedding::{embed_general, embed_standard, is_in_standard_image};
pub use error::{BraidError, Result};
pub use garside::{
    are_conjugate, cycling, delta_simple, equal_words, is_delta_power, normal_form,
    super_summit_set, ConjugacyCertificate, CycleDirection, NormalForm, SimpleElement,
    SuperSummitSet, DEFAULT_MAX_SSS,
};
pub use perm::Permutation;
pub use rng::SplitMix64;
pub use word::{random_word, BraidWord, Letter};

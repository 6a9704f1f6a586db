//! Garside structure of `B_n`: simple elements, left normal forms, summit
//! sets and the conjugacy decision procedure.

mod conjugacy;
mod normal_form;
mod simple;
mod summit;

pub use conjugacy::{are_conjugate, ConjugacyCertificate};
pub use normal_form::{equal_words, is_delta_power, normal_form, NormalForm};
pub use simple::{delta_simple, GeneratorMask, SimpleElement, MAX_STRANDS};
pub use summit::{
    cycling, summit_representative, super_summit_set, CycleDirection, SuperSummitSet, DEFAULT_MAX_SSS,
};

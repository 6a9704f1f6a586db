//! Curves in the punctured disc through the Artin action on the free group,
//! and the Nielsen–Thurston classification built on it.

mod class;
mod classify;
mod free;

pub use class::{curve_class_round, preserves_curve_class, round_curves, CurveClass};
pub use classify::{classify, is_periodic, ClassificationResult};
pub use free::{artin_action, FreeWord};

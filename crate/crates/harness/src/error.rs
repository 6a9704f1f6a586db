use braid_core::{BraidError, BraidWord};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Braid(#[from] BraidError),

    #[error("invalid suite configuration: {0}")]
    InvalidConfig(String),

    /// The embedded pair is conjugate but no conjugator exists in `B_m`.
    #[error("embedded images of {a} and {b} are conjugate in B_{n} but no conjugator was found in B_m")]
    TheoremViolation { a: BraidWord, b: BraidWord, n: usize },
}

use braid_core::rng::{derive_seed, SplitMix64};
use braid_core::word::random_word_with;
use braid_core::{curve_class_round, embed_standard, equal_words, is_periodic, preserves_curve_class, BraidWord};
use serde::Serialize;

use crate::error::HarnessError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryFailure {
    pub trial: usize,
    #[serde(serialize_with = "crate::report::word_text")]
    pub word: BraidWord,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryReport {
    pub m: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Embedded braids that preserve the round curve around `1..=m`.
    pub preserved: usize,
    pub nontrivial: usize,
    /// Nontrivial embedded braids found non-periodic.
    pub non_periodic: usize,
    pub failures: Vec<BoundaryFailure>,
}

impl BoundaryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For random `a ∈ B_m`, checks that the standard embedding of `a` in `B_n`
/// preserves the round curve `x_1⋯x_m`, and that it is not periodic unless
/// `a` is trivial. Trial `t` draws a length in `0..=max_len` and then the
/// word from the stream `derive_seed(seed, t)`.
pub fn boundary_suite(m: usize, n: usize, trials: usize, max_len: usize, seed: u64) -> Result<BoundaryReport, HarnessError> {
    if m < 2 || n <= m {
        return Err(HarnessError::InvalidConfig(format!("need n > m >= 2, got m={m} n={n}")));
    }
    let boundary = curve_class_round(1, m, n)?;
    let identity = BraidWord::identity(m)?;
    let mut report = BoundaryReport { m, n, trials, seed, preserved: 0, nontrivial: 0, non_periodic: 0, failures: Vec::new() };
    for t in 0..trials {
        let mut rng = SplitMix64::new(derive_seed(seed, t as u64));
        let len = rng.range_inclusive(0, max_len);
        let a = random_word_with(m, len, &mut rng)?;
        let embedded = embed_standard(&a, n)?;
        if preserves_curve_class(&embedded, &boundary)? {
            report.preserved += 1;
        } else {
            report.failures.push(BoundaryFailure { trial: t, word: a.clone(), reason: "boundary curve not preserved".into() });
        }
        if !equal_words(&a, &identity)? {
            report.nontrivial += 1;
            if is_periodic(&embedded) {
                report.failures.push(BoundaryFailure { trial: t, word: a, reason: "nontrivial embedded braid is periodic".into() });
            } else {
                report.non_periodic += 1;
            }
        }
    }
    Ok(report)
}

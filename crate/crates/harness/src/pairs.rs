use std::fmt;

use braid_core::rng::{derive_seed, SplitMix64};
use braid_core::word::random_word_with;
use braid_core::BraidWord;
use serde::Serialize;

use crate::config::SuiteConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairMode {
    /// `(a, w a w⁻¹)` for random `a`, `w`.
    Constructed,
    /// Two independent random words.
    Random,
}

impl fmt::Display for PairMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairMode::Constructed => "constructed",
            PairMode::Random => "random",
        })
    }
}

/// Seed of trial `trial`: `derive_seed(cfg.seed, trial)`.
pub fn trial_seed(cfg: &SuiteConfig, trial: usize) -> u64 {
    derive_seed(cfg.seed, trial as u64)
}

/// The test pair of one trial, a pure function of `(cfg, trial)`.
///
/// From the trial seed: one unit draw picks the mode (constructed when below
/// the configured fraction); `a` has a length drawn in `1..=max_len`; then
/// either a conjugator `w` or an independent `b` follows, again with a
/// length in `1..=max_len`.
pub fn generate_pair(cfg: &SuiteConfig, trial: usize) -> (BraidWord, BraidWord, PairMode) {
    let mut rng = SplitMix64::new(trial_seed(cfg, trial));
    let constructed = rng.unit() < cfg.constructed_fraction;
    let upper = cfg.max_len.max(1);
    let len_a = rng.range_inclusive(1, upper);
    let a = random_word_with(cfg.m, len_a, &mut rng).expect("m >= 2");
    let len_b = rng.range_inclusive(1, upper);
    let other = random_word_with(cfg.m, len_b, &mut rng).expect("m >= 2");
    if constructed {
        let b = a.conjugated_by(&other).expect("same strands");
        (a, b, PairMode::Constructed)
    } else {
        (a, other, PairMode::Random)
    }
}

/// Conjugator `g ∈ B_n` of the general-embedding check for a trial, drawn
/// from the stream `derive_seed(trial_seed, 0)`.
pub fn general_conjugator(cfg: &SuiteConfig, trial: usize, len: usize) -> BraidWord {
    let mut rng = SplitMix64::new(derive_seed(trial_seed(cfg, trial), 0));
    random_word_with(cfg.n, len, &mut rng).expect("n >= 3")
}

#[cfg(test)]
mod tests {
    use super::*;
    use braid_core::equal_words;

    #[test]
    fn deterministic_and_bounded() {
        let cfg = SuiteConfig::new(3, 5, 50, 7, 99);
        let mut modes = [0usize; 2];
        for t in 0..200 {
            let (a, b, mode) = generate_pair(&cfg, t);
            assert_eq!(generate_pair(&cfg, t), (a.clone(), b.clone(), mode));
            assert!(a.len() <= 7);
            assert_eq!(a.strands(), 3);
            match mode {
                PairMode::Constructed => {
                    assert!(b.len() <= 7 + 2 * 7);
                    modes[0] += 1;
                }
                PairMode::Random => {
                    assert!(b.len() <= 7);
                    modes[1] += 1;
                }
            }
        }
        assert!(modes[0] > 50 && modes[1] > 50, "{modes:?}");
    }

    #[test]
    fn constructed_pairs_are_conjugates() {
        let mut cfg = SuiteConfig::new(3, 5, 50, 6, 1);
        cfg.constructed_fraction = 1.0;
        for t in 0..30 {
            let (a, b, mode) = generate_pair(&cfg, t);
            assert_eq!(mode, PairMode::Constructed);
            // b = w a w⁻¹ where w is the third word drawn; rebuild it
            let mut rng = SplitMix64::new(trial_seed(&cfg, t));
            rng.unit();
            let la = rng.range_inclusive(1, 6);
            random_word_with(3, la, &mut rng).unwrap();
            let lw = rng.range_inclusive(1, 6);
            let w = random_word_with(3, lw, &mut rng).unwrap();
            assert!(equal_words(&b, &a.conjugated_by(&w).unwrap()).unwrap());
        }
    }
}

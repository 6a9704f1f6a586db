use braid_core::DEFAULT_MAX_SSS;
use serde::Serialize;

use crate::error::HarnessError;

/// Parameters of a non-merging verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub m: usize,
    pub n: usize,
    pub trials: usize,
    /// Upper bound on the length of `a`, of the random `b`, and of the
    /// conjugator in constructed pairs.
    pub max_len: usize,
    pub seed: u64,
    /// Probability that a trial uses a constructed conjugate pair.
    pub constructed_fraction: f64,
    /// Length of the random conjugator for the general-embedding check.
    pub general_conj_len: Option<usize>,
    pub max_sss: usize,
    /// Largest tolerated fraction of skipped trials.
    pub skip_threshold: f64,
}

impl SuiteConfig {
    pub fn new(m: usize, n: usize, trials: usize, max_len: usize, seed: u64) -> Self {
        Self {
            m,
            n,
            trials,
            max_len,
            seed,
            constructed_fraction: 0.5,
            general_conj_len: None,
            max_sss: DEFAULT_MAX_SSS,
            skip_threshold: 0.05,
        }
    }

    pub fn with_general_conj_len(mut self, len: usize) -> Self {
        self.general_conj_len = Some(len);
        self
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.m < 2 || self.n <= self.m {
            return Err(HarnessError::InvalidConfig(format!("need n > m >= 2, got m={} n={}", self.m, self.n)));
        }
        if self.trials < 1 {
            return Err(HarnessError::InvalidConfig("trials must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.constructed_fraction) {
            return Err(HarnessError::InvalidConfig(format!(
                "constructed fraction {} outside [0, 1]",
                self.constructed_fraction
            )));
        }
        if self.max_sss < 1 {
            return Err(HarnessError::InvalidConfig("max-sss must be positive".into()));
        }
        Ok(())
    }
}

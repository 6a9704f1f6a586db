//! Timing sweep over strand counts and word lengths.

use std::time::Instant;

use braid_core::rng::{derive_seed, SplitMix64};
use braid_core::word::random_word_with;
use braid_core::{are_conjugate, normal_form, BraidError};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub len: usize,
    pub trials: usize,
    /// Mean normal-form time in microseconds.
    pub normal_form_us: f64,
    /// Mean conjugacy decision time on constructed conjugate pairs.
    pub conjugacy_us: f64,
    pub max_conjugacy_us: u64,
    pub skipped: usize,
}

/// Lengths swept for a maximum length: quarters of `max_len`, deduplicated.
pub fn sweep_lengths(max_len: usize) -> Vec<usize> {
    let mut lens: Vec<usize> = (1..=4).map(|q| (max_len * q).div_ceil(4)).filter(|&l| l > 0).collect();
    lens.dedup();
    lens
}

/// One row per `(n', len)` with `3 <= n' <= n` and `len` in
/// [`sweep_lengths`]. Inputs are drawn from `derive_seed(seed, k)` where
/// `k` enumerates the grid cells and trials.
pub fn run_bench(n: usize, max_len: usize, trials: usize, seed: u64, max_sss: usize) -> Result<Vec<BenchRow>, BraidError> {
    let mut rows = Vec::new();
    let mut stream = 0u64;
    for strands in 3..=n.max(3) {
        for len in sweep_lengths(max_len) {
            let mut nf_total = 0u128;
            let mut conj_total = 0u128;
            let mut conj_max = 0u64;
            let mut skipped = 0;
            for _ in 0..trials {
                let mut rng = SplitMix64::new(derive_seed(seed, stream));
                stream += 1;
                let a = random_word_with(strands, len, &mut rng)?;
                let w = random_word_with(strands, len, &mut rng)?;
                let b = a.conjugated_by(&w)?;

                let start = Instant::now();
                std::hint::black_box(normal_form(&b));
                nf_total += start.elapsed().as_micros();

                let start = Instant::now();
                let outcome = are_conjugate(&a, &b, max_sss);
                let us = start.elapsed().as_micros() as u64;
                match outcome {
                    Ok(_) => {
                        conj_total += us as u128;
                        conj_max = conj_max.max(us);
                    }
                    Err(BraidError::ResourceLimit { .. }) => skipped += 1,
                    Err(e) => return Err(e),
                }
            }
            let decided = (trials - skipped).max(1) as f64;
            rows.push(BenchRow {
                n: strands,
                len,
                trials,
                normal_form_us: nf_total as f64 / trials.max(1) as f64,
                conjugacy_us: conj_total as f64 / decided,
                max_conjugacy_us: conj_max,
                skipped,
            });
        }
    }
    Ok(rows)
}

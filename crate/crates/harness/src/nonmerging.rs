use std::fmt;
use std::time::Instant;

use braid_core::{are_conjugate, embed_general, embed_standard, BraidError, BraidWord, ConjugacyCertificate};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::SuiteConfig;
use crate::error::HarnessError;
use crate::pairs::{general_conjugator, generate_pair, PairMode};

/// Outcome of one conjugacy decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Conjugate,
    NotConjugate,
    /// The super summit set exceeded the configured cap.
    Skipped,
}

impl Verdict {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Conjugate => Some(true),
            Verdict::NotConjugate => Some(false),
            Verdict::Skipped => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Conjugate => "true",
            Verdict::NotConjugate => "false",
            Verdict::Skipped => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    #[serde(serialize_with = "crate::report::optional_word_text")]
    pub certificate: Option<BraidWord>,
    /// Whether the certificate re-verified independently.
    pub certificate_ok: bool,
    pub micros: u64,
}

fn decide(a: &BraidWord, b: &BraidWord, max_sss: usize) -> Result<Decision, BraidError> {
    let start = Instant::now();
    let outcome = are_conjugate(a, b, max_sss);
    let micros = start.elapsed().as_micros() as u64;
    match outcome {
        Ok(Some(cert)) => {
            let ok = cert.verified && cert.certifies(a, b)?;
            Ok(Decision { verdict: Verdict::Conjugate, certificate: Some(cert.conjugator), certificate_ok: ok, micros })
        }
        Ok(None) => Ok(Decision { verdict: Verdict::NotConjugate, certificate: None, certificate_ok: true, micros }),
        Err(BraidError::ResourceLimit { .. }) => {
            Ok(Decision { verdict: Verdict::Skipped, certificate: None, certificate_ok: true, micros })
        }
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub trial: usize,
    pub mode: PairMode,
    #[serde(serialize_with = "crate::report::word_text")]
    pub a: BraidWord,
    #[serde(serialize_with = "crate::report::word_text")]
    pub b: BraidWord,
    /// Decision in `B_m`.
    pub small: Decision,
    /// Decision on the standard embeddings in `B_n`.
    pub embedded: Decision,
    /// Decision on a random conjugated embedding, when configured.
    pub general: Option<Decision>,
    /// Conjugator in `B_m` lifted from a positive `B_n` verdict.
    #[serde(serialize_with = "crate::report::optional_word_text")]
    pub lifted_witness: Option<BraidWord>,
    /// `B_n` says conjugate but `B_m` found no conjugator.
    pub theorem_violation: bool,
}

impl TrialReport {
    pub fn skipped(&self) -> bool {
        self.small.verdict == Verdict::Skipped
            || self.embedded.verdict == Verdict::Skipped
            || self.general.as_ref().is_some_and(|g| g.verdict == Verdict::Skipped)
    }

    /// `verdict_m == verdict_n`; vacuously true for skipped trials.
    pub fn consistent(&self) -> bool {
        self.skipped() || self.small.verdict == self.embedded.verdict
    }

    /// The general-embedding verdict matches the standard one.
    pub fn general_agrees(&self) -> bool {
        self.skipped() || self.general.as_ref().is_none_or(|g| g.verdict == self.embedded.verdict)
    }

    pub fn certificates_ok(&self) -> bool {
        self.small.certificate_ok && self.embedded.certificate_ok && self.general.as_ref().is_none_or(|g| g.certificate_ok)
    }

    fn decisions(&self) -> impl Iterator<Item = &Decision> {
        [&self.small, &self.embedded].into_iter().chain(self.general.as_ref())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Summary {
    pub trials: usize,
    pub conjugate: usize,
    pub not_conjugate: usize,
    pub inconsistent: usize,
    pub general_disagreements: usize,
    pub skipped: usize,
    pub certificates: usize,
    pub certificate_failures: usize,
    pub theorem_violations: usize,
}

impl Summary {
    pub fn skip_rate(&self) -> f64 {
        self.skipped as f64 / self.trials.max(1) as f64
    }

    pub fn violations(&self) -> usize {
        self.inconsistent + self.general_disagreements + self.certificate_failures + self.theorem_violations
    }

    /// 0 on success, 1 on any property violation, 3 when too many trials
    /// were skipped.
    pub fn exit_code(&self, skip_threshold: f64) -> i32 {
        if self.violations() > 0 {
            1
        } else if self.skip_rate() > skip_threshold {
            3
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub trials: Vec<TrialReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code(self.config.skip_threshold)
    }
}

fn run_trial(cfg: &SuiteConfig, trial: usize) -> Result<TrialReport, BraidError> {
    let (a, b, mode) = generate_pair(cfg, trial);
    evaluate_pair(cfg, trial, a, b, mode)
}

/// Decides one pair in `B_m`, after standard embedding in `B_n`, and (when
/// configured) after the trial's general embedding.
pub fn evaluate_pair(
    cfg: &SuiteConfig,
    trial: usize,
    a: BraidWord,
    b: BraidWord,
    mode: PairMode,
) -> Result<TrialReport, BraidError> {
    let small = decide(&a, &b, cfg.max_sss)?;
    // decided independently of the B_m verdict
    let embedded = decide(&embed_standard(&a, cfg.n)?, &embed_standard(&b, cfg.n)?, cfg.max_sss)?;
    let general = match cfg.general_conj_len {
        Some(len) => {
            let g = general_conjugator(cfg, trial, len);
            Some(decide(&embed_general(&a, cfg.n, &g)?, &embed_general(&b, cfg.n, &g)?, cfg.max_sss)?)
        }
        None => None,
    };
    let (lifted_witness, theorem_violation) = match (embedded.verdict, small.verdict) {
        (Verdict::Conjugate, Verdict::Conjugate) => (small.certificate.clone(), false),
        (Verdict::Conjugate, Verdict::NotConjugate) => (None, true),
        _ => (None, false),
    };
    Ok(TrialReport { trial, mode, a, b, small, embedded, general, lifted_witness, theorem_violation })
}

/// Runs every trial of a suite. Trials run in parallel but the report is
/// ordered by trial index and does not depend on scheduling.
pub fn verify_nonmerging(cfg: &SuiteConfig) -> Result<SuiteReport, HarnessError> {
    cfg.validate()?;
    let trials = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, t))
        .collect::<Result<Vec<_>, _>>()?;
    let mut summary = Summary { trials: trials.len(), ..Summary::default() };
    for t in &trials {
        if t.skipped() {
            summary.skipped += 1;
            continue;
        }
        match t.embedded.verdict {
            Verdict::Conjugate => summary.conjugate += 1,
            _ => summary.not_conjugate += 1,
        }
        summary.inconsistent += usize::from(!t.consistent());
        summary.general_disagreements += usize::from(!t.general_agrees());
        summary.theorem_violations += usize::from(t.theorem_violation);
        for d in t.decisions() {
            if d.certificate.is_some() {
                summary.certificates += 1;
                summary.certificate_failures += usize::from(!d.certificate_ok);
            }
        }
    }
    Ok(SuiteReport { config: cfg.clone(), trials, summary })
}

/// A conjugator `α ∈ B_m` with `α a α⁻¹ = b`, whenever the standard
/// embeddings of `a` and `b` are conjugate in `B_n`.
///
/// Returns `None` when the embedded pair is not conjugate, and a theorem
/// violation when it is but no conjugator exists in `B_m`.
pub fn lift_witness(
    a: &BraidWord,
    b: &BraidWord,
    n: usize,
    max_sss: usize,
) -> Result<Option<BraidWord>, HarnessError> {
    a.strands()
        .eq(&b.strands())
        .then_some(())
        .ok_or(BraidError::StrandMismatch { left: a.strands(), right: b.strands() })?;
    if n <= a.strands() {
        return Err(BraidError::InvalidTarget { from: a.strands(), to: n }.into());
    }
    if are_conjugate(&embed_standard(a, n)?, &embed_standard(b, n)?, max_sss)?.is_none() {
        return Ok(None);
    }
    match are_conjugate(a, b, max_sss)? {
        Some(ConjugacyCertificate { conjugator, verified: true }) => Ok(Some(conjugator)),
        _ => Err(HarnessError::TheoremViolation { a: a.clone(), b: b.clone(), n }),
    }
}

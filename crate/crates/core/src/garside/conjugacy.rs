use super::normal_form::{equal_words, NormalForm};
use super::summit::{explore, summit_representative};
use crate::error::Result;
use crate::word::BraidWord;

/// A conjugator `c` for an ordered pair `(a, b)` with `c · a · c⁻¹ = b`.
/// `verified` records the outcome of re-checking that equation by normal
/// forms at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyCertificate {
    pub conjugator: BraidWord,
    pub verified: bool,
}

impl ConjugacyCertificate {
    /// Checks `c · a · c⁻¹ = b`.
    pub fn check(conjugator: BraidWord, a: &BraidWord, b: &BraidWord) -> Result<Self> {
        let verified = equal_words(&a.conjugated_by(&conjugator)?, b)?;
        Ok(Self { conjugator, verified })
    }

    /// Re-verifies the certificate against a pair.
    pub fn certifies(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        equal_words(&a.conjugated_by(&self.conjugator)?, b)
    }
}

/// Decides conjugacy of `a` and `b`, returning a certificate when they are
/// conjugate.
///
/// Both are driven to their super summit sets by cycling and decycling; the
/// set of `a` is then explored from its summit element until the summit
/// element of `b` shows up or the set is exhausted. Exponent sum and cycle
/// type of the permutation are checked first.
pub fn are_conjugate(a: &BraidWord, b: &BraidWord, max_sss: usize) -> Result<Option<ConjugacyCertificate>> {
    a.check_same_strands(b)?;
    if a.exponent_sum() != b.exponent_sum() || a.permutation().cycle_type() != b.permutation().cycle_type() {
        return Ok(None);
    }
    let (a_summit, to_a) = summit_representative(&NormalForm::from_word(a));
    let (b_summit, to_b) = summit_representative(&NormalForm::from_word(b));
    if (a_summit.inf(), a_summit.sup()) != (b_summit.inf(), b_summit.sup()) {
        return Ok(None);
    }
    let closure = explore(&a_summit, max_sss, Some(&b_summit))?;
    let Some(found) = closure.found else {
        return Ok(None);
    };
    // d · a_summit · d⁻¹ = b_summit, so (to_b⁻¹ · d · to_a) · a · (…)⁻¹ = b
    let d = closure.conjugator(found);
    let c = to_b.inverse().mul(&d).mul(&to_a);
    ConjugacyCertificate::check(c.to_word().free_reduced(), a, b).map(Some)
}

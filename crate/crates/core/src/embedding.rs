//! Geometric embeddings `B_m → B_n`.
//!
//! The standard embedding adds `n - m` trivial strands on the right. Every
//! other geometric embedding is a conjugate of it; here `embed_general`
//! fixes the convention `w ↦ g⁻¹ · η(w) · g`.

use crate::curve::{artin_action, FreeWord};
use crate::error::{BraidError, Result};
use crate::word::BraidWord;

pub fn embed_standard(w: &BraidWord, n: usize) -> Result<BraidWord> {
    if n < w.strands() {
        return Err(BraidError::InvalidTarget { from: w.strands(), to: n });
    }
    BraidWord::new(n, w.letters().to_vec())
}

/// `g⁻¹ · η(w) · g` for a conjugator `g` in `B_n`.
pub fn embed_general(w: &BraidWord, n: usize, g: &BraidWord) -> Result<BraidWord> {
    let embedded = embed_standard(w, n)?;
    if g.strands() != n {
        return Err(BraidError::StrandMismatch { left: n, right: g.strands() });
    }
    BraidWord::concat_all(n, [&g.inverse(), &embedded, g])
}

/// Whether `x` lies in the image of the standard embedding of `B_m`: its
/// action fixes `x_j` for `j > m` and keeps each `x_i`, `i ≤ m`, inside the
/// subgroup generated by `x_1..x_m`.
pub fn is_in_standard_image(x: &BraidWord, m: usize) -> Result<bool> {
    let n = x.strands();
    if m < 1 || m > n {
        return Err(BraidError::SubgroupOutOfRange { m, n });
    }
    for k in 1..=n {
        let g = FreeWord::generator(n, k);
        let image = artin_action(x, &g)?;
        let ok = if k > m { image == g } else { image.uses_only_first(m) };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

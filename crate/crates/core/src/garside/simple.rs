use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use crate::word::{BraidWord, Letter};

/// A permutation braid: a positive braid in which any two strands cross at
/// most once. It is determined by its permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleElement {
    perm: Permutation,
}

/// Bit `i` set means `σ_{i+1}` belongs to the set.
pub type GeneratorMask = u64;

/// Strand counts beyond this do not fit the divisor bitmasks.
pub const MAX_STRANDS: usize = 64;

impl SimpleElement {
    pub fn from_permutation(perm: Permutation) -> Self {
        assert!(perm.size() <= MAX_STRANDS);
        Self { perm }
    }

    pub fn identity(n: usize) -> Self {
        Self { perm: Permutation::identity(n) }
    }

    /// `Δ`, the half twist: every pair of strands crosses once.
    pub fn delta(n: usize) -> Self {
        Self { perm: Permutation::reversal(n) }
    }

    /// `σ_i` with a 1-based index.
    pub fn generator(n: usize, i: usize) -> Self {
        let mut perm = Permutation::identity(n);
        perm.swap_sources(i - 1);
        Self { perm }
    }

    pub fn strands(&self) -> usize {
        self.perm.size()
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.perm.size();
        self.perm.images().iter().enumerate().all(|(k, &x)| x as usize == n - 1 - k)
    }

    /// Number of crossings, i.e. the letter length of the braid.
    pub fn length(&self) -> usize {
        self.perm.inversions()
    }

    /// Generators that left-divide this element: descents of the permutation.
    pub fn starting_mask(&self) -> GeneratorMask {
        descents(self.perm.images())
    }

    /// Generators that right-divide this element: descents of the inverse.
    pub fn finishing_mask(&self) -> GeneratorMask {
        let images = self.perm.images();
        let mut pos = [0u8; MAX_STRANDS];
        for (k, &x) in images.iter().enumerate() {
            pos[x as usize] = k as u8;
        }
        descents(&pos[..images.len()])
    }

    /// Starting and finishing sets as 1-based generator indices.
    pub fn divisor_sets(&self) -> (Vec<usize>, Vec<usize>) {
        (mask_to_indices(self.starting_mask()), mask_to_indices(self.finishing_mask()))
    }

    /// The simple element `s⁻¹Δ`, so that `s · ∂(s) = Δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.perm.size();
        let inv = self.perm.inverse();
        let images = inv.images().iter().map(|&x| (n - 1 - x as usize) as u8).collect();
        Self { perm: Permutation::from_images_unchecked(images) }
    }

    /// Conjugation by `Δ`, which sends `σ_i` to `σ_{n-i}`. An involution.
    pub fn flip(&self) -> Self {
        let n = self.perm.size();
        let images = self.perm.images();
        let flipped = (0..n).map(|k| (n - 1 - images[n - 1 - k] as usize) as u8).collect();
        Self { perm: Permutation::from_images_unchecked(flipped) }
    }

    /// `flip` applied `k` times.
    pub fn flip_pow(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 1 {
            self.flip()
        } else {
            self.clone()
        }
    }

    /// Right-multiplies by `σ_{i+1}` (0-based `i`). Only valid when the
    /// generator is not already a right divisor.
    pub(crate) fn push_back_generator(&mut self, i: usize) {
        self.perm.swap_targets(i);
    }

    /// Strips `σ_{i+1}` from the front (0-based `i`). Only valid when the
    /// generator is a left divisor.
    pub(crate) fn pop_front_generator(&mut self, i: usize) {
        self.perm.swap_sources(i);
    }

    /// A reduced positive word, peeling the smallest left divisor first.
    /// For `Δ` this yields `(σ1)(σ2σ1)⋯(σ_{n-1}⋯σ1)`.
    pub fn to_letters(&self) -> Vec<Letter> {
        let mut rest = self.clone();
        let mut letters = Vec::with_capacity(rest.length());
        loop {
            let s = rest.starting_mask();
            if s == 0 {
                break;
            }
            let i = s.trailing_zeros() as usize;
            letters.push(Letter::pos(i + 1));
            rest.pop_front_generator(i);
        }
        letters
    }

    pub fn to_word(&self) -> BraidWord {
        BraidWord::from_parts_unchecked(self.strands(), self.to_letters())
    }

    /// Every simple element of `B_n`, in lexicographic order of permutations.
    pub fn all(n: usize) -> Vec<SimpleElement> {
        Permutation::all(n).into_iter().map(|perm| Self { perm }).collect()
    }
}

/// `Δ` of `B_n`.
pub fn delta_simple(n: usize) -> Result<SimpleElement> {
    if !(1..=MAX_STRANDS).contains(&n) {
        return Err(BraidError::InvalidStrandCount(n));
    }
    Ok(SimpleElement::delta(n))
}

fn descents(images: &[u8]) -> GeneratorMask {
    let mut mask = 0;
    for k in 0..images.len().saturating_sub(1) {
        if images[k] > images[k + 1] {
            mask |= 1 << k;
        }
    }
    mask
}

pub(crate) fn mask_to_indices(mask: GeneratorMask) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

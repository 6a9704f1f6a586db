use std::fmt;

use crate::error::{BraidError, Result};
use crate::word::{BraidWord, Letter};

/// A freely reduced word in the free group on `x_1, ..., x_n`, the
/// fundamental group of the `n`-punctured disc. Letter `k > 0` is `x_k` and
/// `-k` is `x_k⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

fn push_reduced(out: &mut Vec<i32>, x: i32) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

impl FreeWord {
    /// Builds and freely reduces a word; indices must lie in `1..=rank`.
    pub fn new(rank: usize, letters: &[i32]) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x.unsigned_abs() as usize > rank) {
            return Err(BraidError::Parse(format!("free generator {bad} out of range for rank {rank}")));
        }
        let mut out = Vec::with_capacity(letters.len());
        for &x in letters {
            push_reduced(&mut out, x);
        }
        Ok(Self { rank, letters: out })
    }

    pub fn identity(rank: usize) -> Self {
        Self { rank, letters: Vec::new() }
    }

    /// `x_k`.
    pub fn generator(rank: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= rank);
        Self { rank, letters: vec![k as i32] }
    }

    /// `x_i x_{i+1} ⋯ x_j`.
    pub fn consecutive_product(rank: usize, i: usize, j: usize) -> Self {
        assert!(1 <= i && i <= j && j <= rank);
        Self { rank, letters: (i as i32..=j as i32).collect() }
    }

    pub(crate) fn from_reduced_unchecked(rank: usize, letters: Vec<i32>) -> Self {
        Self { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { rank: self.rank, letters: self.letters.iter().rev().map(|x| -x).collect() }
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut out = self.letters.clone();
        for &x in &other.letters {
            push_reduced(&mut out, x);
        }
        Self { rank: self.rank, letters: out }
    }

    /// Strips matching inverse letters from both ends.
    pub fn cyclically_reduced(&self) -> Self {
        let l = &self.letters;
        let (mut lo, mut hi) = (0, l.len());
        while hi - lo >= 2 && l[lo] == -l[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        Self { rank: self.rank, letters: l[lo..hi].to_vec() }
    }

    /// Whether only generators `x_1..x_m` occur.
    pub fn uses_only_first(&self, m: usize) -> bool {
        self.letters.iter().all(|x| x.unsigned_abs() as usize <= m)
    }

    /// Applies the automorphism of one braid letter.
    fn substitute(&self, letter: Letter) -> Self {
        let i = letter.index() as i32;
        let j = i + 1;
        let mut out = Vec::with_capacity(self.letters.len() + 4);
        for &x in &self.letters {
            let (g, positive) = (x.abs(), x > 0);
            let image: &[i32] = match (letter.is_positive(), g == i, g == j) {
                // σ_i: x_i -> x_i x_{i+1} x_i⁻¹, x_{i+1} -> x_i
                (true, true, _) => &[i, j, -i],
                (true, _, true) => &[i],
                // σ_i⁻¹: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}⁻¹ x_i x_{i+1}
                (false, true, _) => &[j],
                (false, _, true) => &[-j, i, j],
                _ => {
                    push_reduced(&mut out, x);
                    continue;
                }
            };
            if positive {
                image.iter().for_each(|&y| push_reduced(&mut out, y));
            } else {
                image.iter().rev().for_each(|&y| push_reduced(&mut out, -y));
            }
        }
        Self { rank: self.rank, letters: out }
    }

    pub(crate) fn apply_letters(&self, letters: &[Letter]) -> Self {
        letters.iter().fold(self.clone(), |g, &l| g.substitute(l))
    }
}

/// The action of a braid on the free group, letter by letter from the left:
/// the action of `uv` is that of `u` followed by that of `v`.
pub fn artin_action(w: &BraidWord, g: &FreeWord) -> Result<FreeWord> {
    if w.strands() != g.rank() {
        return Err(BraidError::RankMismatch { rank: g.rank(), strands: w.strands() });
    }
    Ok(g.apply_letters(w.letters()))
}

/// `x1 x2 x1^-1`; the empty word prints as `1`.
impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &x) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if x > 0 {
                write!(f, "x{x}")?;
            } else {
                write!(f, "x{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

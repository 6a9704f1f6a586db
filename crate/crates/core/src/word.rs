use std::fmt;
use std::str::FromStr;

use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use crate::rng::SplitMix64;

/// A signed Artin generator: `Letter(i)` is `σ_i` for `i > 0` and
/// `σ_{-i}^{-1}` for `i < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: usize, positive: bool) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn pos(index: usize) -> Self {
        Self::new(index, true)
    }

    pub fn neg(index: usize) -> Self {
        Self::new(index, false)
    }

    pub fn from_int(value: i32) -> Option<Self> {
        (value != 0).then_some(Letter(value))
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn sign(self) -> i64 {
        self.0.signum() as i64
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn to_int(self) -> i32 {
        self.0
    }
}

/// A word in the Artin generators of `B_n`. Letters are kept verbatim:
/// no free cancellation happens on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::InvalidStrandCount(strands));
        }
        if let Some(bad) = letters.iter().find(|l| l.index() >= strands) {
            return Err(BraidError::LetterOutOfRange { index: bad.index(), strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn from_ints(strands: usize, letters: &[i32]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&v| Letter::from_int(v).ok_or_else(|| BraidError::Parse("zero letter".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn generator(strands: usize, index: usize, positive: bool) -> Result<Self> {
        if index == 0 {
            return Err(BraidError::LetterOutOfRange { index, strands });
        }
        Self::new(strands, vec![Letter::new(index, positive)])
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index() < strands));
        Self { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn check_same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// Concatenation of several words over the same strand count.
    pub fn concat_all<'a>(strands: usize, words: impl IntoIterator<Item = &'a BraidWord>) -> Result<BraidWord> {
        let mut out = Self::identity(strands)?;
        for w in words {
            out.check_same_strands(w)?;
            out.letters.extend_from_slice(&w.letters);
        }
        Ok(out)
    }

    /// The reversed word with every sign flipped.
    pub fn inverse(&self) -> BraidWord {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The word with adjacent inverse pairs cancelled.
    pub fn free_reduced(&self) -> BraidWord {
        let mut letters: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if letters.last() == Some(&l.inverse()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Self { strands: self.strands, letters }
    }

    /// `c · self · c⁻¹`.
    pub fn conjugated_by(&self, c: &BraidWord) -> Result<BraidWord> {
        Self::concat_all(self.strands, [c, self, &c.inverse()])
    }

    /// `self^k` for a signed exponent.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self { strands: self.strands, letters }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// The induced permutation of strand positions; signs are irrelevant.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.swap_targets(l.index() - 1);
        }
        p
    }
}

/// A uniformly random word of `len` letters, each drawn from the
/// `2(n-1)` signed generators.
///
/// One bounded draw `r = below(2(n-1))` per letter (see [`crate::rng`]):
/// `r < n-1` gives `σ_{r+1}`, otherwise `σ_{r-n+2}^{-1}`.
pub fn random_word(n: usize, len: usize, seed: u64) -> Result<BraidWord> {
    let mut rng = SplitMix64::new(seed);
    random_word_with(n, len, &mut rng)
}

/// As [`random_word`] but continuing an existing stream.
pub fn random_word_with(n: usize, len: usize, rng: &mut SplitMix64) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::InvalidStrandCount(n));
    }
    let gens = (n - 1) as u64;
    let letters = (0..len)
        .map(|_| {
            let r = rng.below(2 * gens);
            if r < gens {
                Letter::pos(r as usize + 1)
            } else {
                Letter::neg((r - gens) as usize + 1)
            }
        })
        .collect();
    Ok(BraidWord::from_parts_unchecked(n, letters))
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Text form `n: l1 l2 ... lk`.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l)?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| BraidError::Parse(format!("missing ':' in {s:?}")))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| BraidError::Parse(format!("bad strand count {:?}", head.trim())))?;
        let letters = tail
            .split_whitespace()
            .map(|tok| {
                let v: i32 = tok.parse().map_err(|_| BraidError::Parse(format!("bad letter {tok:?}")))?;
                Letter::from_int(v).ok_or_else(|| BraidError::Parse("letter 0 is not a generator".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

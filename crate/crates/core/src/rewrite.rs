//! Random rewrites by the defining relations of `B_n`.
//!
//! These produce words that represent the same braid as their input without
//! going through any normal form, which makes them an independent source of
//! equal pairs for testing.

use crate::rng::SplitMix64;
use crate::word::{BraidWord, Letter};

/// One elementary move applied at a position of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// `σ_i^e σ_j^f -> σ_j^f σ_i^e` for `|i - j| > 1`.
    Commute,
    /// `σ_i σ_j σ_i -> σ_j σ_i σ_j` for `|i - j| = 1`, all letters of one sign.
    Braid,
    /// Insert `σ_i^e σ_i^-e`.
    InsertPair,
    /// Delete an adjacent `σ_i^e σ_i^-e`.
    CancelPair,
}

/// Positions where `mv` applies to `letters`.
fn sites(letters: &[Letter], mv: Move) -> Vec<usize> {
    match mv {
        Move::Commute => (0..letters.len().saturating_sub(1))
            .filter(|&k| letters[k].index().abs_diff(letters[k + 1].index()) > 1)
            .collect(),
        Move::Braid => (0..letters.len().saturating_sub(2))
            .filter(|&k| {
                let (a, b, c) = (letters[k], letters[k + 1], letters[k + 2]);
                a == c
                    && a.is_positive() == b.is_positive()
                    && a.index().abs_diff(b.index()) == 1
            })
            .collect(),
        Move::InsertPair => (0..=letters.len()).collect(),
        Move::CancelPair => (0..letters.len().saturating_sub(1))
            .filter(|&k| letters[k] == letters[k + 1].inverse())
            .collect(),
    }
}

/// Applies one random applicable move. Insertions are only drawn while the
/// word is shorter than `max_len - 1`. Returns the move taken, if any.
pub fn random_move(word: &mut BraidWord, max_len: usize, rng: &mut SplitMix64) -> Option<Move> {
    let strands = word.strands();
    let mut letters = word.letters().to_vec();
    let mut candidates = vec![Move::Commute, Move::Braid, Move::CancelPair];
    if strands >= 2 && letters.len() + 2 <= max_len {
        candidates.push(Move::InsertPair);
    }
    let options: Vec<(Move, Vec<usize>)> = candidates
        .into_iter()
        .map(|mv| (mv, sites(&letters, mv)))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    if options.is_empty() {
        return None;
    }
    let (mv, positions) = &options[rng.below(options.len() as u64) as usize];
    let k = positions[rng.below(positions.len() as u64) as usize];
    match mv {
        Move::Commute => letters.swap(k, k + 1),
        Move::Braid => {
            let (a, b) = (letters[k], letters[k + 1]);
            letters[k] = b;
            letters[k + 1] = a;
            letters[k + 2] = b;
        }
        Move::InsertPair => {
            let gens = (strands - 1) as u64;
            let l = Letter::new(rng.below(gens) as usize + 1, rng.below(2) == 0);
            letters.splice(k..k, [l, l.inverse()]);
        }
        Move::CancelPair => {
            letters.drain(k..k + 2);
        }
    }
    *word = BraidWord::from_parts_unchecked(strands, letters);
    Some(*mv)
}

/// Applies `steps` random moves, keeping the length at most `max_len`
/// whenever the input already satisfies it.
pub fn random_rewrites(word: &BraidWord, steps: usize, max_len: usize, rng: &mut SplitMix64) -> BraidWord {
    let mut out = word.clone();
    for _ in 0..steps {
        random_move(&mut out, max_len, rng);
    }
    out
}

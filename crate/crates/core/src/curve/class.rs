use std::cmp::Ordering;
use std::fmt;

use super::free::{artin_action, FreeWord};
use crate::error::{BraidError, Result};
use crate::word::BraidWord;

/// An unoriented free homotopy class of closed curves in the punctured
/// disc: a cyclically reduced word up to rotation and inversion.
///
/// The stored representative is the least word among all rotations of the
/// word and of its inverse, ordering letters `x1 < x1^-1 < x2 < x2^-1 < …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    representative: FreeWord,
}

fn letter_key(x: i32) -> u32 {
    2 * x.unsigned_abs() + u32::from(x < 0)
}

/// Start index of the least rotation (two-pointer minimum expression).
fn least_rotation(keys: &[u32]) -> usize {
    let n = keys.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        let (a, b) = (keys[(i + k) % n], keys[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

fn rotated(letters: &[i32], start: usize) -> Vec<i32> {
    letters[start..].iter().chain(&letters[..start]).copied().collect()
}

fn key_cmp(a: &[i32], b: &[i32]) -> Ordering {
    a.iter().map(|&x| letter_key(x)).cmp(b.iter().map(|&x| letter_key(x)))
}

impl CurveClass {
    /// The class of the closed curve read off a free word.
    pub fn from_word(w: &FreeWord) -> Self {
        let reduced = w.cyclically_reduced();
        let forward = reduced.letters();
        let backward = reduced.inverse();
        let backward = backward.letters();
        let f = rotated(forward, least_rotation(&forward.iter().map(|&x| letter_key(x)).collect::<Vec<_>>()));
        let b = rotated(backward, least_rotation(&backward.iter().map(|&x| letter_key(x)).collect::<Vec<_>>()));
        let best = if key_cmp(&b, &f) == Ordering::Less { b } else { f };
        Self { representative: FreeWord::from_reduced_unchecked(w.rank(), best) }
    }

    pub fn representative(&self) -> &FreeWord {
        &self.representative
    }

    pub fn rank(&self) -> usize {
        self.representative.rank()
    }

    /// `Some((i, j))` when this is the round curve around punctures `i..=j`.
    pub fn round_span(&self) -> Option<(usize, usize)> {
        let l = self.representative.letters();
        let n = self.rank();
        if l.len() < 2 || l.len() >= n || l[0] <= 0 {
            return None;
        }
        l.windows(2)
            .all(|p| p[1] == p[0] + 1)
            .then(|| (l[0] as usize, *l.last().unwrap() as usize))
    }

    /// The class of the image curve under a braid.
    pub fn image(&self, w: &BraidWord) -> Result<CurveClass> {
        Ok(Self::from_word(&artin_action(w, &self.representative)?))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

/// The round curve enclosing punctures `i..=j` of the `n`-punctured disc.
/// It must be non-degenerate: more than one and fewer than `n` punctures.
pub fn curve_class_round(i: usize, j: usize, n: usize) -> Result<CurveClass> {
    if i < 1 || j > n || i >= j || j - i + 1 >= n {
        return Err(BraidError::DegenerateCurve { i, j, n });
    }
    Ok(CurveClass::from_word(&FreeWord::consecutive_product(n, i, j)))
}

/// All round non-degenerate curves of the `n`-punctured disc, ordered by
/// `(i, j)`.
pub fn round_curves(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if j - i + 1 < n {
                out.push((i, j));
            }
        }
    }
    out
}

/// Whether the braid sends the curve class to itself.
pub fn preserves_curve_class(w: &BraidWord, c: &CurveClass) -> Result<bool> {
    Ok(&c.image(w)? == c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn brute_least_rotation(keys: &[u32]) -> Vec<u32> {
        (0..keys.len().max(1))
            .map(|s| keys[s.min(keys.len())..].iter().chain(&keys[..s.min(keys.len())]).copied().collect::<Vec<_>>())
            .min()
            .unwrap()
    }

    #[test]
    fn least_rotation_matches_brute_force() {
        let mut rng = crate::rng::SplitMix64::new(11);
        for _ in 0..2000 {
            let len = rng.range_inclusive(0, 9);
            let keys: Vec<u32> = (0..len).map(|_| rng.below(3) as u32).collect();
            let start = least_rotation(&keys);
            let got: Vec<u32> = keys[start.min(len)..].iter().chain(&keys[..start.min(len)]).copied().collect();
            assert_eq!(got, brute_least_rotation(&keys), "{keys:?}");
        }
    }

    #[test]
    fn canonical_form_is_rotation_and_inversion_invariant() {
        let w = FreeWord::new(4, &[2, 3, -1, 4, 4]).unwrap();
        let c = CurveClass::from_word(&w);
        let rot = FreeWord::new(4, &[4, 2, 3, -1, 4]).unwrap();
        assert_eq!(CurveClass::from_word(&rot), c);
        assert_eq!(CurveClass::from_word(&w.inverse()), c);
        let conj = FreeWord::new(4, &[1, 2, 3, -1, 4, 4, -1]).unwrap();
        assert_eq!(CurveClass::from_word(&conj), c);
    }

    #[test]
    fn round_examples() {
        let c = curve_class_round(1, 2, 3).unwrap();
        assert_eq!(c.representative().letters(), &[1, 2]);
        assert_eq!(c.round_span(), Some((1, 2)));
        assert!(matches!(curve_class_round(1, 3, 3), Err(BraidError::DegenerateCurve { .. })));
        assert!(curve_class_round(2, 2, 3).is_err());
        assert_eq!(curve_class_round(2, 3, 4).unwrap().representative().letters(), &[2, 3]);
        assert_eq!(round_curves(4), vec![(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn preservation_examples() {
        let c = curve_class_round(1, 2, 3).unwrap();
        assert!(preserves_curve_class(&b("3: 1"), &c).unwrap());
        assert!(!preserves_curve_class(&b("3: 2"), &c).unwrap());
        let image = c.image(&b("3: 2")).unwrap();
        assert_eq!(image.representative().len(), 4);
        assert_eq!(image, CurveClass::from_word(&FreeWord::new(3, &[1, 2, 3, -2]).unwrap()));
        assert!(preserves_curve_class(&b("4: 1"), &c).is_err());
    }
}

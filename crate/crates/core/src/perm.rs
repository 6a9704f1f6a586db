use std::fmt;

/// A permutation of `{1, ..., n}` stored 0-based.
///
/// `images[k]` is the final position of the strand that starts at position
/// `k`. Composition follows the braid convention: `a.then(&b)` applies `a`
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n as u8).collect() }
    }

    /// The order-reversing permutation `i -> n + 1 - i`.
    pub fn reversal(n: usize) -> Self {
        Self { images: (0..n as u8).rev().collect() }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Self { images })
    }

    /// Builds a permutation from 1-based images as written in text.
    pub fn from_one_based(images: &[usize]) -> Option<Self> {
        if images.iter().any(|&x| x == 0 || x > u8::MAX as usize) {
            return None;
        }
        Self::from_images(images.iter().map(|&x| (x - 1) as u8).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<u8>) -> Self {
        Self { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize] = k as u8;
        }
        Self { images: inv }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        Self {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    /// Swaps the contents of positions `i` and `i + 1` (0-based), i.e.
    /// precomposes with the transposition: the strand starting at `i` now
    /// ends where the strand from `i + 1` ended.
    pub(crate) fn swap_sources(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// Postcomposes with the transposition of final positions `i`, `i + 1`.
    pub(crate) fn swap_targets(&mut self, i: usize) {
        let (a, b) = (i as u8, i as u8 + 1);
        for x in self.images.iter_mut() {
            if *x == a {
                *x = b;
            } else if *x == b {
                *x = a;
            }
        }
    }

    /// Number of pairs `k < l` with `images[k] > images[l]`.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for k in 0..n {
            for l in k + 1..n {
                if self.images[k] > self.images[l] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Sorted cycle lengths; equal for conjugate permutations.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        lengths
    }

    /// All permutations of size `n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Self { images: current.clone() });
            // next lexicographic permutation
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| current[k] < current[k + 1])
            else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| current[l] > current[k]).unwrap();
            current.swap(k, l);
            current[k + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", *x as usize + 1)?;
        }
        write!(f, ")")
    }
}

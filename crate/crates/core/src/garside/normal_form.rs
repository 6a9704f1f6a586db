use std::cmp::Ordering;
use std::fmt;

use super::simple::SimpleElement;
use crate::error::Result;
use crate::word::{BraidWord, Letter};

/// Left normal form `Δ^p · A_1 ⋯ A_l`: every factor is a proper simple
/// element (neither trivial nor `Δ`) and each pair `(A_k, A_{k+1})` is
/// left-weighted, `S(A_{k+1}) ⊆ F(A_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<SimpleElement>,
}

/// Makes `(a, b)` left-weighted by sliding generators from the front of `b`
/// to the back of `a`, smallest index first. Returns whether anything moved.
fn left_weight(a: &mut SimpleElement, b: &mut SimpleElement) -> bool {
    let mut changed = false;
    loop {
        let movable = b.starting_mask() & !a.finishing_mask();
        if movable == 0 {
            return changed;
        }
        let i = movable.trailing_zeros() as usize;
        a.push_back_generator(i);
        b.pop_front_generator(i);
        changed = true;
    }
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        Self { strands, delta_power: 0, factors: Vec::new() }
    }

    pub fn delta_pow(strands: usize, p: i64) -> Self {
        Self { strands, delta_power: p, factors: Vec::new() }
    }

    pub fn from_simple(s: &SimpleElement) -> Self {
        let mut nf = Self::identity(s.strands());
        nf.push_simple(s.clone());
        nf
    }

    /// Normal form of `Δ^p · s_1 ⋯ s_k` for arbitrary simple elements.
    pub fn from_simples(strands: usize, p: i64, simples: impl IntoIterator<Item = SimpleElement>) -> Self {
        let mut nf = Self::delta_pow(strands, p);
        for s in simples {
            nf.push_simple(s);
        }
        nf
    }

    pub fn from_word(w: &BraidWord) -> Self {
        let n = w.strands();
        let mut nf = Self::identity(n);
        for &l in w.letters() {
            nf.push_letter(l);
        }
        nf
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[SimpleElement] {
        &self.factors
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Right-multiplies by a generator or its inverse.
    pub fn push_letter(&mut self, l: Letter) {
        let n = self.strands;
        let g = SimpleElement::generator(n, l.index());
        if l.is_positive() {
            self.push_simple(g);
        } else {
            // σ_i⁻¹ = ∂(σ_i) · Δ⁻¹
            self.push_simple(g.right_complement());
            self.mul_delta_pow(-1);
        }
    }

    /// Right-multiplies by `Δ^q`, using `X Δ^q = Δ^q τ^q(X)`.
    pub fn mul_delta_pow(&mut self, q: i64) {
        self.delta_power += q;
        if q.rem_euclid(2) == 1 {
            for f in self.factors.iter_mut() {
                *f = f.flip();
            }
        }
    }

    /// Right-multiplies by a simple element and restores normality by a
    /// single leftward sweep of local sliding.
    pub fn push_simple(&mut self, s: SimpleElement) {
        debug_assert_eq!(s.strands(), self.strands);
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut k = self.factors.len() - 1;
        while k > 0 {
            let (head, tail) = self.factors.split_at_mut(k);
            if !left_weight(&mut head[k - 1], &mut tail[0]) {
                break;
            }
            k -= 1;
        }
        // Δ factors can only surface at the front, trivial ones at the back.
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.delta_power += leading as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    /// `self · other`.
    pub fn mul(&self, other: &NormalForm) -> NormalForm {
        assert_eq!(self.strands, other.strands);
        let mut out = self.clone();
        out.mul_delta_pow(other.delta_power);
        for f in &other.factors {
            out.push_simple(f.clone());
        }
        out
    }

    /// `s · self` for a simple element `s`.
    pub fn left_mul_simple(&self, s: &SimpleElement) -> NormalForm {
        // s Δ^p = Δ^p τ^p(s)
        let mut out = Self::delta_pow(self.strands, self.delta_power);
        out.push_simple(s.flip_pow(self.delta_power));
        for f in &self.factors {
            out.push_simple(f.clone());
        }
        out
    }

    pub fn inverse(&self) -> NormalForm {
        // (Δ^p A_1 ⋯ A_l)⁻¹ = A_l⁻¹ ⋯ A_1⁻¹ Δ^-p, with A⁻¹ = ∂(A) Δ⁻¹
        let mut out = Self::identity(self.strands);
        for f in self.factors.iter().rev() {
            out.push_simple(f.right_complement());
            out.mul_delta_pow(-1);
        }
        out.mul_delta_pow(-self.delta_power);
        out
    }

    pub fn pow(&self, k: i64) -> NormalForm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `s⁻¹ · self · s` for a simple element `s`.
    pub fn conjugate_by_simple(&self, s: &SimpleElement) -> NormalForm {
        // s⁻¹ Δ^p X s = ∂(s) Δ^{p-1} X s = Δ^{p-1} τ^{p-1}(∂(s)) X s
        let p = self.delta_power;
        let mut out = Self::delta_pow(self.strands, p - 1);
        out.push_simple(s.right_complement().flip_pow(p - 1));
        for f in &self.factors {
            out.push_simple(f.clone());
        }
        out.push_simple(s.clone());
        out
    }

    /// A word for this element: `Δ^p` spelled out, then each factor.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = SimpleElement::delta(n).to_word();
        let mut letters = Vec::new();
        let unit = if self.delta_power < 0 { delta.inverse() } else { delta };
        for _ in 0..self.delta_power.unsigned_abs() {
            letters.extend_from_slice(unit.letters());
        }
        for f in &self.factors {
            letters.extend(f.to_letters());
        }
        BraidWord::from_parts_unchecked(n, letters)
    }

    /// Checks the structural invariants of a left normal form.
    pub fn is_valid(&self) -> bool {
        self.factors.iter().all(|f| {
            f.strands() == self.strands && !f.is_identity() && !f.is_delta()
        }) && self
            .factors
            .windows(2)
            .all(|w| w[1].starting_mask() & !w[0].finishing_mask() == 0)
    }
}

/// Canonical order: by `Δ` power, then factor count, then factor
/// permutations compared as image sequences.
impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.strands
            .cmp(&other.strands)
            .then(self.delta_power.cmp(&other.delta_power))
            .then(self.factors.len().cmp(&other.factors.len()))
            .then_with(|| {
                self.factors
                    .iter()
                    .map(|f| f.permutation())
                    .cmp(other.factors.iter().map(|f| f.permutation()))
            })
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `D^p | f1 | f2 | ...` with each factor as its permutation images.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for s in &self.factors {
            write!(f, " | {}", s.permutation())?;
        }
        Ok(())
    }
}

pub fn normal_form(w: &BraidWord) -> NormalForm {
    NormalForm::from_word(w)
}

/// Whether two words represent the same braid.
pub fn equal_words(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    u.check_same_strands(v)?;
    Ok(NormalForm::from_word(u) == NormalForm::from_word(v))
}

/// `Some(j)` iff `w = Δ^j`.
pub fn is_delta_power(w: &BraidWord) -> Option<i64> {
    let nf = NormalForm::from_word(w);
    nf.factors.is_empty().then_some(nf.delta_power)
}

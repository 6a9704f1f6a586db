use std::collections::HashMap;

use super::normal_form::NormalForm;
use super::simple::SimpleElement;
use crate::error::{BraidError, Result};
use crate::word::BraidWord;

/// Default cap on the number of super summit elements explored.
pub const DEFAULT_MAX_SSS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleDirection {
    /// Cycling: conjugate by `τ^{-p}(A_1)`, moving the first factor to the end.
    Front,
    /// Decycling: conjugate by `A_l⁻¹`, moving the last factor to the front.
    Back,
}

/// One cycling or decycling step. Returns the new normal form and a
/// conjugator `c` with `c · x · c⁻¹` equal to it.
pub(crate) fn cycle_step(x: &NormalForm, direction: CycleDirection) -> (NormalForm, NormalForm) {
    let n = x.strands();
    let factors = x.factors();
    if factors.is_empty() {
        return (x.clone(), NormalForm::identity(n));
    }
    let p = x.delta_power();
    match direction {
        CycleDirection::Front => {
            let moved = factors[0].flip_pow(p);
            let result = NormalForm::from_simples(
                n,
                p,
                factors[1..].iter().cloned().chain(std::iter::once(moved.clone())),
            );
            (result, NormalForm::from_simple(&moved).inverse())
        }
        CycleDirection::Back => {
            let last = factors[factors.len() - 1].clone();
            let result = NormalForm::from_simples(
                n,
                p,
                std::iter::once(last.flip_pow(p)).chain(factors[..factors.len() - 1].iter().cloned()),
            );
            (result, NormalForm::from_simple(&last))
        }
    }
}

/// Cycling (front) or decycling (back) of a normal form, with the
/// conjugating word `c` such that `c · x · c⁻¹` is the result.
pub fn cycling(x: &NormalForm, direction: CycleDirection) -> (NormalForm, BraidWord) {
    let (result, conj) = cycle_step(x, direction);
    (result, conj.to_word())
}

/// Number of consecutive non-improving cyclings after which `inf` (or
/// decyclings after which `sup`) is declared extremal: the length of `Δ`.
pub(crate) fn stall_bound(n: usize) -> usize {
    (n * (n.saturating_sub(1)) / 2).max(1)
}

/// Drives `x` into its super summit set by iterated cycling and decycling.
/// Returns the summit element and a conjugator `c` with `c x c⁻¹` equal to it.
pub fn summit_representative(x: &NormalForm) -> (NormalForm, NormalForm) {
    let n = x.strands();
    let bound = stall_bound(n);
    let mut current = x.clone();
    let mut conj = NormalForm::identity(n);
    loop {
        let before = (current.inf(), current.sup());
        for direction in [CycleDirection::Front, CycleDirection::Back] {
            let mut stalled = 0;
            while stalled < bound && current.canonical_length() > 0 {
                let (next, c) = cycle_step(&current, direction);
                let improved = match direction {
                    CycleDirection::Front => next.inf() > current.inf(),
                    CycleDirection::Back => next.sup() < current.sup(),
                };
                conj = c.mul(&conj);
                current = next;
                stalled = if improved { 0 } else { stalled + 1 };
            }
        }
        if (current.inf(), current.sup()) == before {
            return (current, conj);
        }
    }
}

/// Breadth-first closure of a summit element under conjugation by simple
/// elements, keeping only conjugates with the same `(inf, sup)`.
pub(crate) struct Closure {
    pub members: Vec<NormalForm>,
    /// For each member but the first: (parent index, simple `s`) with
    /// member = `s⁻¹ · parent · s`.
    pub parents: Vec<Option<(usize, usize)>>,
    pub simples: Vec<SimpleElement>,
    pub found: Option<usize>,
}

impl Closure {
    /// Conjugator `d` with `d · members[0] · d⁻¹ = members[i]`.
    pub fn conjugator(&self, mut i: usize) -> NormalForm {
        let n = self.members[0].strands();
        let mut path = Vec::new();
        while let Some((parent, s)) = self.parents[i] {
            path.push(s);
            i = parent;
        }
        // members[i] = s_k⁻¹ ⋯ s_1⁻¹ · root · s_1 ⋯ s_k, so d = (s_1 ⋯ s_k)⁻¹
        let product = NormalForm::from_simples(n, 0, path.iter().rev().map(|&s| self.simples[s].clone()));
        product.inverse()
    }

    /// All conjugators, computed parents-first.
    pub fn all_conjugators(&self) -> Vec<NormalForm> {
        let n = self.members[0].strands();
        let mut out: Vec<NormalForm> = Vec::with_capacity(self.members.len());
        for i in 0..self.members.len() {
            let d = match self.parents[i] {
                None => NormalForm::identity(n),
                Some((parent, s)) => {
                    let s_inv = NormalForm::from_simple(&self.simples[s]).inverse();
                    s_inv.mul(&out[parent])
                }
            };
            out.push(d);
        }
        out
    }
}

/// Explores the super summit set containing the summit element `start`.
/// Stops early once `target` is reached.
pub(crate) fn explore(start: &NormalForm, cap: usize, target: Option<&NormalForm>) -> Result<Closure> {
    let n = start.strands();
    let key = (start.inf(), start.sup());
    let simples: Vec<SimpleElement> =
        SimpleElement::all(n).into_iter().filter(|s| !s.is_identity()).collect();
    let mut members = vec![start.clone()];
    let mut parents = vec![None];
    let mut index: HashMap<NormalForm, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    if target == Some(start) {
        return Ok(Closure { members, parents, simples, found: Some(0) });
    }
    let mut head = 0;
    while head < members.len() {
        for (si, s) in simples.iter().enumerate() {
            let y = members[head].conjugate_by_simple(s);
            if (y.inf(), y.sup()) != key || index.contains_key(&y) {
                continue;
            }
            if members.len() >= cap {
                return Err(BraidError::ResourceLimit { count: members.len() + 1, cap });
            }
            let is_target = target == Some(&y);
            index.insert(y.clone(), members.len());
            members.push(y);
            parents.push(Some((head, si)));
            if is_target {
                let found = Some(members.len() - 1);
                return Ok(Closure { members, parents, simples, found });
            }
        }
        head += 1;
    }
    Ok(Closure { members, parents, simples, found: None })
}

/// The super summit set of a braid, canonically ordered, with a conjugator
/// from the input for every element.
#[derive(Debug, Clone)]
pub struct SuperSummitSet {
    elements: Vec<NormalForm>,
    conjugators: Vec<NormalForm>,
}

impl SuperSummitSet {
    pub fn elements(&self) -> &[NormalForm] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn inf(&self) -> i64 {
        self.elements[0].inf()
    }

    pub fn sup(&self) -> i64 {
        self.elements[0].sup()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// `c` with `c · w · c⁻¹ = elements[i]`, `w` being the input braid.
    pub fn conjugator(&self, i: usize) -> &NormalForm {
        &self.conjugators[i]
    }

    pub fn conjugator_word(&self, i: usize) -> BraidWord {
        self.conjugators[i].to_word()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NormalForm, &NormalForm)> {
        self.elements.iter().zip(self.conjugators.iter())
    }
}

/// Computes the super summit set of `w`, failing with a resource-limit
/// error once more than `max_elements` elements are found.
pub fn super_summit_set(w: &BraidWord, max_elements: usize) -> Result<SuperSummitSet> {
    let x = NormalForm::from_word(w);
    let (summit, to_summit) = summit_representative(&x);
    let closure = explore(&summit, max_elements, None)?;
    let mut pairs: Vec<(NormalForm, NormalForm)> = closure
        .all_conjugators()
        .into_iter()
        .zip(closure.members)
        .map(|(d, member)| (member, d.mul(&to_summit)))
        .collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    let (elements, conjugators) = pairs.into_iter().unzip();
    Ok(SuperSummitSet { elements, conjugators })
}

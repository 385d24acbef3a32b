//! Finite Coxeter systems: group arithmetic, ShortLex normal forms,
//! reflections, Bruhat order and graph components.
//!
//! Words are products of generators read left to right, so `w·s` appends `s`
//! on the right. Generators are indexed `0..rank` internally; the JSON and
//! text formats in [`crate::io`] use 1-based generator labels.

mod matrix;
mod roots;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use matrix::{CoxeterMatrix, INFINITY};

/// Largest group materialized unless the caller asks for more (the order of `S_7`).
pub const DEFAULT_MAX_ORDER: usize = 5040;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("Coxeter matrix has an infinite edge between generators {0} and {1}")]
    NotFinitary(usize, usize),
    #[error("group closure passed the order bound {0}")]
    OrderExceeded(usize),
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("element id {0} is not in this system")]
    ForeignElement(usize),
    #[error("generator {0} is out of range")]
    InvalidGenerator(usize),
}

/// Index of an element in its system's BFS order. Index 0 is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        ElementId(i as u32)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A detached description of one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupElement {
    pub id: ElementId,
    pub canonical_word: Vec<usize>,
    pub length: usize,
}

/// A fully materialized finite Coxeter group.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    rank: usize,
    root_count: usize,
    /// Per element, the permutation it induces on the root list.
    actions: Vec<Box<[u32]>>,
    words: Vec<Vec<usize>>,
    /// `right[w * rank + s] = w·s`
    right: Vec<ElementId>,
    /// `left[w * rank + s] = s·w`
    left: Vec<ElementId>,
    inverse: Vec<ElementId>,
    reflections: Vec<ElementId>,
    simple: Vec<ElementId>,
    components: Vec<Vec<usize>>,
}

impl CoxeterSystem {
    /// Builds the group generated by `matrix`, failing if it has more than
    /// `max_order` elements.
    pub fn build(matrix: CoxeterMatrix, max_order: usize) -> Result<Self, CoxeterError> {
        if let Some((i, j)) = matrix.infinite_edge() {
            return Err(CoxeterError::NotFinitary(i, j));
        }
        let rank = matrix.rank();
        let rs = roots::bootstrap(&matrix, max_order)?;
        let root_total = rs.roots.len();
        let positive = (0..root_total).filter(|&r| rs.is_positive(r)).count();
        if positive * 2 != root_total {
            return Err(CoxeterError::InvalidMatrix("root bootstrap produced an unbalanced root list".into()));
        }
        let gens: Vec<Box<[u32]>> = rs.generators.into_iter().map(Vec::into_boxed_slice).collect();

        // BFS over w·s, level by level. Within a level elements are kept in
        // discovery order, which is lexicographic order of their words.
        let identity: Box<[u32]> = (0..root_total as u32).collect();
        let mut lookup: HashMap<Box<[u32]>, ElementId> = HashMap::new();
        lookup.insert(identity.clone(), ElementId::IDENTITY);
        let mut actions = vec![identity];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut right = Vec::new();
        let mut cursor = 0;
        while cursor < actions.len() {
            for (s, gen) in gens.iter().enumerate() {
                let act: Box<[u32]> = gen.iter().map(|&r| actions[cursor][r as usize]).collect();
                let id = match lookup.get(&act) {
                    Some(&id) => id,
                    None => {
                        if actions.len() >= max_order {
                            return Err(CoxeterError::OrderExceeded(max_order));
                        }
                        let id = ElementId(actions.len() as u32);
                        let mut word = words[cursor].clone();
                        word.push(s);
                        lookup.insert(act.clone(), id);
                        actions.push(act);
                        words.push(word);
                        id
                    }
                };
                right.push(id);
            }
            cursor += 1;
        }

        let order = actions.len();
        let mut left = Vec::with_capacity(order * rank);
        let mut inverse = Vec::with_capacity(order);
        for act in &actions {
            for gen in &gens {
                let prod: Box<[u32]> = act.iter().map(|&r| gen[r as usize]).collect();
                left.push(lookup[&prod]);
            }
            let mut inv = vec![0u32; root_total];
            for (i, &r) in act.iter().enumerate() {
                inv[r as usize] = i as u32;
            }
            inverse.push(lookup[inv.as_slice()]);
        }

        let components = matrix.components();
        let mut sys = CoxeterSystem {
            matrix,
            rank,
            root_count: positive,
            actions,
            words,
            right,
            left,
            inverse,
            reflections: Vec::new(),
            simple: Vec::new(),
            components,
        };
        sys.simple = (0..rank).map(|s| sys.right[s]).collect();
        let mut refl = BTreeSet::new();
        for w in sys.elements() {
            for s in 0..rank {
                refl.insert(sys.conjugate(w, sys.generator(s)));
            }
        }
        sys.reflections = refl.into_iter().collect();
        if sys.reflections.len() != sys.root_count {
            return Err(CoxeterError::InvalidMatrix(format!(
                "{} reflections but {} positive roots",
                sys.reflections.len(),
                sys.root_count
            )));
        }
        Ok(sys)
    }

    pub fn with_default_bound(matrix: CoxeterMatrix) -> Result<Self, CoxeterError> {
        Self::build(matrix, DEFAULT_MAX_ORDER)
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    /// Number of positive roots, equal to the number of reflections.
    pub fn root_count(&self) -> usize {
        self.root_count
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    /// Elements in BFS (hence length-nondecreasing) order.
    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.order() as u32).map(ElementId)
    }

    pub fn element(&self, index: usize) -> Result<ElementId, CoxeterError> {
        if index < self.order() {
            Ok(ElementId(index as u32))
        } else {
            Err(CoxeterError::ForeignElement(index))
        }
    }

    pub fn check(&self, e: ElementId) -> Result<ElementId, CoxeterError> {
        self.element(e.index())
    }

    pub fn generator(&self, s: usize) -> ElementId {
        self.right[s]
    }

    /// The simple generators as elements, indexed by generator.
    pub fn simple_reflections(&self) -> &[ElementId] {
        &self.simple
    }

    /// ShortLex-minimal reduced word.
    pub fn word(&self, e: ElementId) -> &[usize] {
        &self.words[e.index()]
    }

    pub fn length(&self, e: ElementId) -> usize {
        self.words[e.index()].len()
    }

    pub fn describe(&self, e: ElementId) -> GroupElement {
        GroupElement { id: e, canonical_word: self.word(e).to_vec(), length: self.length(e) }
    }

    /// The element's permutation of the root list.
    pub fn root_action(&self, e: ElementId) -> &[u32] {
        &self.actions[e.index()]
    }

    /// Generator index of a simple reflection.
    pub fn generator_index(&self, e: ElementId) -> Option<usize> {
        self.simple.iter().position(|&s| s == e)
    }

    /// `w·s`
    pub fn mul_gen(&self, w: ElementId, s: usize) -> ElementId {
        self.right[w.index() * self.rank + s]
    }

    /// `s·w`
    pub fn gen_mul(&self, s: usize, w: ElementId) -> ElementId {
        self.left[w.index() * self.rank + s]
    }

    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.words[b.index()].iter().fold(a, |acc, &s| self.mul_gen(acc, s))
    }

    pub fn checked_mul(&self, a: ElementId, b: ElementId) -> Result<ElementId, CoxeterError> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }

    pub fn inverse(&self, e: ElementId) -> ElementId {
        self.inverse[e.index()]
    }

    pub fn checked_inverse(&self, e: ElementId) -> Result<ElementId, CoxeterError> {
        Ok(self.inverse(self.check(e)?))
    }

    /// `g·x·g⁻¹`
    pub fn conjugate(&self, g: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    /// Evaluates an arbitrary (not necessarily reduced) word.
    pub fn eval_word(&self, word: &[usize]) -> Result<ElementId, CoxeterError> {
        word.iter().try_fold(self.identity(), |acc, &s| {
            if s < self.rank {
                Ok(self.mul_gen(acc, s))
            } else {
                Err(CoxeterError::InvalidGenerator(s))
            }
        })
    }

    /// All conjugates of simple generators, sorted by id.
    pub fn reflections(&self) -> &[ElementId] {
        &self.reflections
    }

    pub fn is_reflection(&self, e: ElementId) -> bool {
        self.reflections.binary_search(&e).is_ok()
    }

    /// Partition of the generators by Coxeter-graph connectivity.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn longest_element(&self) -> ElementId {
        // BFS order is length-nondecreasing and the longest element is unique.
        ElementId(self.order() as u32 - 1)
    }

    /// Bruhat order, decided by peeling a right descent `s` of `w`:
    /// `u <= w` iff `min(u, us) <= ws`.
    pub fn bruhat_leq(&self, u: ElementId, w: ElementId) -> bool {
        let (mut u, mut w) = (u, w);
        loop {
            if self.length(u) > self.length(w) {
                return false;
            }
            let Some(&s) = self.word(w).last() else {
                return u == self.identity();
            };
            let us = self.mul_gen(u, s);
            if self.length(us) < self.length(u) {
                u = us;
            }
            w = self.mul_gen(w, s);
        }
    }

    /// Deletes from the canonical word of `e` every letter outside `keep`.
    /// On a product of graph components this is the projection onto the
    /// kept factors followed by their inclusion.
    pub fn project(&self, e: ElementId, keep: &[usize]) -> ElementId {
        self.word(e).iter().filter(|s| keep.contains(s)).fold(self.identity(), |acc, &s| self.mul_gen(acc, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(m: CoxeterMatrix) -> CoxeterSystem {
        CoxeterSystem::with_default_bound(m).unwrap()
    }

    #[test]
    fn small_orders() {
        let a1 = build(CoxeterMatrix::type_a(1));
        assert_eq!((a1.order(), a1.reflections().len()), (2, 1));
        let a2 = build(CoxeterMatrix::new(vec![vec![1, 3], vec![3, 1]]).unwrap());
        assert_eq!(a2.order(), 6);
        let i5 = build(CoxeterMatrix::dihedral(5));
        assert_eq!((i5.order(), i5.reflections().len()), (10, 5));
    }

    #[test]
    fn classical_orders() {
        for n in 1..=5 {
            let fact: usize = (1..=n + 1).product();
            assert_eq!(build(CoxeterMatrix::type_a(n)).order(), fact);
        }
        for m in 2..=12 {
            assert_eq!(build(CoxeterMatrix::dihedral(m)).order(), 2 * m as usize);
        }
        for k in 1..=4 {
            assert_eq!(build(CoxeterMatrix::a1_power(k)).order(), 1 << k);
        }
        // B3 and H3
        let b3 = CoxeterMatrix::new(vec![vec![1, 4, 2], vec![4, 1, 3], vec![2, 3, 1]]).unwrap();
        assert_eq!(build(b3).order(), 48);
        let h3 = CoxeterMatrix::new(vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]]).unwrap();
        let h3 = build(h3);
        assert_eq!((h3.order(), h3.root_count()), (120, 15));
    }

    #[test]
    fn rejects_infinite_and_oversized() {
        assert_eq!(
            CoxeterSystem::with_default_bound(CoxeterMatrix::dihedral(0)).unwrap_err(),
            CoxeterError::NotFinitary(0, 1)
        );
        // affine A2 is infinite
        let affine = CoxeterMatrix::new(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert_eq!(CoxeterSystem::build(affine, 500).unwrap_err(), CoxeterError::OrderExceeded(500));
        assert!(matches!(CoxeterSystem::build(CoxeterMatrix::type_a(3), 23), Err(CoxeterError::OrderExceeded(23))));
        assert!(CoxeterSystem::build(CoxeterMatrix::type_a(3), 24).is_ok());
    }

    #[test]
    fn braid_relation_in_a2() {
        let a2 = build(CoxeterMatrix::type_a(2));
        let x = a2.eval_word(&[0, 1, 0]).unwrap();
        let y = a2.eval_word(&[1, 0, 1]).unwrap();
        assert_eq!(x, y);
        assert_eq!(a2.mul(a2.generator(0), a2.generator(0)), a2.identity());
        assert_eq!(a2.word(x), &[0, 1, 0]);
        assert_eq!(a2.longest_element(), x);
        assert_eq!(a2.mul(a2.identity(), x), x);
    }

    #[test]
    fn foreign_elements() {
        let a2 = build(CoxeterMatrix::type_a(2));
        assert_eq!(a2.element(6), Err(CoxeterError::ForeignElement(6)));
        assert!(a2.checked_mul(ElementId(9), ElementId(0)).is_err());
        assert!(a2.checked_inverse(ElementId(5)).is_ok());
        assert_eq!(a2.eval_word(&[0, 2]), Err(CoxeterError::InvalidGenerator(2)));
    }

    #[test]
    fn longest_elements() {
        let a1 = build(CoxeterMatrix::type_a(1));
        assert_eq!(a1.longest_element(), a1.generator(0));
        let i3 = build(CoxeterMatrix::dihedral(3));
        let w0 = i3.longest_element();
        assert_eq!(i3.length(w0), 3);
        assert_eq!(w0, i3.eval_word(&[1, 0, 1]).unwrap());
        let a3 = build(CoxeterMatrix::type_a(3));
        assert_eq!(a3.length(a3.longest_element()), 6);
        assert_eq!(a3.root_count(), 6);
    }

    #[test]
    fn bruhat_examples() {
        let a2 = build(CoxeterMatrix::type_a(2));
        let s1 = a2.generator(0);
        let w0 = a2.longest_element();
        assert!(a2.bruhat_leq(s1, w0));
        let s1s2 = a2.eval_word(&[0, 1]).unwrap();
        let s2s1 = a2.eval_word(&[1, 0]).unwrap();
        assert!(!a2.bruhat_leq(s1s2, s2s1));
        assert!(!a2.bruhat_leq(s2s1, s1s2));
        for w in a2.elements() {
            assert!(a2.bruhat_leq(a2.identity(), w));
        }
    }

    #[test]
    fn projection_onto_components() {
        let sys = build(CoxeterMatrix::a1_power(1).product(&CoxeterMatrix::type_a(2)));
        let w = sys.eval_word(&[1, 0, 2]).unwrap();
        assert_eq!(sys.project(w, &[1, 2]), sys.eval_word(&[1, 2]).unwrap());
        assert_eq!(sys.project(w, &[0]), sys.generator(0));
        assert_eq!(sys.project(w, &[]), sys.identity());
    }
}

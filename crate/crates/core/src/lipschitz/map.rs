use serde::{Deserialize, Serialize};

use super::LipschitzError;
use crate::coxeter::{CoxeterSystem, ElementId};

/// A total self-map of a finite group, stored as a table indexed by element id.
///
/// Maps are ordered by their tables so that result sets sort deterministically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SelfMap {
    table: Vec<ElementId>,
}

impl SelfMap {
    pub fn from_table(sys: &CoxeterSystem, table: Vec<ElementId>) -> Result<Self, LipschitzError> {
        if table.len() != sys.order() {
            return Err(LipschitzError::SystemMismatch { expected: sys.order(), found: table.len() });
        }
        for &e in &table {
            sys.check(e)?;
        }
        Ok(SelfMap { table })
    }

    pub(crate) fn from_table_unchecked(table: Vec<ElementId>) -> Self {
        SelfMap { table }
    }

    pub fn from_fn(sys: &CoxeterSystem, f: impl FnMut(ElementId) -> ElementId) -> Self {
        SelfMap { table: sys.elements().map(f).collect() }
    }

    pub fn identity(sys: &CoxeterSystem) -> Self {
        Self::from_fn(sys, |e| e)
    }

    pub fn constant(sys: &CoxeterSystem, value: ElementId) -> Self {
        Self::from_fn(sys, |_| value)
    }

    /// `θ ↦ θ·w`
    pub fn right_translation(sys: &CoxeterSystem, w: ElementId) -> Self {
        Self::from_fn(sys, |e| sys.mul(e, w))
    }

    pub fn apply(&self, e: ElementId) -> ElementId {
        self.table[e.index()]
    }

    pub fn table(&self) -> &[ElementId] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn constant_value(&self) -> Option<ElementId> {
        let first = *self.table.first()?;
        self.table.iter().all(|&e| e == first).then_some(first)
    }

    /// The `w` with `τ(θ) = θ·w` for every `θ`, if one exists.
    pub fn right_translator(&self, sys: &CoxeterSystem) -> Option<ElementId> {
        let w = self.apply(sys.identity());
        sys.elements().all(|e| self.apply(e) == sys.mul(e, w)).then_some(w)
    }

    pub fn is_idempotent(&self) -> bool {
        self.table.iter().all(|&v| self.apply(v) == v)
    }
}

/// `τ₁ ∘ τ₀`
pub fn compose(tau1: &SelfMap, tau0: &SelfMap) -> Result<SelfMap, LipschitzError> {
    if tau1.len() != tau0.len() {
        return Err(LipschitzError::SystemMismatch { expected: tau1.len(), found: tau0.len() });
    }
    Ok(SelfMap { table: tau0.table.iter().map(|&e| tau1.apply(e)).collect() })
}

/// The folding retraction for a simple generator `s`: drops a terminal `s`
/// from the element when some reduced word ends in `s`.
pub fn folding_map(sys: &CoxeterSystem, s: usize) -> Result<SelfMap, LipschitzError> {
    if s >= sys.rank() {
        return Err(crate::coxeter::CoxeterError::InvalidGenerator(s).into());
    }
    Ok(SelfMap::from_fn(sys, |w| {
        let ws = sys.mul_gen(w, s);
        if sys.length(ws) < sys.length(w) {
            ws
        } else {
            w
        }
    }))
}

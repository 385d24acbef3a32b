use std::collections::BTreeSet;

use serde::Serialize;

use super::SelfMap;
use crate::coxeter::{CoxeterSystem, ElementId};

/// `(·w) ∘ ι ∘ π` for a chosen set of Coxeter-graph components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalFamilyMember {
    /// Indices into [`CoxeterSystem::components`].
    pub chosen_components: Vec<usize>,
    pub translator: ElementId,
}

impl CanonicalFamilyMember {
    /// Deletes every letter outside the chosen components, then multiplies by
    /// the translator on the right.
    pub fn to_map(&self, sys: &CoxeterSystem) -> SelfMap {
        let keep: Vec<usize> =
            self.chosen_components.iter().flat_map(|&c| sys.components()[c].iter().copied()).collect();
        SelfMap::from_fn(sys, |theta| sys.mul(sys.project(theta, &keep), self.translator))
    }
}

/// Every distinct map of the canonical family, sorted by table.
pub fn canonical_family(sys: &CoxeterSystem) -> Vec<SelfMap> {
    let c = sys.components().len();
    let mut maps = BTreeSet::new();
    for mask in 0u64..(1u64 << c) {
        let chosen: Vec<usize> = (0..c).filter(|i| mask >> i & 1 == 1).collect();
        for w in sys.elements() {
            let member = CanonicalFamilyMember { chosen_components: chosen.clone(), translator: w };
            maps.insert(member.to_map(sys));
        }
    }
    maps.into_iter().collect()
}

//! The symmetric group `S_n` as the Coxeter system `A_{n−1}`, with the
//! cyclic ("c-simple") Lipschitz condition.
//!
//! Generator `s_i` (0-based) is the transposition `(i+1 i+2)`. A word
//! `s_a s_b ⋯` corresponds to the right-to-left composite of its letters, so
//! the correspondence with [`Permutation`] is a group isomorphism.

mod permutation;

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterMatrix, CoxeterSystem, ElementId};
use crate::lipschitz::{
    enumerate_lipschitz, is_phi_lipschitz, LipschitzCondition, LipschitzError, LipschitzReport, SelfMap,
};

pub use permutation::Permutation;

/// Largest degree `enumerate_cyclic_lipschitz` accepts.
pub const MAX_CYCLIC_DEGREE: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetricError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree {0} is not supported here")]
    InvalidDegree(usize),
    #[error("index {j} outside 1..={n}")]
    InvalidIndex { n: usize, j: usize },
    #[error("decomposition identity fails for theta = {theta}, j = {j}")]
    ConventionMismatch { theta: String, j: usize },
    #[error(transparent)]
    Lipschitz(#[from] LipschitzError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// `S_n` together with the permutation attached to every element id.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    n: usize,
    sys: CoxeterSystem,
    perms: Vec<Permutation>,
    ids: HashMap<Permutation, ElementId>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<Self, SymmetricError> {
        if n < 2 {
            return Err(SymmetricError::InvalidDegree(n));
        }
        let sys = CoxeterSystem::with_default_bound(CoxeterMatrix::type_a(n - 1))?;
        let gens: Vec<Permutation> =
            (1..n).map(|i| Permutation::transposition(n, i, i + 1)).collect::<Result<_, _>>()?;
        let perms: Vec<Permutation> = sys
            .elements()
            .map(|e| sys.word(e).iter().fold(Permutation::identity(n), |acc, &s| acc.compose(&gens[s])))
            .collect();
        let ids = perms.iter().cloned().zip(sys.elements()).collect();
        Ok(SymmetricGroup { n, sys, perms, ids })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn permutation(&self, e: ElementId) -> &Permutation {
        &self.perms[e.index()]
    }

    pub fn element(&self, p: &Permutation) -> Result<ElementId, SymmetricError> {
        if p.n() != self.n {
            return Err(SymmetricError::InvalidPermutation(format!("degree {} in S_{}", p.n(), self.n)));
        }
        Ok(self.ids[p])
    }

    fn conjugates_by(&self, theta: ElementId, xis: &[Permutation]) -> Vec<ElementId> {
        let t = self.permutation(theta);
        let mut out: Vec<ElementId> = Vec::with_capacity(xis.len());
        for xi in xis {
            let id = self.ids[&t.conjugate(xi)];
            if !out.contains(&id) {
                out.push(id);
            }
        }
        out
    }

    /// `(1 2), (2 3), …, (n−1 n)` followed by `(n 1)`.
    pub fn c_simple_transpositions(&self) -> Vec<Permutation> {
        let mut out = self.simple_transpositions();
        if self.n > 2 {
            out.push(Permutation::transposition(self.n, self.n, 1).expect("in range"));
        }
        out
    }

    pub fn simple_transpositions(&self) -> Vec<Permutation> {
        (1..self.n).map(|i| Permutation::transposition(self.n, i, i + 1).expect("in range")).collect()
    }

    /// `φ(θ) = Ad_θ{(1 2), …, (n−1 n), (n 1)}`. Since `θξ = (Ad_θ ξ)θ`, the
    /// right-handed cyclic condition is the left-handed φ-Lipschitz
    /// condition for this `φ`.
    pub fn c_simple_phi(&self) -> LipschitzCondition {
        let xis = self.c_simple_transpositions();
        LipschitzCondition::PerElement(self.sys.elements().map(|t| self.conjugates_by(t, &xis)).collect())
    }

    /// `φ(θ) = Ad_θ{(1 2), …, (n−1 n)}`, the condition without `(n 1)`.
    pub fn generator_only_phi(&self) -> LipschitzCondition {
        let xis = self.simple_transpositions();
        LipschitzCondition::PerElement(self.sys.elements().map(|t| self.conjugates_by(t, &xis)).collect())
    }

    pub fn map_from_fn(&self, mut f: impl FnMut(&Permutation) -> Permutation) -> SelfMap {
        SelfMap::from_fn(&self.sys, |e| self.ids[&f(self.permutation(e))])
    }
}

/// Every self-map of `S_n` satisfying the cyclic condition, sorted by table.
pub fn enumerate_cyclic_lipschitz(n: usize) -> Result<Vec<SelfMap>, SymmetricError> {
    if n < 2 {
        return Err(SymmetricError::InvalidDegree(n));
    }
    if n > MAX_CYCLIC_DEGREE {
        let order = (1..=n).product();
        return Err(LipschitzError::SearchBoundExceeded { order, bound: 24 }.into());
    }
    let group = SymmetricGroup::new(n)?;
    let cond = group.c_simple_phi();
    Ok(enumerate_lipschitz(group.system(), &cond, 24)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TeDecomposition {
    pub theta: Permutation,
    pub j: usize,
    /// `θ_{jk} = Ad_θ(j j+k)` for `k = 1, …, n−1`. The term `k = n` is
    /// `Ad_θ(j j)`, the identity, and is omitted.
    pub factors: Vec<Permutation>,
    /// `θ_{j,n−1} ⋯ θ_{j,1} · θ`
    pub product: Permutation,
    /// `θ · η`
    pub expected: Permutation,
}

/// Builds the factors `θ_{jk}` and checks `θ·η = θ_{j,n−1} ⋯ θ_{j,1}·θ`,
/// indices taken cyclically in `{1, …, n}`.
pub fn te_decomposition(theta: &Permutation, j: usize) -> Result<TeDecomposition, SymmetricError> {
    let n = theta.n();
    if j == 0 || j > n {
        return Err(SymmetricError::InvalidIndex { n, j });
    }
    let factors: Vec<Permutation> = (1..n)
        .map(|k| {
            let t = Permutation::transposition(n, j, (j - 1 + k) % n + 1).expect("in range");
            theta.conjugate(&t)
        })
        .collect();
    let product = factors.iter().rev().fold(Permutation::identity(n), |acc, f| acc.compose(f)).compose(theta);
    let expected = theta.compose(&Permutation::long_cycle(n));
    if product != expected {
        return Err(SymmetricError::ConventionMismatch { theta: theta.to_string(), j });
    }
    Ok(TeDecomposition { theta: theta.clone(), j, factors, product, expected })
}

#[derive(Clone, Debug, Serialize)]
pub struct JustN1Report {
    /// `(θ, τ(θ))` in element-id order.
    pub rows: Vec<(Permutation, Permutation)>,
    pub generator_only: LipschitzReport,
    pub c_simple: LipschitzReport,
    pub constant: bool,
    pub right_translation: bool,
}

impl JustN1Report {
    /// Passes the generator-only condition, fails the c-simple one, and is
    /// neither constant nor a right translation.
    pub fn passed(&self) -> bool {
        self.generator_only.passed() && !self.c_simple.passed() && !self.constant && !self.right_translation
    }
}

/// The map on `S_3` with `e, (2 3) ↦ e`, `(1 2) ↦ (1 2)`,
/// `(1 3), (1 3 2) ↦ (1 3)` and `(1 2 3) ↦ (1 2 3)`.
pub fn just_n1_map(group: &SymmetricGroup) -> Result<SelfMap, SymmetricError> {
    if group.degree() != 3 {
        return Err(SymmetricError::InvalidDegree(group.degree()));
    }
    let p = |s: &str| Permutation::parse_cycles(3, s).expect("valid cycle");
    let table: Vec<(Permutation, Permutation)> = vec![
        (p("e"), p("e")),
        (p("(2 3)"), p("e")),
        (p("(1 2)"), p("(1 2)")),
        (p("(1 3)"), p("(1 3)")),
        (p("(1 3 2)"), p("(1 3)")),
        (p("(1 2 3)"), p("(1 2 3)")),
    ];
    let lookup: HashMap<Permutation, Permutation> = table.into_iter().collect();
    Ok(group.map_from_fn(|x| lookup[x].clone()))
}

pub fn just_n1_example() -> Result<(SymmetricGroup, SelfMap, JustN1Report), SymmetricError> {
    let group = SymmetricGroup::new(3)?;
    let tau = just_n1_map(&group)?;
    let sys = group.system();
    let generator_only = is_phi_lipschitz(sys, &tau, &group.generator_only_phi())?;
    let c_simple = is_phi_lipschitz(sys, &tau, &group.c_simple_phi())?;
    let rows =
        sys.elements().map(|e| (group.permutation(e).clone(), group.permutation(tau.apply(e)).clone())).collect();
    let report = JustN1Report {
        rows,
        generator_only,
        c_simple,
        constant: tau.constant_value().is_some(),
        right_translation: tau.right_translator(sys).is_some(),
    };
    Ok((group, tau, report))
}

//! Lipschitz predicates on self-maps of a finite Coxeter group.
//!
//! A self-map `τ` is φ-Lipschitz when `τ(σθ) ∈ {τ(θ), σ·τ(θ)}` for every
//! `θ` and every reflection `σ ∈ φ(θ)`. Taking `φ` constantly equal to all
//! reflections gives the T-Lipschitz maps, which on a finitary system are
//! exactly the [`canonical_family`]: project to a product of graph
//! components, include back, then right-translate.

mod canonical;
pub mod infinite_dihedral;
mod map;
mod search;

use serde::Serialize;
use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterSystem, ElementId};

pub use canonical::{canonical_family, CanonicalFamilyMember};
pub use map::{compose, folding_map, SelfMap};
pub use search::{enumerate_lipschitz, exhaustive_lipschitz, ExhaustiveResult, DEFAULT_SEARCH_BOUND};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LipschitzError {
    #[error("map or condition covers {found} elements, system has {expected}")]
    SystemMismatch { expected: usize, found: usize },
    #[error("condition lists {0} as a reflection, but it is not one")]
    NotAReflection(ElementId),
    #[error("group order {order} exceeds the search bound {bound}")]
    SearchBoundExceeded { order: usize, bound: usize },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// Which reflections `σ` are tested at each `θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LipschitzCondition {
    /// Every reflection at every element (T-Lipschitz).
    FullReflectionSet,
    /// The simple generators at every element (S-Lipschitz).
    SimpleGenerators,
    /// An explicit `φ(θ)` per element id; every entry must be a reflection.
    PerElement(Vec<Vec<ElementId>>),
}

impl LipschitzCondition {
    pub fn per_element(sys: &CoxeterSystem, phi: Vec<Vec<ElementId>>) -> Result<Self, LipschitzError> {
        let cond = LipschitzCondition::PerElement(phi);
        cond.validate(sys)?;
        Ok(cond)
    }

    pub fn validate(&self, sys: &CoxeterSystem) -> Result<(), LipschitzError> {
        if let LipschitzCondition::PerElement(phi) = self {
            if phi.len() != sys.order() {
                return Err(LipschitzError::SystemMismatch { expected: sys.order(), found: phi.len() });
            }
            for &sigma in phi.iter().flatten() {
                sys.check(sigma)?;
                if !sys.is_reflection(sigma) {
                    return Err(LipschitzError::NotAReflection(sigma));
                }
            }
        }
        Ok(())
    }

    pub fn sigmas<'a>(&'a self, sys: &'a CoxeterSystem, theta: ElementId) -> &'a [ElementId] {
        match self {
            LipschitzCondition::FullReflectionSet => sys.reflections(),
            LipschitzCondition::SimpleGenerators => sys.simple_reflections(),
            LipschitzCondition::PerElement(phi) => &phi[theta.index()],
        }
    }

    /// True when `φ(θ)` contains every simple generator for every `θ`.
    pub(crate) fn contains_simple(&self) -> bool {
        !matches!(self, LipschitzCondition::PerElement(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub theta: ElementId,
    pub sigma: ElementId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LipschitzReport {
    /// Number of `(θ, σ)` instances examined.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl LipschitzReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `τ(σθ) ∈ {τ(θ), σ·τ(θ)}` over the whole condition and lists every
/// failing pair.
pub fn is_phi_lipschitz(
    sys: &CoxeterSystem,
    tau: &SelfMap,
    cond: &LipschitzCondition,
) -> Result<LipschitzReport, LipschitzError> {
    if tau.len() != sys.order() {
        return Err(LipschitzError::SystemMismatch { expected: sys.order(), found: tau.len() });
    }
    cond.validate(sys)?;
    let mut checked = 0;
    let mut violations = Vec::new();
    for theta in sys.elements() {
        let image = tau.apply(theta);
        for &sigma in cond.sigmas(sys, theta) {
            checked += 1;
            let moved = tau.apply(sys.mul(sigma, theta));
            if moved != image && moved != sys.mul(sigma, image) {
                violations.push(Violation { theta, sigma });
            }
        }
    }
    Ok(LipschitzReport { checked, violations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ContractionReport {
    pub s_lipschitz: bool,
    /// `τ(θ)·τ(η)⁻¹ ≤ θ·η⁻¹` in Bruhat order for all pairs.
    pub pairwise_bruhat: bool,
}

/// Evaluates the S-Lipschitz predicate next to pairwise Bruhat contraction.
/// The two are reported independently for empirical comparison.
pub fn bruhat_contraction_check(sys: &CoxeterSystem, tau: &SelfMap) -> Result<ContractionReport, LipschitzError> {
    let s_lipschitz = is_phi_lipschitz(sys, tau, &LipschitzCondition::SimpleGenerators)?.passed();
    let pairwise_bruhat = sys.elements().all(|theta| {
        sys.elements().all(|eta| {
            let lhs = sys.mul(tau.apply(theta), sys.inverse(tau.apply(eta)));
            let rhs = sys.mul(theta, sys.inverse(eta));
            sys.bruhat_leq(lhs, rhs)
        })
    });
    Ok(ContractionReport { s_lipschitz, pairwise_bruhat })
}

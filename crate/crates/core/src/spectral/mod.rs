//! Spectral side: Morton ordering of `SU(n)` spectra, labels of the
//! components of the distinct-spectrum torus, classification of torus maps as
//! conjugations or reorderings, weak perpendicularity of subspaces, and the
//! concrete matrix maps used as examples.
//!
//! All randomized routines take an explicit seed and use `ChaCha8Rng`.

mod hybrid;
pub mod linalg;
mod morton;
mod preserving;
mod scaling;
mod su2;
mod subspace;
mod torus;

use serde::Serialize;
use thiserror::Error;

pub use hybrid::{herm_hybrid, HermitianDiagonal3};
pub use linalg::{CMatrix, C64};
pub use morton::{
    check_special_unitary, hermitian_sorted, hermitian_sorted_entries, matrix_spectrum_ordered, morton_select,
    morton_select_ordered, turns, MortonCoordinates, MortonSelection, OrderedSpectrum, UnitSpectrum,
};
pub use preserving::{cs_check, CsDomain, CsReport};
pub use scaling::{scaling_extension, ScalingExtension, ScalingWitness};
pub use su2::{non_globality_witness, su2_counterexample, NonGlobalityWitness};
pub use subspace::{isolated_witness, psi_s, weak_perp, weak_perp_chain, Segment, Subspace};
pub use torus::{
    all_permutations, classify_torus_map, component_label, morton_reordering, sample_torus_map, torus_components,
    Classification, SampleRow, TorusMapSampleTable, Verdict,
};

/// Numerical thresholds. Every comparison in this module goes through one of
/// these.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    /// Spectrum matching, commutators of outputs, diagonality.
    pub spec: f64,
    /// Orthonormality and projector commutators.
    pub proj: f64,
    /// `| |z| - 1 |` for spectrum entries.
    pub unit: f64,
    /// Eigenvalues closer than this are one cluster.
    pub gap: f64,
    /// Unitarity and `|det - 1|`.
    pub det: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { spec: 1e-8, proj: 1e-10, unit: 1e-9, gap: 1e-6, det: 1e-8 }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("entry {index} has modulus {modulus}")]
    NotUnitModulus { index: usize, modulus: f64 },
    #[error("determinant {re}+{im}i is not 1")]
    DeterminantNotOne { re: f64, im: f64 },
    #[error("matrix is not unitary (defect {defect:e})")]
    NotUnitary { defect: f64 },
    #[error("matrix is not self-adjoint (defect {defect:e})")]
    NotSelfAdjoint { defect: f64 },
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {0} is not supported here")]
    BadDimension(usize),
    #[error("entries {0} and {1} coincide")]
    RepeatedEigenvalues(usize, usize),
    #[error("basis is not orthonormal (defect {defect:e})")]
    NotOrthonormal { defect: f64 },
    #[error("sample table: {0}")]
    InvalidTable(String),
    #[error("map output at a diagonal point is not diagonal (off-diagonal norm {0:e})")]
    NotDiagonalValued(f64),
    #[error("map output does not permute the input entries")]
    SpectrumBroken,
    #[error("tie pattern rows disagree for {0:?}")]
    InternalInconsistency([f64; 3]),
    #[error("eigenvalue cluster has dimension {found}, expected {expected}")]
    ClusterCollapse { expected: usize, found: usize },
    #[error("no weakly perpendicular chain exists between these lines in dimension 2")]
    NoChain,
    #[error("phi(zeta X) != zeta phi(X) for zeta = {}+{}i (deviation {:e})", .0.zeta[0], .0.zeta[1], .0.deviation)]
    WellDefinednessFailure(Box<ScalingWitness>),
}

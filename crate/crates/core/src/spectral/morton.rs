use serde::{Deserialize, Serialize};

use super::linalg::{cis, schur, unitarity_defect, within, CMatrix, C64};
use super::{SpectralError, Tolerances};

/// `n` unit complex numbers with product one: the spectrum of an element of
/// `SU(n)`, unordered.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpectrum", into = "RawSpectrum")]
pub struct UnitSpectrum {
    values: Vec<C64>,
}

#[derive(Serialize, Deserialize)]
struct RawSpectrum {
    n: usize,
    values: Vec<[f64; 2]>,
}

impl TryFrom<RawSpectrum> for UnitSpectrum {
    type Error = SpectralError;

    fn try_from(raw: RawSpectrum) -> Result<Self, Self::Error> {
        if raw.values.len() != raw.n {
            return Err(SpectralError::DimensionMismatch { expected: raw.n, found: raw.values.len() });
        }
        UnitSpectrum::new(raw.values.iter().map(|&[re, im]| C64::new(re, im)).collect(), &Tolerances::default())
    }
}

impl From<UnitSpectrum> for RawSpectrum {
    fn from(s: UnitSpectrum) -> Self {
        RawSpectrum { n: s.values.len(), values: s.values.iter().map(|z| [z.re, z.im]).collect() }
    }
}

impl UnitSpectrum {
    pub fn new(values: Vec<C64>, tol: &Tolerances) -> Result<Self, SpectralError> {
        if values.is_empty() {
            return Err(SpectralError::DimensionMismatch { expected: 1, found: 0 });
        }
        for (index, z) in values.iter().enumerate() {
            if !within((z.norm() - 1.0).abs(), tol.unit) {
                return Err(SpectralError::NotUnitModulus { index, modulus: z.norm() });
            }
        }
        let det: C64 = values.iter().product();
        if !within((det - C64::new(1.0, 0.0)).norm(), tol.det) {
            return Err(SpectralError::DeterminantNotOne { re: det.re, im: det.im });
        }
        Ok(UnitSpectrum { values })
    }

    /// `exp(2πi t_j)`; the caller guarantees `Σ t_j ∈ ℤ`.
    pub fn from_turns(turns: &[f64]) -> Result<Self, SpectralError> {
        Self::new(turns.iter().map(|&t| cis(t)).collect(), &Tolerances::default())
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// `(ρ▷z)_j = z_{ρ⁻¹(j)}`: entry `i` moves to position `ρ(i)`.
    pub fn permuted(&self, rho: &crate::symmetric::Permutation) -> UnitSpectrum {
        let mut out = self.values.clone();
        for (i, &z) in self.values.iter().enumerate() {
            out[rho.apply(i + 1) - 1] = z;
        }
        UnitSpectrum { values: out }
    }

    pub(crate) fn from_values_unchecked(values: Vec<C64>) -> Self {
        UnitSpectrum { values }
    }
}

/// The fundamental-domain representative `x₁ ≤ ⋯ ≤ xₙ ≤ x₁ + 1`, `Σ xⱼ = 0`,
/// with `λⱼ = exp(2πi xⱼ)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MortonCoordinates {
    pub x: Vec<f64>,
}

impl MortonCoordinates {
    pub fn eigenvalues(&self) -> Vec<C64> {
        self.x.iter().map(|&t| cis(t)).collect()
    }
}

/// Morton coordinates plus, for each output slot, the index of the input
/// entry it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct MortonSelection {
    pub coords: MortonCoordinates,
    pub order: Vec<usize>,
}

/// Argument in turns, in `[0, 1)`; a value rounding to exactly 1 maps to 0.
pub fn turns(z: C64) -> f64 {
    let mut t = z.arg() / std::f64::consts::TAU;
    if t < 0.0 {
        t += 1.0;
    }
    if t >= 1.0 {
        t = 0.0;
    }
    t
}

pub fn morton_select(spec: &UnitSpectrum) -> MortonCoordinates {
    morton_select_ordered(spec).coords
}

/// Sorts the arguments in `[0, 1)`, cuts the cycle at the unique position
/// `k` for which the shifted tuple has integer offset `c = (m + k)/n`, and
/// removes the floating-point residue of the sum.
pub fn morton_select_ordered(spec: &UnitSpectrum) -> MortonSelection {
    let n = spec.n();
    let mut ys: Vec<(f64, usize)> = spec.values.iter().map(|&z| turns(z)).zip(0..).collect();
    ys.sort_by(|a, b| a.0.total_cmp(&b.0));
    let total: f64 = ys.iter().map(|p| p.0).sum();
    let m = total.round() as i64;
    let k = (-m).rem_euclid(n as i64) as usize;
    let c = ((m + k as i64) / n as i64) as f64;

    let mut x = Vec::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    for (pos, &(y, idx)) in ys[k..].iter().chain(&ys[..k]).enumerate() {
        let lift = if pos >= n - k { 1.0 } else { 0.0 };
        x.push(y + lift - c);
        order.push(idx);
    }
    let residue = x.iter().sum::<f64>() / n as f64;
    for v in &mut x {
        *v -= residue;
    }
    MortonSelection { coords: MortonCoordinates { x }, order }
}

/// Eigen-decomposition of a special unitary matrix in Morton order.
#[derive(Clone, Debug)]
pub struct OrderedSpectrum {
    pub coords: MortonCoordinates,
    /// Column `j` spans (part of) the `λⱼ`-eigenspace.
    pub frame: CMatrix,
}

pub fn check_special_unitary(x: &CMatrix, tol: &Tolerances) -> Result<(), SpectralError> {
    let defect = unitarity_defect(x);
    if !within(defect, tol.det) {
        return Err(SpectralError::NotUnitary { defect });
    }
    let det = x.determinant();
    if !within((det - C64::new(1.0, 0.0)).norm(), tol.det) {
        return Err(SpectralError::DeterminantNotOne { re: det.re, im: det.im });
    }
    Ok(())
}

pub fn matrix_spectrum_ordered(x: &CMatrix, tol: &Tolerances) -> Result<OrderedSpectrum, SpectralError> {
    check_special_unitary(x, tol)?;
    let (q, values) = schur(x);
    let unit: Vec<C64> = values.iter().map(|z| z / z.norm()).collect();
    let spec = UnitSpectrum::new(unit, tol)?;
    let sel = morton_select_ordered(&spec);
    let cols: Vec<_> = sel.order.iter().map(|&i| q.column(i).into_owned()).collect();
    // Schur vectors of a unitary matrix are orthonormal; one QR pass restores
    // orthonormality lost to rounding.
    let frame = CMatrix::from_columns(&cols).qr().q();
    Ok(OrderedSpectrum { coords: sel.coords, frame })
}

/// Nondecreasing real spectrum of a self-adjoint matrix.
pub fn hermitian_sorted(x: &CMatrix, tol: &Tolerances) -> Result<Vec<f64>, SpectralError> {
    let defect = super::linalg::hermiticity_defect(x);
    if !within(defect, tol.spec) {
        return Err(SpectralError::NotSelfAdjoint { defect });
    }
    let h = (x + x.adjoint()) * C64::new(0.5, 0.0);
    let mut values: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Sorted diagonal entries.
pub fn hermitian_sorted_entries(entries: &[f64]) -> Vec<f64> {
    let mut v = entries.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

use serde::Serialize;

use super::linalg::{diag, frobenius, CMatrix, C64};
use super::morton::{check_special_unitary, matrix_spectrum_ordered};
use super::{SpectralError, Tolerances};

/// `ω(p) = exp(i·p_z²·K)` with `K = [[0, 1], [1, 0]]`. Depends on the line
/// only through `p_z²`, so a line and its orthogonal complement agree.
fn omega(pz: f64) -> CMatrix {
    let t = pz * pz;
    let (c, s) = (C64::new(t.cos(), 0.0), C64::new(0.0, t.sin()));
    CMatrix::from_row_slice(2, 2, &[c, s, s, c])
}

/// `Ad_{ω(E₁(X))} diag(λ₁(X), λ₂(X))`, where `E₁(X)` is the eigenline of the
/// first Morton eigenvalue and `p` its Bloch vector. At `X = ±I` this is `X`.
pub fn su2_counterexample(x: &CMatrix, tol: &Tolerances) -> Result<CMatrix, SpectralError> {
    if x.nrows() != 2 || x.ncols() != 2 {
        return Err(SpectralError::DimensionMismatch { expected: 2, found: x.nrows() });
    }
    check_special_unitary(x, tol)?;
    let ordered = matrix_spectrum_ordered(x, tol)?;
    let lambda = ordered.coords.eigenvalues();
    if (lambda[0] - lambda[1]).norm() <= tol.gap {
        return Ok(CMatrix::identity(2, 2) * lambda[0]);
    }
    let e1 = ordered.frame.column(0);
    let pz = e1[0].norm_sqr() - e1[1].norm_sqr();
    let w = omega(pz);
    Ok(&w * diag(&lambda) * w.adjoint())
}

#[derive(Clone, Debug, Serialize)]
pub struct NonGlobalityWitness {
    /// Same spectrum, eigenline `E₁` along `e₁` versus `(e₁ + e₂)/√2`; a map
    /// depending only on the spectrum would give equal outputs.
    pub conjugate_inputs_output_gap: f64,
    /// `diag(λ₁, λ₂)` and `diag(λ₂, λ₁)` are distinct inputs with equal
    /// outputs, which no conjugation can produce.
    pub distinct_inputs_gap: f64,
    pub distinct_inputs_output_gap: f64,
}

impl NonGlobalityWitness {
    pub fn holds(&self, tol: &Tolerances) -> bool {
        self.conjugate_inputs_output_gap > tol.gap
            && self.distinct_inputs_gap > tol.gap
            && self.distinct_inputs_output_gap <= tol.spec
    }
}

/// Evaluates the map at the spectrum `(e^{-iπ/4}, e^{iπ/4})` placed three
/// ways.
pub fn non_globality_witness(tol: &Tolerances) -> Result<NonGlobalityWitness, SpectralError> {
    let (l1, l2) =
        (C64::from_polar(1.0, -std::f64::consts::FRAC_PI_4), C64::from_polar(1.0, std::f64::consts::FRAC_PI_4));
    let d = diag(&[l1, l2]);
    let swapped = diag(&[l2, l1]);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let q = CMatrix::from_row_slice(2, 2, &[C64::new(h, 0.0), C64::new(-h, 0.0), C64::new(h, 0.0), C64::new(h, 0.0)]);
    let rotated = &q * &d * q.adjoint();

    let out_d = su2_counterexample(&d, tol)?;
    let out_rot = su2_counterexample(&rotated, tol)?;
    let out_swapped = su2_counterexample(&swapped, tol)?;
    Ok(NonGlobalityWitness {
        conjugate_inputs_output_gap: frobenius(&(&out_d - &out_rot)),
        distinct_inputs_gap: frobenius(&(&d - &swapped)),
        distinct_inputs_output_gap: frobenius(&(&out_d - &out_swapped)),
    })
}

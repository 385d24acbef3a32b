use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::linalg::{cis, diag, frobenius, random_special_unitary, to_rows, unitarity_defect, within, CMatrix, C64};
use super::{SpectralError, Tolerances};

/// Number of points of `SU(n)` at which homogeneity is checked.
pub const SCALING_SAMPLES: usize = 100;

/// A pair `(ζ, X)` with `φ(ζX) ≠ ζφ(X)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingWitness {
    pub zeta: [f64; 2],
    pub x: Vec<Vec<[f64; 2]>>,
    /// `‖φ(ζX) − ζφ(X)‖_F`
    pub deviation: f64,
}

/// `U ↦ ζ·φ(ζ⁻¹U)` for any `ζ` with `det(ζ⁻¹U) = 1`.
pub struct ScalingExtension<F> {
    phi: F,
    n: usize,
    tol: Tolerances,
}

impl<F: Fn(&CMatrix) -> CMatrix> ScalingExtension<F> {
    pub fn apply(&self, u: &CMatrix) -> Result<CMatrix, SpectralError> {
        if u.nrows() != self.n || u.ncols() != self.n {
            return Err(SpectralError::DimensionMismatch { expected: self.n, found: u.nrows() });
        }
        let defect = unitarity_defect(u);
        if !within(defect, self.tol.det) {
            return Err(SpectralError::NotUnitary { defect });
        }
        let zeta = C64::from_polar(1.0, u.determinant().arg() / self.n as f64);
        Ok((self.phi)(&(u / zeta)) * zeta)
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// The sample set: for odd `n`, `diag(1, ζ, …, ζ^{n−1})` with
/// `ζ = e^{2πi/n}` first, then seeded Haar points of `SU(n)`.
pub fn scaling_samples(n: usize, seed: u64) -> Vec<CMatrix> {
    let mut out = Vec::with_capacity(SCALING_SAMPLES);
    if n % 2 == 1 {
        let powers: Vec<C64> = (0..n).map(|j| cis(j as f64 / n as f64)).collect();
        out.push(diag(&powers));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < SCALING_SAMPLES {
        out.push(random_special_unitary(&mut rng, n));
    }
    out
}

/// Checks `φ(ζX) = ζφ(X)` for every `n`-th root of unity `ζ` on the sample
/// set, then returns the extension to `U(n)`. The first failing pair is
/// returned as the error witness.
pub fn scaling_extension<F: Fn(&CMatrix) -> CMatrix>(
    phi: F,
    n: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<ScalingExtension<F>, SpectralError> {
    if n < 2 {
        return Err(SpectralError::BadDimension(n));
    }
    for x in scaling_samples(n, seed) {
        let base = phi(&x);
        for j in 1..n {
            let zeta = cis(j as f64 / n as f64);
            let deviation = frobenius(&(phi(&(&x * zeta)) - &base * zeta));
            if !within(deviation, tol.spec) {
                return Err(SpectralError::WellDefinednessFailure(Box::new(ScalingWitness {
                    zeta: [zeta.re, zeta.im],
                    x: to_rows(&x),
                    deviation,
                })));
            }
        }
    }
    Ok(ScalingExtension { phi, n, tol: *tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::linalg::random_unitary;
    use crate::spectral::morton_reordering;

    #[test]
    fn identity_extends() {
        let tol = Tolerances::default();
        let ext = scaling_extension(|x: &CMatrix| x.clone(), 3, 42, &tol).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let u = random_unitary(&mut rng, 3);
        assert!(frobenius(&(ext.apply(&u).unwrap() - &u)) < 1e-10);
    }

    #[test]
    fn morton_map_fails_at_roots_of_unity() {
        let tol = Tolerances::default();
        let Err(SpectralError::WellDefinednessFailure(w)) = scaling_extension(morton_reordering, 3, 42, &tol) else {
            panic!("expected a witness");
        };
        let zeta = cis(1.0 / 3.0);
        assert!((w.zeta[0] - zeta.re).abs() < 1e-15 && (w.zeta[1] - zeta.im).abs() < 1e-15);
        assert!((w.x[1][1][0] - zeta.re).abs() < 1e-15);
    }
}

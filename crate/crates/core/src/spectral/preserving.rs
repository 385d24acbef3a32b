use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::linalg::{
    commutator_norm, diag, eigenvalues, matching_distance, random_su_phases, random_unitary, within, CMatrix, C64,
};
use super::Tolerances;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum CsDomain {
    SpecialUnitary(usize),
    Hermitian(usize),
    /// Diagonal special unitary matrices.
    DiagonalTorus(usize),
}

impl CsDomain {
    pub fn n(self) -> usize {
        match self {
            CsDomain::SpecialUnitary(n) | CsDomain::Hermitian(n) | CsDomain::DiagonalTorus(n) => n,
        }
    }

    fn spectrum<R: Rng + ?Sized>(self, rng: &mut R) -> Vec<C64> {
        match self {
            CsDomain::Hermitian(n) => (0..n).map(|_| C64::new(rng.sample(StandardNormal), 0.0)).collect(),
            CsDomain::SpecialUnitary(n) | CsDomain::DiagonalTorus(n) => random_su_phases(rng, n),
        }
    }

    /// Two commuting matrices: independent spectra in one shared eigenbasis.
    pub fn commuting_pair<R: Rng + ?Sized>(self, rng: &mut R) -> ((CMatrix, Vec<C64>), (CMatrix, Vec<C64>)) {
        let n = self.n();
        let q = match self {
            CsDomain::DiagonalTorus(_) => CMatrix::identity(n, n),
            _ => random_unitary(rng, n),
        };
        let (s1, s2) = (self.spectrum(rng), self.spectrum(rng));
        let x = &q * diag(&s1) * q.adjoint();
        let y = &q * diag(&s2) * q.adjoint();
        ((x, s1), (y, s2))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CsReport {
    pub domain: CsDomain,
    pub pairs: usize,
    pub spectrum_failures: usize,
    pub commutativity_failures: usize,
    /// Largest matching distance between the spectra of `X` and `f(X)`.
    pub worst_spectrum: f64,
    /// Largest `‖[f(X), f(Y)]‖_F` over commuting `X, Y`.
    pub worst_commutator: f64,
}

impl CsReport {
    pub fn passed(&self) -> bool {
        self.spectrum_failures == 0 && self.commutativity_failures == 0
    }
}

/// Samples `pairs` commuting pairs from the domain and checks that `f`
/// preserves both spectra and commutativity.
pub fn cs_check(
    f: &dyn Fn(&CMatrix) -> CMatrix,
    domain: CsDomain,
    pairs: usize,
    seed: u64,
    tol: &Tolerances,
) -> CsReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CsReport {
        domain,
        pairs,
        spectrum_failures: 0,
        commutativity_failures: 0,
        worst_spectrum: 0.0,
        worst_commutator: 0.0,
    };
    for _ in 0..pairs {
        let ((x, sx), (y, sy)) = domain.commuting_pair(&mut rng);
        let (fx, fy) = (f(&x), f(&y));
        for (image, spectrum) in [(&fx, &sx), (&fy, &sy)] {
            let d = if image.is_square() && image.nrows() == spectrum.len() {
                matching_distance(&eigenvalues(image), spectrum)
            } else {
                f64::INFINITY
            };
            report.worst_spectrum = report.worst_spectrum.max(d);
            if !within(d, tol.spec) {
                report.spectrum_failures += 1;
            }
        }
        let c = if fx.shape() == fy.shape() && fx.is_square() { commutator_norm(&fx, &fy) } else { f64::INFINITY };
        report.worst_commutator = report.worst_commutator.max(c);
        if !within(c, tol.spec) {
            report.commutativity_failures += 1;
        }
    }
    report
}

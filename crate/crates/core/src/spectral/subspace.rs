use rand::Rng;

use super::linalg::{cis, column_span, commutator_norm, frobenius, kernel, random_unitary, within, CMatrix, C64};
use super::{SpectralError, Tolerances};

/// A subspace of `ℂⁿ` held as an `n × k` matrix with orthonormal columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    basis: CMatrix,
}

impl Subspace {
    pub fn new(basis: CMatrix, tol: &Tolerances) -> Result<Self, SpectralError> {
        let k = basis.ncols();
        let defect = frobenius(&(basis.adjoint() * &basis - CMatrix::identity(k, k)));
        if !within(defect, tol.proj) {
            return Err(SpectralError::NotOrthonormal { defect });
        }
        Ok(Subspace { basis })
    }

    /// Orthonormalized span of the given columns.
    pub fn span(vectors: &CMatrix, tol: &Tolerances) -> Self {
        Subspace { basis: column_span(vectors, tol.gap) }
    }

    pub fn whole(n: usize) -> Self {
        Subspace { basis: CMatrix::identity(n, n) }
    }

    /// The span of the first `k` columns of a Haar unitary.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Self {
        Subspace { basis: random_unitary(rng, n).columns(0, k).into_owned() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    pub fn projector(&self) -> CMatrix {
        &self.basis * self.basis.adjoint()
    }

    pub fn complement(&self, tol: &Tolerances) -> Subspace {
        Subspace { basis: kernel(&self.projector(), tol.gap) }
    }

    /// `‖P_V − P_W‖_F`; zero exactly when the subspaces agree.
    pub fn distance(&self, other: &Subspace) -> f64 {
        frobenius(&(self.projector() - other.projector()))
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Subspace {
        Subspace { basis: self.basis.map(|z| z.conj()) }
    }

    /// Image under a unitary.
    pub fn transformed(&self, q: &CMatrix) -> Subspace {
        Subspace { basis: q * &self.basis }
    }
}

fn same_ambient(v: &Subspace, w: &Subspace) -> Result<(), SpectralError> {
    if v.ambient_dim() != w.ambient_dim() {
        return Err(SpectralError::DimensionMismatch { expected: v.ambient_dim(), found: w.ambient_dim() });
    }
    Ok(())
}

/// The orthogonal projections onto `V` and `V′` commute.
pub fn weak_perp(v: &Subspace, w: &Subspace, tol: &Tolerances) -> Result<bool, SpectralError> {
    same_ambient(v, w)?;
    Ok(commutator_norm(&v.projector(), &w.projector()) < tol.proj)
}

fn from_columns(n: usize, cols: &[nalgebra::DVector<C64>]) -> Subspace {
    if cols.is_empty() {
        Subspace { basis: CMatrix::zeros(n, 0) }
    } else {
        Subspace { basis: CMatrix::from_columns(cols) }
    }
}

/// A unit vector orthogonal to every column of `m`.
fn orthogonal_unit(m: &CMatrix, tol: &Tolerances) -> Option<nalgebra::DVector<C64>> {
    let k = kernel(&(m * m.adjoint()), tol.gap);
    (k.ncols() > 0).then(|| k.column(0).into_owned())
}

/// A chain `V = V₀, V₁, …, V_s = V′` with consecutive terms weakly
/// perpendicular.
///
/// For `k ≤ n − 2` the principal vectors `uᵢ ∈ V`, `vᵢ ∈ V′` are exchanged one
/// pair at a time through `ℓ″ ⊕ W` with `ℓ″ ⊥ uᵢ, vᵢ, W`. For `k = n − 1` the
/// single middle term is `ℓ″^⊥` for a line `ℓ″ ⊂ V ∩ V′`. In `ℂ²` a chain
/// exists only when the lines are already equal or orthogonal.
pub fn weak_perp_chain(v: &Subspace, w: &Subspace, tol: &Tolerances) -> Result<Vec<Subspace>, SpectralError> {
    same_ambient(v, w)?;
    let (n, k) = (v.ambient_dim(), v.dim());
    if w.dim() != k {
        return Err(SpectralError::DimensionMismatch { expected: k, found: w.dim() });
    }
    if k == 0 || k >= n {
        return Err(SpectralError::BadDimension(k));
    }
    if v.distance(w) <= tol.proj {
        return Ok(vec![v.clone()]);
    }
    if weak_perp(v, w, tol)? {
        return Ok(vec![v.clone(), w.clone()]);
    }
    if n == 2 {
        return Err(SpectralError::NoChain);
    }

    let mut chain = vec![v.clone()];
    if k == n - 1 {
        let normals = CMatrix::from_columns(&[
            v.complement(tol).basis.column(0).into_owned(),
            w.complement(tol).basis.column(0).into_owned(),
        ]);
        let line = orthogonal_unit(&normals, tol).ok_or(SpectralError::BadDimension(k))?;
        let middle = kernel(&(&line * line.adjoint()), tol.gap);
        chain.push(Subspace { basis: middle });
    } else {
        let svd = (v.basis.adjoint() * &w.basis).svd(true, true);
        let (a, b) = (svd.u.expect("requested"), svd.v_t.expect("requested").adjoint());
        let us: Vec<_> = (0..k).map(|i| (&v.basis * a.column(i)).into_owned()).collect();
        let vs: Vec<_> = (0..k).map(|i| (&w.basis * b.column(i)).into_owned()).collect();
        let mut current = us.clone();
        for i in 0..k {
            if (1.0 - svd.singular_values[i]).abs() <= tol.proj {
                // uᵢ and vᵢ span the same line.
                current[i] = vs[i].clone();
                continue;
            }
            let rest: Vec<_> = (0..k).filter(|&j| j != i).map(|j| current[j].clone()).collect();
            let mut spanning = rest.clone();
            spanning.push(us[i].clone());
            spanning.push(vs[i].clone());
            let line = orthogonal_unit(&CMatrix::from_columns(&spanning), tol).ok_or(SpectralError::BadDimension(k))?;
            let mut hop = rest;
            hop.push(line);
            chain.push(from_columns(n, &hop));
            current[i] = vs[i].clone();
            if i + 1 < k {
                chain.push(from_columns(n, &current));
            }
        }
    }
    chain.push(w.clone());
    Ok(chain)
}

/// Which eigenvalue cluster carries the subspace: the `k` smallest Morton
/// coordinates or the `k` largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Segment {
    Initial,
    Terminal,
}

/// `exp(2πia)·P_V + exp(2πib)·P_{V⊥}` with `a = −(n−k)/(n+1)`,
/// `b = k/(n+1)`, so that `V` is the eigenspace of the `k` smallest Morton
/// coordinates. `V = ℂⁿ` gives the identity.
pub fn isolated_witness(v: &Subspace) -> Result<CMatrix, SpectralError> {
    let (n, k) = (v.ambient_dim(), v.dim());
    if k == 0 || k > n {
        return Err(SpectralError::BadDimension(k));
    }
    if k == n {
        return Ok(CMatrix::identity(n, n));
    }
    let (a, b) = witness_turns(n, k);
    let p = v.projector();
    let id = CMatrix::identity(n, n);
    Ok(&p * cis(a) + (id - &p) * cis(b))
}

fn witness_turns(n: usize, k: usize) -> (f64, f64) {
    let (n, k) = (n as f64, k as f64);
    (-(n - k) / (n + 1.0), k / (n + 1.0))
}

/// The witness for a segment and the eigenvalue of its cluster.
fn segment_witness(v: &Subspace, segment: Segment, tol: &Tolerances) -> Result<(CMatrix, C64), SpectralError> {
    let (n, k) = (v.ambient_dim(), v.dim());
    if k == 0 || k > n {
        return Err(SpectralError::BadDimension(k));
    }
    if k == n {
        return Ok((CMatrix::identity(n, n), C64::new(1.0, 0.0)));
    }
    match segment {
        Segment::Initial => Ok((isolated_witness(v)?, cis(witness_turns(n, k).0))),
        // V takes the larger turn when its complement is the initial segment.
        Segment::Terminal => Ok((isolated_witness(&v.complement(tol))?, cis(witness_turns(n, n - k).1))),
    }
}

/// `E_{λ_S}(φ(U_V))`: the eigenspace of `φ(U_V)` for the eigenvalue of the
/// segment's cluster.
pub fn psi_s(
    phi: &dyn Fn(&CMatrix) -> CMatrix,
    v: &Subspace,
    segment: Segment,
    tol: &Tolerances,
) -> Result<Subspace, SpectralError> {
    let (u, lambda) = segment_witness(v, segment, tol)?;
    let y = phi(&u);
    let n = v.ambient_dim();
    if y.nrows() != n || y.ncols() != n {
        return Err(SpectralError::DimensionMismatch { expected: n, found: y.nrows() });
    }
    let basis = kernel(&(y - CMatrix::identity(n, n) * lambda), tol.gap);
    if basis.ncols() != v.dim() {
        return Err(SpectralError::ClusterCollapse { expected: v.dim(), found: basis.ncols() });
    }
    Ok(Subspace { basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::linalg::{random_unitary, unitarity_defect};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e(n: usize, i: usize) -> CMatrix {
        CMatrix::from_fn(n, 1, |r, _| if r == i { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
    }

    #[test]
    fn trivial_perpendicularity() {
        let tol = Tolerances::default();
        let a = Subspace::new(e(3, 0), &tol).unwrap();
        let b = Subspace::new(e(3, 1), &tol).unwrap();
        assert!(weak_perp(&a, &a, &tol).unwrap());
        assert!(weak_perp(&a, &b, &tol).unwrap());
        assert_eq!(weak_perp_chain(&a, &a, &tol).unwrap(), vec![a.clone()]);
        assert!(weak_perp(&a, &Subspace::new(e(2, 0), &tol).unwrap(), &tol).is_err());
    }

    #[test]
    fn chains_in_c3() {
        let tol = Tolerances::default();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 1..3 {
            let v = Subspace::random(&mut rng, 3, k);
            let w = Subspace::random(&mut rng, 3, k);
            let chain = weak_perp_chain(&v, &w, &tol).unwrap();
            assert_eq!(chain.first(), Some(&v));
            assert_eq!(chain.last(), Some(&w));
            for pair in chain.windows(2) {
                assert_eq!(pair[0].dim(), k);
                assert!(weak_perp(&pair[0], &pair[1], &tol).unwrap());
            }
        }
    }

    #[test]
    fn lines_in_c2() {
        let tol = Tolerances::default();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let v = Subspace::random(&mut rng, 2, 1);
        let w = Subspace::random(&mut rng, 2, 1);
        assert_eq!(weak_perp_chain(&v, &w, &tol), Err(SpectralError::NoChain));
        let perp = v.complement(&tol);
        assert_eq!(weak_perp_chain(&v, &perp, &tol).unwrap().len(), 2);
    }

    #[test]
    fn witness_values() {
        let tol = Tolerances::default();
        let u = isolated_witness(&Subspace::new(e(2, 0), &tol).unwrap()).unwrap();
        assert!((u[(0, 0)] - cis(-1.0 / 3.0)).norm() < 1e-12);
        assert!((u[(1, 1)] - cis(1.0 / 3.0)).norm() < 1e-12);
        assert_eq!(isolated_witness(&Subspace::whole(3)).unwrap(), CMatrix::identity(3, 3));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..=6 {
            for k in 1..n {
                let u = isolated_witness(&Subspace::random(&mut rng, n, k)).unwrap();
                assert!(unitarity_defect(&u) < 1e-10);
                assert!((u.determinant() - C64::new(1.0, 0.0)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn psi_of_simple_maps() {
        let tol = Tolerances::default();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let v = Subspace::random(&mut rng, 4, 2);
        let q = random_unitary(&mut rng, 4);
        for seg in [Segment::Initial, Segment::Terminal] {
            assert!(psi_s(&|x: &CMatrix| x.clone(), &v, seg, &tol).unwrap().distance(&v) < 1e-8);
            let ad = |x: &CMatrix| &q * x * q.adjoint();
            assert!(psi_s(&ad, &v, seg, &tol).unwrap().distance(&v.transformed(&q)) < 1e-8);
            let tr = |x: &CMatrix| x.transpose();
            assert!(psi_s(&tr, &v, seg, &tol).unwrap().distance(&v.conjugate()) < 1e-8);
        }
        let scramble = |x: &CMatrix| x * C64::new(0.0, 1.0);
        assert!(matches!(psi_s(&scramble, &v, Segment::Initial, &tol), Err(SpectralError::ClusterCollapse { .. })));
    }
}

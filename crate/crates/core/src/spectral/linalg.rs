//! Dense complex helpers shared by the spectral operations.

use nalgebra::{Complex, DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;

/// `value <= bound`, false for NaN.
pub fn within(value: f64, bound: f64) -> bool {
    value <= bound
}

pub fn cis(turns: f64) -> C64 {
    C64::from_polar(1.0, std::f64::consts::TAU * turns)
}

pub fn diag(values: &[C64]) -> CMatrix {
    CMatrix::from_diagonal(&DVector::from_column_slice(values))
}

pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn commutator_norm(a: &CMatrix, b: &CMatrix) -> f64 {
    frobenius(&(a * b - b * a))
}

pub fn unitarity_defect(m: &CMatrix) -> f64 {
    if !m.is_square() {
        return f64::INFINITY;
    }
    frobenius(&(m.adjoint() * m - CMatrix::identity(m.nrows(), m.ncols())))
}

pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    if !m.is_square() {
        return f64::INFINITY;
    }
    frobenius(&(m - m.adjoint()))
}

pub fn off_diagonal_norm(m: &CMatrix) -> f64 {
    let mut s = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if i != j {
                s += m[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Schur form `m = Q T Q*`. For a normal matrix `T` is diagonal up to
/// rounding, so `diag(T)` are the eigenvalues and the columns of `Q` an
/// orthonormal eigenbasis.
pub fn schur(m: &CMatrix) -> (CMatrix, Vec<C64>) {
    let (q, t) = m.clone().schur().unpack();
    let values = (0..t.nrows()).map(|i| t[(i, i)]).collect();
    (q, values)
}

pub fn eigenvalues(m: &CMatrix) -> Vec<C64> {
    schur(m).1
}

/// Orthonormal basis (as columns) of the kernel of the square matrix `m`,
/// taking singular values below `threshold` as zero.
pub fn kernel(m: &CMatrix, threshold: f64) -> CMatrix {
    assert!(m.is_square(), "kernel expects a square matrix");
    let n = m.ncols();
    let svd = m.clone().svd(false, true);
    let v = svd.v_t.expect("requested").adjoint();
    let mut cols = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s < threshold {
            cols.push(v.column(i).into_owned());
        }
    }
    if cols.is_empty() {
        CMatrix::zeros(n, 0)
    } else {
        CMatrix::from_columns(&cols)
    }
}

/// Orthonormal basis of the column span, dropping directions with singular
/// value below `threshold`.
pub fn column_span(m: &CMatrix, threshold: f64) -> CMatrix {
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("requested");
    let cols: Vec<_> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s >= threshold)
        .map(|(i, _)| u.column(i).into_owned())
        .collect();
    if cols.is_empty() {
        CMatrix::zeros(m.nrows(), 0)
    } else {
        CMatrix::from_columns(&cols)
    }
}

/// Row-major `[[re, im], …]` rows, the matrix JSON layout.
pub fn to_rows(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect()
}

/// Inverse of [`to_rows`]; `None` for ragged or empty input.
pub fn from_rows(rows: &[Vec<[f64; 2]>]) -> Option<CMatrix> {
    let r = rows.len();
    let c = rows.first()?.len();
    if c == 0 || rows.iter().any(|row| row.len() != c) {
        return None;
    }
    Some(CMatrix::from_fn(r, c, |i, j| C64::new(rows[i][j][0], rows[i][j][1])))
}

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) / std::f64::consts::SQRT_2
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// phases of `diag(R)` moved into `Q`.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let z = CMatrix::from_fn(n, n, |_, _| complex_gaussian(rng));
    let qr = z.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Haar unitary rescaled to determinant one.
pub fn random_special_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let u = random_unitary(rng, n);
    let d = u.determinant();
    u / C64::from_polar(1.0, d.arg() / n as f64)
}

/// `n` uniform phases with product one.
pub fn random_su_phases<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<C64> {
    let mut turns: Vec<f64> = (0..n - 1).map(|_| rng.random::<f64>()).collect();
    turns.push(-turns.iter().sum::<f64>());
    turns.into_iter().map(cis).collect()
}

/// Bottleneck matching distance: the least `max_i |a_i - b_{π(i)}|` over bijections `π`.
pub fn matching_distance(a: &[C64], b: &[C64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    fn go(a: &[C64], b: &[C64], used: &mut [bool], i: usize, current: f64, best: &mut f64) {
        if current >= *best {
            return;
        }
        if i == a.len() {
            *best = current;
            return;
        }
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                go(a, b, used, i + 1, current.max((a[i] - b[j]).norm()), best);
                used[j] = false;
            }
        }
    }
    let mut best = f64::INFINITY;
    go(a, b, &mut vec![false; b.len()], 0, 0.0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn haar_samples_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..6 {
            let u = random_special_unitary(&mut rng, n);
            assert!(unitarity_defect(&u) < 1e-12);
            assert!((u.determinant() - C64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn schur_of_diagonal() {
        let d = diag(&[cis(0.25), cis(0.75)]);
        let mut ev = eigenvalues(&d);
        ev.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((ev[0] - C64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((ev[1] - C64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn kernel_of_projector() {
        let p = diag(&[C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)]);
        assert_eq!(kernel(&p, 1e-9).ncols(), 2);
        assert_eq!(column_span(&p, 1e-9).ncols(), 1);
    }

    #[test]
    fn matching() {
        let a = [cis(0.1), cis(0.2), cis(0.3)];
        let b = [cis(0.3), cis(0.1), cis(0.2)];
        assert!(matching_distance(&a, &b) < 1e-15);
        assert!(matching_distance(&a, &b[..2]).is_infinite());
    }
}

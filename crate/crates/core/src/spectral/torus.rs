use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::linalg::{diag, off_diagonal_norm, schur, within, CMatrix};
use super::morton::{morton_select_ordered, UnitSpectrum};
use super::{SpectralError, Tolerances};
use crate::symmetric::Permutation;

/// Every permutation of degree `n`, lexicographic in the image list.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut images: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation::from_images(images.clone()).expect("identity")];
    loop {
        let Some(i) = (1..n).rev().find(|&i| images[i - 1] < images[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| images[j] > images[i - 1]).expect("pivot has a successor");
        images.swap(i - 1, j);
        images[i..].reverse();
        out.push(Permutation::from_images(images.clone()).expect("bijection"));
    }
}

/// One representative spectrum per component of the distinct-entry locus,
/// keyed by its label. The base point has turns `(j − (n+1)/2)/n`, and the
/// representative for `θ` is `θ▷z*`.
pub fn torus_components(n: usize) -> Result<Vec<(Permutation, UnitSpectrum)>, SpectralError> {
    if !(2..=6).contains(&n) {
        return Err(SpectralError::BadDimension(n));
    }
    let half = (n as f64 + 1.0) / 2.0;
    let base: Vec<f64> = (1..=n).map(|j| (j as f64 - half) / n as f64).collect();
    let base = UnitSpectrum::from_turns(&base)?;
    Ok(all_permutations(n)
        .into_iter()
        .map(|theta| {
            let rep = base.permuted(&theta);
            (theta, rep)
        })
        .collect())
}

/// The `θ` with `z_j = exp(2πi x_{θ⁻¹(j)})` for the Morton coordinates `x`
/// of `z`.
pub fn component_label(z: &UnitSpectrum, tol: &Tolerances) -> Result<Permutation, SpectralError> {
    let v = z.values();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if (v[i] - v[j]).norm() <= tol.gap {
                return Err(SpectralError::RepeatedEigenvalues(i, j));
            }
        }
    }
    let sel = morton_select_ordered(z);
    Ok(Permutation::from_images(sel.order.iter().map(|i| i + 1).collect()).expect("order is a bijection"))
}

/// `X ↦ diag(λ₁(X), …, λₙ(X))` in Morton order. Meant for `SU(n)`; no
/// validation is done so that it can serve as a map oracle.
pub fn morton_reordering(x: &CMatrix) -> CMatrix {
    let (_, values) = schur(x);
    let unit = values.iter().map(|z| z / z.norm()).collect();
    let sel = morton_select_ordered(&UnitSpectrum::from_values_unchecked(unit));
    diag(&sel.coords.eigenvalues())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRow {
    pub label: Permutation,
    /// `f(z)_j = z_{τ(j)}` at the representative of this component.
    pub tau: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTable")]
pub struct TorusMapSampleTable {
    pub n: usize,
    pub rows: Vec<SampleRow>,
}

#[derive(Deserialize)]
struct RawTable {
    n: usize,
    rows: Vec<SampleRow>,
}

impl TryFrom<RawTable> for TorusMapSampleTable {
    type Error = SpectralError;

    fn try_from(raw: RawTable) -> Result<Self, Self::Error> {
        TorusMapSampleTable::new(raw.n, raw.rows)
    }
}

impl TorusMapSampleTable {
    pub fn new(n: usize, rows: Vec<SampleRow>) -> Result<Self, SpectralError> {
        let mut seen = HashSet::new();
        for r in &rows {
            if r.label.n() != n || r.tau.n() != n {
                return Err(SpectralError::InvalidTable(format!("row {} / {} is not of degree {n}", r.label, r.tau)));
            }
            if !seen.insert(&r.label) {
                return Err(SpectralError::InvalidTable(format!("label {} repeated", r.label)));
            }
        }
        Ok(TorusMapSampleTable { n, rows })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    /// `τ` is the same permutation on every component: `f` permutes the
    /// diagonal entries by a fixed rule, as conjugation by a permutation
    /// matrix does.
    Conjugation { permutation: Permutation },
    /// `τ_θ = θ·v`: the output depends only on the spectrum.
    Reordering { translator: Permutation },
    /// Pairs of rows breaking the constant and the translation pattern.
    Neither { not_constant: [SampleRow; 2], not_translation: [SampleRow; 2] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    /// Fewer than `n!` rows: the verdict only describes the sampled
    /// components.
    pub partial: bool,
}

pub fn classify_torus_map(table: &TorusMapSampleTable) -> Result<Classification, SpectralError> {
    let first = table.rows.first().ok_or_else(|| SpectralError::InvalidTable("empty table".into()))?;
    let full: usize = (1..=table.n).product();
    let partial = table.rows.len() < full;

    let differing_tau = table.rows.iter().find(|r| r.tau != first.tau);
    let v = first.label.inverse().compose(&first.tau);
    let off_translation = table.rows.iter().find(|r| r.tau != r.label.compose(&v));
    let verdict = match (differing_tau, off_translation) {
        (None, _) => Verdict::Conjugation { permutation: first.tau.clone() },
        (_, None) => Verdict::Reordering { translator: v },
        (Some(a), Some(b)) => {
            Verdict::Neither { not_constant: [first.clone(), a.clone()], not_translation: [first.clone(), b.clone()] }
        }
    };
    Ok(Classification { verdict, partial })
}

/// Evaluates `f` at `diag(z)` for every component representative `z` and
/// reads off the permutation of entries.
pub fn sample_torus_map(
    f: &dyn Fn(&CMatrix) -> CMatrix,
    n: usize,
    tol: &Tolerances,
) -> Result<TorusMapSampleTable, SpectralError> {
    let mut rows = Vec::new();
    for (label, z) in torus_components(n)? {
        let y = f(&diag(z.values()));
        if y.nrows() != n || y.ncols() != n {
            return Err(SpectralError::DimensionMismatch { expected: n, found: y.nrows() });
        }
        let off = off_diagonal_norm(&y);
        if !within(off, tol.spec) {
            return Err(SpectralError::NotDiagonalValued(off));
        }
        let mut images = Vec::with_capacity(n);
        for j in 0..n {
            let i = z
                .values()
                .iter()
                .position(|&zi| (y[(j, j)] - zi).norm() <= tol.spec)
                .ok_or(SpectralError::SpectrumBroken)?;
            images.push(i + 1);
        }
        let tau = Permutation::from_images(images).map_err(|_| SpectralError::SpectrumBroken)?;
        rows.push(SampleRow { label, tau });
    }
    TorusMapSampleTable::new(n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::linalg::C64;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn permutations_listed() {
        assert_eq!(all_permutations(3).len(), 6);
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(1).len(), 1);
    }

    #[test]
    fn base_point_label() {
        let tol = Tolerances::default();
        let comps = torus_components(2).unwrap();
        assert_eq!(comps.len(), 2);
        let x = crate::spectral::morton_select(&comps[0].1).x;
        assert!((x[0] + 0.25).abs() < 1e-12 && (x[1] - 0.25).abs() < 1e-12);
        for (label, z) in torus_components(3).unwrap() {
            assert_eq!(component_label(&z, &tol).unwrap(), label);
        }
    }

    #[test]
    fn swapped_base_point() {
        let tol = Tolerances::default();
        let (_, base) = torus_components(3).unwrap().remove(0);
        let swapped = base.permuted(&p(3, "(1 2)"));
        assert_eq!(component_label(&swapped, &tol).unwrap(), p(3, "(1 2)"));
        let repeated = UnitSpectrum::from_turns(&[0.25, 0.25, -0.5]).unwrap();
        assert!(component_label(&repeated, &tol).is_err());
    }

    #[test]
    fn identity_is_conjugation() {
        let tol = Tolerances::default();
        let table = sample_torus_map(&|x: &CMatrix| x.clone(), 3, &tol).unwrap();
        let c = classify_torus_map(&table).unwrap();
        assert_eq!(c.verdict, Verdict::Conjugation { permutation: Permutation::identity(3) });
        assert!(!c.partial);
    }

    #[test]
    fn constant_label_table_is_reordering() {
        let rows = all_permutations(3).into_iter().map(|label| SampleRow { tau: label.clone(), label }).collect();
        let t = TorusMapSampleTable::new(3, rows).unwrap();
        assert_eq!(
            classify_torus_map(&t).unwrap().verdict,
            Verdict::Reordering { translator: Permutation::identity(3) }
        );
    }

    #[test]
    fn morton_map_reorders() {
        let tol = Tolerances::default();
        let table = sample_torus_map(&morton_reordering, 3, &tol).unwrap();
        assert!(matches!(classify_torus_map(&table).unwrap().verdict, Verdict::Reordering { .. }));
    }

    #[test]
    fn rotation_is_conjugation() {
        let tol = Tolerances::default();
        let rotate = |x: &CMatrix| {
            let n = x.nrows();
            let v: Vec<C64> = (0..n).map(|j| x[((j + 1) % n, (j + 1) % n)]).collect();
            diag(&v)
        };
        let table = sample_torus_map(&rotate, 4, &tol).unwrap();
        assert_eq!(
            classify_torus_map(&table).unwrap().verdict,
            Verdict::Conjugation { permutation: p(4, "(1 2 3 4)") }
        );
    }

    #[test]
    fn bad_tables() {
        let row = SampleRow { label: Permutation::identity(3), tau: Permutation::identity(3) };
        assert!(TorusMapSampleTable::new(3, vec![row.clone(), row.clone()]).is_err());
        let partial = TorusMapSampleTable::new(3, vec![row]).unwrap();
        assert!(classify_torus_map(&partial).unwrap().partial);
        assert!(classify_torus_map(&TorusMapSampleTable::new(3, vec![]).unwrap()).is_err());
        let broken = |x: &CMatrix| x * C64::new(2.0, 0.0);
        assert_eq!(sample_torus_map(&broken, 3, &Tolerances::default()), Err(SpectralError::SpectrumBroken));
    }
}

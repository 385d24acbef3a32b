//! Numeric bootstrap: the finite root list of the geometric representation,
//! with every simple reflection recorded as an exact permutation of it.

use std::collections::HashMap;
use std::f64::consts::PI;

use super::{CoxeterError, CoxeterMatrix};

/// Absolute tolerance for identifying two root vectors.
const MATCH_TOL: f64 = 1e-9;
/// Hash grid for candidate lookup; matches are confirmed with `MATCH_TOL`.
const GRID: f64 = 1e6;

pub(super) struct RootSystem {
    /// Coefficients in the simple-root basis.
    pub roots: Vec<Vec<f64>>,
    /// `generators[s][r]` is the index of `s(root r)`.
    pub generators: Vec<Vec<u32>>,
}

impl RootSystem {
    pub fn is_positive(&self, r: usize) -> bool {
        self.roots[r].iter().any(|&c| c > MATCH_TOL)
    }
}

struct RootIndex {
    buckets: HashMap<Vec<i64>, Vec<usize>>,
}

impl RootIndex {
    fn key(v: &[f64]) -> Vec<i64> {
        v.iter().map(|c| (c * GRID).round() as i64).collect()
    }

    fn find(&self, roots: &[Vec<f64>], v: &[f64]) -> Option<usize> {
        // Probe neighbouring cells for coordinates sitting near a cell boundary.
        let mut keys = vec![Vec::with_capacity(v.len())];
        for &c in v {
            let scaled = c * GRID;
            let k = scaled.round() as i64;
            let frac = scaled - scaled.floor();
            let alt = if (frac - 0.5).abs() < 1e-3 {
                Some(if scaled.round() > scaled { k - 1 } else { k + 1 })
            } else {
                None
            };
            let mut next = Vec::with_capacity(keys.len() * 2);
            for key in &keys {
                let mut a = key.clone();
                a.push(k);
                next.push(a);
                if let Some(alt) = alt {
                    let mut b = key.clone();
                    b.push(alt);
                    next.push(b);
                }
            }
            keys = next;
        }
        keys.iter()
            .filter_map(|k| self.buckets.get(k))
            .flatten()
            .copied()
            .find(|&i| roots[i].iter().zip(v).all(|(a, b)| (a - b).abs() <= MATCH_TOL))
    }

    fn insert(&mut self, v: &[f64], idx: usize) {
        self.buckets.entry(Self::key(v)).or_default().push(idx);
    }
}

/// Enumerates the root orbit of the simple roots. Fails with `OrderExceeded`
/// once more than `2 * max_order` roots appear, which cannot happen for a
/// group of order at most `max_order`.
pub(super) fn bootstrap(matrix: &CoxeterMatrix, max_order: usize) -> Result<RootSystem, CoxeterError> {
    let rank = matrix.rank();
    let form: Vec<Vec<f64>> =
        (0..rank).map(|i| (0..rank).map(|j| -(PI / matrix.get(i, j) as f64).cos()).collect()).collect();
    let reflect = |s: usize, v: &[f64]| -> Vec<f64> {
        let pairing: f64 = form[s].iter().zip(v).map(|(b, c)| b * c).sum();
        let mut out = v.to_vec();
        out[s] -= 2.0 * pairing;
        out
    };

    let limit = max_order.saturating_mul(2);
    let mut roots: Vec<Vec<f64>> = Vec::new();
    let mut index = RootIndex { buckets: HashMap::new() };
    for s in 0..rank {
        let mut e = vec![0.0; rank];
        e[s] = 1.0;
        index.insert(&e, roots.len());
        roots.push(e);
    }
    let mut generators = vec![Vec::new(); rank];
    let mut next = 0;
    while next < roots.len() {
        for (s, images) in generators.iter_mut().enumerate() {
            let image = reflect(s, &roots[next]);
            let idx = match index.find(&roots, &image) {
                Some(i) => i,
                None => {
                    if roots.len() >= limit {
                        return Err(CoxeterError::OrderExceeded(max_order));
                    }
                    index.insert(&image, roots.len());
                    roots.push(image);
                    roots.len() - 1
                }
            };
            images.push(idx as u32);
        }
        next += 1;
    }
    Ok(RootSystem { roots, generators })
}

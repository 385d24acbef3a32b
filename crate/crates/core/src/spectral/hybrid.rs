use serde::{Deserialize, Serialize};

use super::SpectralError;

/// `diag(u, v, w)` with real entries, written `[u v w]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HermitianDiagonal3 {
    pub entries: [f64; 3],
}

impl HermitianDiagonal3 {
    pub fn new(u: f64, v: f64, w: f64) -> Self {
        HermitianDiagonal3 { entries: [u, v, w] }
    }
}

/// Positions of the sorted values `a ≤ b ≤ c` in the input pattern, and in
/// the output pattern: `[b c a] ↦ [a c b]` is `([1, 2, 0], [0, 2, 1])`.
const ROWS: [([usize; 3], [usize; 3]); 6] = [
    ([0, 1, 2], [0, 1, 2]),
    ([0, 2, 1], [0, 2, 1]),
    ([1, 0, 2], [0, 1, 2]),
    ([1, 2, 0], [0, 2, 1]),
    ([2, 0, 1], [0, 1, 2]),
    ([2, 1, 0], [0, 1, 2]),
];

/// Applies every row of the table whose input pattern matches `d` and
/// returns the common output. Ties make several rows match; they must agree.
pub fn herm_hybrid(d: HermitianDiagonal3) -> Result<HermitianDiagonal3, SpectralError> {
    let mut sorted = d.entries;
    sorted.sort_by(f64::total_cmp);
    let mut result: Option<[f64; 3]> = None;
    for (input, output) in ROWS {
        if input.iter().zip(&d.entries).all(|(&k, &e)| sorted[k] == e) {
            let out = output.map(|k| sorted[k]);
            match result {
                None => result = Some(out),
                Some(prev) if prev != out => return Err(SpectralError::InternalInconsistency(d.entries)),
                Some(_) => {}
            }
        }
    }
    // Every real triple matches at least the row of its own ordering.
    let entries = result.ok_or(SpectralError::InternalInconsistency(d.entries))?;
    Ok(HermitianDiagonal3 { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(u: f64, v: f64, w: f64) -> [f64; 3] {
        herm_hybrid(HermitianDiagonal3::new(u, v, w)).unwrap().entries
    }

    #[test]
    fn table_rows() {
        assert_eq!(h(1.0, 2.0, 3.0), [1.0, 2.0, 3.0]);
        assert_eq!(h(2.0, 1.0, 3.0), [1.0, 2.0, 3.0]);
        assert_eq!(h(1.0, 3.0, 2.0), [1.0, 3.0, 2.0]);
        assert_eq!(h(2.0, 3.0, 1.0), [1.0, 3.0, 2.0]);
        assert_eq!(h(3.0, 1.0, 2.0), [1.0, 2.0, 3.0]);
        assert_eq!(h(3.0, 2.0, 1.0), [1.0, 2.0, 3.0]);
    }

    #[test]
    fn ties_agree() {
        assert_eq!(h(1.0, 1.0, 2.0), [1.0, 1.0, 2.0]);
        assert_eq!(h(1.0, 2.0, 1.0), [1.0, 2.0, 1.0]);
        assert_eq!(h(2.0, 1.0, 1.0), [1.0, 1.0, 2.0]);
        assert_eq!(h(1.0, 2.0, 2.0), [1.0, 2.0, 2.0]);
        assert_eq!(h(2.0, 1.0, 2.0), [1.0, 2.0, 2.0]);
        assert_eq!(h(2.0, 2.0, 1.0), [1.0, 2.0, 2.0]);
        assert_eq!(h(5.0, 5.0, 5.0), [5.0, 5.0, 5.0]);
    }
}

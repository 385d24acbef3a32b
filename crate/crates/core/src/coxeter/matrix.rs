use serde::{Deserialize, Serialize};

use super::CoxeterError;

/// Entry value used in serialized matrices for an infinite edge.
pub const INFINITY: u32 = 0;

/// A Coxeter matrix `m(s, s')` over generators `0..rank`.
///
/// Infinite edges are representable (encoded as [`INFINITY`]) so that input
/// files can be read and rejected with a precise error at build time.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    rank: usize,
    m: Vec<Vec<u32>>,
}

impl TryFrom<RawMatrix> for CoxeterMatrix {
    type Error = CoxeterError;

    fn try_from(raw: RawMatrix) -> Result<Self, Self::Error> {
        if raw.m.len() != raw.rank {
            return Err(CoxeterError::InvalidMatrix(format!("rank {} but {} rows", raw.rank, raw.m.len())));
        }
        CoxeterMatrix::new(raw.m)
    }
}

impl From<CoxeterMatrix> for RawMatrix {
    fn from(m: CoxeterMatrix) -> Self {
        RawMatrix { rank: m.rank, m: m.entries }
    }
}

impl CoxeterMatrix {
    /// Validates symmetry, unit diagonal and off-diagonal entries `>= 2`
    /// (or [`INFINITY`]).
    pub fn new(entries: Vec<Vec<u32>>) -> Result<Self, CoxeterError> {
        let rank = entries.len();
        if rank == 0 {
            return Err(CoxeterError::InvalidMatrix("rank must be positive".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxeterError::InvalidMatrix(format!("row {i} has length {}, expected {rank}", row.len())));
            }
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m != entries[j][i] {
                    return Err(CoxeterError::InvalidMatrix(format!("not symmetric at ({i}, {j})")));
                }
                if i == j && m != 1 {
                    return Err(CoxeterError::InvalidMatrix(format!("diagonal entry ({i}, {i}) is {m}, expected 1")));
                }
                if i != j && m == 1 {
                    return Err(CoxeterError::InvalidMatrix(format!("off-diagonal entry ({i}, {j}) is 1")));
                }
            }
        }
        Ok(CoxeterMatrix { rank, entries })
    }

    /// Type `A_rank`, the symmetric group on `rank + 1` letters.
    pub fn type_a(rank: usize) -> Self {
        Self::from_fn(rank, |i, j| if i.abs_diff(j) == 1 { 3 } else { 2 })
    }

    /// Dihedral type `I_2(m)`; `m = 0` encodes the infinite dihedral group.
    pub fn dihedral(m: u32) -> Self {
        Self::from_fn(2, |_, _| m)
    }

    /// `k` commuting copies of `A_1`.
    pub fn a1_power(k: usize) -> Self {
        Self::from_fn(k, |_, _| 2)
    }

    /// Block-diagonal product; generators of `other` are shifted past `self`.
    pub fn product(&self, other: &CoxeterMatrix) -> Self {
        let r = self.rank;
        Self::from_fn(r + other.rank, |i, j| match (i < r, j < r) {
            (true, true) => self.entries[i][j],
            (false, false) => other.entries[i - r][j - r],
            _ => 2,
        })
    }

    /// Relabels generators: new generator `i` is old generator `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self, CoxeterError> {
        let mut seen = vec![false; self.rank];
        if order.len() != self.rank {
            return Err(CoxeterError::InvalidMatrix("relabeling has wrong length".into()));
        }
        for &o in order {
            if o >= self.rank || std::mem::replace(&mut seen[o], true) {
                return Err(CoxeterError::InvalidMatrix("relabeling is not a bijection".into()));
            }
        }
        Ok(Self::from_fn(self.rank, |i, j| self.entries[order[i]][order[j]]))
    }

    fn from_fn(rank: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let entries = (0..rank).map(|i| (0..rank).map(|j| if i == j { 1 } else { f(i, j) }).collect()).collect();
        CoxeterMatrix { rank, entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.entries
    }

    /// First infinite edge, if any.
    pub fn infinite_edge(&self) -> Option<(usize, usize)> {
        (0..self.rank)
            .flat_map(|i| (i + 1..self.rank).map(move |j| (i, j)))
            .find(|&(i, j)| self.entries[i][j] == INFINITY)
    }

    /// Connected components of the Coxeter graph (edges where `m >= 3`).
    /// Blocks are sorted internally and ordered by smallest generator.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.rank];
        let mut blocks = Vec::new();
        for start in 0..self.rank {
            if label[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![start];
            label[start] = id;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for (j, &m) in self.entries[i].iter().enumerate() {
                    if i != j && (m >= 3 || m == INFINITY) && label[j] == usize::MAX {
                        label[j] = id;
                        block.push(j);
                        stack.push(j);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed() {
        assert!(CoxeterMatrix::new(vec![]).is_err());
        assert!(CoxeterMatrix::new(vec![vec![1, 3], vec![2, 1]]).is_err());
        assert!(CoxeterMatrix::new(vec![vec![2]]).is_err());
        assert!(CoxeterMatrix::new(vec![vec![1, 1], vec![1, 1]]).is_err());
        assert!(CoxeterMatrix::new(vec![vec![1, 3]]).is_err());
        assert!(CoxeterMatrix::new(vec![vec![1, 3, 2], vec![], vec![2, 3, 1]]).is_err());
    }

    #[test]
    fn json_shape() {
        let m: CoxeterMatrix = serde_json::from_str(r#"{"rank": 2, "m": [[1,5],[5,1]]}"#).unwrap();
        assert_eq!(m, CoxeterMatrix::dihedral(5));
        let back = serde_json::to_string(&m).unwrap();
        assert_eq!(back, r#"{"rank":2,"m":[[1,5],[5,1]]}"#);
        assert!(serde_json::from_str::<CoxeterMatrix>(r#"{"rank": 3, "m": [[1,5],[5,1]]}"#).is_err());
    }

    #[test]
    fn components_of_products() {
        assert_eq!(CoxeterMatrix::type_a(2).components(), vec![vec![0, 1]]);
        assert_eq!(CoxeterMatrix::a1_power(2).components(), vec![vec![0], vec![1]]);
        let m = CoxeterMatrix::a1_power(1).product(&CoxeterMatrix::type_a(2));
        assert_eq!(m.components(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn permuted_relabels() {
        let m = CoxeterMatrix::a1_power(1).product(&CoxeterMatrix::type_a(2));
        let p = m.permuted(&[2, 0, 1]).unwrap();
        assert_eq!(p.get(0, 2), 3);
        assert_eq!(p.get(0, 1), 2);
        assert!(m.permuted(&[0, 0, 1]).is_err());
    }
}

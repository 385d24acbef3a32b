use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SymmetricError;

/// A bijection of `{1, …, n}`. Composition is right to left:
/// `p.compose(q)` sends `x` to `p(q(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation", into = "RawPermutation")]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawPermutation {
    n: usize,
    images: Vec<usize>,
}

impl TryFrom<RawPermutation> for Permutation {
    type Error = SymmetricError;

    fn try_from(raw: RawPermutation) -> Result<Self, Self::Error> {
        if raw.images.len() != raw.n {
            return Err(SymmetricError::InvalidPermutation(format!(
                "n = {} but {} images given",
                raw.n,
                raw.images.len()
            )));
        }
        Permutation::from_images(raw.images)
    }
}

impl From<Permutation> for RawPermutation {
    fn from(p: Permutation) -> Self {
        RawPermutation { n: p.images.len(), images: p.images }
    }
}

impl Permutation {
    /// `images[i - 1]` is the image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, SymmetricError> {
        let n = images.len();
        if n == 0 {
            return Err(SymmetricError::InvalidPermutation("empty permutation".into()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n {
                return Err(SymmetricError::InvalidPermutation(format!("image {x} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(SymmetricError::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The transposition `(i j)`; `(i i)` is the identity.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self, SymmetricError> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(SymmetricError::InvalidPermutation(format!("({i} {j}) outside 1..={n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// `η = (1 2 ⋯ n)`
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (1..=n).map(|i| i % n + 1).collect() }
    }

    /// Parses cycle notation such as `(1 3)(2 4 5)`. `e`, `()` and the empty
    /// string denote the identity. Points may be separated by spaces or commas.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self, SymmetricError> {
        let bad = |msg: String| SymmetricError::InvalidPermutation(msg);
        let s = s.trim();
        let mut p = Self::identity(n);
        if s == "e" || s.is_empty() {
            return Ok(p);
        }
        let mut moved = vec![false; n];
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad(format!("expected '(' in {s:?}")))?;
            let close = body.find(')').ok_or_else(|| bad(format!("unclosed cycle in {s:?}")))?;
            let points = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad(format!("bad point {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            for &x in &points {
                if x == 0 || x > n {
                    return Err(bad(format!("point {x} outside 1..={n}")));
                }
                if std::mem::replace(&mut moved[x - 1], true) {
                    return Err(bad(format!("point {x} appears twice")));
                }
            }
            for (k, &x) in points.iter().enumerate() {
                p.images[x - 1] = points[(k + 1) % points.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `Ad_self(x) = self ∘ x ∘ self⁻¹`
    pub fn conjugate(&self, x: &Permutation) -> Permutation {
        self.compose(x).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 1..=self.n() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Parses an image list such as `[2, 1, 3]`. Cycle notation needs the degree,
/// see [`Permutation::parse_cycles`].
impl FromStr for Permutation {
    type Err = SymmetricError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images: Vec<usize> = serde_json::from_str(s.trim())
            .map_err(|e| SymmetricError::InvalidPermutation(format!("expected an image list: {e}")))?;
        Permutation::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_to_left() {
        let a = Permutation::transposition(3, 1, 2).unwrap();
        let b = Permutation::transposition(3, 2, 3).unwrap();
        // (1 2)(2 3): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(a.compose(&b).images(), &[2, 3, 1]);
        assert_eq!(a.compose(&b).to_string(), "(1 2 3)");
    }

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::parse_cycles(5, "(4 5)(3 1)").unwrap();
        assert_eq!(p.to_string(), "(1 3)(4 5)");
        assert_eq!(Permutation::parse_cycles(5, &p.to_string()).unwrap(), p);
        assert_eq!(Permutation::parse_cycles(3, "e").unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::identity(3).to_string(), "e");
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p: Permutation = serde_json::from_str(r#"{"n": 3, "images": [2, 1, 3]}"#).unwrap();
        assert_eq!(p.to_string(), "(1 2)");
        let back: Permutation = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>(r#"{"n": 3, "images": [2, 2, 3]}"#).is_err());
        assert!(serde_json::from_str::<Permutation>(r#"{"n": 2, "images": [2, 1, 3]}"#).is_err());
        assert_eq!("[3,1,2]".parse::<Permutation>().unwrap(), Permutation::parse_cycles(3, "(1 3 2)").unwrap());
    }

    #[test]
    fn long_cycle_and_inverse() {
        let eta = Permutation::long_cycle(4);
        assert_eq!(eta.to_string(), "(1 2 3 4)");
        assert!(eta.compose(&eta.inverse()).is_identity());
    }
}

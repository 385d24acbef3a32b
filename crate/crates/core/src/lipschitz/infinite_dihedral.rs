//! The infinite dihedral group `⟨a, b | a² = b² = 1⟩` and a T-Lipschitz
//! self-map of it that is neither constant nor a right translation, checked
//! on a finite ball.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    A,
    B,
}

/// A reduced word, necessarily alternating.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DihedralWord(Vec<Letter>);

impl DihedralWord {
    pub fn identity() -> Self {
        DihedralWord(Vec::new())
    }

    /// The alternating word of the given length starting with `first`.
    pub fn alternating(first: Letter, len: usize) -> Self {
        let other = match first {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        };
        DihedralWord((0..len).map(|i| if i % 2 == 0 { first } else { other }).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Reflections are exactly the odd-length words.
    pub fn is_reflection(&self) -> bool {
        self.0.len() % 2 == 1
    }

    pub fn mul(&self, other: &DihedralWord) -> DihedralWord {
        let mut out = self.0.clone();
        for &l in &other.0 {
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        DihedralWord(out)
    }

    pub fn inverse(&self) -> DihedralWord {
        DihedralWord(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for DihedralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::A => "a",
                Letter::B => "b",
            })?;
        }
        Ok(())
    }
}

impl Serialize for DihedralWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `1 ↦ 1`, words ending in `a` ↦ `1`, words ending in `b` ↦ themselves.
pub fn example_map(w: &DihedralWord) -> DihedralWord {
    match w.last() {
        Some(Letter::B) => w.clone(),
        _ => DihedralWord::identity(),
    }
}

/// Every element of length at most `radius`, shortest first.
pub fn ball(radius: usize) -> Vec<DihedralWord> {
    let mut out = vec![DihedralWord::identity()];
    for len in 1..=radius {
        out.push(DihedralWord::alternating(Letter::A, len));
        out.push(DihedralWord::alternating(Letter::B, len));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralViolation {
    pub theta: DihedralWord,
    pub sigma: DihedralWord,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub theta: DihedralWord,
    pub image: DihedralWord,
    pub other_theta: DihedralWord,
    pub other_image: DihedralWord,
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralReport {
    pub radius: usize,
    pub ball_size: usize,
    /// `(θ, σ)` pairs with both `θ` and `σθ` in the ball.
    pub instances: usize,
    pub violations: Vec<DihedralViolation>,
    /// Two elements with different images.
    pub non_constant: Option<Witness>,
    /// Two elements whose values of `θ⁻¹·τ(θ)` differ.
    pub non_translation: Option<Witness>,
}

impl DihedralReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.non_constant.is_some() && self.non_translation.is_some()
    }
}

/// Checks the T-Lipschitz condition for [`example_map`] on the ball of the
/// given radius, counting only pairs where both `θ` and `σθ` lie in the ball.
pub fn verify_example(radius: usize) -> DihedralReport {
    let elements = ball(radius);
    // σθ has length <= radius only if σ has length <= 2·radius.
    let reflections: Vec<DihedralWord> = (1..=2 * radius + 1)
        .step_by(2)
        .flat_map(|len| [DihedralWord::alternating(Letter::A, len), DihedralWord::alternating(Letter::B, len)])
        .collect();

    let mut instances = 0;
    let mut violations = Vec::new();
    for theta in &elements {
        let image = example_map(theta);
        for sigma in &reflections {
            let moved_arg = sigma.mul(theta);
            if moved_arg.len() > radius {
                continue;
            }
            instances += 1;
            let moved = example_map(&moved_arg);
            if moved != image && moved != sigma.mul(&image) {
                violations.push(DihedralViolation { theta: theta.clone(), sigma: sigma.clone() });
            }
        }
    }

    let pairs = || elements.iter().flat_map(|x| elements.iter().map(move |y| (x, y)));
    let witness = |x: &DihedralWord, y: &DihedralWord| Witness {
        theta: x.clone(),
        image: example_map(x),
        other_theta: y.clone(),
        other_image: example_map(y),
    };
    let non_constant = pairs().find(|(x, y)| example_map(x) != example_map(y)).map(|(x, y)| witness(x, y));
    let offset = |x: &DihedralWord| x.inverse().mul(&example_map(x));
    let non_translation = pairs().find(|(x, y)| offset(x) != offset(y)).map(|(x, y)| witness(x, y));

    DihedralReport { radius, ball_size: elements.len(), instances, violations, non_constant, non_translation }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_arithmetic() {
        let a = DihedralWord::alternating(Letter::A, 1);
        let b = DihedralWord::alternating(Letter::B, 1);
        assert_eq!(a.mul(&a), DihedralWord::identity());
        let ab = a.mul(&b);
        assert_eq!(ab.to_string(), "ab");
        assert_eq!(ab.mul(&ab.inverse()), DihedralWord::identity());
        assert_eq!(ab.mul(&b).to_string(), "a");
    }

    #[test]
    fn radius_one_table() {
        let e = DihedralWord::identity();
        let a = DihedralWord::alternating(Letter::A, 1);
        let b = DihedralWord::alternating(Letter::B, 1);
        assert_eq!(ball(1), vec![e.clone(), a.clone(), b.clone()]);
        assert_eq!(example_map(&e), e);
        assert_eq!(example_map(&a), e);
        assert_eq!(example_map(&b), b);
        assert!(verify_example(1).violations.is_empty());
    }

    #[test]
    fn witnesses_present() {
        let a = DihedralWord::alternating(Letter::A, 1);
        // τ(a)·a⁻¹ = a while τ(1)·1⁻¹ = 1
        assert_eq!(example_map(&a).mul(&a.inverse()), a);
        let r = verify_example(3);
        assert!(r.non_constant.is_some());
        assert!(r.non_translation.is_some());
    }

    #[test]
    fn violation_at_radius_two() {
        // θ = a, σ = aba: σθ = ab ↦ ab, but τ(a) = 1 and σ·1 = aba.
        let r = verify_example(2);
        let a = DihedralWord::alternating(Letter::A, 1);
        let aba = DihedralWord::alternating(Letter::A, 3);
        assert!(r.violations.iter().any(|v| v.theta == a && v.sigma == aba));
    }
}

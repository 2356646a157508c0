//! Join-continuous maps between finite chains, the algebraic mirror of paths.
//!
//! A map `f : {0..n} -> {0..m}` is join-continuous exactly when it is
//! monotone and `f(0) = 0`. Sending a path `w` to the map `i -> number of
//! North steps preceding the i-th East step` is a bijection between `P(n,m)`
//! and these maps, and it carries the path product to function composition.
//!
//! Maps are stored as dense value vectors; domains are tiny chains, so this
//! gives O(1) evaluation and cheap hashing for set-based enumeration.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::path::{Path, Step};

/// A monotone map `{0..n} -> {0..m}` with `f(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JoinContMap {
    values: Vec<usize>,
    codomain: usize,
}

/// A monotone map `{0..m} -> {0..n}` with no basepoint constraint.
///
/// Kept distinct from [`JoinContMap`] because right adjoints need not fix 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    values: Vec<usize>,
    codomain: usize,
}

impl JoinContMap {
    /// Validate and wrap a value vector `f[0..=n]` with codomain `{0..m}`.
    pub fn new(values: Vec<usize>, codomain: usize) -> Result<JoinContMap> {
        if values.is_empty() {
            return Err(Error::Parse("map needs at least the value at 0".into()));
        }
        if values[0] != 0 {
            return Err(Error::Parse(format!("f(0) = {} but must be 0", values[0])));
        }
        for pair in values.windows(2) {
            if pair[0] > pair[1] {
                return Err(Error::Parse(format!(
                    "not monotone: {} > {}",
                    pair[0], pair[1]
                )));
            }
        }
        if *values.last().unwrap() > codomain {
            return Err(Error::Parse(format!(
                "value {} exceeds codomain bound {}",
                values.last().unwrap(),
                codomain
            )));
        }
        Ok(JoinContMap { values, codomain })
    }

    pub fn identity(n: usize) -> JoinContMap {
        JoinContMap {
            values: (0..=n).collect(),
            codomain: n,
        }
    }

    pub fn constant_zero(n: usize, codomain: usize) -> JoinContMap {
        JoinContMap {
            values: vec![0; n + 1],
            codomain,
        }
    }

    pub fn eval(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `n`, the top of the domain chain `{0..n}`.
    pub fn domain_end(&self) -> usize {
        self.values.len() - 1
    }

    /// `m`, the top of the codomain chain `{0..m}`.
    pub fn codomain_end(&self) -> usize {
        self.codomain
    }

    pub fn is_square(&self) -> bool {
        self.domain_end() == self.codomain
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.codomain)
        } else {
            Err(Error::NotSquare {
                east: self.domain_end(),
                north: self.codomain,
            })
        }
    }

    fn require_same_dims(&self, other: &JoinContMap) -> Result<()> {
        if self.domain_end() != other.domain_end() || self.codomain != other.codomain {
            return Err(Error::dims(
                format!("({},{})", other.domain_end(), other.codomain),
                format!("({},{})", self.domain_end(), self.codomain),
            ));
        }
        Ok(())
    }

    /// The map of a path: value `i` is the number of North steps preceding
    /// the i-th East step (1-indexed), with value 0 at 0.
    pub fn from_path(w: &Path) -> JoinContMap {
        let mut values = Vec::with_capacity(w.width() + 1);
        values.push(0);
        let mut norths = 0usize;
        for step in w.steps() {
            match step {
                Step::North => norths += 1,
                Step::East => values.push(norths),
            }
        }
        JoinContMap {
            values,
            codomain: w.height(),
        }
    }

    /// Inverse of [`JoinContMap::from_path`]: the i-th y-block of the word
    /// has length `f(i+1) - f(i)`, reading `f(n+1)` as `m`.
    pub fn to_path(&self) -> Path {
        let n = self.domain_end();
        let m = self.codomain;
        let mut steps = Vec::with_capacity(n + m);
        for i in 0..=n {
            let next = if i == n { m } else { self.values[i + 1] };
            steps.extend(std::iter::repeat_n(Step::North, next - self.values[i]));
            if i < n {
                steps.push(Step::East);
            }
        }
        Path::from_steps(steps)
    }

    /// Composition `self . inner`; `inner`'s codomain must be `self`'s domain.
    pub fn compose(&self, inner: &JoinContMap) -> Result<JoinContMap> {
        if inner.codomain != self.domain_end() {
            return Err(Error::dims(
                format!("inner codomain {}", inner.codomain),
                format!("outer domain {}", self.domain_end()),
            ));
        }
        Ok(JoinContMap {
            values: inner.values.iter().map(|v| self.values[*v]).collect(),
            codomain: self.codomain,
        })
    }

    /// The right adjoint `g(y) = max { x : f(x) <= y }`; satisfies
    /// `f(x) <= y  iff  x <= g(y)` and `g(m) = n`.
    pub fn right_adjoint(&self) -> MonotoneMap {
        let n = self.domain_end();
        let values = (0..=self.codomain)
            .map(|y| {
                (0..=n)
                    .rev()
                    .find(|x| self.values[*x] <= y)
                    .expect("f(0) = 0 <= y")
            })
            .collect();
        MonotoneMap {
            values,
            codomain: n,
        }
    }

    pub fn pointwise_leq(&self, other: &JoinContMap) -> Result<bool> {
        self.require_same_dims(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a <= b))
    }

    pub fn pointwise_join(&self, other: &JoinContMap) -> Result<JoinContMap> {
        self.require_same_dims(other)?;
        Ok(JoinContMap {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| *a.max(b))
                .collect(),
            codomain: self.codomain,
        })
    }

    pub fn pointwise_meet(&self, other: &JoinContMap) -> Result<JoinContMap> {
        self.require_same_dims(other)?;
        Ok(JoinContMap {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| *a.min(b))
                .collect(),
            codomain: self.codomain,
        })
    }

    /// The increases of a square map: `{ i < n : f(i) < f(i+1) }`. This set
    /// equals `Img(g) \ {n}` for the right adjoint `g`.
    pub fn increases(&self) -> Result<BTreeSet<usize>> {
        self.require_square()?;
        Ok(self
            .values
            .windows(2)
            .enumerate()
            .filter(|(_, pair)| pair[0] < pair[1])
            .map(|(i, _)| i)
            .collect())
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.values.iter().copied().collect()
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        self.require_square()?;
        Ok(self.values.iter().all(|v| self.values[*v] == *v))
    }

    /// Nilpotent means some power is the constant-0 map; on a chain this is
    /// equivalent to `f(x) < x` for all `x >= 1`.
    pub fn is_nilpotent(&self) -> Result<bool> {
        self.require_square()?;
        Ok(self.values.iter().enumerate().skip(1).all(|(x, v)| *v < x))
    }

    /// Least `k >= 1` with `f^(k+1) = f^k`; finite because the monoid of
    /// square join-continuous maps is aperiodic.
    pub fn aperiodicity_index(&self) -> Result<usize> {
        self.require_square()?;
        let mut power = self.clone();
        let mut k = 1;
        loop {
            let next = self.compose(&power).expect("square");
            if next == power {
                return Ok(k);
            }
            power = next;
            k += 1;
        }
    }

    /// Parse the textual form `v0,v1,.../m`, e.g. `0,0,2,3,3/4`.
    pub fn parse(text: &str) -> Result<JoinContMap> {
        let (values_part, codomain_part) = text
            .split_once('/')
            .ok_or_else(|| Error::Parse("expected `v0,v1,.../m`".into()))?;
        let codomain = codomain_part
            .trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("bad codomain bound: {e}")))?;
        let mut values = Vec::new();
        for part in values_part.split(',') {
            values.push(
                part.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad value `{}`: {e}", part.trim())))?,
            );
        }
        JoinContMap::new(values, codomain)
    }
}

impl fmt::Display for JoinContMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}/{}", values.join(","), self.codomain)
    }
}

impl MonotoneMap {
    pub fn new(values: Vec<usize>, codomain: usize) -> Result<MonotoneMap> {
        if values.is_empty() {
            return Err(Error::Parse("map needs at least the value at 0".into()));
        }
        for pair in values.windows(2) {
            if pair[0] > pair[1] {
                return Err(Error::Parse(format!(
                    "not monotone: {} > {}",
                    pair[0], pair[1]
                )));
            }
        }
        if *values.last().unwrap() > codomain {
            return Err(Error::Parse(format!(
                "value {} exceeds codomain bound {}",
                values.last().unwrap(),
                codomain
            )));
        }
        Ok(MonotoneMap { values, codomain })
    }

    pub fn eval(&self, y: usize) -> usize {
        self.values[y]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn domain_end(&self) -> usize {
        self.values.len() - 1
    }

    pub fn codomain_end(&self) -> usize {
        self.codomain
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.values.iter().copied().collect()
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}/{}", values.join(","), self.codomain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::paths;

    fn p(word: &str) -> Path {
        Path::parse(word).unwrap()
    }

    fn m(values: &[usize], codomain: usize) -> JoinContMap {
        JoinContMap::new(values.to_vec(), codomain).unwrap()
    }

    #[test]
    fn map_of_example_words() {
        assert_eq!(JoinContMap::from_path(&p("yxxxyxyyxy")), m(&[0, 1, 1, 1, 2, 4], 5));
        assert_eq!(JoinContMap::from_path(&p("yxyxyx")), JoinContMap::identity(3));
        assert_eq!(
            JoinContMap::from_path(&p("xxxyy")),
            JoinContMap::constant_zero(3, 2)
        );
    }

    #[test]
    fn path_of_example_maps() {
        assert_eq!(m(&[0, 1, 1, 1, 2, 4], 5).to_path(), p("yxxxyxyyxy"));
        assert_eq!(JoinContMap::constant_zero(2, 3).to_path(), p("xxyyy"));
        assert_eq!(JoinContMap::identity(3).to_path(), p("yxyxyx"));
    }

    #[test]
    fn bijection_round_trip_exhaustive() {
        for n in 0..=5 {
            for h in 0..=5 {
                for w in paths(n, h) {
                    assert_eq!(JoinContMap::from_path(&w).to_path(), w);
                }
            }
        }
    }

    #[test]
    fn composition() {
        let f = JoinContMap::from_path(&p("yxxyxy"));
        let g = JoinContMap::from_path(&p("xyxyyx"));
        assert_eq!(g.compose(&f).unwrap(), JoinContMap::from_path(&p("xxyxyy")));
        assert_eq!(JoinContMap::identity(3).compose(&f).unwrap(), f);
        assert_eq!(
            JoinContMap::constant_zero(3, 2).compose(&f).unwrap(),
            JoinContMap::constant_zero(3, 2)
        );
        assert!(JoinContMap::identity(2).compose(&f).is_err());
    }

    #[test]
    fn right_adjoint_examples() {
        let f = m(&[0, 0, 2, 3, 3], 4);
        assert_eq!(f.right_adjoint().values(), &[1, 1, 2, 4, 4]);
        assert_eq!(
            JoinContMap::identity(3).right_adjoint().values(),
            &[0, 1, 2, 3]
        );
        assert_eq!(
            JoinContMap::constant_zero(3, 3).right_adjoint().values(),
            &[3, 3, 3, 3]
        );
    }

    #[test]
    fn adjunction_exhaustive() {
        for n in 0..=4 {
            for w in paths(n, n) {
                let f = JoinContMap::from_path(&w);
                let g = f.right_adjoint();
                assert_eq!(g.eval(n), n);
                for x in 0..=n {
                    for y in 0..=n {
                        assert_eq!(f.eval(x) <= y, x <= g.eval(y), "f={f} x={x} y={y}");
                    }
                    assert_eq!(f.eval(g.eval(f.eval(x))), f.eval(x));
                    assert_eq!(g.eval(f.eval(g.eval(x))), g.eval(x));
                }
            }
        }
    }

    #[test]
    fn pointwise_lattice() {
        let a = m(&[0, 0, 2], 2);
        let b = m(&[0, 1, 1], 2);
        assert_eq!(a.pointwise_join(&b).unwrap(), m(&[0, 1, 2], 2));
        assert_eq!(a.pointwise_meet(&b).unwrap(), m(&[0, 0, 1], 2));
        assert_eq!(a.pointwise_join(&a).unwrap(), a);
        assert_eq!(
            a.pointwise_meet(&JoinContMap::constant_zero(2, 2)).unwrap(),
            JoinContMap::constant_zero(2, 2)
        );
        assert!(!a.pointwise_leq(&b).unwrap());
        assert!(a.pointwise_meet(&m(&[0, 1], 2)).is_err());
    }

    #[test]
    fn increases_examples() {
        let f = m(&[0, 0, 2, 3, 3], 4);
        assert_eq!(
            f.increases().unwrap(),
            BTreeSet::from([1, 2])
        );
        let g = f.right_adjoint();
        let mut img = g.image();
        img.remove(&4);
        assert_eq!(f.increases().unwrap(), img);
        assert_eq!(
            JoinContMap::identity(3).increases().unwrap(),
            BTreeSet::from([0, 1, 2])
        );
        assert!(JoinContMap::constant_zero(3, 3).increases().unwrap().is_empty());
    }

    #[test]
    fn increases_match_adjoint_image_exhaustive() {
        for w in paths(4, 4) {
            let f = JoinContMap::from_path(&w);
            let mut img = f.right_adjoint().image();
            img.remove(&4);
            assert_eq!(f.increases().unwrap(), img, "word {w}");
        }
    }

    #[test]
    fn predicates() {
        let f = m(&[0, 0, 2, 3, 3], 4);
        assert!(f.is_idempotent().unwrap());
        assert_eq!(f.image(), BTreeSet::from([0, 2, 3]));

        let g = m(&[0, 0, 1], 2);
        assert!(!g.is_idempotent().unwrap());
        assert!(g.is_nilpotent().unwrap());
        assert_eq!(g.aperiodicity_index().unwrap(), 2);

        let id = JoinContMap::identity(3);
        assert!(id.is_idempotent().unwrap());
        assert!(!id.is_nilpotent().unwrap());
        assert_eq!(id.aperiodicity_index().unwrap(), 1);
    }

    #[test]
    fn dominance_matches_geometry() {
        // Pointwise order on maps = "never dips below" on cumulative heights.
        for n in 0..=4usize {
            for h in 0..=4usize {
                let all: Vec<Path> = paths(n, h).collect();
                for w in &all {
                    for u in &all {
                        let fw = JoinContMap::from_path(w);
                        let fu = JoinContMap::from_path(u);
                        // height profile by direct word scan
                        let heights = |v: &Path| -> Vec<usize> {
                            let mut out = Vec::new();
                            let mut ys = 0;
                            for s in v.steps() {
                                match s {
                                    Step::North => ys += 1,
                                    Step::East => out.push(ys),
                                }
                            }
                            out
                        };
                        let geo = heights(w)
                            .iter()
                            .zip(heights(u).iter())
                            .all(|(a, b)| a <= b);
                        assert_eq!(fw.pointwise_leq(&fu).unwrap(), geo);
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let f = JoinContMap::parse("0,0,2,3,3/4").unwrap();
        assert_eq!(f, m(&[0, 0, 2, 3, 3], 4));
        assert_eq!(f.to_string(), "0,0,2,3,3/4");
        assert_eq!(JoinContMap::parse("0, 1 , 1 / 5").unwrap(), m(&[0, 1, 1], 5));
        assert!(JoinContMap::parse("1,2/3").is_err());
        assert!(JoinContMap::parse("0,2,1/3").is_err());
        assert!(JoinContMap::parse("0,4/3").is_err());
        assert!(JoinContMap::parse("0,1").is_err());
    }
}

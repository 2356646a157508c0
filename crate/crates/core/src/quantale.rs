//! The path-level algebra: the product, its traced variant, the dual sum,
//! lattice structure, residuals, and the epi-mono factorization.
//!
//! For `w` in `P(n,m)` and `u` in `P(m,k)`, the product interleaves the
//! x-blocks of `w` with the y-blocks of `u`; under the path/map bijection it
//! is exactly function composition, which makes `P(n,n)` a quantale.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::enumeration::binomial;
use crate::error::{Error, Result};
use crate::jsl::JoinContMap;
use crate::path::{corner_path, Path, Step, TurnKind};

fn require_composable(w: &Path, u: &Path) -> Result<()> {
    if w.height() != u.width() {
        return Err(Error::dims(
            format!("left height {} vs right width {}", w.height(), u.width()),
            "equal middle dimension",
        ));
    }
    Ok(())
}

fn require_same_dims(w: &Path, u: &Path) -> Result<()> {
    if w.width() != u.width() || w.height() != u.height() {
        return Err(Error::dims(
            format!("({},{})", u.width(), u.height()),
            format!("({},{})", w.width(), w.height()),
        ));
    }
    Ok(())
}

/// The product of `w` in `P(n,m)` and `u` in `P(m,k)`: concatenate
/// `x-block_i(w) . y-block_i(u)` for `i = 0..=m`. Lands in `P(n,k)`.
pub fn product(w: &Path, u: &Path) -> Result<Path> {
    Ok(product_traced(w, u)?.into_word())
}

/// A product word together with the block boundaries ("bars") that trace
/// where the factors were stitched. Bars form a multiset over the gap
/// positions `0..=n+k` of the word; a gap may carry several bars. Every
/// North-East turn of the word is barred, and both factors are recoverable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedProduct {
    word: Path,
    bars: Vec<usize>,
}

/// As [`product`], but keeps the bars.
pub fn product_traced(w: &Path, u: &Path) -> Result<TracedProduct> {
    require_composable(w, u)?;
    let m = w.height();
    let x_blocks = w.blocks().x_blocks;
    let y_blocks = u.blocks().y_blocks;
    debug_assert_eq!(x_blocks.len(), m + 1);
    debug_assert_eq!(y_blocks.len(), m + 1);
    let mut steps = Vec::with_capacity(w.width() + u.height());
    let mut bars = Vec::with_capacity(m);
    for i in 0..=m {
        steps.extend(std::iter::repeat_n(Step::East, x_blocks[i]));
        steps.extend(std::iter::repeat_n(Step::North, y_blocks[i]));
        if i < m {
            bars.push(steps.len());
        }
    }
    Ok(TracedProduct {
        word: Path::from_steps(steps),
        bars,
    })
}

impl TracedProduct {
    /// Build from a word and an explicit multiset of bar positions; this is
    /// how a candidate factorization is proposed. Bars must be sorted, lie in
    /// `0..=len`, and cover every North-East turn of the word.
    pub fn new(word: Path, bars: Vec<usize>) -> Result<TracedProduct> {
        if bars.windows(2).any(|p| p[0] > p[1]) {
            return Err(Error::Parse("bars must be sorted".into()));
        }
        if bars.last().is_some_and(|b| *b > word.len()) {
            return Err(Error::IndexOutOfRange(format!(
                "bar {} beyond word length {}",
                bars.last().unwrap(),
                word.len()
            )));
        }
        let mut descents: Vec<usize> = Vec::new();
        for (i, pair) in word.steps().windows(2).enumerate() {
            if pair[0] == Step::North && pair[1] == Step::East {
                descents.push(i + 1);
            }
        }
        for d in &descents {
            if !bars.contains(d) {
                return Err(Error::Parse(format!("North-East turn at {d} is not barred")));
            }
        }
        Ok(TracedProduct { word, bars })
    }

    pub fn word(&self) -> &Path {
        &self.word
    }

    pub fn into_word(self) -> Path {
        self.word
    }

    pub fn bars(&self) -> &[usize] {
        &self.bars
    }

    /// The left factor: delete the North letters, then read bars as North.
    pub fn left_factor(&self) -> Path {
        self.extract(Step::East)
    }

    /// The right factor: delete the East letters, then read bars as East.
    pub fn right_factor(&self) -> Path {
        self.extract(Step::North)
    }

    fn extract(&self, keep: Step) -> Path {
        let bar_step = match keep {
            Step::East => Step::North,
            Step::North => Step::East,
        };
        let mut steps = Vec::new();
        let mut bar_iter = self.bars.iter().peekable();
        for (i, step) in self.word.steps().iter().enumerate() {
            while bar_iter.peek() == Some(&&i) {
                steps.push(bar_step);
                bar_iter.next();
            }
            if *step == keep {
                steps.push(*step);
            }
        }
        let end = self.word.len();
        while bar_iter.peek() == Some(&&end) {
            steps.push(bar_step);
            bar_iter.next();
        }
        Path::from_steps(steps)
    }
}

impl fmt::Display for TracedProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut bar_iter = self.bars.iter().peekable();
        for (i, step) in self.word.steps().iter().enumerate() {
            while bar_iter.peek() == Some(&&i) {
                out.push('|');
                bar_iter.next();
            }
            out.push(step.letter());
        }
        for _ in bar_iter {
            out.push('|');
        }
        f.write_str(&out)
    }
}

/// The dual sum `w (+) u = (u* (x) w*)*`: the product variant where the North
/// letters take priority inside each block.
pub fn oplus(w: &Path, u: &Path) -> Result<Path> {
    require_composable(w, u)?;
    Ok(product(&u.swap_letters(), &w.swap_letters())?.swap_letters())
}

/// The unit of the product on `P(n,n)`: the staircase `(yx)^n`.
pub fn identity_path(n: usize) -> Path {
    JoinContMap::identity(n).to_path()
}

/// The least element of the dominance lattice: `x^n y^m`.
pub fn bottom_path(width: usize, height: usize) -> Path {
    corner_path(width, height)
}

/// The greatest element of the dominance lattice: `y^m x^n`.
pub fn top_path(width: usize, height: usize) -> Path {
    let mut steps = Vec::with_capacity(width + height);
    steps.extend(std::iter::repeat_n(Step::North, height));
    steps.extend(std::iter::repeat_n(Step::East, width));
    Path::from_steps(steps)
}

/// Dominance order: `w <= u` iff `u` never dips below `w`.
pub fn leq(w: &Path, u: &Path) -> Result<bool> {
    require_same_dims(w, u)?;
    JoinContMap::from_path(w).pointwise_leq(&JoinContMap::from_path(u))
}

/// Join in the dominance lattice, transported from the pointwise join.
pub fn join(w: &Path, u: &Path) -> Result<Path> {
    require_same_dims(w, u)?;
    Ok(JoinContMap::from_path(w)
        .pointwise_join(&JoinContMap::from_path(u))?
        .to_path())
}

/// Meet in the dominance lattice.
pub fn meet(w: &Path, u: &Path) -> Result<Path> {
    require_same_dims(w, u)?;
    Ok(JoinContMap::from_path(w)
        .pointwise_meet(&JoinContMap::from_path(u))?
        .to_path())
}

/// The largest `r` in `P(n,m)` with `r (x) f <= h`, for `h` in `P(n,k)` and
/// `f` in `P(m,k)`. Pointwise, `B_r = g_f . B_h` corrected to 0 at 0, where
/// `g_f` is the right adjoint of `B_f`.
pub fn residual_right(h: &Path, f: &Path) -> Result<Path> {
    if h.height() != f.height() {
        return Err(Error::dims(
            format!("divisor height {}", f.height()),
            format!("target height {}", h.height()),
        ));
    }
    let bh = JoinContMap::from_path(h);
    let gf = JoinContMap::from_path(f).right_adjoint();
    let mut values: Vec<usize> = bh.values().iter().map(|v| gf.eval(*v)).collect();
    values[0] = 0;
    Ok(JoinContMap::new(values, f.width())
        .expect("monotone by construction")
        .to_path())
}

/// The largest `r` in `P(m,k)` with `f (x) r <= h`, for `f` in `P(n,m)` and
/// `h` in `P(n,k)`. Pointwise, `B_r(j) = min { B_h(i) : B_f(i) >= j }`, with
/// the empty minimum read as `k`.
pub fn residual_left(f: &Path, h: &Path) -> Result<Path> {
    if f.width() != h.width() {
        return Err(Error::dims(
            format!("divisor width {}", f.width()),
            format!("target width {}", h.width()),
        ));
    }
    let bf = JoinContMap::from_path(f);
    let bh = JoinContMap::from_path(h);
    let k = h.height();
    let values: Vec<usize> = (0..=f.height())
        .map(|j| {
            (0..=f.width())
                .filter(|i| bf.eval(*i) >= j)
                .map(|i| bh.eval(i))
                .min()
                .unwrap_or(k)
        })
        .collect();
    Ok(JoinContMap::new(values, k)
        .expect("monotone by construction")
        .to_path())
}

/// The canonical epi-mono factorization of a path through its descents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub left: Path,
    pub right: Path,
    /// The middle dimension, equal to the descent count of the product.
    pub descents: usize,
}

/// Split `w` in `P(n,k)` as `left (x) right` where the bars sit exactly at
/// the descents: `left` in `P(n,d)` is surjective (as a map onto `{0..d}`),
/// `right` in `P(d,k)` is injective, `d` the descent count.
pub fn factorize(w: &Path) -> Factorization {
    let mut bars = Vec::new();
    for (i, pair) in w.steps().windows(2).enumerate() {
        if pair[0] == Step::North && pair[1] == Step::East {
            bars.push(i + 1);
        }
    }
    let descents = bars.len();
    let traced = TracedProduct {
        word: w.clone(),
        bars,
    };
    Factorization {
        left: traced.left_factor(),
        right: traced.right_factor(),
        descents,
    }
}

/// The join-irreducible decomposition of a square path: its North-East turn
/// points. Joining the atomic paths at these points, starting from the
/// bottom, rebuilds the path; the bottom itself is the empty join.
pub fn join_irreducible_decomposition(w: &Path) -> Result<Vec<(usize, usize)>> {
    w.require_square()?;
    Ok(w.turns()
        .into_iter()
        .filter(|t| t.kind == TurnKind::NorthEast)
        .map(|t| t.point)
        .collect())
}

/// Number of pairs `(a,b)` in `P(n,m) x P(m,k)` with `a (x) b = w`: equal to
/// `C(n+k+m-i, m-i)` where `i` is the descent count of `w` (and 0 when
/// `m < i`, since every descent must be barred).
pub fn preimage_count(w: &Path, middle: usize) -> BigUint {
    let descents = w.descent_count();
    match middle.checked_sub(descents) {
        None => BigUint::zero(),
        Some(free) => binomial((w.len() + middle - descents) as u64, free as u64),
    }
}

//! Lattice paths as words over a two-letter step alphabet.
//!
//! A path from `(0,0)` to `(n,m)` using unit East and North steps is written
//! as a word over `{x, y}` with `n` occurrences of `x` (East) and `m`
//! occurrences of `y` (North). All values are immutable; every operation
//! returns a fresh path.

use std::fmt;

use crate::error::{Error, Result};

/// One unit step of a path. `East` renders as `x`, `North` as `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    East,
    North,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::East => 'x',
            Step::North => 'y',
        }
    }

    fn from_letter(c: char) -> Option<Step> {
        match c {
            'x' | 'X' | 'e' | 'E' => Some(Step::East),
            'y' | 'Y' | 'n' | 'N' => Some(Step::North),
            _ => None,
        }
    }
}

/// The kind of a turn: `NorthEast` is a North step immediately followed by an
/// East step (a descent of the word), `EastNorth` the opposite corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TurnKind {
    NorthEast,
    EastNorth,
}

/// A turn of a path, located by the letter counts of the prefix ending at it:
/// `point = (east steps so far, north steps so far)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Turn {
    pub point: (usize, usize),
    pub kind: TurnKind,
}

/// Block-length profile of a path: the lengths of the maximal runs of each
/// letter, delimited by occurrences of the other letter.
///
/// A path `w` with `m` North steps splits into `m + 1` x-blocks (possibly
/// empty) and, symmetrically, into `n + 1` y-blocks. Interleaving the
/// x-blocks with single North steps reconstructs the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockProfile {
    pub x_blocks: Vec<usize>,
    pub y_blocks: Vec<usize>,
}

/// A discrete lattice path from `(0,0)` to `(width, height)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    steps: Vec<Step>,
    east: usize,
    north: usize,
}

impl Path {
    /// The empty path, the unique element of `P(0,0)`.
    pub fn empty() -> Path {
        Path::from_steps(Vec::new())
    }

    pub fn from_steps(steps: Vec<Step>) -> Path {
        let east = steps.iter().filter(|s| **s == Step::East).count();
        let north = steps.len() - east;
        Path { steps, east, north }
    }

    /// Parse a word over `{x, y}`. Case-insensitive; `e`/`n` are accepted as
    /// aliases for `x`/`y` on input (never emitted).
    pub fn parse(text: &str) -> Result<Path> {
        let mut steps = Vec::with_capacity(text.len());
        for (pos, c) in text.chars().enumerate() {
            match Step::from_letter(c) {
                Some(s) => steps.push(s),
                None => return Err(Error::IllegalCharacter(pos)),
            }
        }
        Ok(Path::from_steps(steps))
    }

    /// Parse and check the letter counts against expected dimensions.
    pub fn parse_with_dims(text: &str, width: usize, height: usize) -> Result<Path> {
        let path = Path::parse(text)?;
        if path.width() != width || path.height() != height {
            return Err(Error::dims(
                format!("({},{})", path.width(), path.height()),
                format!("({width},{height})"),
            ));
        }
        Ok(path)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of East steps (the `n` of `P(n,m)`).
    pub fn width(&self) -> usize {
        self.east
    }

    /// Number of North steps (the `m` of `P(n,m)`).
    pub fn height(&self) -> usize {
        self.north
    }

    pub fn is_square(&self) -> bool {
        self.east == self.north
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.east)
        } else {
            Err(Error::NotSquare {
                east: self.east,
                north: self.north,
            })
        }
    }

    /// The word as text, lowercase `x`/`y`.
    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Block-length profile; see [`BlockProfile`].
    pub fn blocks(&self) -> BlockProfile {
        let mut x_blocks = vec![0usize];
        let mut y_blocks = vec![0usize];
        for step in &self.steps {
            match step {
                Step::East => {
                    *x_blocks.last_mut().unwrap() += 1;
                    y_blocks.push(0);
                }
                Step::North => {
                    *y_blocks.last_mut().unwrap() += 1;
                    x_blocks.push(0);
                }
            }
        }
        debug_assert_eq!(x_blocks.len(), self.north + 1);
        debug_assert_eq!(y_blocks.len(), self.east + 1);
        BlockProfile { x_blocks, y_blocks }
    }

    /// All turns in word order. North-East and East-North turns strictly
    /// alternate along the word.
    pub fn turns(&self) -> Vec<Turn> {
        let mut turns = Vec::new();
        let mut east = 0usize;
        let mut north = 0usize;
        for pair in self.steps.windows(2) {
            match pair[0] {
                Step::East => east += 1,
                Step::North => north += 1,
            }
            let kind = match (pair[0], pair[1]) {
                (Step::North, Step::East) => Some(TurnKind::NorthEast),
                (Step::East, Step::North) => Some(TurnKind::EastNorth),
                _ => None,
            };
            if let Some(kind) = kind {
                turns.push(Turn {
                    point: (east, north),
                    kind,
                });
            }
        }
        turns
    }

    /// Number of North-East turns (descents of the word).
    pub fn descent_count(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|p| p[0] == Step::North && p[1] == Step::East)
            .count()
    }

    /// The star map: exchange the two letters. An involution `P(n,m) -> P(m,n)`.
    pub fn swap_letters(&self) -> Path {
        let steps = self
            .steps
            .iter()
            .map(|s| match s {
                Step::East => Step::North,
                Step::North => Step::East,
            })
            .collect();
        Path::from_steps(steps)
    }

    /// The word read backwards.
    pub fn reversed(&self) -> Path {
        let mut steps = self.steps.clone();
        steps.reverse();
        Path::from_steps(steps)
    }

    /// Reflection of a square path along the anti-diagonal `y = n - x`,
    /// sending the point `(a,b)` to `(n-b, n-a)`. Equals reverse-then-swap;
    /// an involution that preserves the upper-zigzag property.
    pub fn reflect_antidiagonal(&self) -> Result<Path> {
        self.require_square()?;
        Ok(self.reversed().swap_letters())
    }

    /// ASCII rendering on a dot grid with `height + 1` rows: `_` for East
    /// segments, `|` for North segments, `.` for unused lattice points.
    pub fn render_ascii(&self) -> String {
        let n = self.east;
        let m = self.north;
        // east_at[y] marks the east segments at height y; north_to[y] the
        // column whose north segment ends at height y.
        let mut east_at = vec![vec![false; n]; m + 1];
        let mut north_to = vec![None; m + 1];
        let (mut x, mut y) = (0usize, 0usize);
        for step in &self.steps {
            match step {
                Step::East => {
                    east_at[y][x] = true;
                    x += 1;
                }
                Step::North => {
                    y += 1;
                    north_to[y] = Some(x);
                }
            }
        }
        let mut rows = Vec::with_capacity(m + 1);
        for y in (0..=m).rev() {
            let mut row = String::with_capacity(2 * n + 1);
            for (x, has_east) in east_at[y].iter().enumerate() {
                row.push(if north_to[y] == Some(x) { '|' } else { '.' });
                row.push(if *has_east { '_' } else { ' ' });
            }
            row.push(if north_to[y] == Some(n) { '|' } else { '.' });
            rows.push(row);
        }
        rows.join("\n")
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl BlockProfile {
    /// Rebuild the word by interleaving the x-blocks with single North steps.
    pub fn assemble(&self) -> Path {
        let mut steps = Vec::new();
        for (i, len) in self.x_blocks.iter().enumerate() {
            steps.extend(std::iter::repeat_n(Step::East, *len));
            if i + 1 < self.x_blocks.len() {
                steps.push(Step::North);
            }
        }
        Path::from_steps(steps)
    }
}

/// The atomic path `x^i y^j x^(n-i) y^(n-j)`: the unique path of `P(n,n)`
/// with a single North-East turn, located at `(i,j)`. Requires
/// `0 <= i <= n-1` and `1 <= j <= n`.
pub fn atomic_path(i: usize, j: usize, n: usize) -> Result<Path> {
    if n == 0 || i > n - 1 {
        return Err(Error::IndexOutOfRange(format!(
            "turn abscissa {i} not in 0..={}",
            n.saturating_sub(1)
        )));
    }
    if j < 1 || j > n {
        return Err(Error::IndexOutOfRange(format!(
            "turn ordinate {j} not in 1..={n}"
        )));
    }
    let mut steps = Vec::with_capacity(2 * n);
    steps.extend(std::iter::repeat_n(Step::East, i));
    steps.extend(std::iter::repeat_n(Step::North, j));
    steps.extend(std::iter::repeat_n(Step::East, n - i));
    steps.extend(std::iter::repeat_n(Step::North, n - j));
    Ok(Path::from_steps(steps))
}

/// `x^n y^m` repeated-letter constructor used all over the crate.
pub(crate) fn corner_path(east: usize, north: usize) -> Path {
    let mut steps = Vec::with_capacity(east + north);
    steps.extend(std::iter::repeat_n(Step::East, east));
    steps.extend(std::iter::repeat_n(Step::North, north));
    Path::from_steps(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::paths;

    fn p(word: &str) -> Path {
        Path::parse(word).unwrap()
    }

    #[test]
    fn parse_counts_letters() {
        let w = p("yxxxyxyyxy");
        assert_eq!((w.width(), w.height()), (5, 5));
        assert_eq!(w.word(), "yxxxyxyyxy");
    }

    #[test]
    fn parse_empty_word() {
        let w = p("");
        assert_eq!((w.width(), w.height()), (0, 0));
        assert!(w.is_empty());
    }

    #[test]
    fn parse_rejects_illegal_letter() {
        assert_eq!(Path::parse("xz"), Err(Error::IllegalCharacter(1)));
    }

    #[test]
    fn parse_accepts_aliases() {
        assert_eq!(p("NE"), p("yx"));
        assert_eq!(p("XyE"), p("xyx"));
    }

    #[test]
    fn parse_with_dims_checks_counts() {
        assert!(Path::parse_with_dims("xy", 1, 1).is_ok());
        assert!(matches!(
            Path::parse_with_dims("xy", 2, 1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn blocks_of_example_words() {
        assert_eq!(p("yxxyxy").blocks().x_blocks, vec![0, 2, 1, 0]);
        assert_eq!(p("xyxyyx").blocks().y_blocks, vec![0, 1, 2, 0]);
        let w = p("xxx").blocks();
        assert_eq!(w.x_blocks, vec![3]);
        assert_eq!(w.y_blocks, vec![0, 0, 0, 0]);
    }

    #[test]
    fn blocks_reassemble() {
        for w in paths(3, 4) {
            assert_eq!(w.blocks().assemble(), w);
        }
    }

    #[test]
    fn turns_of_example_words() {
        let ne = |a, b| Turn {
            point: (a, b),
            kind: TurnKind::NorthEast,
        };
        let en = |a, b| Turn {
            point: (a, b),
            kind: TurnKind::EastNorth,
        };
        assert_eq!(
            p("yxxxyxyyxy").turns(),
            vec![ne(0, 1), en(3, 1), ne(3, 2), en(4, 2), ne(4, 4), en(5, 4)]
        );
        assert_eq!(p("xxxyy").turns(), vec![en(3, 0)]);
        assert_eq!(p("yxyx").turns(), vec![ne(0, 1), en(1, 1), ne(1, 2)]);
    }

    #[test]
    fn descent_counts() {
        assert_eq!(p("xxyxyy").descent_count(), 1);
        assert_eq!(p("xxxyy").descent_count(), 0);
        assert_eq!(p("yxxxyxyyxy").descent_count(), 3);
    }

    #[test]
    fn swap_and_reverse() {
        assert_eq!(p("yxxyxy").swap_letters(), p("xyyxyx"));
        assert_eq!(p("").swap_letters(), p(""));
        assert_eq!(p("xxyy").swap_letters(), p("yyxx"));
        assert_eq!(p("xxyxyy").reversed(), p("yyxyxx"));
        assert_eq!(p("yxyx").reversed(), p("xyxy"));
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(p("yxyx").reflect_antidiagonal().unwrap(), p("yxyx"));
        assert_eq!(p("xxyy").reflect_antidiagonal().unwrap(), p("xxyy"));
        assert_eq!(p("xyyxyxxy").reflect_antidiagonal().unwrap(), p("xyyxyxxy"));
        assert!(matches!(
            p("xxy").reflect_antidiagonal(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn reflection_moves_turn_points() {
        // A North-East turn at (a,b) must land at (n-b, n-a).
        for w in paths(4, 4) {
            let r = w.reflect_antidiagonal().unwrap();
            let mut expected: Vec<(usize, usize)> = w
                .turns()
                .iter()
                .filter(|t| t.kind == TurnKind::NorthEast)
                .map(|t| (4 - t.point.1, 4 - t.point.0))
                .collect();
            expected.sort();
            let mut actual: Vec<(usize, usize)> = r
                .turns()
                .iter()
                .filter(|t| t.kind == TurnKind::NorthEast)
                .map(|t| t.point)
                .collect();
            actual.sort();
            assert_eq!(actual, expected, "word {w}");
        }
    }

    #[test]
    fn atomic_paths() {
        assert_eq!(atomic_path(0, 1, 1).unwrap(), p("yx"));
        assert_eq!(atomic_path(1, 2, 3).unwrap(), p("xyyxxy"));
        assert!(matches!(
            atomic_path(3, 1, 3),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            atomic_path(0, 0, 3),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn atomic_path_has_unique_turn() {
        for n in 1..=4 {
            for i in 0..n {
                for j in 1..=n {
                    let e = atomic_path(i, j, n).unwrap();
                    let ne: Vec<_> = e
                        .turns()
                        .into_iter()
                        .filter(|t| t.kind == TurnKind::NorthEast)
                        .collect();
                    assert_eq!(ne.len(), 1);
                    assert_eq!(ne[0].point, (i, j));
                }
            }
        }
    }

    #[test]
    fn render_smallest_corner() {
        assert_eq!(p("xy").render_ascii(), ". |\n._.");
        assert_eq!(p("").render_ascii(), ".");
        assert_eq!(p("xx").render_ascii(), "._._.");
        assert_eq!(p("yy").render_ascii(), "|\n|\n.");
    }

    #[test]
    fn turn_alternation_exhaustive() {
        for n in 0..=5 {
            for m in 0..=5 {
                for w in paths(n, m) {
                    let turns = w.turns();
                    for pair in turns.windows(2) {
                        assert_ne!(pair[0].kind, pair[1].kind, "word {w}");
                    }
                    assert!(w.descent_count() <= n.min(m));
                }
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_path() -> impl Strategy<Value = Path> {
            proptest::collection::vec(prop_oneof![Just(Step::East), Just(Step::North)], 0..40)
                .prop_map(Path::from_steps)
        }

        proptest! {
            #[test]
            fn word_round_trip(w in arb_path()) {
                prop_assert_eq!(Path::parse(&w.word()).unwrap(), w);
            }

            #[test]
            fn involutions(w in arb_path()) {
                prop_assert_eq!(w.swap_letters().swap_letters(), w.clone());
                prop_assert_eq!(w.reversed().reversed(), w.clone());
                prop_assert_eq!(w.blocks().assemble(), w);
            }
        }
    }
}

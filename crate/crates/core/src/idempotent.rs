//! Idempotents of the path monoid: the geometric upper-zigzag test, the
//! alternating interval systems ("emmentalers") of a finite chain, their
//! bijection with idempotent maps, and the three-letter word encoding.
//!
//! Everything here is specialized to finite chains `{0..n}`; the interval
//! systems of more general lattices are out of scope.

use std::fmt;

use crate::error::{Error, Result};
use crate::jsl::{JoinContMap, MonotoneMap};
use crate::path::{Path, Step, TurnKind};
use crate::quantale::product;

/// True iff every North-East turn `(a,b)` of the square path lies strictly
/// above the line `y = x + 1/2` (i.e. `a < b`) and every East-North turn
/// lies below it (i.e. `b <= a`).
pub fn is_upper_zigzag(w: &Path) -> Result<bool> {
    w.require_square()?;
    Ok(w.turns().iter().all(|t| {
        let (a, b) = t.point;
        match t.kind {
            TurnKind::NorthEast => a < b,
            TurnKind::EastNorth => b <= a,
        }
    }))
}

/// True iff `w (x) w = w`. Coincides with [`is_upper_zigzag`] on every
/// square path; the two are computed along independent routes.
pub fn is_idempotent_path(w: &Path) -> Result<bool> {
    w.require_square()?;
    Ok(&product(w, w)? == w)
}

/// True iff the path lies below the diagonal (a Dyck path), equivalently
/// iff its map satisfies `f(x) < x` for all `x >= 1`.
pub fn is_nilpotent_path(w: &Path) -> Result<bool> {
    JoinContMap::from_path(w).is_nilpotent()
}

/// An alternating interval system on the chain `{0..n}`:
///
/// ```text
/// 0 = y_0 <= x_0 < y_1 <= x_1 < ... < y_k <= x_k = n
/// ```
///
/// The lower endpoints form the join-closed set `J`, the upper endpoints the
/// meet-closed set `M`; the intervals are pairwise disjoint. These systems
/// are in bijection with the idempotent join-continuous endomaps of the
/// chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Emmentaler {
    intervals: Vec<(usize, usize)>,
    n: usize,
}

impl Emmentaler {
    /// Validate and wrap a sorted list of `(lower, upper)` intervals; the
    /// chain bound is the last upper endpoint.
    pub fn new(intervals: Vec<(usize, usize)>) -> Result<Emmentaler> {
        if intervals.is_empty() {
            return Err(Error::InvalidEmmentaler("no intervals".into()));
        }
        if intervals[0].0 != 0 {
            return Err(Error::InvalidEmmentaler(format!(
                "first interval starts at {}, not 0",
                intervals[0].0
            )));
        }
        for (y, x) in &intervals {
            if y > x {
                return Err(Error::InvalidEmmentaler(format!(
                    "interval {y}-{x} has lower > upper"
                )));
            }
        }
        for pair in intervals.windows(2) {
            if pair[0].1 >= pair[1].0 {
                return Err(Error::InvalidEmmentaler(format!(
                    "intervals {}-{} and {}-{} are not separated",
                    pair[0].0, pair[0].1, pair[1].0, pair[1].1
                )));
            }
        }
        let n = intervals.last().unwrap().1;
        Ok(Emmentaler { intervals, n })
    }

    /// The identity system `{[i,i]}` on `{0..n}`.
    pub fn discrete(n: usize) -> Emmentaler {
        Emmentaler {
            intervals: (0..=n).map(|i| (i, i)).collect(),
            n,
        }
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    /// The top of the chain `{0..n}`.
    pub fn chain_end(&self) -> usize {
        self.n
    }

    /// The lower endpoints `J` (contains 0).
    pub fn join_points(&self) -> Vec<usize> {
        self.intervals.iter().map(|(y, _)| *y).collect()
    }

    /// The upper endpoints `M` (contains n).
    pub fn meet_points(&self) -> Vec<usize> {
        self.intervals.iter().map(|(_, x)| *x).collect()
    }

    /// The closure operator `j(z) = min { x in M : z <= x }`: monotone,
    /// inflating, idempotent.
    pub fn closure(&self, z: usize) -> Result<usize> {
        self.check_point(z)?;
        Ok(*self
            .meet_points()
            .iter()
            .find(|x| z <= **x)
            .expect("n is a meet point"))
    }

    /// The interior operator `o(z) = max { y in J : y <= z }`: monotone,
    /// deflating, idempotent.
    pub fn interior(&self, z: usize) -> Result<usize> {
        self.check_point(z)?;
        Ok(*self
            .join_points()
            .iter()
            .rev()
            .find(|y| **y <= z)
            .expect("0 is a join point"))
    }

    fn check_point(&self, z: usize) -> Result<()> {
        if z > self.n {
            return Err(Error::IndexOutOfRange(format!(
                "{z} not in the chain 0..={}",
                self.n
            )));
        }
        Ok(())
    }

    /// The adjoint idempotent pair of the system: `f = interior . closure`
    /// (join-continuous) and its right adjoint `g = closure . interior`.
    /// `Img(f) = J` and `Img(g) = M`.
    pub fn to_maps(&self) -> (JoinContMap, MonotoneMap) {
        let f: Vec<usize> = (0..=self.n)
            .map(|z| self.interior(self.closure(z).unwrap()).unwrap())
            .collect();
        let g: Vec<usize> = (0..=self.n)
            .map(|z| self.closure(self.interior(z).unwrap()).unwrap())
            .collect();
        (
            JoinContMap::new(f, self.n).expect("interior of closure is join-continuous"),
            MonotoneMap::new(g, self.n).expect("closure of interior is monotone"),
        )
    }

    /// The idempotent path of the system.
    pub fn to_path(&self) -> Path {
        self.to_maps().0.to_path()
    }

    /// The interval system `{ [y, g(y)] : y in Img(f) }` of an idempotent
    /// square map, pairing each image point with its right-adjoint value.
    pub fn from_map(f: &JoinContMap) -> Result<Emmentaler> {
        if !f.is_idempotent()? {
            return Err(Error::NotIdempotent);
        }
        let g = f.right_adjoint();
        let intervals = f.image().into_iter().map(|y| (y, g.eval(y))).collect();
        Emmentaler::new(intervals)
    }

    /// As [`Emmentaler::from_map`], starting from the path.
    pub fn from_path(w: &Path) -> Result<Emmentaler> {
        Emmentaler::from_map(&JoinContMap::from_path(w))
    }

    /// Encode as a word `w_0..w_n` over `{1, m, 0}`: `1` at the lower
    /// endpoints, `m` at upper endpoints that are not lower endpoints, `0`
    /// elsewhere.
    pub fn encode(&self) -> ZigzagWord {
        let mut letters = vec![ZigzagLetter::Zero; self.n + 1];
        for (y, x) in &self.intervals {
            letters[*x] = ZigzagLetter::MBar;
            letters[*y] = ZigzagLetter::One;
        }
        ZigzagWord::new(letters).expect("valid system encodes to a valid word")
    }

    /// Every interval system of the chain `{0..n}`, in lexicographic order
    /// of the interval lists. There are `fibonacci(2n+1)` of them.
    pub fn all(n: usize) -> Vec<Emmentaler> {
        let mut out = Vec::new();
        let mut intervals = Vec::new();
        fn extend(
            lower: usize,
            n: usize,
            intervals: &mut Vec<(usize, usize)>,
            out: &mut Vec<Emmentaler>,
        ) {
            for upper in lower..=n {
                intervals.push((lower, upper));
                if upper == n {
                    out.push(Emmentaler {
                        intervals: intervals.clone(),
                        n,
                    });
                } else {
                    for next_lower in upper + 1..=n {
                        extend(next_lower, n, intervals, out);
                    }
                }
                intervals.pop();
            }
        }
        extend(0, n, &mut intervals, &mut out);
        out
    }

    /// Parse the textual form `y-x;y-x;...`, e.g. `0-1;2-2;3-4`.
    pub fn parse(text: &str) -> Result<Emmentaler> {
        let mut intervals = Vec::new();
        for part in text.split(';') {
            let (y, x) = part
                .trim()
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("expected `y-x`, got `{}`", part.trim())))?;
            let y = y
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad lower endpoint: {e}")))?;
            let x = x
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad upper endpoint: {e}")))?;
            intervals.push((y, x));
        }
        Emmentaler::new(intervals)
    }
}

impl fmt::Display for Emmentaler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|(y, x)| format!("{y}-{x}"))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// Letters of the three-letter encoding of an interval system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZigzagLetter {
    One,
    MBar,
    Zero,
}

impl ZigzagLetter {
    pub fn letter(self) -> char {
        match self {
            ZigzagLetter::One => '1',
            ZigzagLetter::MBar => 'm',
            ZigzagLetter::Zero => '0',
        }
    }
}

/// A word `w_0..w_n` over `{1, m, 0}` with `w_0 = 1`, the last letter in
/// `{1, m}`, and no factor `m 0* m`. These words biject with the interval
/// systems of `{0..n}` and are counted by the odd Fibonacci numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZigzagWord {
    letters: Vec<ZigzagLetter>,
}

impl ZigzagWord {
    pub fn new(letters: Vec<ZigzagLetter>) -> Result<ZigzagWord> {
        if letters.first() != Some(&ZigzagLetter::One) {
            return Err(Error::InvalidWord("must start with 1".into()));
        }
        if letters.last() == Some(&ZigzagLetter::Zero) {
            return Err(Error::InvalidWord("must end with 1 or m".into()));
        }
        let mut open_bar = false;
        for l in &letters {
            match l {
                ZigzagLetter::One => open_bar = false,
                ZigzagLetter::Zero => {}
                ZigzagLetter::MBar => {
                    if open_bar {
                        return Err(Error::InvalidWord("contains a factor m 0* m".into()));
                    }
                    open_bar = true;
                }
            }
        }
        Ok(ZigzagWord { letters })
    }

    pub fn letters(&self) -> &[ZigzagLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Recover the interval system: the `1` positions are the lower
    /// endpoints; each gap holds at most one `m`, which is the matching
    /// upper endpoint (defaulting to the lower endpoint itself).
    pub fn decode(&self) -> Emmentaler {
        let n = self.letters.len() - 1;
        let lowers: Vec<usize> = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == ZigzagLetter::One)
            .map(|(i, _)| i)
            .collect();
        let mut intervals = Vec::with_capacity(lowers.len());
        for (idx, y) in lowers.iter().enumerate() {
            let gap_end = if idx + 1 < lowers.len() {
                lowers[idx + 1]
            } else {
                n + 1
            };
            let x = (*y + 1..gap_end)
                .find(|p| self.letters[*p] == ZigzagLetter::MBar)
                .unwrap_or(*y);
            intervals.push((*y, x));
        }
        Emmentaler::new(intervals).expect("valid word decodes to a valid system")
    }

    /// Every valid word of length `n + 1`, generated directly.
    pub fn all(n: usize) -> Vec<ZigzagWord> {
        let mut out = Vec::new();
        let mut letters = vec![ZigzagLetter::One];
        fn extend(len: usize, open_bar: bool, letters: &mut Vec<ZigzagLetter>, out: &mut Vec<ZigzagWord>) {
            if letters.len() == len {
                if *letters.last().unwrap() != ZigzagLetter::Zero {
                    out.push(ZigzagWord {
                        letters: letters.clone(),
                    });
                }
                return;
            }
            for (l, next_open) in [
                (ZigzagLetter::One, false),
                (ZigzagLetter::MBar, true),
                (ZigzagLetter::Zero, open_bar),
            ] {
                if l == ZigzagLetter::MBar && open_bar {
                    continue;
                }
                letters.push(l);
                extend(len, next_open, letters, out);
                letters.pop();
            }
        }
        extend(n + 1, false, &mut letters, &mut out);
        out
    }

    /// Parse from the characters `1`, `m`, `0`.
    pub fn parse(text: &str) -> Result<ZigzagWord> {
        let mut letters = Vec::with_capacity(text.len());
        for (pos, c) in text.chars().enumerate() {
            letters.push(match c {
                '1' => ZigzagLetter::One,
                'm' | 'M' => ZigzagLetter::MBar,
                '0' => ZigzagLetter::Zero,
                _ => return Err(Error::IllegalCharacter(pos)),
            });
        }
        ZigzagWord::new(letters)
    }
}

impl fmt::Display for ZigzagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.letter())?;
        }
        Ok(())
    }
}

/// Clip a square path to the square one smaller: clamp every lattice point
/// of the path to `[0, n-1]^2`. On upper zigzags ending with a North step,
/// this is the counting bijection onto the upper zigzags of the smaller
/// square, and it preserves "first step is North".
pub fn clip(w: &Path) -> Result<Path> {
    let n = w.require_square()?;
    if n == 0 {
        return Err(Error::IndexOutOfRange(
            "cannot clip the empty path".into(),
        ));
    }
    let f = JoinContMap::from_path(w);
    let values: Vec<usize> = (0..n).map(|i| f.eval(i).min(n - 1)).collect();
    Ok(JoinContMap::new(values, n - 1)
        .expect("clamping preserves monotonicity")
        .to_path())
}

/// For a square path that starts with North and ends with East: drop those
/// two steps (geometrically, clip to the rectangle `[0,n-1] x [1,n]` and
/// shift down) and reflect along the main diagonal by exchanging letters.
/// On upper zigzags this is the counting bijection onto all upper zigzags
/// of the smaller square.
pub fn clip_shift_transpose(w: &Path) -> Result<Path> {
    w.require_square()?;
    if w.steps().first() != Some(&Step::North) || w.steps().last() != Some(&Step::East) {
        return Err(Error::IndexOutOfRange(
            "path must start with a North step and end with an East step".into(),
        ));
    }
    let inner = Path::from_steps(w.steps()[1..w.len() - 1].to_vec());
    Ok(inner.swap_letters())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::paths;
    use crate::quantale::bottom_path;

    fn p(word: &str) -> Path {
        Path::parse(word).unwrap()
    }

    fn emm(intervals: &[(usize, usize)]) -> Emmentaler {
        Emmentaler::new(intervals.to_vec()).unwrap()
    }

    #[test]
    fn upper_zigzag_examples() {
        assert!(is_upper_zigzag(&p("xyyxyxxy")).unwrap());
        assert!(is_upper_zigzag(&p("yxyxyx")).unwrap());
        assert!(is_upper_zigzag(&p("xxxyyy")).unwrap());
        assert!(!is_upper_zigzag(&p("xyxy")).unwrap());
        assert!(is_upper_zigzag(&p("xyx")).is_err());
    }

    #[test]
    fn idempotent_path_examples() {
        assert!(is_idempotent_path(&p("yx")).unwrap());
        assert!(!is_idempotent_path(&p("xyxy")).unwrap());
        assert!(is_idempotent_path(&bottom_path(3, 3)).unwrap());
    }

    #[test]
    fn theorem_equivalence_small() {
        for w in paths(4, 4) {
            assert_eq!(
                is_idempotent_path(&w).unwrap(),
                is_upper_zigzag(&w).unwrap(),
                "word {w}"
            );
        }
    }

    #[test]
    fn closure_and_interior() {
        let e = emm(&[(0, 1), (2, 2), (3, 4)]);
        let j: Vec<usize> = (0..=4).map(|z| e.closure(z).unwrap()).collect();
        let o: Vec<usize> = (0..=4).map(|z| e.interior(z).unwrap()).collect();
        assert_eq!(j, vec![1, 1, 2, 4, 4]);
        assert_eq!(o, vec![0, 0, 2, 3, 3]);
        assert!(e.closure(5).is_err());

        let id = Emmentaler::discrete(3);
        assert!((0..=3).all(|z| id.closure(z).unwrap() == z && id.interior(z).unwrap() == z));

        let full = emm(&[(0, 4)]);
        assert!((0..=4).all(|z| full.closure(z).unwrap() == 4 && full.interior(z).unwrap() == 0));
    }

    #[test]
    fn maps_of_example_system() {
        let e = emm(&[(0, 1), (2, 2), (3, 4)]);
        let (f, g) = e.to_maps();
        assert_eq!(f.values(), &[0, 0, 2, 3, 3]);
        assert_eq!(g.values(), &[1, 1, 2, 4, 4]);
        assert_eq!(e.to_path(), p("xyyxyxxy"));
        assert_eq!(Emmentaler::discrete(3).to_path(), p("yxyxyx"));
        assert_eq!(emm(&[(0, 3)]).to_path(), p("xxxyyy"));
    }

    #[test]
    fn system_from_map() {
        let f = JoinContMap::new(vec![0, 0, 2, 3, 3], 4).unwrap();
        assert_eq!(
            Emmentaler::from_map(&f).unwrap(),
            emm(&[(0, 1), (2, 2), (3, 4)])
        );
        assert_eq!(
            Emmentaler::from_map(&JoinContMap::identity(3)).unwrap(),
            Emmentaler::discrete(3)
        );
        assert_eq!(
            Emmentaler::from_map(&JoinContMap::new(vec![0, 0, 1], 2).unwrap()),
            Err(Error::NotIdempotent)
        );
    }

    #[test]
    fn round_trips() {
        for n in 0..=6 {
            for e in Emmentaler::all(n) {
                let (f, g) = e.to_maps();
                assert!(f.is_idempotent().unwrap());
                assert_eq!(Emmentaler::from_map(&f).unwrap(), e);
                assert_eq!(f.right_adjoint().values(), g.values());
            }
        }
    }

    #[test]
    fn invalid_systems_rejected() {
        assert!(Emmentaler::new(vec![]).is_err());
        assert!(Emmentaler::new(vec![(1, 2)]).is_err());
        assert!(Emmentaler::new(vec![(0, 2), (2, 3)]).is_err());
        assert!(Emmentaler::new(vec![(0, 2), (1, 3)]).is_err());
        assert!(Emmentaler::new(vec![(0, 3), (2, 2)]).is_err());
    }

    #[test]
    fn encode_examples() {
        assert_eq!(emm(&[(0, 1), (2, 2), (3, 4)]).encode().to_string(), "1m11m");
        assert_eq!(Emmentaler::discrete(3).encode().to_string(), "1111");
        assert_eq!(emm(&[(0, 4)]).encode().to_string(), "1000m");
    }

    #[test]
    fn decode_is_inverse() {
        for n in 0..=8 {
            for e in Emmentaler::all(n) {
                assert_eq!(e.encode().decode(), e);
            }
            for z in ZigzagWord::all(n) {
                assert_eq!(z.decode().encode(), z);
            }
        }
    }

    #[test]
    fn invalid_words_rejected() {
        assert!(ZigzagWord::parse("0").is_err());
        assert!(ZigzagWord::parse("m1").is_err());
        assert!(ZigzagWord::parse("10").is_err());
        assert!(ZigzagWord::parse("1mm").is_err());
        assert!(ZigzagWord::parse("1m0m1").is_err());
        assert!(ZigzagWord::parse("1x").is_err());
        assert!(ZigzagWord::parse("10m").is_ok());
        assert!(ZigzagWord::parse("1m1").is_ok());
    }

    #[test]
    fn nilpotent_examples() {
        assert!(is_nilpotent_path(&bottom_path(3, 3)).unwrap());
        assert!(is_nilpotent_path(&p("xyxy")).unwrap());
        assert!(!is_nilpotent_path(&p("yxyx")).unwrap());
        assert!(is_nilpotent_path(&p("")).unwrap());
    }

    #[test]
    fn clip_examples() {
        assert_eq!(clip(&p("xxyy")).unwrap(), p("xy"));
        assert_eq!(clip(&p("yxxy")).unwrap(), p("yx"));
        assert_eq!(clip(&p("yxyxxy")).unwrap(), p("yxyx"));
        assert!(clip(&p("")).is_err());
        assert!(clip(&p("xxy")).is_err());
    }

    #[test]
    fn clip_shift_transpose_examples() {
        assert_eq!(clip_shift_transpose(&p("yyxx")).unwrap(), p("xy"));
        assert_eq!(clip_shift_transpose(&p("yxyx")).unwrap(), p("yx"));
        assert!(clip_shift_transpose(&p("xyxy")).is_err());
        assert!(clip_shift_transpose(&p("yxxy")).is_err());
    }

    #[test]
    fn turn_structure_of_idempotents() {
        // North-East turns of an idempotent sit at (x_l, y_(l+1)); East-North
        // turns at (x_l, y_l), skipping the degenerate corner cases.
        for n in 0..=6 {
            for e in Emmentaler::all(n) {
                let w = e.to_path();
                let iv = e.intervals();
                let expected_ne: Vec<(usize, usize)> = iv
                    .windows(2)
                    .map(|pair| (pair[0].1, pair[1].0))
                    .collect();
                let mut expected_en: Vec<(usize, usize)> = Vec::new();
                for (idx, (y, x)) in iv.iter().enumerate() {
                    if idx == 0 && *x == 0 {
                        continue; // path starts at the corner, no turn at (0,0)
                    }
                    if idx == iv.len() - 1 && *y == n {
                        continue; // path ends at the corner, no turn at (n,n)
                    }
                    expected_en.push((*x, *y));
                }
                let actual_ne: Vec<(usize, usize)> = w
                    .turns()
                    .iter()
                    .filter(|t| t.kind == TurnKind::NorthEast)
                    .map(|t| t.point)
                    .collect();
                let actual_en: Vec<(usize, usize)> = w
                    .turns()
                    .iter()
                    .filter(|t| t.kind == TurnKind::EastNorth)
                    .map(|t| t.point)
                    .collect();
                assert_eq!(actual_ne, expected_ne, "system {e}");
                assert_eq!(actual_en, expected_en, "system {e}");
            }
        }
    }

    #[test]
    fn parse_and_display_system() {
        let e = Emmentaler::parse("0-1;2-2;3-4").unwrap();
        assert_eq!(e, emm(&[(0, 1), (2, 2), (3, 4)]));
        assert_eq!(e.to_string(), "0-1;2-2;3-4");
        assert!(Emmentaler::parse("1-2").is_err());
        assert!(Emmentaler::parse("0-").is_err());
        assert!(Emmentaler::parse("garbage").is_err());
    }
}

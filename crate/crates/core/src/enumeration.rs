//! Generators and exact counters for every path family the crate counts.
//!
//! Each counting operation reports a closed-formula value next to an
//! optional exhaustive-enumeration value, so the two can be checked against
//! each other. All arithmetic is exact big-integer arithmetic; no floating
//! point enters any count.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::idempotent::{clip, clip_shift_transpose, Emmentaler, ZigzagWord};
use crate::jsl::JoinContMap;
use crate::path::{corner_path, Path, Step};
use crate::quantale;

/// Default cap for oracles that enumerate idempotents directly.
pub const DEFAULT_ENUM_ORACLE_CAP: usize = 10;
/// Default cap for oracles that sweep products of path pairs.
pub const DEFAULT_PRODUCT_ORACLE_CAP: usize = 6;

/// Iterator over all of `P(width, height)` in lexicographic word order
/// (`x` before `y`), starting at `x^n y^m`.
pub struct Paths {
    next: Option<Vec<Step>>,
}

impl Iterator for Paths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        let current = self.next.take()?;
        self.next = next_word(&current);
        Some(Path::from_steps(current))
    }
}

// Standard next-permutation on the step sequence, East < North.
fn next_word(steps: &[Step]) -> Option<Vec<Step>> {
    let mut v = steps.to_vec();
    let pivot = (0..v.len().saturating_sub(1)).rev().find(|i| v[*i] < v[*i + 1])?;
    let swap = (pivot + 1..v.len()).rev().find(|j| v[*j] > v[pivot])?;
    v.swap(pivot, swap);
    v[pivot + 1..].reverse();
    Some(v)
}

/// Every element of `P(width, height)` exactly once; `C(width+height,
/// width)` paths in total.
pub fn paths(width: usize, height: usize) -> Paths {
    Paths {
        next: Some(corner_path(width, height).steps().to_vec()),
    }
}

/// The slice of `P(width, height)` whose words extend the given prefix.
/// The prefixes of a fixed length partition the whole space, which allows
/// splitting an exhaustive sweep into independent chunks.
pub fn paths_with_prefix(
    prefix: &Path,
    width: usize,
    height: usize,
) -> Result<impl Iterator<Item = Path>> {
    if prefix.width() > width || prefix.height() > height {
        return Err(Error::dims(
            format!("prefix ({},{})", prefix.width(), prefix.height()),
            format!("at most ({width},{height})"),
        ));
    }
    let head = prefix.steps().to_vec();
    Ok(
        paths(width - prefix.width(), height - prefix.height()).map(move |suffix| {
            let mut steps = head.clone();
            steps.extend_from_slice(suffix.steps());
            Path::from_steps(steps)
        }),
    )
}

/// Every idempotent path of `P(n,n)` exactly once, generated directly from
/// the alternating interval systems rather than by filtering.
pub fn idempotent_paths(n: usize) -> impl Iterator<Item = Path> {
    Emmentaler::all(n).into_iter().map(|e| e.to_path())
}

/// Exact Fibonacci numbers: `f(0) = 0`, `f(1) = 1`, `f(k+2) = f(k+1) + f(k)`.
pub fn fibonacci(k: u64) -> BigUint {
    let mut a = BigUint::zero();
    let mut b = BigUint::one();
    for _ in 0..k {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Exact binomial coefficient, 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 0..k {
        res = res * (n - i) / (i + 1);
    }
    res
}

/// Exact Catalan numbers `C(2k,k) / (k+1)`.
pub fn catalan(k: u64) -> BigUint {
    binomial(2 * k, k) / (k + 1)
}

/// What a [`CountReport`] counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountFamily {
    Idempotents,
    MonotoneIdempotents,
    IdempotentsByTop,
    Nilpotents,
    Descents,
    ImageSize,
    MaxImage,
    Preimages,
    IdentityRect,
    IdentitySquare,
    RecurrencePhi,
    RecurrencePsi,
    BijectionClip,
    BijectionReflect,
    BijectionClipShiftTranspose,
    ZigzagWords,
}

impl CountFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            CountFamily::Idempotents => "idempotents",
            CountFamily::MonotoneIdempotents => "monotone-idempotents",
            CountFamily::IdempotentsByTop => "idempotents-by-top",
            CountFamily::Nilpotents => "nilpotents",
            CountFamily::Descents => "descents",
            CountFamily::ImageSize => "image-size",
            CountFamily::MaxImage => "max-image",
            CountFamily::Preimages => "preimages",
            CountFamily::IdentityRect => "identity-rect",
            CountFamily::IdentitySquare => "identity-square",
            CountFamily::RecurrencePhi => "recurrence-phi",
            CountFamily::RecurrencePsi => "recurrence-psi",
            CountFamily::BijectionClip => "bijection-clip",
            CountFamily::BijectionReflect => "bijection-reflect",
            CountFamily::BijectionClipShiftTranspose => "bijection-clip-shift-transpose",
            CountFamily::ZigzagWords => "zigzag-words",
        }
    }
}

/// A formula value next to an optional independently enumerated value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub family: CountFamily,
    pub params: Vec<u64>,
    pub formula: BigUint,
    pub oracle: Option<BigUint>,
}

impl CountReport {
    pub fn agree(&self) -> bool {
        match &self.oracle {
            None => true,
            Some(o) => *o == self.formula,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "family": self.family.as_str(),
            "params": self.params,
            "formula": self.formula.to_string(),
            "oracle": self.oracle.as_ref().map(|o| o.to_string()),
            "agree": self.agree(),
        })
    }
}

impl fmt::Display for CountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(
            f,
            "{}({}): formula={} oracle={} agree={}",
            self.family.as_str(),
            params.join(","),
            self.formula,
            self.oracle
                .as_ref()
                .map_or_else(|| "skipped".to_string(), |o| o.to_string()),
            if self.agree() { "yes" } else { "NO" }
        )
    }
}

fn big(v: usize) -> BigUint {
    BigUint::from(v)
}

/// Idempotents of `P(n,n)`: the odd Fibonacci number `f(2n+1)`, checked by
/// direct interval-system enumeration when `n <= oracle_cap`.
pub fn count_idempotents(n: usize, oracle_cap: usize) -> CountReport {
    CountReport {
        family: CountFamily::Idempotents,
        params: vec![n as u64],
        formula: fibonacci(2 * n as u64 + 1),
        oracle: (n <= oracle_cap).then(|| big(idempotent_paths(n).count())),
    }
}

/// Idempotent paths starting with a North step, i.e. idempotents of the
/// monoid of monotone endomaps of `{1..n}`: the even Fibonacci `f(2n)`.
pub fn count_monotone_idempotents(n: usize, oracle_cap: usize) -> CountReport {
    CountReport {
        family: CountFamily::MonotoneIdempotents,
        params: vec![n as u64],
        formula: fibonacci(2 * n as u64),
        oracle: (n <= oracle_cap).then(|| {
            big(idempotent_paths(n)
                .filter(|w| w.steps().first() == Some(&Step::North))
                .count())
        }),
    }
}

/// Idempotents with `f(n) = k`: `f(2k)` for `k >= 1`. For `k = 0` the only
/// such idempotent is the bottom, so the count is 1 (the Fibonacci formula
/// is read as a statement about `k >= 1`).
pub fn count_idempotents_by_top(n: usize, k: usize, oracle_cap: usize) -> Result<CountReport> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!("top value {k} exceeds {n}")));
    }
    Ok(CountReport {
        family: CountFamily::IdempotentsByTop,
        params: vec![n as u64, k as u64],
        formula: if k == 0 {
            BigUint::one()
        } else {
            fibonacci(2 * k as u64)
        },
        oracle: (n <= oracle_cap).then(|| {
            big(idempotent_paths(n)
                .filter(|w| JoinContMap::from_path(w).eval(n) == k)
                .count())
        }),
    })
}

/// Nilpotent paths of `P(n,n)` (Dyck paths): the Catalan number.
pub fn count_nilpotents(n: usize, oracle_cap: usize) -> CountReport {
    CountReport {
        family: CountFamily::Nilpotents,
        params: vec![n as u64],
        formula: catalan(n as u64),
        oracle: (n <= oracle_cap).then(|| {
            big(paths(n, n)
                .filter(|w| JoinContMap::from_path(w).is_nilpotent().unwrap())
                .count())
        }),
    }
}

/// Words of `P(n,k)` with exactly `i` descents: `C(n,i) * C(k,i)`.
pub fn count_by_descents(n: usize, k: usize, i: usize, oracle_cap: usize) -> CountReport {
    CountReport {
        family: CountFamily::Descents,
        params: vec![n as u64, k as u64, i as u64],
        formula: binomial(n as u64, i as u64) * binomial(k as u64, i as u64),
        oracle: (n.max(k) <= oracle_cap)
            .then(|| big(paths(n, k).filter(|w| w.descent_count() == i).count())),
    }
}

/// Square maps whose image has `k + 1` elements: `C(n,k)^2`.
pub fn count_by_image_size(n: usize, k: usize, oracle_cap: usize) -> Result<CountReport> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!(
            "image size {} exceeds chain size {}",
            k + 1,
            n + 1
        )));
    }
    Ok(CountReport {
        family: CountFamily::ImageSize,
        params: vec![n as u64, k as u64],
        formula: {
            let b = binomial(n as u64, k as u64);
            &b * &b
        },
        oracle: (n <= oracle_cap).then(|| {
            big(paths(n, n)
                .filter(|w| JoinContMap::from_path(w).image().len() == k + 1)
                .count())
        }),
    })
}

/// Square maps with `max(Img(f)) = k`, i.e. `f(n) = k`: `C(n+k-1, k)`.
pub fn count_by_max_image(n: usize, k: usize, oracle_cap: usize) -> Result<CountReport> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!("max image {k} exceeds {n}")));
    }
    Ok(CountReport {
        family: CountFamily::MaxImage,
        params: vec![n as u64, k as u64],
        formula: if k == 0 {
            BigUint::one()
        } else {
            binomial((n + k - 1) as u64, k as u64)
        },
        oracle: (n <= oracle_cap).then(|| {
            big(paths(n, n)
                .filter(|w| JoinContMap::from_path(w).eval(n) == k)
                .count())
        }),
    })
}

/// Pairs multiplying to `w` through the middle dimension: the bar-insertion
/// formula, brute-forced over all pairs when the dimensions are small.
pub fn count_preimages(w: &Path, middle: usize, oracle_cap: usize) -> CountReport {
    let run_oracle = w.width() <= oracle_cap && w.height() <= oracle_cap && middle <= oracle_cap;
    CountReport {
        family: CountFamily::Preimages,
        params: vec![w.width() as u64, w.height() as u64, middle as u64],
        formula: quantale::preimage_count(w, middle),
        oracle: run_oracle.then(|| {
            let mut count = 0usize;
            for a in paths(w.width(), middle) {
                for b in paths(middle, w.height()) {
                    if &quantale::product(&a, &b).unwrap() == w {
                        count += 1;
                    }
                }
            }
            big(count)
        }),
    }
}

/// The rectangular summation identity obtained by counting preimages of the
/// product two ways: `C(n+m,n) C(m+k,k) = sum_i C(n+m+k-i, m-i) C(n,i) C(k,i)`.
pub fn verify_identity_rect(n: usize, m: usize, k: usize) -> CountReport {
    let lhs = binomial((n + m) as u64, n as u64) * binomial((m + k) as u64, k as u64);
    let mut rhs = BigUint::zero();
    for i in 0..=m {
        rhs += binomial((n + m + k - i) as u64, (m - i) as u64)
            * binomial(n as u64, i as u64)
            * binomial(k as u64, i as u64);
    }
    CountReport {
        family: CountFamily::IdentityRect,
        params: vec![n as u64, m as u64, k as u64],
        formula: lhs,
        oracle: Some(rhs),
    }
}

/// The square instance: `C(2n,n)^2 = sum_i C(3n-i, n-i) C(n,i)^2`.
pub fn verify_identity_square(n: usize) -> CountReport {
    let b = binomial(2 * n as u64, n as u64);
    let lhs = &b * &b;
    let mut rhs = BigUint::zero();
    for i in 0..=n {
        let c = binomial(n as u64, i as u64);
        rhs += binomial((3 * n - i) as u64, (n - i) as u64) * &c * &c;
    }
    CountReport {
        family: CountFamily::IdentitySquare,
        params: vec![n as u64],
        formula: lhs,
        oracle: Some(rhs),
    }
}

/// Number of valid three-letter words of length `n + 1`; equals the
/// idempotent count `f(2n+1)`.
pub fn count_zigzag_words(n: usize) -> CountReport {
    CountReport {
        family: CountFamily::ZigzagWords,
        params: vec![n as u64],
        formula: fibonacci(2 * n as u64 + 1),
        oracle: Some(big(ZigzagWord::all(n).len())),
    }
}

// Checks that a map over an enumerated domain is a bijection onto an
// enumerated target. The report carries the target size as formula; the
// oracle equals it exactly when the map is injective and its image is the
// whole target, and is shifted by the defect count otherwise.
fn bijection_report(
    family: CountFamily,
    side: usize,
    domain: Vec<Path>,
    map: impl Fn(&Path) -> Path,
    target: Vec<Path>,
) -> CountReport {
    use std::collections::BTreeSet;
    let mut image = BTreeSet::new();
    let mut duplicates = 0usize;
    for w in &domain {
        if !image.insert(map(w)) {
            duplicates += 1;
        }
    }
    let target: BTreeSet<Path> = target.into_iter().collect();
    let defects = duplicates + image.symmetric_difference(&target).count();
    CountReport {
        family,
        params: vec![side as u64],
        formula: big(target.len()),
        oracle: Some(big(target.len() + defects)),
    }
}

/// The two Fibonacci recurrences on enumerated idempotent counts, plus the
/// three path-level bijections that prove them: clipping paths that end
/// North, reflecting paths that end East along the anti-diagonal, and
/// clip-shift-transpose for paths that end East and begin North.
pub fn verify_recurrences(n_max: usize) -> Vec<CountReport> {
    let mut psi = Vec::with_capacity(n_max + 1);
    let mut phi = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let all: Vec<Path> = idempotent_paths(n).collect();
        phi.push(
            all.iter()
                .filter(|w| w.steps().first() == Some(&Step::North))
                .count(),
        );
        psi.push(all.len());
    }

    let mut reports = Vec::new();
    for target in 1..=n_max {
        reports.push(CountReport {
            family: CountFamily::RecurrencePhi,
            params: vec![target as u64],
            formula: big(psi[target - 1] + phi[target - 1]),
            oracle: Some(big(phi[target])),
        });
        reports.push(CountReport {
            family: CountFamily::RecurrencePsi,
            params: vec![target as u64],
            formula: big(phi[target] + psi[target - 1]),
            oracle: Some(big(psi[target])),
        });
    }

    for side in 1..=n_max {
        let all: Vec<Path> = idempotent_paths(side).collect();
        let smaller: Vec<Path> = idempotent_paths(side - 1).collect();
        let ends_north: Vec<Path> = all
            .iter()
            .filter(|w| w.steps().last() == Some(&Step::North))
            .cloned()
            .collect();
        let ends_east: Vec<Path> = all
            .iter()
            .filter(|w| w.steps().last() == Some(&Step::East))
            .cloned()
            .collect();
        let starts_north: Vec<Path> = all
            .iter()
            .filter(|w| w.steps().first() == Some(&Step::North))
            .cloned()
            .collect();
        let ends_east_starts_north: Vec<Path> = ends_east
            .iter()
            .filter(|w| w.steps().first() == Some(&Step::North))
            .cloned()
            .collect();

        reports.push(bijection_report(
            CountFamily::BijectionClip,
            side,
            ends_north,
            |w| clip(w).unwrap(),
            smaller.clone(),
        ));
        reports.push(bijection_report(
            CountFamily::BijectionReflect,
            side,
            ends_east,
            |w| w.reflect_antidiagonal().unwrap(),
            starts_north,
        ));
        reports.push(bijection_report(
            CountFamily::BijectionClipShiftTranspose,
            side,
            ends_east_starts_north,
            |w| clip_shift_transpose(w).unwrap(),
            smaller,
        ));
    }
    reports
}

/// Closed form for the idempotent count, evaluated in floating point:
///
/// ```text
/// psi(n) = ((3+sqrt 5)^n (1+sqrt 5) - (3-sqrt 5)^n (1-sqrt 5)) / (2^(n+1) sqrt 5)
/// ```
///
/// Rounds to `f(2n+1)` exactly for `n <= 30` (double-precision bound).
pub fn psi_closed_form(n: u32) -> f64 {
    let s5 = 5f64.sqrt();
    ((3.0 + s5).powi(n as i32) * (1.0 + s5) - (3.0 - s5).powi(n as i32) * (1.0 - s5))
        / (2f64.powi(n as i32 + 1) * s5)
}

//! The exhaustive oracle suite: every structural invariant of the crate,
//! checked by brute force on small instances behind a single entry point.
//!
//! Each check sweeps a finite range and reports pass/fail with a one-line
//! summary. [`run_all`] is what `pq verify` executes; the acceptance tests
//! drive the same checks at their full stated ranges. Brute-force oracles
//! (residual maxima, preimage counting, idempotent filtering) live here and
//! stay independent of the closed-form code paths they validate.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde_json::json;

use crate::enumeration::{
    binomial, count_by_descents, count_by_image_size, count_by_max_image,
    count_idempotents, count_idempotents_by_top, count_monotone_idempotents, count_nilpotents,
    count_zigzag_words, fibonacci, idempotent_paths, paths, psi_closed_form, verify_identity_rect,
    verify_identity_square, verify_recurrences,
};
use crate::idempotent::{is_idempotent_path, is_upper_zigzag, Emmentaler, ZigzagWord};
use crate::jsl::JoinContMap;
use crate::path::{atomic_path, Path, Step};
use crate::quantale::{
    bottom_path, factorize, identity_path, join, leq, meet, oplus, preimage_count, product,
    product_traced, residual_left, residual_right, top_path,
};

/// Caps for the two kinds of exhaustive sweeps: `sweep_cap` bounds the loops
/// that enumerate a whole path space `P(n,n)`, `product_cap` bounds the
/// loops over pairs or triples of composable dimensions.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub sweep_cap: usize,
    pub product_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            sweep_cap: 5,
            product_cap: 3,
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub detail: String,
    pub pass: bool,
}

impl Check {
    fn new(name: &'static str, detail: String, pass: bool) -> Check {
        Check { name, detail, pass }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "name": self.name, "detail": self.detail, "pass": self.pass })
    }
}

/// Run the whole suite with the configured caps. Passing iff every check
/// passes.
pub fn run_all(cfg: &VerifyConfig) -> Vec<Check> {
    let s = cfg.sweep_cap;
    let p = cfg.product_cap;
    vec![
        check_word_round_trip((2 * s).min(10)),
        check_blocks(s.min(5)),
        check_turns(s.min(5)),
        check_involutions(s.min(5)),
        check_map_bijection(s.min(5)),
        check_functoriality(p.min(3), 1000, 8),
        check_adjunction(s.min(4)),
        check_dominance(s.min(4)),
        check_aperiodicity(s.min(4)),
        check_monoid_laws(p.min(2), s.min(5)),
        check_distributivity(p.min(3)),
        check_atomic_rule(s.min(4)),
        check_oplus_duality(p.min(3)),
        check_residuals(p.min(3)),
        check_preimage_formula(p.min(3), 4),
        check_preimage_sum(s.min(5)),
        check_factorization(s.min(4)),
        check_theorem_equivalence(s.min(6)),
        check_idempotent_counts(10, s.min(6)),
        check_by_top_counts(8),
        check_refined_counts(s.min(5)),
        check_nilpotents(8, s.min(6)),
        check_identities(6),
        check_recurrences(s.min(6)),
        check_emmentaler_bijection(8),
        check_zigzag(8, 10),
        check_closed_form(25),
    ]
}

// ---------------------------------------------------------------------------
// brute-force oracles

/// Largest path `r` with `r (x) f <= h`, found by sweeping every candidate
/// and folding the dominance join. Independent of the residual formulas.
pub fn residual_right_oracle(h: &Path, f: &Path) -> Path {
    let mut best = bottom_path(h.width(), f.width());
    for r in paths(h.width(), f.width()) {
        if leq(&product(&r, f).unwrap(), h).unwrap() {
            best = join(&best, &r).unwrap();
        }
    }
    best
}

/// Largest path `r` with `f (x) r <= h`, by the same sweep.
pub fn residual_left_oracle(f: &Path, h: &Path) -> Path {
    let mut best = bottom_path(f.height(), h.height());
    for r in paths(f.height(), h.height()) {
        if leq(&product(f, &r).unwrap(), h).unwrap() {
            best = join(&best, &r).unwrap();
        }
    }
    best
}

/// Number of pairs multiplying to `w`, counted by sweeping all pairs.
pub fn preimage_count_oracle(w: &Path, middle: usize) -> usize {
    let mut count = 0;
    for a in paths(w.width(), middle) {
        for b in paths(middle, w.height()) {
            if &product(&a, &b).unwrap() == w {
                count += 1;
            }
        }
    }
    count
}

/// The idempotents of `P(n,n)` found by filtering every self-product,
/// independent of the interval-system generator.
pub fn idempotents_by_filter(n: usize) -> Vec<Path> {
    paths(n, n)
        .filter(|w| &product(w, w).unwrap() == w)
        .collect()
}

fn random_path(rng: &mut StdRng, width: usize, height: usize) -> Path {
    let mut steps = Vec::with_capacity(width + height);
    steps.extend(std::iter::repeat_n(Step::East, width));
    steps.extend(std::iter::repeat_n(Step::North, height));
    steps.shuffle(rng);
    Path::from_steps(steps)
}

// ---------------------------------------------------------------------------
// path module checks

pub fn check_word_round_trip(total_cap: usize) -> Check {
    let mut words = 0usize;
    let mut pass = true;
    for n in 0..=total_cap {
        for m in 0..=(total_cap - n) {
            for w in paths(n, m) {
                words += 1;
                pass &= Path::parse(&w.word()).as_ref() == Ok(&w);
            }
        }
    }
    Check::new(
        "word-round-trip",
        format!("parse(word(w)) = w for {words} words with n+m <= {total_cap}"),
        pass,
    )
}

pub fn check_blocks(cap: usize) -> Check {
    let mut pass = true;
    let mut words = 0usize;
    for n in 0..=cap {
        for m in 0..=cap {
            for w in paths(n, m) {
                words += 1;
                let b = w.blocks();
                pass &= b.x_blocks.len() == m + 1
                    && b.y_blocks.len() == n + 1
                    && b.x_blocks.iter().sum::<usize>() == n
                    && b.y_blocks.iter().sum::<usize>() == m
                    && b.assemble() == w;
            }
        }
    }
    Check::new(
        "block-profile",
        format!("shape and reconstruction for {words} words with n,m <= {cap}"),
        pass,
    )
}

pub fn check_turns(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for m in 0..=cap {
            for w in paths(n, m) {
                let turns = w.turns();
                pass &= turns.windows(2).all(|t| t[0].kind != t[1].kind);
                pass &= w.descent_count() <= n.min(m);
                pass &= w.descent_count()
                    == turns
                        .iter()
                        .filter(|t| t.kind == crate::path::TurnKind::NorthEast)
                        .count();
            }
        }
    }
    Check::new(
        "turn-alternation",
        format!("alternation and descent bound, n,m <= {cap}"),
        pass,
    )
}

pub fn check_involutions(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for m in 0..=cap {
            for w in paths(n, m) {
                pass &= w.swap_letters().swap_letters() == w;
                pass &= w.reversed().reversed() == w;
                if n == m {
                    let r = w.reflect_antidiagonal().unwrap();
                    pass &= r.reflect_antidiagonal().unwrap() == w;
                    pass &= is_upper_zigzag(&r).unwrap() == is_upper_zigzag(&w).unwrap();
                }
            }
        }
    }
    Check::new(
        "involutions",
        format!("star, reverse, anti-diagonal reflection, n,m <= {cap}"),
        pass,
    )
}

// ---------------------------------------------------------------------------
// map module checks

pub fn check_map_bijection(cap: usize) -> Check {
    let mut pass = true;
    let mut count = 0usize;
    for n in 0..=cap {
        for m in 0..=cap {
            for w in paths(n, m) {
                count += 1;
                pass &= JoinContMap::from_path(&w).to_path() == w;
            }
            // the other direction: every join-continuous map arises
            let maps: std::collections::BTreeSet<JoinContMap> =
                paths(n, m).map(|w| JoinContMap::from_path(&w)).collect();
            pass &= maps.len() == paths(n, m).count();
        }
    }
    Check::new(
        "map-bijection",
        format!("both round trips over {count} words, n,m <= {cap}"),
        pass,
    )
}

pub fn check_functoriality(cap: usize, random_pairs: usize, random_dim: usize) -> Check {
    let mut pass = true;
    let mut pairs = 0usize;
    for n in 0..=cap {
        for m in 0..=cap {
            for k in 0..=cap {
                for w in paths(n, m) {
                    for u in paths(m, k) {
                        pairs += 1;
                        let lhs = JoinContMap::from_path(&product(&w, &u).unwrap());
                        let rhs = JoinContMap::from_path(&u)
                            .compose(&JoinContMap::from_path(&w))
                            .unwrap();
                        pass &= lhs == rhs;
                    }
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x1d0e);
    for _ in 0..random_pairs {
        let n = rng.gen_range(0..=random_dim);
        let m = rng.gen_range(0..=random_dim);
        let k = rng.gen_range(0..=random_dim);
        let w = random_path(&mut rng, n, m);
        let u = random_path(&mut rng, m, k);
        let lhs = JoinContMap::from_path(&product(&w, &u).unwrap());
        let rhs = JoinContMap::from_path(&u)
            .compose(&JoinContMap::from_path(&w))
            .unwrap();
        pass &= lhs == rhs;
    }
    Check::new(
        "functoriality",
        format!(
            "product matches composition: {pairs} exhaustive pairs (dims <= {cap}) + {random_pairs} random (dims <= {random_dim})"
        ),
        pass,
    )
}

pub fn check_adjunction(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for w in paths(n, n) {
            let f = JoinContMap::from_path(&w);
            let g = f.right_adjoint();
            pass &= g.eval(n) == n;
            for x in 0..=n {
                for y in 0..=n {
                    pass &= (f.eval(x) <= y) == (x <= g.eval(y));
                }
                pass &= f.eval(g.eval(f.eval(x))) == f.eval(x);
                pass &= g.eval(f.eval(g.eval(x))) == g.eval(x);
            }
            let mut img = g.image();
            img.remove(&n);
            pass &= f.increases().unwrap() == img;
        }
    }
    Check::new(
        "adjunction",
        format!("Galois pair laws and increase sets, n <= {cap}"),
        pass,
    )
}

pub fn check_dominance(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for m in 0..=cap {
            let all: Vec<Path> = paths(n, m).collect();
            for w in &all {
                for u in &all {
                    let heights = |v: &Path| -> Vec<usize> {
                        let mut out = Vec::new();
                        let mut ys = 0usize;
                        for s in v.steps() {
                            match s {
                                Step::North => ys += 1,
                                Step::East => out.push(ys),
                            }
                        }
                        out
                    };
                    let geometric = heights(w)
                        .iter()
                        .zip(heights(u).iter())
                        .all(|(a, b)| a <= b);
                    pass &= leq(w, u).unwrap() == geometric;
                }
                pass &= leq(&bottom_path(n, m), w).unwrap();
                pass &= leq(w, &top_path(n, m)).unwrap();
                pass &= join(w, &meet(w, &top_path(n, m)).unwrap()).unwrap() == *w;
            }
        }
    }
    Check::new(
        "dominance-order",
        format!("pointwise order = geometric dominance, n,m <= {cap}"),
        pass,
    )
}

pub fn check_aperiodicity(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for w in paths(n, n) {
            let idx = JoinContMap::from_path(&w).aperiodicity_index().unwrap();
            pass &= idx <= n.max(1);
        }
    }
    Check::new(
        "aperiodicity",
        format!("f^(n+1) = f^n within n steps, n <= {cap}"),
        pass,
    )
}

// ---------------------------------------------------------------------------
// quantale checks

pub fn check_monoid_laws(assoc_cap: usize, unit_cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=assoc_cap {
        for m in 0..=assoc_cap {
            for k in 0..=assoc_cap {
                for l in 0..=assoc_cap {
                    for w in paths(n, m) {
                        for u in paths(m, k) {
                            for v in paths(k, l) {
                                let a = product(&product(&w, &u).unwrap(), &v).unwrap();
                                let b = product(&w, &product(&u, &v).unwrap()).unwrap();
                                pass &= a == b;
                            }
                        }
                    }
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0xa550c);
    for _ in 0..200 {
        let dims: Vec<usize> = (0..4).map(|_| rng.gen_range(0..=5)).collect();
        let w = random_path(&mut rng, dims[0], dims[1]);
        let u = random_path(&mut rng, dims[1], dims[2]);
        let v = random_path(&mut rng, dims[2], dims[3]);
        pass &= product(&product(&w, &u).unwrap(), &v).unwrap()
            == product(&w, &product(&u, &v).unwrap()).unwrap();
    }
    for n in 0..=unit_cap {
        for m in 0..=unit_cap {
            for w in paths(n, m) {
                pass &= product(&identity_path(n), &w).unwrap() == w;
                pass &= product(&w, &identity_path(m)).unwrap() == w;
                // the dual sum is unital for the star of the product unit
                pass &= oplus(&identity_path(n).swap_letters(), &w).unwrap() == w;
                pass &= oplus(&w, &identity_path(m).swap_letters()).unwrap() == w;
                let t = product_traced(&w, &identity_path(m)).unwrap();
                pass &= t.left_factor() == w && t.right_factor() == identity_path(m);
            }
        }
    }
    Check::new(
        "monoid-laws",
        format!("associativity (dims <= {assoc_cap} + random) and units (n,m <= {unit_cap})"),
        pass,
    )
}

pub fn check_distributivity(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for m in 0..=cap {
            for k in 0..=cap {
                let lefts: Vec<Path> = paths(n, m).collect();
                let rights: Vec<Path> = paths(m, k).collect();
                for w1 in &lefts {
                    for w2 in &lefts {
                        for u in &rights {
                            let lhs = product(&join(w1, w2).unwrap(), u).unwrap();
                            let rhs = join(
                                &product(w1, u).unwrap(),
                                &product(w2, u).unwrap(),
                            )
                            .unwrap();
                            pass &= lhs == rhs;
                        }
                    }
                }
                for w in &lefts {
                    for u1 in &rights {
                        for u2 in &rights {
                            let lhs = product(w, &join(u1, u2).unwrap()).unwrap();
                            let rhs = join(
                                &product(w, u1).unwrap(),
                                &product(w, u2).unwrap(),
                            )
                            .unwrap();
                            pass &= lhs == rhs;
                        }
                    }
                }
            }
        }
    }
    Check::new(
        "distributivity",
        format!("product distributes over binary joins on both sides, dims <= {cap}"),
        pass,
    )
}

pub fn check_atomic_rule(cap: usize) -> Check {
    let mut pass = true;
    for n in 1..=cap {
        for a in 0..n {
            for b in 1..=n {
                for c in 0..n {
                    for d in 1..=n {
                        let lhs = product(
                            &atomic_path(a, b, n).unwrap(),
                            &atomic_path(c, d, n).unwrap(),
                        )
                        .unwrap();
                        let rhs = if c < b {
                            atomic_path(a, d, n).unwrap()
                        } else {
                            bottom_path(n, n)
                        };
                        pass &= lhs == rhs;
                    }
                }
            }
        }
    }
    Check::new(
        "atomic-product-rule",
        format!("e(a,b) (x) e(c,d) collapses as predicted, n <= {cap}"),
        pass,
    )
}

// Independent route for the dual sum: interleave the y-blocks of `u` before
// the x-blocks of `w` in each block.
fn oplus_by_blocks(w: &Path, u: &Path) -> Path {
    let x_blocks = w.blocks().x_blocks;
    let y_blocks = u.blocks().y_blocks;
    let mut steps = Vec::with_capacity(w.width() + u.height());
    for i in 0..x_blocks.len() {
        steps.extend(std::iter::repeat_n(Step::North, y_blocks[i]));
        steps.extend(std::iter::repeat_n(Step::East, x_blocks[i]));
    }
    Path::from_steps(steps)
}

pub fn check_oplus_duality(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for m in 0..=cap {
            for k in 0..=cap {
                for w in paths(n, m) {
                    for u in paths(m, k) {
                        pass &= oplus(&w, &u).unwrap() == oplus_by_blocks(&w, &u);
                    }
                }
            }
        }
    }
    Check::new(
        "oplus-duality",
        format!("star-dual definition matches block interleaving, dims <= {cap}"),
        pass,
    )
}

pub fn check_residuals(cap: usize) -> Check {
    let mut pass = true;
    let mut cases = 0usize;
    for n in 0..=cap {
        for m in 0..=cap {
            for k in 0..=cap {
                for h in paths(n, k) {
                    for f in paths(m, k) {
                        cases += 1;
                        let r = residual_right(&h, &f).unwrap();
                        pass &= r == residual_right_oracle(&h, &f);
                        pass &= leq(&product(&r, &f).unwrap(), &h).unwrap();
                    }
                    for f in paths(n, m) {
                        cases += 1;
                        let r = residual_left(&f, &h).unwrap();
                        pass &= r == residual_left_oracle(&f, &h);
                        pass &= leq(&product(&f, &r).unwrap(), &h).unwrap();
                    }
                }
            }
        }
    }
    Check::new(
        "residuals",
        format!("{cases} residuals match brute-force maxima, dims <= {cap}"),
        pass,
    )
}

pub fn check_preimage_formula(dim_cap: usize, middle_cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=dim_cap {
        for k in 0..=dim_cap {
            for middle in 0..=middle_cap {
                for w in paths(n, k) {
                    pass &= preimage_count(&w, middle)
                        == BigUint::from(preimage_count_oracle(&w, middle));
                }
            }
        }
    }
    Check::new(
        "preimage-formula",
        format!("bar-insertion count matches pair sweep, n,k <= {dim_cap}, m <= {middle_cap}"),
        pass,
    )
}

pub fn check_preimage_sum(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for m in 0..=cap {
            for k in 0..=cap {
                let total: BigUint = paths(n, k).map(|w| preimage_count(&w, m)).sum();
                let expected = binomial((n + m) as u64, n as u64)
                    * binomial((m + k) as u64, k as u64);
                pass &= total == expected;
            }
        }
    }
    Check::new(
        "preimage-sum",
        format!("preimage counts sum to the pair count, n,m,k <= {cap}"),
        pass,
    )
}

pub fn check_factorization(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for k in 0..=cap {
            for w in paths(n, k) {
                let f = factorize(&w);
                pass &= product(&f.left, &f.right).unwrap() == w;
                pass &= f.descents == w.descent_count();
                pass &= f.left.height() == f.descents && f.right.width() == f.descents;
                pass &= JoinContMap::from_path(&f.left).image().len() == f.descents + 1;
                pass &= JoinContMap::from_path(&f.right).image().len() == f.descents + 1;
            }
        }
    }
    Check::new(
        "factorization",
        format!("epi-mono split rebuilds the word, n,k <= {cap}"),
        pass,
    )
}

// ---------------------------------------------------------------------------
// idempotent checks

pub fn check_theorem_equivalence(cap: usize) -> Check {
    let mut pass = true;
    let mut count = 0usize;
    for n in 0..=cap {
        for w in paths(n, n) {
            count += 1;
            pass &= is_idempotent_path(&w).unwrap() == is_upper_zigzag(&w).unwrap();
        }
    }
    Check::new(
        "idempotent-iff-upper-zigzag",
        format!("{count} self-products against the geometric test, n <= {cap}"),
        pass,
    )
}

pub fn check_idempotent_counts(direct_cap: usize, filter_cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=direct_cap {
        pass &= count_idempotents(n, direct_cap).agree();
        pass &= count_monotone_idempotents(n, direct_cap).agree();
    }
    for n in 0..=filter_cap {
        let mut direct: Vec<Path> = idempotent_paths(n).collect();
        direct.sort();
        let mut filtered = idempotents_by_filter(n);
        filtered.sort();
        pass &= direct == filtered;
    }
    Check::new(
        "idempotent-counts",
        format!(
            "odd/even Fibonacci counts to n <= {direct_cap}, filter cross-oracle to n <= {filter_cap}"
        ),
        pass,
    )
}

pub fn check_by_top_counts(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for k in 0..=n {
            pass &= count_idempotents_by_top(n, k, cap).unwrap().agree();
        }
    }
    Check::new(
        "idempotents-by-top",
        format!("f(n) = k classes match f(2k) (and 1 at k = 0), n <= {cap}"),
        pass,
    )
}

pub fn check_refined_counts(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        let mut by_size = BigUint::ZERO;
        let mut by_max = BigUint::ZERO;
        for k in 0..=n {
            let size = count_by_image_size(n, k, cap).unwrap();
            let max = count_by_max_image(n, k, cap).unwrap();
            pass &= size.agree() && max.agree();
            by_size += size.formula;
            by_max += max.formula;
        }
        let total = binomial(2 * n as u64, n as u64);
        pass &= by_size == total && by_max == total;
        for k in 0..=cap {
            for i in 0..=n.min(k) {
                pass &= count_by_descents(n, k, i, cap).agree();
            }
        }
    }
    Check::new(
        "refined-counts",
        format!("descent, image-size, and max-image classes with sum rules, n,k <= {cap}"),
        pass,
    )
}

pub fn check_nilpotents(formula_cap: usize, oracle_cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=formula_cap {
        let r = count_nilpotents(n, oracle_cap);
        pass &= r.agree();
        if n <= oracle_cap {
            pass &= r.oracle.is_some();
            // cross-check the Dyck criterion against actual nilpotency
            for w in paths(n, n) {
                let f = JoinContMap::from_path(&w);
                let mut power = f.clone();
                for _ in 0..n {
                    power = f.compose(&power).unwrap();
                }
                let vanishes = power.values().iter().all(|v| *v == 0);
                pass &= vanishes == f.is_nilpotent().unwrap();
            }
        }
    }
    Check::new(
        "nilpotent-counts",
        format!("Catalan counts to n <= {formula_cap}, power oracle to n <= {oracle_cap}"),
        pass,
    )
}

pub fn check_identities(cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        for m in 0..=cap {
            for k in 0..=cap {
                pass &= verify_identity_rect(n, m, k).agree();
            }
        }
        let sq = verify_identity_square(n);
        pass &= sq.agree();
        pass &= sq.formula == verify_identity_rect(n, n, n).formula;
    }
    Check::new(
        "binomial-identities",
        format!("both summation identities, arguments <= {cap}"),
        pass,
    )
}

pub fn check_recurrences(cap: usize) -> Check {
    let reports = verify_recurrences(cap);
    let pass = reports.iter().all(|r| r.agree());
    Check::new(
        "fibonacci-recurrences",
        format!("both recurrences and all three proof bijections, n <= {cap}"),
        pass,
    )
}

pub fn check_emmentaler_bijection(cap: usize) -> Check {
    let mut pass = true;
    let mut systems = 0usize;
    for n in 0..=cap {
        for e in Emmentaler::all(n) {
            systems += 1;
            let (f, g) = e.to_maps();
            pass &= f.is_idempotent().unwrap();
            pass &= Emmentaler::from_map(&f).unwrap() == e;
            pass &= f.right_adjoint().values() == g.values();
            for x in 0..=n {
                for y in 0..=n {
                    pass &= (f.eval(x) <= y) == (x <= g.eval(y));
                }
            }
            pass &= f.image().into_iter().collect::<Vec<_>>() == e.join_points();
            pass &= g.image().into_iter().collect::<Vec<_>>() == e.meet_points();
        }
        // the inverse direction: every idempotent comes from a system
        for w in idempotent_paths(n) {
            let f = JoinContMap::from_path(&w);
            let e = Emmentaler::from_map(&f).unwrap();
            pass &= e.to_maps().0 == f;
        }
    }
    Check::new(
        "emmentaler-bijection",
        format!("{systems} interval systems round-trip with adjoint pairs, n <= {cap}"),
        pass,
    )
}

pub fn check_zigzag(encode_cap: usize, count_cap: usize) -> Check {
    let mut pass = true;
    for n in 0..=encode_cap {
        for e in Emmentaler::all(n) {
            pass &= e.encode().decode() == e;
        }
        for z in ZigzagWord::all(n) {
            pass &= z.decode().encode() == z;
        }
    }
    for n in 0..=count_cap {
        pass &= count_zigzag_words(n).agree();
    }
    Check::new(
        "zigzag-encoding",
        format!("encode/decode inverse to n <= {encode_cap}, counts to n <= {count_cap}"),
        pass,
    )
}

pub fn check_closed_form(cap: u32) -> Check {
    let mut pass = true;
    for n in 0..=cap {
        let value = psi_closed_form(n);
        let expected = fibonacci(2 * n as u64 + 1)
            .to_f64()
            .expect("fits in a double for n <= 30");
        pass &= (value - expected).abs() < 0.5;
        pass &= value.round() == expected;
    }
    Check::new(
        "closed-form",
        format!("floating-point formula rounds to f(2n+1), n <= {cap}"),
        pass,
    )
}

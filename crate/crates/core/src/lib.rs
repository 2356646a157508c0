//! Discrete lattice paths from `(0,0)` to `(n,m)` carry much more structure
//! than the dominance lattice: transporting function composition through the
//! bijection with join-continuous maps between finite chains makes the square
//! paths a monoid, in fact a quantale. This crate implements that structure —
//! the product and its traced variant, the dual sum, residuals, the epi-mono
//! factorization — together with the geometric characterization of idempotent
//! paths as upper zigzags, their interval-system ("emmentaler") form, the
//! three-letter word encoding, and exact counters for every family involved:
//! idempotents are counted by odd Fibonacci numbers, nilpotents by Catalan
//! numbers, descent classes by products of binomials.
//!
//! Every counter is backed by both a closed formula and an exhaustive
//! enumeration oracle; [`verify`] bundles the oracle suite behind one entry
//! point, which the `pq` command line exposes as `pq verify`.

pub mod enumeration;
pub mod error;
pub mod idempotent;
pub mod jsl;
pub mod path;
pub mod quantale;
pub mod verify;

pub use error::{Error, Result};
pub use idempotent::{Emmentaler, ZigzagLetter, ZigzagWord};
pub use jsl::{JoinContMap, MonotoneMap};
pub use path::{atomic_path, BlockProfile, Path, Step, Turn, TurnKind};
pub use quantale::{Factorization, TracedProduct};

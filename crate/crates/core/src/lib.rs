//! Exact computation of F-signatures, generalized F-signatures, and dual
//! F-signatures for two families of toric rings: Veronese subrings of
//! polynomial rings and Segre products of polynomial rings.
//!
//! Everything is exact rational arithmetic; there is no floating point
//! anywhere in a computed value. The crate is organized around the
//! combinatorial equivalents of the ring invariants:
//!
//! - [`combinatorics`] — binomials, factorials, Eulerian numbers.
//! - [`poly`] — polynomials and Irwin–Hall piecewise polynomials, the
//!   exact integration backend.
//! - [`macaulay`] — binomial representations, the growth operators
//!   `f^<i>` / `f^(i)`, and O-sequence validation.
//! - [`staircase`] — lattice points, down-sets, level censuses, and the
//!   canonical generator sets of both families.
//! - [`volume`] — exact volumes of band polytopes, plus an independent
//!   half-space oracle for cross-checking.
//! - [`signature`] — conic classes, signature values, the exhaustive
//!   subset minimizer, the dual upper bound with equality detection, and
//!   the probe for the open equality question.
//! - [`reference`](mod@reference) — brute-force reference computations used
//!   to validate the rest.
//!
//! The `fsig` binary in the companion crate exposes all of this on the
//! command line; the `book/` directory at the repository root walks through
//! the concepts with runnable examples.

pub mod combinatorics;
pub mod error;
pub mod macaulay;
pub mod poly;
pub mod rational;
pub mod reference;
pub mod signature;
pub mod staircase;
pub mod volume;

pub use error::Error;
pub use rational::Rational;

// The guide chapters double as doc-tests so their examples stay compilable.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/combinatorics.md")]
    mod combinatorics {}
    #[doc = include_str!("../../../book/src/macaulay.md")]
    mod macaulay {}
    #[doc = include_str!("../../../book/src/staircases.md")]
    mod staircases {}
    #[doc = include_str!("../../../book/src/volumes.md")]
    mod volumes {}
    #[doc = include_str!("../../../book/src/signatures.md")]
    mod signatures {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

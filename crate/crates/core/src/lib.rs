//! Exact arithmetic for strong external difference families (SEDFs).
//!
//! A `(v, m, k, λ)`-SEDF in a finite abelian group `G` of order `v` is a list of
//! `m` pairwise disjoint `k`-subsets `D_1, …, D_m` such that, for every `j`, the
//! external differences `d - e` with `d ∈ D_j` and `e ∈ D_ℓ` (`ℓ ≠ j`) cover each
//! nonidentity element of `G` exactly `λ` times.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! - [`group`]: finite abelian groups as products of cyclic factors.
//! - [`algebra`]: integer group-algebra elements, set families and the
//!   definition-level verifier.
//! - [`cyclotomic`]: integer polynomials, cyclotomic polynomials and the exact
//!   zero test for character sums.
//! - [`character`]: the character group of `G` and character evaluation.
//! - [`analysis`]: per-character reports, split classes and Lam–Leung coset
//!   decomposition.
//! - [`sieve`]: parameter enumeration and nonexistence filters.
//! - [`search`]: exhaustive backtracking search with translation isomorph
//!   rejection.
//!
//! Nothing here performs IO; file formats, parallel drivers and the CLI live in
//! the `sedf` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod analysis;
pub mod arith;
pub mod character;
pub mod cyclotomic;
mod error;
pub mod group;
pub mod search;
pub mod sieve;

pub use algebra::{AlgElem, SetFamily, Verification};
pub use analysis::{CharReport, CosetDecomposition, SplitViolation};
pub use character::Character;
pub use cyclotomic::{CyclotomicTable, ExponentProfile, IntPolynomial};
pub use error::{Error, Result};
pub use group::{Element, Group};
pub use num_complex::Complex64;
pub use search::{SearchResult, SearchTask};
pub use sieve::{ParameterSet, Reason, Status, Verdict};

/// Tolerance used for every floating-point cross-check.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

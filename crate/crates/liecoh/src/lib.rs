//! Exact-arithmetic cohomology rings of compact simply-connected Lie groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] — dense exact linear algebra over prime fields,
//! * [`algebra`] — finitely generated graded-commutative algebras with even
//!   truncated generators and odd exterior generators (optionally with
//!   prescribed squares in characteristic 2),
//! * [`sym`] — symbolic polynomials over named generators, used for canonical
//!   relation strings and their round-trip parser,
//! * [`liedata`] — the embedded catalogue of rank, dimension, basic-class
//!   degrees and torsion data for the supported groups,
//! * [`koszul`] — Koszul complexes, their cohomology (brute force and closed
//!   form) and the structured presentation of the coboundary image,
//! * [`modp`] — the mod p cohomology model of a group, its Bockstein
//!   differential and Bockstein cohomology,
//! * [`integral`] — integral invariants: the image of induced maps from the
//!   flag variety, free exterior part, torsion ideal presentation and the
//!   degreewise cohomology-group table,
//! * [`weyl`] — Weyl group enumeration by length and flag-variety Poincaré
//!   polynomials,
//! * [`verify`] — randomized and exhaustive self-check suites shared by the
//!   CLI and the test-suite.

pub mod algebra;
pub mod integral;
pub mod koszul;
pub mod liedata;
pub mod linalg;
pub mod modp;
pub mod present;
pub mod sym;
pub mod verify;
pub mod weyl;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Errors produced by the engine.
///
/// `InvariantViolation` is reserved for *mathematical* failures: a computed
/// value disagreeing with an independent recomputation, a differential that
/// does not square to zero, a presentation whose dimensions do not match the
/// brute-force count, and so on.  Everything else (bad names, unsupported
/// groups, malformed input) is an ordinary input error.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed construction data (generator lists, degrees, squares, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The requested group or (group, prime) combination is not supported.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A mathematical self-check failed.  `context` names the operation and
    /// the invariant; `detail` localises the failure (degree, element, ...).
    #[error("invariant violation in {context}: {detail}")]
    InvariantViolation { context: String, detail: String },
}

impl Error {
    pub fn invariant(context: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::InvariantViolation {
            context: context.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Graded dimensions: degree -> dimension, with zero entries omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedDims(pub BTreeMap<u32, u64>);

impl GradedDims {
    pub fn new() -> Self {
        GradedDims(BTreeMap::new())
    }

    pub fn get(&self, degree: u32) -> u64 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn set(&mut self, degree: u32, dim: u64) {
        if dim == 0 {
            self.0.remove(&degree);
        } else {
            self.0.insert(degree, dim);
        }
    }

    pub fn add(&mut self, degree: u32, dim: u64) {
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    /// Total dimension over all degrees.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Largest degree with a nonzero entry (0 for the zero module).
    pub fn top_degree(&self) -> u32 {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    /// Tensor product of graded dimensions (Poincaré series product).
    pub fn tensor(&self, other: &GradedDims) -> GradedDims {
        let mut out = GradedDims::new();
        for (&d1, &n1) in &self.0 {
            for (&d2, &n2) in &other.0 {
                out.add(d1 + d2, n1 * n2);
            }
        }
        out
    }

    /// `true` when dimensions are symmetric about `top/2`, i.e. the dimension
    /// in degree `d` equals the dimension in degree `top - d` for all `d`.
    pub fn is_palindromic(&self, top: u32) -> bool {
        (0..=top).all(|d| self.get(d) == self.get(top - d))
    }

    /// Deterministic pair encoding used by the JSON interfaces.
    pub fn to_pairs(&self) -> Vec<(u32, u64)> {
        self.0.iter().map(|(&d, &n)| (d, n)).collect()
    }
}

impl FromIterator<(u32, u64)> for GradedDims {
    fn from_iter<T: IntoIterator<Item = (u32, u64)>>(iter: T) -> Self {
        let mut out = GradedDims::new();
        for (d, n) in iter {
            out.add(d, n);
        }
        out
    }
}

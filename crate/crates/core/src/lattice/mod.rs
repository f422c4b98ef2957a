//! Exact linear algebra and intersection lattices.
//!
//! [`ExactMatrix`] carries the elimination kernels (Bareiss rank, reduced
//! echelon form, kernels). [`GramMatrix`] models a lattice of divisor classes
//! through its pairing matrix; the invariant part under a finite group is
//! measured two independent ways, by the rank of the orbit-sum pairing matrix
//! and by averaging traces over the group.

mod gram;
mod matrix;

pub use gram::{invariant_dimension_via_trace, orbit_sum_gram, GramFixture, GramMatrix};
pub use matrix::{kernel_basis, rank, ExactMatrix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("orbits do not partition the class list: {0}")]
    InvalidPartition(String),
    #[error("group element {index} does not preserve the pairing")]
    ActionNotGramPreserving { index: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("diagonal entry {index} is {value}, expected -2")]
    BadDiagonal { index: usize, value: String },
    #[error("fixture error: {0}")]
    Fixture(String),
}

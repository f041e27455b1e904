//! Exact rational linear algebra.
//!
//! Everything here is deterministic and canonical: subspaces are stored as
//! reduced row echelon bases, so equality of subspaces is structural
//! equality, and every pipeline that lands in the same subspace lands in
//! the same representation of it.

mod matrix;
mod perm;
mod rat;
mod subspace;

pub use matrix::RatMatrix;
pub use perm::{perm_action_matrix, Permutation};
pub use rat::{format_rat, parse_rat, rat, rat_int, Rat};
pub use subspace::{kernel, quotient, QuotientData, Subspace};

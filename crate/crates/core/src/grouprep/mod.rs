//! Explicit finite matrix groups: the binary octahedral group in its
//! representations, restriction of scalars, and the double covers Gₙ.

mod closure;
pub mod formulas;
pub mod gn;
pub mod lattice;
mod matrix;
mod perm;
pub mod weil;

pub use closure::{closure, GroupElement, LabeledGroup};
pub use matrix::Matrix;
pub use perm::{parse_cycles, Permutation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not closed within cap {cap}")]
    NotClosed { cap: usize },
    #[error("entry ({row}, {col}) does not decompose over {base}")]
    NotDecomposable { row: usize, col: usize, base: &'static str },
    #[error("n = {0} out of range (expected 3..=5)")]
    OutOfRange(usize),
    #[error("generator images do not extend to a homomorphism")]
    NotHomomorphism,
    #[error("basis does not span an invariant subspace")]
    NotInvariant,
    #[error("unknown representation '{0}'")]
    UnknownRepresentation(String),
}

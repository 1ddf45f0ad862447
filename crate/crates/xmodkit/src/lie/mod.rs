//! Crossed modules of finite-dimensional Lie algebras over exact
//! fields: validated construction, braided structure, the
//! linear-algebraic centre with its bracket, boundary and action,
//! Chevalley-Eilenberg cohomology in degrees up to two, and the
//! four-term exact sequence tying the pieces together. All arithmetic
//! is exact: big rationals or a prime field of odd characteristic.

pub mod algebra;
pub mod centre;
pub mod cohom;
pub mod mat;
pub mod scalar;
pub mod sequence;
pub mod xmod;

pub use algebra::{make_lie, LieAlgebra, QuotientAlgebra};
pub use centre::{lie_centre, lie_homotopy, LieCentre, LieHomotopy};
pub use cohom::{lie_cohomology, LieCohomology, LieModule};
pub use scalar::{Field, K};
pub use sequence::{lie_exact_sequence_check, LieSequenceReport};
pub use xmod::{make_lie_xmod, verify_lie_bcm, LieBcmReport, LieCrossedModule};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("invalid field: {0}")]
    BadField(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{what} fails on basis triple ({i}, {j}, {k})")]
    NotLie {
        what: &'static str,
        i: usize,
        j: usize,
        k: usize,
    },
    #[error("axiom {equation} fails at {witness}")]
    AxiomViolation {
        equation: &'static str,
        witness: String,
    },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("sequence check fails at {position}: {witness}")]
    CheckFailure {
        position: &'static str,
        witness: String,
    },
}

pub(crate) fn internal(msg: impl Into<String>) -> LieError {
    LieError::Internal(msg.into())
}

pub(crate) fn axiom(equation: &'static str, witness: impl Into<String>) -> LieError {
    LieError::AxiomViolation {
        equation,
        witness: witness.into(),
    }
}

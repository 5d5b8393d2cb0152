//! Exact computations with Ringel–Hall algebras of cyclic quivers, extended
//! affine Hecke algebras and affine quantum Schur algebras.
//!
//! Everything is exact: coefficients live in `Z[v, v^-1]` (see [`laurent`]),
//! with fractions only as transient intermediates.

pub mod affine_weyl;
pub mod classical;
pub mod expr;
pub mod hall;
pub mod hecke;
pub mod laurent;
pub mod lincomb;
pub mod quiver_rep;
pub mod schur;
pub mod suites;
pub mod tensor_space;

pub use laurent::{Coeff, LaurentPoly, RationalLaurent};
pub use lincomb::LinComb;
pub use quiver_rep::PeriodicMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible in Z[v, v^-1]")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("wrong shape: {0}")]
    WrongShape(String),
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("interpolation unstable: {0}")]
    InterpolationUnstable(String),
    #[error("matrix is not aperiodic")]
    NotAperiodic,
    #[error("not a minimal double coset representative")]
    NotMinimalRep,
    #[error("element not in the given double coset")]
    NotInCoset,
    #[error("inconsistent double coset coefficients: {0}")]
    InconsistentCoset(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

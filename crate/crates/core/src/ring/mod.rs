//! Exact coefficient arithmetic.
//!
//! [`Scalar`] is ℚ(i), [`MultiPoly`] a polynomial ring over it in formal
//! [`SymbolId`]s, and [`RatXi`] the ξₙ-rational functions with poles only at
//! ±i that carry every boundary integrand. `pi` and `omega_m` are formal.

mod poly;
mod ratxi;
mod scalar;
mod sphere;
mod symbol;
mod text;

pub use poly::{Monomial, MultiPoly};
pub use ratxi::RatXi;
pub use scalar::Scalar;
pub use sphere::{sphere_integrate, sphere_moment};
pub use symbol::{Axis, Invariant, LapKind, SymbolId};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("integrand does not decay: numerator degree {degree} with poles ({a}, {b})")]
    NonDecaying { degree: usize, a: u32, b: u32 },
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("unknown symbol name `{0}`")]
    BadSymbol(String),
    #[error("parse error at byte {offset}: expected {msg}")]
    Parse { offset: usize, msg: String },
}

//! The two Clifford actions c = ε − ι and c̄ = ε + ι on Λ*(ℝⁿ).
//!
//! [`model`] builds them as explicit signed permutations of the subset basis;
//! [`CliffordElem`] is the working representation in the normal-ordered word
//! basis, with [`CliffordElem::to_matrix`] mapping back into the model.

mod elem;
pub mod model;

pub use elem::{word_product, CliffordElem, Word};
pub use model::{generators, ExteriorMatrix, Generators, SignedPerm, MAX_DIM};

use thiserror::Error;

use crate::ring::{MultiPoly, RatXi};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("dimension {0} exceeds the supported maximum of 8")]
    DimensionTooLarge(usize),
    #[error("dimension {0} is too small")]
    DimensionTooSmall(usize),
    #[error("covector has {got} components, expected {expected}")]
    WrongLength { got: usize, expected: usize },
}

/// Which Clifford action a covector acts through.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Action {
    C,
    CBar,
}

/// A covector Σ v_i e_i with polynomial components, together with its action.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CovectorExpr {
    pub coeffs: Vec<RatXi>,
    pub action: Action,
}

impl CovectorExpr {
    pub fn new(coeffs: Vec<RatXi>, action: Action) -> Self {
        CovectorExpr { coeffs, action }
    }

    pub fn from_polys(coeffs: Vec<MultiPoly>, action: Action) -> Self {
        CovectorExpr::new(coeffs.into_iter().map(RatXi::constant).collect(), action)
    }

    /// Σ v_i c(e_i) or Σ v_i c̄(e_i).
    pub fn act(&self, n: usize) -> Result<CliffordElem, CliffordError> {
        if n > MAX_DIM {
            return Err(CliffordError::DimensionTooLarge(n));
        }
        if self.coeffs.len() != n {
            return Err(CliffordError::WrongLength { got: self.coeffs.len(), expected: n });
        }
        let mut out = CliffordElem::zero(n);
        for (k, v) in self.coeffs.iter().enumerate() {
            let g = match self.action {
                Action::C => CliffordElem::c(n, k + 1),
                Action::CBar => CliffordElem::cbar(n, k + 1),
            };
            out = &out + &g.scale(v);
        }
        Ok(out)
    }
}

//! Boundary cases of the residue of a composite A∘B, their totals, interior
//! integrands, and the verification suites built on them.

mod cases;
mod interior;
mod lemmas;
mod report;
mod suites;

pub use cases::{
    boundary_total, case_coefficient, enumerate_cases, evaluate_case, BoundaryDensity, CaseId, CaseSpec,
};
pub use interior::{interior_integrand, wres_prefactor, InteriorDensity, InteriorVariant};
pub use lemmas::{lemma_records, sphere_points};
pub use report::{CaseRecord, SuiteReport, Summary, TermEntry};
pub use suites::{
    evaluate_pairing, verify_suite, verify_suite_with, Pairing, PairingCase, SecondFactor, SuiteId, SuiteOptions,
};

use thiserror::Error;

use crate::ring::RingError;
use crate::symcalc::SymcalcError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KkwError {
    #[error("unsupported configuration (n={n}, p1={p1}, p2={p2})")]
    UnsupportedConfiguration { n: usize, p1: i32, p2: i32 },
    #[error("odd dimension {0}")]
    OddDimension(usize),
    #[error("density is not a multiple of pi*omega_{m}: {poly}")]
    NotADensity { m: usize, poly: String },
    #[error(transparent)]
    Symcalc(#[from] SymcalcError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

//! Exact symbolic engine for boundary noncommutative residues of modified
//! Novikov operators `d + δ + c̄(θ) ± c(θ')`.
//!
//! Layers, bottom up: [`ring`] (coefficients), [`clifford`] (the two Clifford
//! actions on Λ*ℝⁿ), [`boundary_geometry`] (collar chart and operator symbols),
//! [`symcalc`] (symbol composition, inversion, π⁺), [`kkw`] (case evaluation,
//! totals, interior terms, reports), [`spectral`] (Witten deformation heat
//! coefficients) and [`cli`] (expression language and command runner).

pub mod boundary_geometry;
pub mod cli;
pub mod clifford;
pub mod kkw;
pub mod ring;
pub mod spectral;
pub mod symcalc;

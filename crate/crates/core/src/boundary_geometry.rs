//! Collar-chart data at a boundary point x₀ and the symbols of D̂, D̂*.
//!
//! In the collar metric h(xₙ)⁻¹g^∂ + dxₙ² with normal coordinates on the
//! boundary, all first derivatives at x₀ vanish except the normal ones, which
//! are proportional to h'(0) (the symbol `h1`). |ξ'| is set to 1 wherever it
//! appears as a scalar factor.

use std::collections::BTreeMap;

use crate::clifford::{Action, CliffordElem, CovectorExpr};
use crate::ring::{Axis, MultiPoly, RatXi, Scalar, SymbolId};

fn h1() -> MultiPoly {
    MultiPoly::var(SymbolId::H1)
}

fn half_h1() -> MultiPoly {
    h1().scale(&Scalar::ratio(1, 2))
}

/// First-order geometry of the collar chart at x₀.
#[derive(Clone, Debug)]
pub struct BoundaryChart {
    pub n: usize,
    /// ∂ₓₙ|ξ|² at |ξ'| = 1.
    pub dxn_norm_sq: MultiPoly,
    /// ω_{s,t}(e_i) keyed by (s, t, i), 1-based, nonzero entries only.
    pub omega_conn: BTreeMap<(usize, usize, usize), MultiPoly>,
    /// Γ^k_{ij} keyed by (i, j, k), nonzero entries only.
    pub christoffel: BTreeMap<(usize, usize, usize), MultiPoly>,
    /// Γⁿ = Σ_i Γⁿ_{ii}.
    pub gamma_contracted: MultiPoly,
    /// δ^k = (h1/4) c(e_k) c(e_n) for tangential k.
    pub delta_k: BTreeMap<usize, CliffordElem>,
}

/// Builds the chart values for dimension `n`.
pub fn chart_axioms(n: usize) -> BoundaryChart {
    assert!(n >= 2, "boundary chart needs n >= 2");
    let mut omega_conn = BTreeMap::new();
    let mut christoffel = BTreeMap::new();
    let mut delta_k = BTreeMap::new();
    for i in 1..n {
        omega_conn.insert((n, i, i), half_h1());
        omega_conn.insert((i, n, i), -half_h1());
        christoffel.insert((i, i, n), half_h1());
        christoffel.insert((n, i, i), -half_h1());
        christoffel.insert((i, n, i), -half_h1());
        let d = &CliffordElem::c(n, i) * &CliffordElem::c(n, n);
        delta_k.insert(i, d.scale_poly(&h1().scale(&Scalar::ratio(1, 4))));
    }
    let gamma_contracted = (1..=n).fold(MultiPoly::zero(), |acc, i| {
        let v = christoffel.get(&(i, i, n)).cloned().unwrap_or_default();
        &acc + &v
    });
    BoundaryChart { n, dxn_norm_sq: h1(), omega_conn, christoffel, gamma_contracted, delta_k }
}

/// `D̂ = d + δ + c̄(θ) + c(θ')` (sign +1) or `D̂*` (sign −1).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OperatorSpec {
    pub n: usize,
    pub include_theta: bool,
    pub include_thetap: bool,
    pub thetap_sign: i8,
}

impl OperatorSpec {
    pub fn d_hat(n: usize) -> Self {
        OperatorSpec { n, include_theta: true, include_thetap: true, thetap_sign: 1 }
    }

    pub fn d_hat_adjoint(n: usize) -> Self {
        OperatorSpec { thetap_sign: -1, ..OperatorSpec::d_hat(n) }
    }
}

/// Named pieces of the order-0 symbol, kept apart for term ledgers.
#[derive(Clone, Debug)]
pub struct OrderZeroParts {
    pub b01: CliffordElem,
    pub b02: CliffordElem,
    pub cbar_theta: CliffordElem,
    /// ± c(θ') with the operator's sign applied.
    pub c_thetap: CliffordElem,
}

impl OrderZeroParts {
    pub fn total(&self) -> CliffordElem {
        &(&(&self.b01 + &self.b02) + &self.cbar_theta) + &self.c_thetap
    }
}

pub fn xi(j: usize) -> MultiPoly {
    MultiPoly::var(SymbolId::Xi(j as u8))
}

/// c(ξ') = Σ_{j<n} ξ_j c(e_j).
pub fn c_xi_prime(n: usize) -> CliffordElem {
    CovectorExpr::from_polys((1..=n).map(|j| if j < n { xi(j) } else { MultiPoly::zero() }).collect(), Action::C)
        .act(n)
        .expect("valid dimension")
}

/// c(ξ) = c(ξ') + ξₙ c(dxₙ).
pub fn c_xi(n: usize) -> CliffordElem {
    &c_xi_prime(n) + &CliffordElem::c(n, n).scale(&RatXi::xin())
}

/// ∂ₓₙ c(ξ')(x₀) realized as (h1/2) c(ξ').
pub fn dxn_cxi_realization(n: usize) -> CliffordElem {
    c_xi_prime(n).scale_poly(&half_h1())
}

/// c(θ') with components θ'_1..θ'_{n−1}, θ'_n.
pub fn c_thetap(n: usize) -> CliffordElem {
    CovectorExpr::from_polys(
        (1..=n).map(|k| MultiPoly::var(SymbolId::ThetaP(Axis::of(k, n)))).collect(),
        Action::C,
    )
    .act(n)
    .expect("valid dimension")
}

/// c(θ) with components θ_1..θ_n.
pub fn c_theta(n: usize) -> CliffordElem {
    CovectorExpr::from_polys((1..=n).map(|k| MultiPoly::var(SymbolId::Theta(Axis::of(k, n)))).collect(), Action::C)
        .act(n)
        .expect("valid dimension")
}

/// c̄(θ).
pub fn cbar_theta(n: usize) -> CliffordElem {
    CovectorExpr::from_polys(
        (1..=n).map(|k| MultiPoly::var(SymbolId::Theta(Axis::of(k, n)))).collect(),
        Action::CBar,
    )
    .act(n)
    .expect("valid dimension")
}

/// b₀¹ = ¼ Σ ω_{s,t}(e_i) c(e_i) c̄(e_s) c̄(e_t) and b₀² = −¼ Σ ω_{s,t}(e_i) c(e_i) c(e_s) c(e_t).
pub fn b0_parts(chart: &BoundaryChart) -> (CliffordElem, CliffordElem) {
    let n = chart.n;
    let mut b01 = CliffordElem::zero(n);
    let mut b02 = CliffordElem::zero(n);
    for (&(s, t, i), w) in &chart.omega_conn {
        let ci = CliffordElem::c(n, i);
        let bar = &(&ci * &CliffordElem::cbar(n, s)) * &CliffordElem::cbar(n, t);
        let unbar = &(&ci * &CliffordElem::c(n, s)) * &CliffordElem::c(n, t);
        b01 = &b01 + &bar.scale_poly(&w.scale(&Scalar::ratio(1, 4)));
        b02 = &b02 + &unbar.scale_poly(&w.scale(&Scalar::ratio(-1, 4)));
    }
    (b01, b02)
}

/// σ₀ split into named parts.
pub fn order_zero_parts(spec: &OperatorSpec, chart: &BoundaryChart) -> OrderZeroParts {
    let n = spec.n;
    let (b01, b02) = b0_parts(chart);
    let cbar_theta = if spec.include_theta { cbar_theta(n) } else { CliffordElem::zero(n) };
    let c_thetap = if spec.include_thetap {
        c_thetap(n).scale_scalar(&Scalar::from_int(spec.thetap_sign as i64))
    } else {
        CliffordElem::zero(n)
    };
    OrderZeroParts { b01, b02, cbar_theta, c_thetap }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contracted_christoffel() {
        assert_eq!(chart_axioms(4).gamma_contracted, h1().scale(&Scalar::ratio(3, 2)));
        assert_eq!(chart_axioms(6).gamma_contracted, h1().scale(&Scalar::ratio(5, 2)));
    }

    #[test]
    fn b02_is_multiple_of_normal() {
        for (n, k) in [(4usize, -3i64), (6, -5)] {
            let (_, b02) = b0_parts(&chart_axioms(n));
            let expect = CliffordElem::c(n, n).scale_poly(&h1().scale(&Scalar::ratio(k, 4)));
            assert_eq!(b02, expect);
        }
    }

    #[test]
    fn b01_against_normal_traceless() {
        let (b01, _) = b0_parts(&chart_axioms(4));
        assert!((&b01 * &CliffordElem::c(4, 4)).trace().is_zero());
    }
}

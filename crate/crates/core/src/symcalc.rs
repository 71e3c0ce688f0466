//! Graded symbols at x₀ with first normal jets: composition, inversion, π⁺.
//!
//! Only xₙ-derivatives are nonzero at x₀, and D_x = −i∂_x. Every symbol is
//! built from a [`Sources`] mask so that case results can be split into the
//! contributions of b₀¹, b₀², c̄(θ), c(θ') and the metric jets.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::boundary_geometry::{
    c_xi, dxn_cxi_realization, order_zero_parts, BoundaryChart, OperatorSpec, OrderZeroParts,
};
use crate::clifford::CliffordElem;
use crate::ring::{RatXi, RingError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymcalcError {
    #[error("missing ∂xₙ jet at order {0}")]
    MissingJet(i32),
    #[error("π⁺ of an entry with a polynomial part: {0}")]
    NonDecayingEntry(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// One homogeneous component: value at x₀ and optionally its ∂ₓₙ derivative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetEntry {
    pub value: CliffordElem,
    pub dxn: Option<CliffordElem>,
}

/// Graded symbol keyed by homogeneity order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetSym {
    pub n: usize,
    pub orders: BTreeMap<i32, JetEntry>,
}

impl JetSym {
    pub fn new(n: usize) -> Self {
        JetSym { n, orders: BTreeMap::new() }
    }

    pub fn with(mut self, order: i32, value: CliffordElem, dxn: Option<CliffordElem>) -> Self {
        self.orders.insert(order, JetEntry { value, dxn });
        self
    }

    pub fn value(&self, order: i32) -> CliffordElem {
        self.orders.get(&order).map(|e| e.value.clone()).unwrap_or_else(|| CliffordElem::zero(self.n))
    }

    pub fn dxn(&self, order: i32) -> Result<CliffordElem, SymcalcError> {
        match self.orders.get(&order) {
            None => Ok(CliffordElem::zero(self.n)),
            Some(e) => e.dxn.clone().ok_or(SymcalcError::MissingJet(order)),
        }
    }

    pub fn top_order(&self) -> Option<i32> {
        self.orders.keys().next_back().copied()
    }
}

/// Which ingredients enter a symbol. The composed and inverted symbols are
/// affine in these, so single-source runs split a case result exactly.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Sources {
    pub b01: bool,
    pub b02: bool,
    pub cbar_theta: bool,
    pub c_thetap: bool,
    /// ∂ₓₙ of c(ξ') and of |ξ|².
    pub metric_jet: bool,
}

impl Sources {
    pub const ALL: Sources = Sources { b01: true, b02: true, cbar_theta: true, c_thetap: true, metric_jet: true };
    pub const NONE: Sources = Sources { b01: false, b02: false, cbar_theta: false, c_thetap: false, metric_jet: false };

    /// Single-source masks with their ledger labels.
    pub fn singles() -> Vec<(&'static str, Sources)> {
        let none = Sources::NONE;
        vec![
            ("b01", Sources { b01: true, ..none }),
            ("b02", Sources { b02: true, ..none }),
            ("cbar(theta)", Sources { cbar_theta: true, ..none }),
            ("c(thetap)", Sources { c_thetap: true, ..none }),
            ("metric jet", Sources { metric_jet: true, ..none }),
        ]
    }
}

/// Pieces shared by every symbol at one boundary point.
#[derive(Clone, Debug)]
pub struct SymbolKit {
    pub n: usize,
    pub chart: BoundaryChart,
    pub sources: Sources,
    /// Replaces the chart's b₀² when set (used to inject deliberate errors).
    pub b02_override: Option<CliffordElem>,
    pub c_xi: CliffordElem,
    pub c_normal: CliffordElem,
    /// ∂ₓₙ c(ξ'), zero when the metric jet is masked.
    pub dxn_c_xi: CliffordElem,
}

impl SymbolKit {
    pub fn new(chart: BoundaryChart, sources: Sources) -> Self {
        let n = chart.n;
        let dxn_c_xi = if sources.metric_jet { dxn_cxi_realization(n) } else { CliffordElem::zero(n) };
        SymbolKit {
            n,
            c_xi: c_xi(n),
            c_normal: CliffordElem::c(n, n),
            dxn_c_xi,
            chart,
            sources,
            b02_override: None,
        }
    }

    /// σ₀ of the operator with masked parts zeroed.
    pub fn order_zero(&self, spec: &OperatorSpec) -> OrderZeroParts {
        let mut p = order_zero_parts(spec, &self.chart);
        if let Some(b) = &self.b02_override {
            p.b02 = b.clone();
        }
        let z = CliffordElem::zero(self.n);
        let s = self.sources;
        OrderZeroParts {
            b01: if s.b01 { p.b01 } else { z.clone() },
            b02: if s.b02 { p.b02 } else { z.clone() },
            cbar_theta: if s.cbar_theta { p.cbar_theta } else { z.clone() },
            c_thetap: if s.c_thetap { p.c_thetap } else { z },
        }
    }

    /// σ(D̂) or σ(D̂*): order 1 with jet, order 0 value only.
    pub fn sigma_symbols(&self, spec: &OperatorSpec) -> JetSym {
        let i = RatXi::scalar(Scalar::i());
        JetSym::new(self.n)
            .with(1, self.c_xi.scale(&i), Some(self.dxn_c_xi.scale(&i)))
            .with(0, self.order_zero(spec).total(), None)
    }
}

/// ∂/∂ξₙ entrywise.
pub fn dxi(x: &CliffordElem) -> CliffordElem {
    x.map_coeffs(RatXi::deriv)
}

pub fn dxi_n(x: &CliffordElem, k: u32) -> CliffordElem {
    x.map_coeffs(|r| r.deriv_n(k))
}

/// π⁺ entrywise; a polynomial part in any entry is an error.
pub fn piplus_elem(x: &CliffordElem) -> Result<CliffordElem, SymcalcError> {
    x.try_map_coeffs(|r| {
        let (upper, _, poly) = r.principal_parts();
        if !poly.is_zero() {
            return Err(SymcalcError::NonDecayingEntry(r.to_string()));
        }
        Ok(upper)
    })
}

/// Σ_α (1/α!) ∂_ξ^α a · D_x^α b, kept down to `min_order`.
///
/// Only α = 0 and α = eₙ can reach `min_order` for the symbols used here;
/// second jets are never available, so a nonzero |α| = 2 term at or above
/// `min_order` is reported as [`SymcalcError::MissingJet`].
pub fn jet_compose(a: &JetSym, b: &JetSym, min_order: i32) -> Result<JetSym, SymcalcError> {
    let n = a.n;
    let minus_i = RatXi::scalar(-Scalar::i());
    let mut values: BTreeMap<i32, CliffordElem> = BTreeMap::new();
    let mut jets: BTreeMap<i32, Option<CliffordElem>> = BTreeMap::new();
    let mut push = |order: i32, v: CliffordElem, j: Option<CliffordElem>| {
        let slot = values.entry(order).or_insert_with(|| CliffordElem::zero(n));
        *slot = &*slot + &v;
        let js = jets.entry(order).or_insert_with(|| Some(CliffordElem::zero(n)));
        *js = match (js.take(), j) {
            (Some(x), Some(y)) => Some(&x + &y),
            _ => None,
        };
    };
    for (&oa, ea) in &a.orders {
        for (&ob, eb) in &b.orders {
            let o = oa + ob;
            if o < min_order {
                continue;
            }
            let jet = match (&ea.dxn, &eb.dxn) {
                (Some(ja), Some(jb)) => Some(&(ja * &eb.value) + &(&ea.value * jb)),
                _ => None,
            };
            push(o, &ea.value * &eb.value, jet);
            if o > min_order {
                let da = dxi(&ea.value);
                if !da.is_zero() {
                    let jb = eb.dxn.as_ref().ok_or(SymcalcError::MissingJet(ob))?;
                    push(o - 1, (&da * jb).scale(&minus_i), None);
                }
            }
            if o - 2 >= min_order && !dxi_n(&ea.value, 2).is_zero() {
                return Err(SymcalcError::MissingJet(ob));
            }
        }
    }
    let mut out = JetSym::new(n);
    for (o, v) in values {
        let j = jets.remove(&o).flatten();
        out = out.with(o, v, j);
    }
    Ok(out)
}

/// ∂ₓₙ(p⁻¹) = −p⁻¹ (∂ₓₙ p) p⁻¹.
fn inverse_jet(q: &CliffordElem, dp: &CliffordElem) -> CliffordElem {
    -&(&(q * dp) * q)
}

/// q₋₁ = ic(ξ)/|ξ|² with jet, and q₋₂ = −q₋₁[p₀q₋₁ + ∂_{ξₙ}p₁ D_{xₙ}q₋₁].
pub fn invert_first_order(kit: &SymbolKit, spec: &OperatorSpec) -> JetSym {
    let sym = kit.sigma_symbols(spec);
    let i = RatXi::scalar(Scalar::i());
    let q1 = kit.c_xi.scale(&RatXi::norm_sq_pow(-1).scale_scalar(&Scalar::i()));
    let dq1 = inverse_jet(&q1, &sym.dxn(1).expect("leading jet"));
    let p0 = sym.value(0);
    let dxi_p1 = kit.c_normal.scale(&i);
    let d_x_q1 = dq1.scale(&RatXi::scalar(-Scalar::i()));
    let inner = &(&p0 * &q1) + &(&dxi_p1 * &d_x_q1);
    let q2 = -&(&q1 * &inner);
    JetSym::new(kit.n).with(-1, q1, Some(dq1)).with(-2, q2, None)
}

/// Symbols of a product of three first-order operators and the first two
/// terms of its parametrix.
#[derive(Clone, Debug)]
pub struct CubeSymbols {
    pub sigma3: CliffordElem,
    pub sigma3_dxn: CliffordElem,
    pub sigma2: CliffordElem,
    /// Orders −3 (with jet) and −4.
    pub inverse: JetSym,
}

pub fn cube_and_invert(kit: &SymbolKit, specs: [OperatorSpec; 3]) -> Result<CubeSymbols, SymcalcError> {
    let [a, b, c] = specs.map(|s| kit.sigma_symbols(&s));
    let ab = jet_compose(&a, &b, 1)?;
    let abc = jet_compose(&ab, &c, 2)?;
    let sigma3 = abc.value(3);
    let sigma3_dxn = abc.dxn(3)?;
    let sigma2 = abc.value(2);
    let q3 = kit.c_xi.scale(&RatXi::norm_sq_pow(-2).scale_scalar(&Scalar::i()));
    let dq3 = inverse_jet(&q3, &sigma3_dxn);
    let d_x_q3 = dq3.scale(&RatXi::scalar(-Scalar::i()));
    let inner = &(&sigma2 * &q3) + &(&dxi(&sigma3) * &d_x_q3);
    let q4 = -&(&q3 * &inner);
    Ok(CubeSymbols {
        sigma3,
        sigma3_dxn,
        sigma2,
        inverse: JetSym::new(kit.n).with(-3, q3, Some(dq3)).with(-4, q4, None),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary_geometry::{c_xi_prime, chart_axioms};
    use crate::ring::MultiPoly;

    fn kit(n: usize) -> SymbolKit {
        SymbolKit::new(chart_axioms(n), Sources::ALL)
    }

    #[test]
    fn projection_of_first_inverse() {
        let k = kit(4);
        let q = invert_first_order(&k, &OperatorSpec::d_hat(4));
        let p = piplus_elem(&q.value(-1)).unwrap();
        // (c(ξ') + i c(dxₙ)) / (2(ξₙ − i))
        let half_pole = RatXi::new(vec![MultiPoly::ratio(1, 2)], 1, 0);
        let expect = &c_xi_prime(4).scale(&half_pole)
            + &CliffordElem::c(4, 4).scale(&half_pole.scale_scalar(&Scalar::i()));
        assert_eq!(p, expect);
        assert_eq!(piplus_elem(&p).unwrap(), p);
    }

    #[test]
    fn polynomial_entries_are_rejected() {
        let x = CliffordElem::c(4, 1).scale(&RatXi::xin());
        assert!(matches!(piplus_elem(&x), Err(SymcalcError::NonDecayingEntry(_))));
    }

    #[test]
    fn flat_cube_has_no_order_two_part() {
        let mut chart = chart_axioms(4);
        chart.omega_conn.clear();
        let k = SymbolKit::new(chart, Sources { metric_jet: false, cbar_theta: false, c_thetap: false, ..Sources::ALL });
        let d = OperatorSpec::d_hat(4);
        let cube = cube_and_invert(&k, [d, d, d]).unwrap();
        assert!(cube.sigma2.is_zero());
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

use super::KkwError;
use crate::clifford::CliffordElem;
use crate::ring::{sphere_integrate, Monomial, MultiPoly, Scalar, SymbolId};
use crate::symcalc::{dxi_n, piplus_elem, JetSym, SymcalcError};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    AI,
    AII,
    AIII,
    B,
    C,
}

impl CaseId {
    pub fn label(self) -> &'static str {
        match self {
            CaseId::AI => "a)I",
            CaseId::AII => "a)II",
            CaseId::AIII => "a)III",
            CaseId::B => "b)",
            CaseId::C => "c)",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One summand: orders `r`, `l` of the two factors, normal derivative
/// counts `j`, `k`, tangential multi-index size `alpha`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CaseSpec {
    pub id: CaseId,
    pub r: i32,
    pub l: i32,
    pub j: u32,
    pub k: u32,
    pub alpha: u32,
}

/// The five summands for factor orders (−p1, −p2) in dimension n.
///
/// Summands satisfy r + l − j − k − |α| = 1 − n with r ≤ −p1, l ≤ −p2. At
/// n = 4 case b lowers r; at n = 6 it lowers l.
pub fn enumerate_cases(n: usize, p1: i32, p2: i32) -> Result<Vec<CaseSpec>, KkwError> {
    let (r, l) = (-p1, -p2);
    let lowered_first = match (n, p1, p2) {
        (4, 1, 1) => true,
        (6, 1, 3) => false,
        _ => return Err(KkwError::UnsupportedConfiguration { n, p1, p2 }),
    };
    let spec = |id, r, l, j, k, alpha| CaseSpec { id, r, l, j, k, alpha };
    let (b, c) = if lowered_first {
        (spec(CaseId::B, r - 1, l, 0, 0, 0), spec(CaseId::C, r, l - 1, 0, 0, 0))
    } else {
        (spec(CaseId::B, r, l - 1, 0, 0, 0), spec(CaseId::C, r - 1, l, 0, 0, 0))
    };
    let cases = vec![
        spec(CaseId::AI, r, l, 0, 0, 1),
        spec(CaseId::AII, r, l, 1, 0, 0),
        spec(CaseId::AIII, r, l, 0, 1, 0),
        b,
        c,
    ];
    debug_assert!(cases
        .iter()
        .all(|c| c.r + c.l - (c.j + c.k + c.alpha) as i32 == 1 - n as i32));
    Ok(cases)
}

/// (−i)^{|α|+j+k+1} / (α!(j+k+1)!), with α! = 1 for |α| ≤ 1.
pub fn case_coefficient(case: &CaseSpec) -> Scalar {
    let e = case.alpha + case.j + case.k + 1;
    let fact: i64 = (1..=(case.j + case.k + 1) as i64).product();
    (-Scalar::i()).pow(e) * Scalar::ratio(1, fact)
}

/// Case result per unit boundary volume: `coeff · pi · omega_{n−1}`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BoundaryDensity {
    pub n: usize,
    pub coeff: MultiPoly,
}

impl BoundaryDensity {
    pub fn zero(n: usize) -> Self {
        BoundaryDensity { n, coeff: MultiPoly::zero() }
    }

    fn frame(n: usize) -> Monomial {
        Monomial::from_powers(vec![(SymbolId::Pi, 1), (SymbolId::Omega((n - 1) as u8), 1)])
    }

    /// Splits `pi · omega_{n−1}` off every term of `full`.
    pub fn from_full(full: &MultiPoly, n: usize) -> Result<Self, KkwError> {
        let frame = Self::frame(n);
        let mut coeff = MultiPoly::zero();
        for (m, c) in full.terms() {
            let (rest, ep) = m.split_off(SymbolId::Pi);
            let (rest, eo) = rest.split_off(SymbolId::Omega((n - 1) as u8));
            if ep != 1 || eo != 1 || rest.powers().iter().any(|(s, _)| matches!(s, SymbolId::Omega(_))) {
                return Err(KkwError::NotADensity { m: n - 1, poly: full.to_string() });
            }
            coeff.add_term(rest, c);
        }
        debug_assert_eq!(coeff.mul_monomial(&frame), *full);
        Ok(BoundaryDensity { n, coeff })
    }

    pub fn full(&self) -> MultiPoly {
        self.coeff.mul_monomial(&Self::frame(self.n))
    }

    /// Reads the canonical text form, e.g. `-3/2*h1*pi*omega_3`.
    pub fn parse(text: &str, n: usize) -> Result<Self, KkwError> {
        BoundaryDensity::from_full(&MultiPoly::parse(text)?, n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

impl fmt::Display for BoundaryDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.full())
    }
}

impl std::ops::Add<&BoundaryDensity> for &BoundaryDensity {
    type Output = BoundaryDensity;
    fn add(self, o: &BoundaryDensity) -> BoundaryDensity {
        assert_eq!(self.n, o.n, "densities from different dimensions");
        BoundaryDensity { n: self.n, coeff: &self.coeff + &o.coeff }
    }
}

impl std::ops::Sub<&BoundaryDensity> for &BoundaryDensity {
    type Output = BoundaryDensity;
    fn sub(self, o: &BoundaryDensity) -> BoundaryDensity {
        assert_eq!(self.n, o.n, "densities from different dimensions");
        BoundaryDensity { n: self.n, coeff: &self.coeff - &o.coeff }
    }
}

pub fn boundary_total(cases: &[BoundaryDensity]) -> BoundaryDensity {
    let n = cases.first().map_or(0, |c| c.n);
    cases.iter().fold(BoundaryDensity::zero(n), |acc, c| &acc + c)
}

fn order_component(sym: &JetSym, order: i32, x_derivs: u32) -> Result<CliffordElem, SymcalcError> {
    match x_derivs {
        0 => Ok(sym.value(order)),
        1 => sym.dxn(order),
        _ => Err(SymcalcError::MissingJet(order)),
    }
}

/// coefficient × ∫_{|ξ'|=1} ∫_ℝ tr[∂ₓₙʲ ∂ξₙᵏ π⁺σ_r(A) · ∂ₓ'^α ∂ξₙ^{j+1} ∂ₓₙᵏ σ_l(B)] dξₙ dσ.
pub fn evaluate_case(case: &CaseSpec, a: &JetSym, b: &JetSym, n: usize) -> Result<BoundaryDensity, KkwError> {
    let left = dxi_n(&piplus_elem(&order_component(a, case.r, case.j)?)?, case.k);
    let right = if case.alpha > 0 {
        // Tangential x-derivatives vanish at x₀.
        CliffordElem::zero(n)
    } else {
        dxi_n(&order_component(b, case.l, case.k)?, case.j + 1)
    };
    let line = left.trace_product(&right).line_integral()?;
    let full = sphere_integrate(&line.scale(&case_coefficient(case)), (n - 1) as u32);
    BoundaryDensity::from_full(&full, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_orders() {
        let rl = |n, p1, p2| -> Vec<(i32, i32)> {
            enumerate_cases(n, p1, p2).unwrap().iter().map(|c| (c.r, c.l)).collect()
        };
        assert_eq!(rl(4, 1, 1), vec![(-1, -1), (-1, -1), (-1, -1), (-2, -1), (-1, -2)]);
        assert_eq!(rl(6, 1, 3), vec![(-1, -3), (-1, -3), (-1, -3), (-1, -4), (-2, -3)]);
        assert!(matches!(enumerate_cases(4, 2, 2), Err(KkwError::UnsupportedConfiguration { .. })));
    }

    #[test]
    fn coefficients() {
        let cs = enumerate_cases(4, 1, 1).unwrap();
        let got: Vec<String> = cs.iter().map(|c| case_coefficient(c).to_string()).collect();
        assert_eq!(got, ["-1", "-1/2", "-1/2", "-i", "-i"]);
    }

    #[test]
    fn density_round_trip() {
        let d = BoundaryDensity::parse("9/2*h1*pi*omega_3 - 4*thetap_n*pi*omega_3", 4).unwrap();
        assert_eq!(d.to_string(), "9/2*h1*pi*omega_3 - 4*thetap_n*pi*omega_3");
        assert!(BoundaryDensity::parse("h1*pi", 4).is_err());
    }
}

//! Interior terms: tr[(1/6)s + E] for the Lichnerowicz-type endomorphisms of
//! D̂*D̂ and D̂², with the Wodzicki-residue prefactor.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::report::{CaseRecord, TermEntry};
use super::KkwError;
use crate::boundary_geometry::{c_thetap, cbar_theta};
use crate::clifford::CliffordElem;
use crate::ring::{Axis, Monomial, MultiPoly, Scalar, SymbolId};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InteriorVariant {
    /// D̂*D̂
    AdjointPair,
    /// D̂²
    Square,
}

impl InteriorVariant {
    pub fn label(self) -> &'static str {
        match self {
            InteriorVariant::AdjointPair => "D*D",
            InteriorVariant::Square => "DD",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InteriorDensity {
    pub n: usize,
    /// Rational part of the prefactor; the full prefactor is `prefactor · pi^pi_power`.
    pub prefactor: BigRational,
    pub pi_power: u32,
    pub integrand: MultiPoly,
    /// tr of each named piece of (1/6)s + E; they add up to `integrand`.
    pub pieces: Vec<(String, MultiPoly)>,
}

impl InteriorDensity {
    pub fn prefactor_poly(&self) -> MultiPoly {
        MultiPoly::term(
            Scalar::from_rational(self.prefactor.clone()),
            Monomial::from_powers(vec![(SymbolId::Pi, self.pi_power)]),
        )
    }
}

impl fmt::Display for InteriorDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * ({})", self.prefactor_poly(), self.integrand)
    }
}

/// (n−2)(4π)^{n/2}/(n/2−1)! as (rational, power of π).
pub fn wres_prefactor(n: usize) -> Result<(BigRational, u32), KkwError> {
    if n % 2 == 1 || n < 4 {
        return Err(KkwError::OddDimension(n));
    }
    let half = (n / 2) as u32;
    let fact: BigInt = (1..half).map(BigInt::from).product();
    let num = BigInt::from(n - 2) * BigInt::from(4).pow(half);
    Ok((BigRational::new(num, fact), half))
}

fn var(s: SymbolId) -> MultiPoly {
    MultiPoly::var(s)
}

fn sum_sq(n: usize, f: impl Fn(Axis) -> SymbolId) -> MultiPoly {
    (1..=n).fold(MultiPoly::zero(), |acc, k| &acc + &var(f(Axis::of(k, n))).pow(2))
}

/// Σ R_ijkl c̄_i c̄_j c_k c_l with canonical curvature symbols.
fn curvature_word(n: usize) -> CliffordElem {
    let mut w = CliffordElem::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            let cc = &CliffordElem::cbar(n, i) * &CliffordElem::cbar(n, j);
            for k in 1..=n {
                for l in 1..=n {
                    let Some((sign, sym)) = SymbolId::riemann(i as u8, j as u8, k as u8, l as u8) else { continue };
                    let word = &(&cc * &CliffordElem::c(n, k)) * &CliffordElem::c(n, l);
                    w = &w + &word.scale_poly(&var(sym).scale(&Scalar::from_int(sign as i64)));
                }
            }
        }
    }
    w
}

/// Σ T_ij c_i c̄_j, the ∇θ word.
fn gradient_word(n: usize) -> CliffordElem {
    let mut w = CliffordElem::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            let word = &CliffordElem::c(n, i) * &CliffordElem::cbar(n, j);
            w = &w + &word.scale_poly(&var(SymbolId::T(i as u8, j as u8)));
        }
    }
    w
}

/// Named pieces of (1/6)s + E.
fn endomorphism_pieces(variant: InteriorVariant, n: usize) -> Vec<(&'static str, CliffordElem)> {
    let id = CliffordElem::identity(n);
    let s = var(SymbolId::S);
    let theta2 = sum_sq(n, SymbolId::Theta);
    let thetap2 = sum_sq(n, SymbolId::ThetaP);
    let ct = c_thetap(n);
    let cb = cbar_theta(n);
    let sign = match variant {
        InteriorVariant::AdjointPair => -1,
        InteriorVariant::Square => 1,
    };
    // −(1/4) Σ_i [c_i c(θ') ∓ c(θ') c_i]²
    let mut commutators = CliffordElem::zero(n);
    for i in 1..=n {
        let ci = CliffordElem::c(n, i);
        let x = &(&ci * &ct) + &(&ct * &ci).scale_scalar(&Scalar::from_int(sign));
        commutators = &commutators + &(&x * &x);
    }
    let mut pieces = vec![
        ("s/6", id.scale_poly(&s.scale(&Scalar::ratio(1, 6)))),
        ("curvature", curvature_word(n).scale_scalar(&Scalar::ratio(1, 8))),
        ("grad theta", -gradient_word(n)),
        ("-s/4", id.scale_poly(&s.scale(&Scalar::ratio(-1, 4)))),
        ("theta mix", -&(&(&ct * &cb).scale_scalar(&Scalar::from_int(sign)) + &(&cb * &ct))),
        ("-|theta|^2", id.scale_poly(&-theta2)),
        ("|thetap|^2", id.scale_poly(&thetap2.scale(&Scalar::from_int(sign)))),
        ("thetap commutators", commutators.scale_scalar(&Scalar::ratio(-1, 4))),
    ];
    match variant {
        InteriorVariant::AdjointPair => pieces.push(("div thetap", id.scale_poly(&var(SymbolId::DivThetaP)))),
        InteriorVariant::Square => {
            // (1/2) Σ_j [c(∇_j θ') c_j − c_j c(∇_j θ')]
            let mut x = CliffordElem::zero(n);
            for j in 1..=n {
                let cj = CliffordElem::c(n, j);
                let grad = (1..=n).fold(CliffordElem::zero(n), |acc, k| {
                    &acc + &CliffordElem::c(n, k).scale_poly(&var(SymbolId::Tp(j as u8, k as u8)))
                });
                x = &x + &grad.commutator(&cj);
            }
            pieces.push(("grad thetap", x.scale_scalar(&Scalar::ratio(1, 2))));
        }
    }
    pieces
}

fn trace_poly(x: &CliffordElem) -> MultiPoly {
    x.trace().as_constant().expect("interior symbols carry no xin")
}

/// tr[(1/6)s + E] with E of the chosen operator, and the prefactor.
pub fn interior_integrand(variant: InteriorVariant, n: usize) -> Result<InteriorDensity, KkwError> {
    let (prefactor, pi_power) = wres_prefactor(n)?;
    let pieces: Vec<(String, MultiPoly)> =
        endomorphism_pieces(variant, n).into_iter().map(|(name, x)| (name.to_string(), trace_poly(&x))).collect();
    let integrand = pieces.iter().fold(MultiPoly::zero(), |acc, (_, p)| &acc + p);
    Ok(InteriorDensity { n, prefactor, pi_power, integrand, pieces })
}

/// 2ⁿ-scaled literal: [div_thp, s, |θ|², |θ'|²] coefficients.
fn expected_integrand(n: usize, coeffs: [(i64, i64); 4]) -> MultiPoly {
    let r = |(p, q): (i64, i64)| Scalar::ratio(p, q);
    &(&(&var(SymbolId::DivThetaP).scale(&r(coeffs[0])) + &var(SymbolId::S).scale(&r(coeffs[1])))
        + &sum_sq(n, SymbolId::Theta).scale(&r(coeffs[2])))
        + &sum_sq(n, SymbolId::ThetaP).scale(&r(coeffs[3]))
}

/// (n, variant, rational coefficients of div θ', s, |θ|², |θ'|², prefactor).
type InteriorRow = (usize, InteriorVariant, [(i64, i64); 4], &'static str);

pub(super) fn interior_records(dim: Option<usize>) -> Vec<CaseRecord> {
    let table: [InteriorRow; 4] = [
        (4, InteriorVariant::AdjointPair, [(16, 1), (-4, 3), (-16, 1), (32, 1)], "32*pi^2"),
        (4, InteriorVariant::Square, [(0, 1), (-4, 3), (-16, 1), (0, 1)], "32*pi^2"),
        (6, InteriorVariant::AdjointPair, [(64, 1), (-16, 3), (-64, 1), (256, 1)], "128*pi^3"),
        (6, InteriorVariant::Square, [(0, 1), (-16, 3), (-64, 1), (0, 1)], "128*pi^3"),
    ];
    let mut out = Vec::new();
    for (n, variant, coeffs, prefactor) in table {
        if dim.is_some_and(|d| d != n) {
            continue;
        }
        let id = format!("n={n} {}", variant.label());
        match interior_integrand(variant, n) {
            Ok(d) => {
                let expected = expected_integrand(n, coeffs);
                let terms = d
                    .pieces
                    .iter()
                    .filter(|(_, p)| !p.is_zero())
                    .map(|(name, p)| TermEntry { source: name.clone(), value: p.to_string() })
                    .collect();
                out.push(
                    CaseRecord::new(format!("{id} integrand"), expected.to_string(), d.integrand.to_string(), expected == d.integrand)
                        .with_terms(terms),
                );
                let expected_pf = MultiPoly::parse(prefactor).expect("literal");
                let pf = d.prefactor_poly();
                out.push(CaseRecord::new(format!("{id} prefactor"), expected_pf.to_string(), pf.to_string(), pf == expected_pf));
            }
            Err(e) => out.push(CaseRecord::failed(id, "", e)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefactors() {
        assert_eq!(wres_prefactor(4).unwrap(), (BigRational::from_integer(32.into()), 2));
        assert_eq!(wres_prefactor(6).unwrap(), (BigRational::from_integer(128.into()), 3));
        assert!(matches!(wres_prefactor(3), Err(KkwError::OddDimension(3))));
    }
}

//! Formal symbols appearing in coefficients.
//!
//! The derived `Ord` fixes the canonical monomial order, so the variant order
//! below is part of the serialization format.

use std::fmt;
use std::str::FromStr;

use super::RingError;

/// Frame direction: tangential index `1..n-1` or the inner normal `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Axis {
    Tan(u8),
    Normal,
}

impl Axis {
    /// Frame index `k` in dimension `n`, with `k == n` meaning the normal.
    pub fn of(k: usize, n: usize) -> Axis {
        assert!(k >= 1 && k <= n, "frame index {k} out of range 1..={n}");
        if k == n {
            Axis::Normal
        } else {
            Axis::Tan(k as u8)
        }
    }

    pub fn index(self, n: usize) -> usize {
        match self {
            Axis::Tan(j) => j as usize,
            Axis::Normal => n,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Tan(j) => write!(f, "{j}"),
            Axis::Normal => f.write_str("n"),
        }
    }
}

/// Total-derivative scalars kept as markers until a closed-manifold integration drops them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum LapKind {
    /// Δs with Δ the nonnegative Laplacian.
    S,
    /// Δ|θ|².
    Theta2,
}

/// Contracted curvature and one-form invariants used by the heat coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Invariant {
    Vol,
    /// |θ|².
    Theta2,
    /// Σ_i |∇_{e_i}θ|².
    GradTheta2,
    /// Σ R_{ijkl}².
    Riem2,
    /// Σ R_{ijik} R_{ljlk}.
    Ric2,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SymbolId {
    /// Tangential covector component ξ_j.
    Xi(u8),
    /// Normal covector component ξₙ; only used in text form of ξₙ-polynomials.
    XiN,
    /// h'(0).
    H1,
    Theta(Axis),
    ThetaP(Axis),
    /// Scalar curvature.
    S,
    /// Σ_j g(e_j, ∇_{e_j}θ').
    DivThetaP,
    /// Component `j` of ∇_{e_i}θ.
    T(u8, u8),
    /// Component `j` of ∇_{e_i}θ'.
    Tp(u8, u8),
    /// Curvature entry in canonical index order; build with [`SymbolId::riemann`].
    R(u8, u8, u8, u8),
    Lap(LapKind),
    Inv(Invariant),
    /// Spectral cutoff Λ.
    Lambda,
    Pi,
    /// Volume of the unit sphere in ℝ^m.
    Omega(u8),
}

impl SymbolId {
    /// Canonical curvature symbol with the sign picked up by reordering.
    /// `None` when an antisymmetric pair repeats an index.
    pub fn riemann(i: u8, j: u8, k: u8, l: u8) -> Option<(i8, SymbolId)> {
        if i == j || k == l {
            return None;
        }
        let mut sign = 1i8;
        let (i, j) = if i < j { (i, j) } else { sign = -sign; (j, i) };
        let (k, l) = if k < l { (k, l) } else { sign = -sign; (l, k) };
        let ((i, j), (k, l)) = if (i, j) <= (k, l) { ((i, j), (k, l)) } else { ((k, l), (i, j)) };
        Some((sign, SymbolId::R(i, j, k, l)))
    }

    /// True for symbols that may only occur in numerators of ξₙ-rational functions.
    pub fn is_transcendental(&self) -> bool {
        matches!(self, SymbolId::Pi | SymbolId::Omega(_))
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolId::Xi(j) => write!(f, "xi_{j}"),
            SymbolId::XiN => f.write_str("xin"),
            SymbolId::H1 => f.write_str("h1"),
            SymbolId::Theta(a) => write!(f, "theta_{a}"),
            SymbolId::ThetaP(a) => write!(f, "thetap_{a}"),
            SymbolId::S => f.write_str("s"),
            SymbolId::DivThetaP => f.write_str("div_thp"),
            SymbolId::T(i, j) => write!(f, "T_{i}_{j}"),
            SymbolId::Tp(i, j) => write!(f, "Tp_{i}_{j}"),
            SymbolId::R(i, j, k, l) => write!(f, "R_{i}_{j}_{k}_{l}"),
            SymbolId::Lap(LapKind::S) => f.write_str("lap_s"),
            SymbolId::Lap(LapKind::Theta2) => f.write_str("lap_theta2"),
            SymbolId::Inv(Invariant::Vol) => f.write_str("vol"),
            SymbolId::Inv(Invariant::Theta2) => f.write_str("theta2"),
            SymbolId::Inv(Invariant::GradTheta2) => f.write_str("gradtheta2"),
            SymbolId::Inv(Invariant::Riem2) => f.write_str("riem2"),
            SymbolId::Inv(Invariant::Ric2) => f.write_str("ric2"),
            SymbolId::Lambda => f.write_str("Lambda"),
            SymbolId::Pi => f.write_str("pi"),
            SymbolId::Omega(m) => write!(f, "omega_{m}"),
        }
    }
}

impl FromStr for SymbolId {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RingError::BadSymbol(s.to_string());
        let fixed = match s {
            "xin" => Some(SymbolId::XiN),
            "h1" => Some(SymbolId::H1),
            "s" => Some(SymbolId::S),
            "div_thp" => Some(SymbolId::DivThetaP),
            "lap_s" => Some(SymbolId::Lap(LapKind::S)),
            "lap_theta2" => Some(SymbolId::Lap(LapKind::Theta2)),
            "vol" => Some(SymbolId::Inv(Invariant::Vol)),
            "theta2" => Some(SymbolId::Inv(Invariant::Theta2)),
            "gradtheta2" => Some(SymbolId::Inv(Invariant::GradTheta2)),
            "riem2" => Some(SymbolId::Inv(Invariant::Riem2)),
            "ric2" => Some(SymbolId::Inv(Invariant::Ric2)),
            "Lambda" => Some(SymbolId::Lambda),
            "pi" => Some(SymbolId::Pi),
            _ => None,
        };
        if let Some(sym) = fixed {
            return Ok(sym);
        }
        let (head, rest) = s.split_once('_').ok_or_else(bad)?;
        let parts: Vec<&str> = rest.split('_').collect();
        let num = |p: &str| p.parse::<u8>().map_err(|_| bad());
        let axis = |p: &str| -> Result<Axis, RingError> {
            if p == "n" {
                Ok(Axis::Normal)
            } else {
                Ok(Axis::Tan(num(p)?))
            }
        };
        match (head, parts.as_slice()) {
            ("xi", [j]) => Ok(SymbolId::Xi(num(j)?)),
            ("theta", [a]) => Ok(SymbolId::Theta(axis(a)?)),
            ("thetap", [a]) => Ok(SymbolId::ThetaP(axis(a)?)),
            ("T", [i, j]) => Ok(SymbolId::T(num(i)?, num(j)?)),
            ("Tp", [i, j]) => Ok(SymbolId::Tp(num(i)?, num(j)?)),
            ("R", [i, j, k, l]) => {
                let (sign, sym) =
                    SymbolId::riemann(num(i)?, num(j)?, num(k)?, num(l)?).ok_or_else(bad)?;
                if sign < 0 || sym != SymbolId::R(num(i)?, num(j)?, num(k)?, num(l)?) {
                    return Err(bad());
                }
                Ok(sym)
            }
            ("omega", [m]) => Ok(SymbolId::Omega(num(m)?)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn riemann_canonical_sign() {
        let (s, r) = SymbolId::riemann(2, 1, 1, 2).unwrap();
        assert_eq!((s, r), (-1, SymbolId::R(1, 2, 1, 2)));
        let (s, r) = SymbolId::riemann(3, 4, 2, 1).unwrap();
        assert_eq!((s, r), (-1, SymbolId::R(1, 2, 3, 4)));
        assert!(SymbolId::riemann(1, 1, 2, 3).is_none());
    }

    #[test]
    fn names_round_trip() {
        for sym in [
            SymbolId::Xi(3),
            SymbolId::ThetaP(Axis::Normal),
            SymbolId::Theta(Axis::Tan(2)),
            SymbolId::R(1, 2, 1, 3),
            SymbolId::Tp(4, 1),
            SymbolId::Omega(4),
            SymbolId::Lap(LapKind::Theta2),
            SymbolId::Inv(Invariant::Ric2),
        ] {
            assert_eq!(sym.to_string().parse::<SymbolId>().unwrap(), sym);
        }
        assert!("R_2_1_1_2".parse::<SymbolId>().is_err());
    }
}

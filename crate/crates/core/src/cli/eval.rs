//! Evaluation of expression trees to Clifford elements with ξₙ-rational
//! coefficients, in a fixed dimension.
//!
//! `dxn(·)` is the normal derivative at x₀ computed from the first jets of
//! the atoms: c(ξ') and c(ξ) have jet (h1/2)·c(ξ'), frame generators,
//! numbers, symbols and ξₙ are constant. θ, θ' and dxnc(ξ') carry no jet in
//! the chart model, so differentiating them is an error.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::ast::{Atom, BinOp, Covector, ExprAst, Func, GenAction};
use crate::boundary_geometry::{c_theta, c_thetap, c_xi, c_xi_prime, cbar_theta, dxn_cxi_realization};
use crate::clifford::{Action, CliffordElem, CovectorExpr};
use crate::ring::{sphere_integrate, Axis, MultiPoly, RatXi, Scalar, SymbolId};
use crate::symcalc::{dxi, piplus_elem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("dimension {0} is not supported (need 2..=8)")]
    Dimension(usize),
    #[error("generator index {k} out of range for dimension {n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("divisor is not an invertible scalar: {0}")]
    BadDivisor(String),
    #[error("{0}")]
    Symcalc(String),
    #[error("{func} needs {what}, got {value}")]
    Domain { func: &'static str, what: &'static str, value: String },
    #[error("no normal jet available for {0}")]
    MissingJet(String),
}

pub struct Evaluator {
    n: usize,
}

fn scalar_elem(n: usize, v: RatXi) -> CliffordElem {
    CliffordElem::scalar(n, v)
}

impl Evaluator {
    pub fn new(n: usize) -> Result<Self, EvalError> {
        if !(2..=8).contains(&n) {
            return Err(EvalError::Dimension(n));
        }
        Ok(Evaluator { n })
    }

    fn generator(&self, action: GenAction, v: Covector) -> Result<CliffordElem, EvalError> {
        let n = self.n;
        let basis = |k: usize| -> Result<CliffordElem, EvalError> {
            if k == 0 || k > n {
                return Err(EvalError::IndexOutOfRange { k, n });
            }
            Ok(match action {
                GenAction::C => CliffordElem::c(n, k),
                GenAction::CBar => CliffordElem::cbar(n, k),
            })
        };
        let act = match action {
            GenAction::C => Action::C,
            GenAction::CBar => Action::CBar,
        };
        Ok(match (action, v) {
            (_, Covector::E(k)) => basis(k)?,
            (_, Covector::Dxn) => basis(n)?,
            (GenAction::C, Covector::XiPrime) => c_xi_prime(n),
            (GenAction::C, Covector::Xi) => c_xi(n),
            (GenAction::C, Covector::Theta) => c_theta(n),
            (GenAction::CBar, Covector::Theta) => cbar_theta(n),
            (GenAction::C, Covector::ThetaP) => c_thetap(n),
            (GenAction::CBar, Covector::ThetaP) => {
                let comps = (1..=n).map(|k| MultiPoly::var(SymbolId::ThetaP(Axis::of(k, n)))).collect();
                CovectorExpr::from_polys(comps, act).act(n).expect("dimension checked")
            }
            (GenAction::CBar, Covector::XiPrime | Covector::Xi) => {
                let mut coeffs: Vec<RatXi> = (1..n).map(|j| RatXi::constant(MultiPoly::var(SymbolId::Xi(j as u8)))).collect();
                coeffs.push(if v == Covector::Xi { RatXi::xin() } else { RatXi::zero() });
                CovectorExpr::new(coeffs, act).act(n).expect("dimension checked")
            }
        })
    }

    fn atom(&self, a: &Atom) -> Result<CliffordElem, EvalError> {
        let n = self.n;
        Ok(match a {
            Atom::Int(v) => {
                let r = BigRational::from_integer(BigInt::from(v.clone()));
                scalar_elem(n, RatXi::scalar(Scalar::from_rational(r)))
            }
            Atom::I => scalar_elem(n, RatXi::scalar(Scalar::i())),
            Atom::Xin => scalar_elem(n, RatXi::xin()),
            Atom::Symbol(s) => {
                let sym: SymbolId = s.parse().map_err(|_| EvalError::Domain {
                    func: "symbol",
                    what: "a known symbol name",
                    value: s.clone(),
                })?;
                scalar_elem(n, RatXi::constant(MultiPoly::var(sym)))
            }
            Atom::Gen(action, v) => self.generator(*action, *v)?,
            Atom::DxnCXiPrime => dxn_cxi_realization(n),
        })
    }

    fn divide(&self, a: &CliffordElem, b: &CliffordElem) -> Result<CliffordElem, EvalError> {
        let inv = b
            .as_scalar()
            .and_then(|s| s.try_reciprocal().ok())
            .ok_or_else(|| EvalError::BadDivisor(b.to_string()))?;
        Ok(a.scale(&inv))
    }

    fn apply(&self, f: Func, x: CliffordElem) -> Result<CliffordElem, EvalError> {
        let n = self.n;
        match f {
            Func::Tr => Ok(scalar_elem(n, x.trace())),
            Func::PiPlus => piplus_elem(&x).map_err(|e| EvalError::Symcalc(e.to_string())),
            Func::Dxin => Ok(dxi(&x)),
            Func::Dxn => unreachable!("dxn is handled on the tree"),
            Func::IntXin => x.try_map_coeffs(|r| {
                r.line_integral().map(RatXi::constant).map_err(|e| EvalError::Symcalc(e.to_string()))
            }),
            Func::Sphere => x.try_map_coeffs(|r| {
                let p = r.as_constant().ok_or_else(|| EvalError::Domain {
                    func: "sphere",
                    what: "a xin-free integrand",
                    value: r.to_string(),
                })?;
                Ok(RatXi::constant(sphere_integrate(&p, (n - 1) as u32)))
            }),
        }
    }

    pub fn eval(&self, e: &ExprAst) -> Result<CliffordElem, EvalError> {
        match e {
            ExprAst::Atom(a) => self.atom(a),
            ExprAst::Neg(x) => Ok(-self.eval(x)?),
            ExprAst::Pow(x, k) => Ok(self.eval(x)?.pow(*k)),
            ExprAst::Call(Func::Dxn, x) => self.derivative(x),
            ExprAst::Call(f, x) => {
                let v = self.eval(x)?;
                self.apply(*f, v)
            }
            ExprAst::Bin(op, a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                match op {
                    BinOp::Add => Ok(&a + &b),
                    BinOp::Sub => Ok(&a - &b),
                    BinOp::Mul => Ok(&a * &b),
                    BinOp::Div => self.divide(&a, &b),
                }
            }
        }
    }

    /// ∂ₓₙ at x₀ by the Leibniz rule over the tree.
    pub fn derivative(&self, e: &ExprAst) -> Result<CliffordElem, EvalError> {
        let n = self.n;
        match e {
            ExprAst::Atom(Atom::Gen(GenAction::C, Covector::XiPrime | Covector::Xi)) => Ok(dxn_cxi_realization(n)),
            ExprAst::Atom(a @ (Atom::Gen(_, Covector::Theta | Covector::ThetaP) | Atom::DxnCXiPrime)) => {
                Err(EvalError::MissingJet(a.to_string()))
            }
            ExprAst::Atom(Atom::Gen(GenAction::CBar, v @ (Covector::XiPrime | Covector::Xi))) => {
                Err(EvalError::MissingJet(format!("cb({v})")))
            }
            ExprAst::Atom(_) => Ok(CliffordElem::zero(n)),
            ExprAst::Neg(x) => Ok(-self.derivative(x)?),
            ExprAst::Pow(x, k) => {
                let (v, dv) = (self.eval(x)?, self.derivative(x)?);
                let mut acc = CliffordElem::zero(n);
                for i in 0..*k {
                    acc = &acc + &(&(&v.pow(i) * &dv) * &v.pow(k - 1 - i));
                }
                Ok(acc)
            }
            ExprAst::Call(Func::Dxn, x) => Err(EvalError::MissingJet(format!("dxn({x})"))),
            ExprAst::Call(f, x) => {
                let d = self.derivative(x)?;
                self.apply(*f, d)
            }
            ExprAst::Bin(op, a, b) => {
                let (da, db) = (self.derivative(a)?, self.derivative(b)?);
                match op {
                    BinOp::Add => Ok(&da + &db),
                    BinOp::Sub => Ok(&da - &db),
                    BinOp::Mul => Ok(&(&da * &self.eval(b)?) + &(&self.eval(a)? * &db)),
                    BinOp::Div => {
                        let (va, vb) = (self.eval(a)?, self.eval(b)?);
                        let first = self.divide(&da, &vb)?;
                        let second = self.divide(&self.divide(&(&va * &db), &vb)?, &vb)?;
                        Ok(&first - &second)
                    }
                }
            }
        }
    }
}

/// Evaluates `e` in dimension `n`.
pub fn eval_expr(e: &ExprAst, n: usize) -> Result<CliffordElem, EvalError> {
    Evaluator::new(n)?.eval(e)
}

use std::fmt;

use num_bigint::BigUint;

/// Covector slot of a Clifford generator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Covector {
    /// e_k, 1-based.
    E(usize),
    Dxn,
    XiPrime,
    Xi,
    Theta,
    ThetaP,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenAction {
    C,
    CBar,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Atom {
    Int(BigUint),
    I,
    Xin,
    /// A formal symbol by its canonical name (`h1`, `pi`, `thetap_n`, ...).
    Symbol(String),
    Gen(GenAction, Covector),
    /// ∂ₓₙ c(ξ') at x₀.
    DxnCXiPrime,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Func {
    Tr,
    PiPlus,
    Dxin,
    Dxn,
    IntXin,
    Sphere,
}

impl Func {
    pub const ALL: [Func; 6] = [Func::Tr, Func::PiPlus, Func::Dxin, Func::Dxn, Func::IntXin, Func::Sphere];

    pub fn name(self) -> &'static str {
        match self {
            Func::Tr => "tr",
            Func::PiPlus => "piplus",
            Func::Dxin => "dxin",
            Func::Dxn => "dxn",
            Func::IntXin => "intxin",
            Func::Sphere => "sphere",
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExprAst {
    Atom(Atom),
    Neg(Box<ExprAst>),
    Call(Func, Box<ExprAst>),
    Bin(BinOp, Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

impl ExprAst {
    pub fn bin(op: BinOp, a: ExprAst, b: ExprAst) -> ExprAst {
        ExprAst::Bin(op, Box::new(a), Box::new(b))
    }

    fn level(&self) -> u8 {
        match self {
            ExprAst::Bin(BinOp::Add | BinOp::Sub, ..) => 0,
            ExprAst::Bin(BinOp::Mul | BinOp::Div, ..) => 1,
            ExprAst::Neg(_) => 2,
            ExprAst::Pow(..) => 3,
            ExprAst::Atom(_) | ExprAst::Call(..) => 4,
        }
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Covector::E(k) => write!(f, "e{k}"),
            Covector::Dxn => f.write_str("dxn"),
            Covector::XiPrime => f.write_str("xi'"),
            Covector::Xi => f.write_str("xi"),
            Covector::Theta => f.write_str("theta"),
            Covector::ThetaP => f.write_str("thetap"),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(v) => write!(f, "{v}"),
            Atom::I => f.write_str("i"),
            Atom::Xin => f.write_str("xin"),
            Atom::Symbol(s) => f.write_str(s),
            Atom::Gen(GenAction::C, v) => write!(f, "c({v})"),
            Atom::Gen(GenAction::CBar, v) => write!(f, "cb({v})"),
            Atom::DxnCXiPrime => f.write_str("dxnc(xi')"),
        }
    }
}

/// Minimal parenthesization; printing then parsing gives back the same tree.
impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &ExprAst, min: u8| {
            if e.level() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            ExprAst::Atom(a) => write!(f, "{a}"),
            ExprAst::Call(func, arg) => write!(f, "{}({arg})", func.name()),
            ExprAst::Neg(x) => {
                f.write_str("-")?;
                wrap(f, x, 2)
            }
            ExprAst::Pow(base, k) => {
                wrap(f, base, 4)?;
                write!(f, "^{k}")
            }
            ExprAst::Bin(op, a, b) => {
                let (lvl, sym) = match op {
                    BinOp::Add => (0, " + "),
                    BinOp::Sub => (0, " - "),
                    BinOp::Mul => (1, " * "),
                    BinOp::Div => (1, " / "),
                };
                // Left-associative: the right operand needs one level more.
                wrap(f, a, lvl)?;
                f.write_str(sym)?;
                wrap(f, b, lvl + 1)
            }
        }
    }
}

//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" INT)?
//! atom   := INT | "(" expr ")" | FUNC "(" expr ")"
//!         | ("c" | "cb") "(" COVECTOR ")" | "dxnc(xi')" | NAME
//! ```

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use super::ast::{Atom, BinOp, Covector, ExprAst, Func, GenAction};
use crate::ring::SymbolId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: expected {}, found {}", self.offset, self.expected.join(" or "), self.found)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigUint),
    Ident(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "`{v}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let ch = bytes[pos];
        if ch.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let tok = match ch {
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                out.push((start, Tok::Int(input[start..pos].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_' || bytes[pos] == b'\'') {
                    pos += 1;
                }
                out.push((start, Tok::Ident(input[start..pos].to_string())));
                continue;
            }
            _ => {
                let found = input[start..].chars().next().map(|c| format!("`{c}`")).unwrap_or_default();
                return Err(ParseError { offset: start, expected: vec!["a token".into()], found });
            }
        };
        out.push((start, tok));
        pos += 1;
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().to_string(),
        })
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = ExprAst::bin(op, lhs, self.term()?);
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = ExprAst::bin(op, lhs, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(ExprAst::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(k) => match u32::try_from(&k) {
                Ok(k) => {
                    self.bump();
                    Ok(ExprAst::Pow(Box::new(base), k))
                }
                Err(_) => self.fail(&["an exponent below 2^32"]),
            },
            _ => self.fail(&["a nonnegative integer exponent"]),
        }
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        const ATOM: &[&str] = &["a number", "`(`", "a function", "a generator", "a symbol"];
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(ExprAst::Atom(Atom::Int(v)))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let at = self.offset();
                self.bump();
                let call = *self.peek() == Tok::LParen;
                if call {
                    self.bump();
                }
                let atom = match (name.as_str(), call) {
                    ("c", true) => ExprAst::Atom(Atom::Gen(GenAction::C, self.covector()?)),
                    ("cb", true) => ExprAst::Atom(Atom::Gen(GenAction::CBar, self.covector()?)),
                    ("dxnc", true) => {
                        match self.peek() {
                            Tok::Ident(s) if s == "xi'" => {
                                self.bump();
                            }
                            _ => return self.fail(&["`xi'`"]),
                        }
                        ExprAst::Atom(Atom::DxnCXiPrime)
                    }
                    (f, true) => match Func::from_name(f) {
                        Some(func) => ExprAst::Call(func, Box::new(self.expr()?)),
                        None => {
                            return Err(ParseError {
                                offset: at,
                                expected: vec!["a function name".into()],
                                found: format!("`{name}`"),
                            })
                        }
                    },
                    ("i", false) => return Ok(ExprAst::Atom(Atom::I)),
                    ("xin", false) => return Ok(ExprAst::Atom(Atom::Xin)),
                    (s, false) if s.parse::<SymbolId>().is_ok() && Func::from_name(s).is_none() => {
                        return Ok(ExprAst::Atom(Atom::Symbol(name)))
                    }
                    _ => {
                        return Err(ParseError { offset: at, expected: vec!["a known symbol".into()], found: format!("`{name}`") })
                    }
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok(atom)
            }
            _ => self.fail(ATOM),
        }
    }

    fn covector(&mut self) -> Result<Covector, ParseError> {
        const NAMES: &[&str] = &["e1..en", "`dxn`", "`xi'`", "`xi`", "`theta`", "`thetap`"];
        let Tok::Ident(name) = self.peek().clone() else {
            return self.fail(NAMES);
        };
        let v = match name.as_str() {
            "dxn" => Covector::Dxn,
            "xi'" => Covector::XiPrime,
            "xi" => Covector::Xi,
            "theta" => Covector::Theta,
            "thetap" => Covector::ThetaP,
            s => match s.strip_prefix('e').and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if k >= 1 && !s[1..].starts_with('0') => Covector::E(k),
                _ => return self.fail(NAMES),
            },
        };
        self.bump();
        Ok(v)
    }
}

pub fn parse_expr(input: &str) -> Result<ExprAst, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["an operator", "end of input"]);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse_expr("1 + 2 * xin^2 - -i").unwrap();
        assert_eq!(e.to_string(), "1 + 2 * xin^2 - -i");
        let ExprAst::Bin(BinOp::Sub, lhs, _) = &e else { panic!("{e:?}") };
        assert!(matches!(**lhs, ExprAst::Bin(BinOp::Add, ..)));
    }

    #[test]
    fn unclosed_call() {
        let err = parse_expr("tr(").unwrap_err();
        assert_eq!(err.offset, 3);
        assert_eq!(err.found, "end of input");
    }

    #[test]
    fn generators() {
        for text in ["c(xi')", "cb(e3)", "c(dxn)", "dxnc(xi')", "cb(theta)", "c(thetap)"] {
            assert_eq!(parse_expr(text).unwrap().to_string(), text);
        }
        assert!(parse_expr("c(e0)").is_err());
        assert!(parse_expr("foo").is_err());
        assert!(parse_expr("tr").is_err());
    }
}

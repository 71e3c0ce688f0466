//! Expression language, suite runner and golden snapshots behind the
//! `kkwcas` binary.

mod ast;
mod eval;
mod parser;
mod run;

pub use ast::{Atom, BinOp, Covector, ExprAst, Func, GenAction};
pub use eval::{eval_expr, EvalError, Evaluator};
pub use parser::{parse_expr, ParseError};
pub use run::{
    golden_diff, golden_dir, golden_path, run, verify, Command, ReportDocument, ReportFormat, GOLDEN_DIR_ENV,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("evaluation error: {0}")]
    Eval(#[from] EvalError),
    #[error("unknown suite `{0}` (expected one of kkw4, kkw4sq, kkw6, kkw6cu, interior, lemmas, spectral)")]
    UnknownSuite(String),
    #[error("bad flag: {0}")]
    BadFlag(String),
    #[error("i/o: {0}")]
    Io(String),
}

/// Evaluates `text` in dimension `n` and prints the canonical value.
pub fn eval_str(text: &str, n: usize) -> Result<String, CliError> {
    let ast = parse_expr(text)?;
    Ok(Evaluator::new(n)?.eval(&ast)?.to_string())
}

//! Python bindings: `import pykkwcas`.
//!
//! Every binding is a thin wrapper over a plain Rust function in [`api`],
//! so the logic is testable without an interpreter.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

pub mod api {
    use kkwcas::cli::{self, ReportFormat};
    use kkwcas::kkw::SuiteId;
    use kkwcas::spectral::{heat_coefficients, CurvatureData};

    pub fn eval(expr: &str, dim: usize) -> Result<String, String> {
        cli::eval_str(expr, dim).map_err(|e| e.to_string())
    }

    /// Report text and whether every record matched.
    pub fn verify(suite: &str, dim: Option<usize>, parallel: Option<usize>, json: bool) -> Result<(String, bool), String> {
        let format = if json { ReportFormat::Json } else { ReportFormat::Text };
        let doc = cli::verify(suite, dim, format, None, parallel, false).map_err(|e| e.to_string())?;
        Ok((doc.render(), doc.passed()))
    }

    pub fn suites() -> Vec<String> {
        SuiteId::ALL.iter().map(|s| s.name().to_string()).collect()
    }

    /// a₄ coefficients on a closed 4-manifold, as exact rationals in text.
    pub fn a4_vector() -> Result<Vec<String>, String> {
        let c = heat_coefficients(&CurvatureData::symbolic(4), true).map_err(|e| e.to_string())?;
        Ok(c.a4_vector.entries().iter().map(|x| x.to_string()).collect())
    }
}

fn value_error(e: String) -> PyErr {
    PyValueError::new_err(e)
}

/// Evaluate an expression in dimension `dim` and return its canonical text.
#[pyfunction]
#[pyo3(signature = (expr, dim = 4))]
fn eval(expr: &str, dim: usize) -> PyResult<String> {
    api::eval(expr, dim).map_err(value_error)
}

/// Run a suite; returns `(report, passed)`.
#[pyfunction]
#[pyo3(signature = (suite, dim = None, parallel = None, json = true))]
fn verify(py: Python<'_>, suite: &str, dim: Option<usize>, parallel: Option<usize>, json: bool) -> PyResult<(String, bool)> {
    py.detach(|| api::verify(suite, dim, parallel, json)).map_err(value_error)
}

#[pyfunction]
fn suites() -> Vec<String> {
    api::suites()
}

#[pyfunction]
fn a4_vector() -> PyResult<Vec<String>> {
    api::a4_vector().map_err(value_error)
}

#[pymodule]
fn pykkwcas(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(eval, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(suites, m)?)?;
    m.add_function(wrap_pyfunction!(a4_vector, m)?)?;
    Ok(())
}

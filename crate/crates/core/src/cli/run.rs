use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::{parse_expr, CliError, Evaluator};
use crate::kkw::{verify_suite_with, SuiteId, SuiteOptions, SuiteReport};

/// Overrides the golden directory (default: `goldens/` in the crate root).
pub const GOLDEN_DIR_ENV: &str = "KKW_GOLDEN_DIR";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub enum Command {
    Eval { expr: String, dim: usize },
    Verify { suite: String, dim: Option<usize>, format: ReportFormat, golden: Option<PathBuf>, parallel: Option<usize>, flip_b02: bool },
    Goldens { write: bool, dir: Option<PathBuf> },
}

/// A suite report plus the optional snapshot comparison, in one format.
#[derive(Clone, Debug)]
pub struct ReportDocument {
    pub format: ReportFormat,
    pub report: SuiteReport,
    /// `(id, golden, computed)` for lines that differ from the snapshot.
    pub golden_diffs: Option<Vec<(String, String, String)>>,
}

impl ReportDocument {
    pub fn passed(&self) -> bool {
        self.report.all_match() && self.golden_diffs.as_ref().is_none_or(|d| d.is_empty())
    }

    pub fn render(&self) -> String {
        match self.format {
            ReportFormat::Json => {
                let mut out = self.report.to_json();
                out.push('\n');
                out
            }
            ReportFormat::Text => {
                let mut out = self.report.to_string();
                if !out.ends_with('\n') {
                    out.push('\n');
                }
                if let Some(diffs) = &self.golden_diffs {
                    if diffs.is_empty() {
                        out.push_str("golden: identical\n");
                    }
                    for (id, want, got) in diffs {
                        out.push_str(&format!("golden mismatch {id}\n    golden:   {want}\n    computed: {got}\n"));
                    }
                }
                out
            }
        }
    }
}

pub fn golden_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    match std::env::var_os(GOLDEN_DIR_ENV) {
        Some(p) => PathBuf::from(p),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("goldens"),
    }
}

pub fn golden_path(dir: &Path, suite: SuiteId) -> PathBuf {
    dir.join(format!("{}.golden", suite.name()))
}

fn parse_golden(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|l| l.split_once('\t'))
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

/// Lines of `report` that differ from `golden` (missing or extra ids count).
pub fn golden_diff(report: &SuiteReport, golden: &str) -> Vec<(String, String, String)> {
    let want = parse_golden(golden);
    let got = parse_golden(&report.golden_lines());
    let mut diffs = Vec::new();
    for (id, g) in &got {
        match want.iter().find(|(k, _)| k == id) {
            Some((_, w)) if w == g => {}
            Some((_, w)) => diffs.push((id.clone(), w.clone(), g.clone())),
            None => diffs.push((id.clone(), "<absent>".into(), g.clone())),
        }
    }
    for (id, w) in &want {
        if !got.iter().any(|(k, _)| k == id) {
            diffs.push((id.clone(), w.clone(), "<absent>".into()));
        }
    }
    diffs
}

pub fn verify(
    suite: &str,
    dim: Option<usize>,
    format: ReportFormat,
    golden: Option<&Path>,
    parallel: Option<usize>,
    flip_b02: bool,
) -> Result<ReportDocument, CliError> {
    let id: SuiteId = suite.parse().map_err(|_| CliError::UnknownSuite(suite.to_string()))?;
    if let Some(d) = dim {
        match id.fixed_dim() {
            Some(fixed) if fixed != d => {
                return Err(CliError::BadFlag(format!("--dim {d}: suite {id} runs in dimension {fixed}")))
            }
            None if d != 4 && d != 6 => return Err(CliError::BadFlag(format!("--dim {d}: only 4 and 6 are tabulated"))),
            _ => {}
        }
    }
    if parallel == Some(0) {
        return Err(CliError::BadFlag("--parallel 0".into()));
    }
    let report = verify_suite_with(id, &SuiteOptions { parallel, dim, flip_b02 });
    let golden_diffs = match golden {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            Some(golden_diff(&report, &text))
        }
        None => None,
    };
    Ok(ReportDocument { format, report, golden_diffs })
}

/// Runs one command; returns the process exit status (0 iff everything matched).
pub fn run(cmd: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    match cmd {
        Command::Eval { expr, dim } => {
            let ast = parse_expr(expr)?;
            let value = Evaluator::new(*dim)?.eval(&ast)?;
            writeln!(out, "{value}").map_err(io)?;
            Ok(0)
        }
        Command::Verify { suite, dim, format, golden, parallel, flip_b02 } => {
            let doc = verify(suite, *dim, *format, golden.as_deref(), *parallel, *flip_b02)?;
            out.write_all(doc.render().as_bytes()).map_err(io)?;
            Ok(if doc.passed() { 0 } else { 1 })
        }
        Command::Goldens { write, dir } => {
            let dir = golden_dir(dir.as_deref());
            if *write {
                std::fs::create_dir_all(&dir).map_err(io)?;
            }
            let mut status = 0;
            for id in SuiteId::ALL {
                let report = verify_suite_with(id, &SuiteOptions::default());
                let path = golden_path(&dir, id);
                if *write {
                    std::fs::write(&path, report.golden_lines()).map_err(io)?;
                    writeln!(out, "wrote {}", path.display()).map_err(io)?;
                    continue;
                }
                let text = std::fs::read_to_string(&path).unwrap_or_default();
                let diffs = golden_diff(&report, &text);
                if diffs.is_empty() {
                    writeln!(out, "{id}: identical").map_err(io)?;
                } else {
                    status = 1;
                    writeln!(out, "{id}: {} line(s) differ from {}", diffs.len(), path.display()).map_err(io)?;
                    for (k, want, got) in diffs {
                        writeln!(out, "  {k}\n    golden:   {want}\n    computed: {got}").map_err(io)?;
                    }
                }
            }
            Ok(status)
        }
    }
}

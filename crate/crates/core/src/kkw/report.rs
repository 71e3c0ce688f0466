use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermEntry {
    pub source: String,
    pub value: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: String,
    pub expected: String,
    pub computed: String,
    #[serde(rename = "match")]
    pub matched: bool,
    pub terms: Vec<TermEntry>,
}

impl CaseRecord {
    pub fn new(id: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>, matched: bool) -> Self {
        CaseRecord { id: id.into(), expected: expected.into(), computed: computed.into(), matched, terms: Vec::new() }
    }

    pub fn with_terms(mut self, terms: Vec<TermEntry>) -> Self {
        self.terms = terms;
        self
    }

    /// A record that could not be computed; never matches.
    pub fn failed(id: impl Into<String>, expected: impl Into<String>, err: impl fmt::Display) -> Self {
        CaseRecord::new(id, expected, format!("error: {err}"), false)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, cases: Vec<CaseRecord>) -> Self {
        let passed = cases.iter().filter(|c| c.matched).count();
        let summary = Summary { passed, failed: cases.len() - passed };
        SuiteReport { suite: suite.into(), cases, summary }
    }

    pub fn all_match(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn case(&self, id: &str) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// `case_id<TAB>computed` per record, the golden-file format.
    pub fn golden_lines(&self) -> String {
        self.cases.iter().map(|c| format!("{}\t{}\n", c.id, c.computed)).collect()
    }
}

impl fmt::Display for SuiteReport {
    /// Text rendering; ledger lines are shown for every record.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.cases {
            writeln!(f, "[{}] {}", if c.matched { "ok" } else { "MISMATCH" }, c.id)?;
            writeln!(f, "    expected: {}", c.expected)?;
            writeln!(f, "    computed: {}", c.computed)?;
            for t in &c.terms {
                writeln!(f, "      {:<14} {}", t.source, t.value)?;
            }
        }
        writeln!(f, "passed {} failed {}", self.summary.passed, self.summary.failed)
    }
}

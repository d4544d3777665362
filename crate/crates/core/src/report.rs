use serde::{Deserialize, Serialize};

/// One named check with its verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub clause: String,
    pub pass: bool,
    pub detail: String,
}

impl Clause {
    pub fn new(clause: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            clause: clause.into(),
            pass,
            detail: detail.into(),
        }
    }
}

pub fn all_pass(clauses: &[Clause]) -> bool {
    clauses.iter().all(|c| c.pass)
}

/// Text rendering shared by the reports: one `[PASS]`/`[FAIL]` line per clause.
pub fn render_clauses(clauses: &[Clause]) -> String {
    let mut out = String::new();
    for c in clauses {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{tag}] {}: {}\n", c.clause, c.detail));
    }
    out
}

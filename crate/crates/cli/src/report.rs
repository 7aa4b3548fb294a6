//! Plain-text run reports: free-form info lines, one `CHECK <anchor> PASS|FAIL`
//! line per assertion, and a single-line summary record at the end.

use std::fmt::{self, Display};

use anyhow::{bail, Result};

#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<String>,
    passed: usize,
    failed: usize,
    work: u64,
    max_work: Option<u64>,
}

impl Report {
    pub fn new(max_work: Option<u64>) -> Report {
        Report {
            max_work,
            ..Report::default()
        }
    }

    pub fn info(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn check(&mut self, anchor: impl Display, ok: bool) -> bool {
        let verdict = if ok { "PASS" } else { "FAIL" };
        self.lines.push(format!("CHECK {anchor} {verdict}"));
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        ok
    }

    /// Charges `units` against the work budget, failing once it is exhausted.
    pub fn spend(&mut self, units: u64) -> Result<()> {
        self.work = self.work.saturating_add(units);
        if let Some(cap) = self.max_work {
            if self.work > cap {
                bail!(
                    "work limit exceeded: {} units requested, limit {cap}",
                    self.work
                );
            }
        }
        Ok(())
    }

    pub fn failed(&self) -> usize {
        self.failed
    }

    pub fn summary(&self, verb: &str, seed: u64) -> Summary<'_> {
        Summary {
            report: self,
            verb: verb.to_string(),
            seed,
        }
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// The final machine-readable line: a flat JSON object with string and
/// integer fields only.
pub struct Summary<'a> {
    report: &'a Report,
    verb: String,
    seed: u64,
}

impl Display for Summary<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.report;
        write!(
            f,
            "{{\"verb\":\"{}\",\"checks\":{},\"passed\":{},\"failed\":{},\"work\":{},\"seed\":{},\"status\":\"{}\"}}",
            self.verb,
            r.passed + r.failed,
            r.passed,
            r.failed,
            r.work,
            self.seed,
            if r.failed == 0 { "ok" } else { "fail" }
        )
    }
}

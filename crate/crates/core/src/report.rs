use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// One labelled pass/fail line of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub pass: bool,
}

/// Outcome of a verification sweep.
///
/// `checked` counts the individual instances examined; `failures` lists
/// the diagram literals or relation labels that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub sizes: BTreeMap<String, usize>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks.iter().all(|c| c.pass)
    }

    /// Record a labelled check. Failing checks are also listed in `failures`.
    pub fn check(&mut self, label: impl Into<String>, pass: bool) {
        let label = label.into();
        self.checked += 1;
        if !pass {
            self.failures.push(label.clone());
        }
        self.checks.push(Check { label, pass });
    }

    /// Count one examined instance, recording it as a failure if `pass` is
    /// false. Unlike [`Report::check`] nothing is stored for passing cases.
    pub fn tally(&mut self, pass: bool, failure_label: impl FnOnce() -> String) {
        self.checked += 1;
        if !pass {
            self.failures.push(failure_label());
        }
    }

    pub fn size(&mut self, key: impl Into<String>, value: usize) {
        self.sizes.insert(key.into(), value);
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.checks.extend(other.checks);
        for (k, v) in other.sizes {
            self.sizes.insert(format!("{}.{k}", other.name), v);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} checked, {} failures)",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.failures.len()
        )?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", if c.pass { "ok" } else { "FAIL" }, c.label)?;
        }
        for (k, v) in &self.sizes {
            writeln!(f, "  {k} = {v}")?;
        }
        for fail in self
            .failures
            .iter()
            .filter(|l| !self.checks.iter().any(|c| &c.label == *l))
        {
            writeln!(f, "  failure: {fail}")?;
        }
        Ok(())
    }
}

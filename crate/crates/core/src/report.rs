use std::fmt;

/// Outcome of one named check inside a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass { detail: String },
    Fail { witness: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub label: String,
    pub outcome: Outcome,
}

/// Line-oriented pass/fail report. Renders one `PASS`/`FAIL` line per entry,
/// prefixed by the report title.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn pass(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.entries.push(Entry {
            label: label.into(),
            outcome: Outcome::Pass { detail: detail.into() },
        });
    }

    pub fn fail(&mut self, label: impl Into<String>, witness: impl Into<String>) {
        self.entries.push(Entry {
            label: label.into(),
            outcome: Outcome::Fail { witness: witness.into() },
        });
    }

    /// Record a pass with `detail` when `witness` is `None`, a failure otherwise.
    pub fn record(&mut self, label: impl Into<String>, detail: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(label, detail),
            Some(w) => self.fail(label, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| matches!(e.outcome, Outcome::Pass { .. }))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| matches!(e.outcome, Outcome::Fail { .. }))
    }

    pub fn entry(&self, label: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.label == label)
    }

    /// Append every entry of `other`, prefixing labels with its title.
    pub fn absorb(&mut self, other: Report) {
        for mut e in other.entries {
            e.label = format!("{}/{}", other.title, e.label);
            self.entries.push(e);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match &e.outcome {
                Outcome::Pass { detail } if detail.is_empty() => writeln!(f, "PASS {}/{}", self.title, e.label)?,
                Outcome::Pass { detail } => writeln!(f, "PASS {}/{} {}", self.title, e.label, detail)?,
                Outcome::Fail { witness } => writeln!(f, "FAIL {}/{} witness={}", self.title, e.label, witness)?,
            }
        }
        Ok(())
    }
}

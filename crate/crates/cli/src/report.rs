use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// A witness attached to a verdict: a subject and the values certifying
/// it, rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub subject: String,
    pub values: Vec<String>,
}

/// The structured report: stable across runs, one per command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: bool,
    pub axioms: BTreeMap<String, bool>,
    pub witnesses: Vec<Witness>,
    pub reasons: Vec<String>,
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, verdict: bool) -> Self {
        Report {
            command: command.to_string(),
            verdict,
            axioms: BTreeMap::new(),
            witnesses: Vec::new(),
            reasons: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records an axiom outcome; repeated names must all pass.
    pub fn axiom(&mut self, name: &str, passed: bool) {
        *self.axioms.entry(name.to_string()).or_insert(true) &= passed;
    }

    pub fn exit_code(&self) -> i32 {
        if self.verdict {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.verdict { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{}: {verdict}", self.command);
        for (name, passed) in &self.axioms {
            let _ = writeln!(out, "  {name}: {}", if *passed { "ok" } else { "violated" });
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "  witness {}: {}", w.subject, w.values.join(" "));
        }
        for r in &self.reasons {
            let _ = writeln!(out, "  reason: {r}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

//! Verification reports and their two renderings.
//!
//! The machine rendering is a line-delimited JSON stream: a header line, one
//! line per instance (sorted by instance id), and a summary line. It contains
//! nothing that varies between runs, so identical inputs give identical bytes.
//! Wall-clock time appears only in the human rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::budget::Budget;

pub const REPORT_FORMAT: &str = "coind-lab-report/1";

/// One named check of one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Concrete counterexample (indices, tables) when the check failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Every check run on one instance plus the cardinalities it measured.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Record {
    pub id: String,
    pub instance: String,
    pub checks: Vec<Check>,
    pub counts: BTreeMap<String, u64>,
    /// Free-form results (level orders, tables) shown in both renderings.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Record {
    pub fn new(id: impl Into<String>, instance: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            instance: instance.into(),
            ..Self::default()
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, witness: impl FnOnce() -> String) -> bool {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            witness: (!passed).then(witness),
        });
        passed
    }

    pub fn pass(&mut self, name: &str) {
        self.check(name, true, String::new);
    }

    pub fn fail(&mut self, name: &str, witness: impl Into<String>) {
        let w = witness.into();
        self.check(name, false, || w);
    }

    pub fn count(&mut self, name: &str, value: usize) {
        self.counts.insert(name.to_string(), value as u64);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
struct BudgetView {
    group_order: usize,
    hom_source_order: usize,
    hom_target_order: usize,
    map_space: String,
    carrier_order: usize,
    search_nodes: u64,
}

impl From<&Budget> for BudgetView {
    fn from(b: &Budget) -> Self {
        Self {
            group_order: b.group_order,
            hom_source_order: b.hom_source_order,
            hom_target_order: b.hom_target_order,
            map_space: b.map_space.to_string(),
            carrier_order: b.carrier_order,
            search_nodes: b.search_nodes,
        }
    }
}

/// A suite run: its parameters, per-instance records, and timing.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub budget: Budget,
    pub records: Vec<Record>,
    pub wall_time: Option<Duration>,
}

#[derive(Serialize)]
struct Header<'a> {
    format: &'static str,
    kind: &'static str,
    suite: &'a str,
    seed: u64,
    budget: BudgetView,
}

#[derive(Serialize)]
struct InstanceLine<'a> {
    kind: &'static str,
    #[serde(flatten)]
    record: &'a Record,
    verdict: &'static str,
}

#[derive(Serialize)]
struct Summary {
    kind: &'static str,
    instances: usize,
    checks: usize,
    failed_checks: usize,
    verdict: &'static str,
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, budget: &Budget) -> Self {
        Self {
            suite: suite.into(),
            seed,
            budget: *budget,
            records: Vec::new(),
            wall_time: None,
        }
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(Record::passed)
    }

    pub fn instances(&self) -> usize {
        self.records.len()
    }

    pub fn failed_checks(&self) -> usize {
        self.records
            .iter()
            .flat_map(|r| &r.checks)
            .filter(|c| !c.passed)
            .count()
    }

    pub fn total_checks(&self) -> usize {
        self.records.iter().map(|r| r.checks.len()).sum()
    }

    fn sorted(&self) -> Vec<&Record> {
        let mut records: Vec<&Record> = self.records.iter().collect();
        records.sort_by(|a, b| a.id.cmp(&b.id));
        records
    }

    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        let header = Header {
            format: REPORT_FORMAT,
            kind: "header",
            suite: &self.suite,
            seed: self.seed,
            budget: (&self.budget).into(),
        };
        out.push_str(&line(&header));
        for record in self.sorted() {
            out.push_str(&line(&InstanceLine {
                kind: "instance",
                record,
                verdict: verdict(record.passed()),
            }));
        }
        out.push_str(&line(&Summary {
            kind: "summary",
            instances: self.instances(),
            checks: self.total_checks(),
            failed_checks: self.failed_checks(),
            verdict: verdict(self.passed()),
        }));
        out
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (seed {})", self.suite, self.seed);
        for record in self.sorted() {
            let _ = writeln!(
                out,
                "  [{}] {} {}",
                verdict(record.passed()).to_uppercase(),
                record.id,
                record.instance
            );
            if !record.counts.is_empty() {
                let counts: Vec<String> = record
                    .counts
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                let _ = writeln!(out, "         {}", counts.join(" "));
            }
            for note in &record.notes {
                let _ = writeln!(out, "         {note}");
            }
            for check in record.checks.iter().filter(|c| !c.passed) {
                let _ = writeln!(
                    out,
                    "         FAILED {}: {}",
                    check.name,
                    check.witness.as_deref().unwrap_or("")
                );
            }
        }
        let _ = write!(
            out,
            "{}: {} instances, {} checks, {} failed",
            verdict(self.passed()).to_uppercase(),
            self.instances(),
            self.total_checks(),
            self.failed_checks()
        );
        if let Some(t) = self.wall_time {
            let _ = write!(out, " ({:.2}s)", t.as_secs_f64());
        }
        out.push('\n');
        out
    }
}

fn line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report lines serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo", 7, &Budget::default());
        let mut b = Record::new("0002", "second");
        b.pass("x");
        b.count("size", 3);
        let mut a = Record::new("0001", "first");
        a.fail("y", "at 4");
        r.push(b);
        r.push(a);
        r
    }

    #[test]
    fn machine_lines_are_sorted_and_versioned() {
        let text = sample().render_machine();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        let header: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(header["format"], REPORT_FORMAT);
        let first: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(first["id"], "0001");
        assert_eq!(first["verdict"], "fail");
        assert_eq!(first["checks"][0]["witness"], "at 4");
        let summary: serde_json::Value = serde_json::from_str(lines[3]).unwrap();
        assert_eq!(summary["failed_checks"], 1);
    }

    #[test]
    fn wall_time_only_in_human_form() {
        let mut r = sample();
        let before = r.render_machine();
        r.wall_time = Some(Duration::from_millis(1500));
        assert_eq!(before, r.render_machine());
        assert!(r.render_human().contains("1.50s"));
        assert!(r.render_human().contains("FAILED y: at 4"));
    }
}

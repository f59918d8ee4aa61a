use std::fmt::Write;

use serde::Serialize;
use serde_json::json;

use crate::checks::{CheckResult, Verdict};
use crate::demo::DemoReport;

/// One check applied to one subject.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub subject: String,
    #[serde(flatten)]
    pub result: CheckResult,
}

/// Human text and a JSON mirror built from the same entries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub verdict: Verdict,
    pub results: Vec<Entry>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Report {
        Report { command, verdict: Verdict::Pass, results: Vec::new() }
    }

    pub fn push(&mut self, subject: impl Into<String>, result: CheckResult) {
        self.verdict = self.verdict.combine(result.verdict);
        self.results.push(Entry { subject: subject.into(), result });
    }

    pub fn from_demo(command: Vec<String>, demo: &DemoReport) -> Report {
        let mut r = Report::new(command);
        for c in &demo.criteria {
            let mut result = CheckResult::new("criterion");
            result.verdict = c.verdict;
            result.counterexamples = c.counterexamples.clone();
            result.note("details", json!(c.details));
            r.push(format!("{}. {}", c.id, c.title), result);
        }
        r
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("$ {}\n", self.command.join(" "));
        for e in &self.results {
            writeln!(out, "[{}] {} {}", e.result.verdict, e.result.check, e.subject).unwrap();
            for c in &e.result.counterexamples {
                writeln!(out, "    counterexample: {c}").unwrap();
            }
            for (k, v) in &e.result.diagnostics {
                match v.as_array() {
                    Some(items) if items.iter().all(|x| x.is_string()) => {
                        writeln!(out, "    {k}:").unwrap();
                        for x in items {
                            writeln!(out, "      {}", x.as_str().unwrap()).unwrap();
                        }
                    }
                    _ => match v.as_str() {
                        Some(s) => writeln!(out, "    {k}: {s}").unwrap(),
                        None => writeln!(out, "    {k}: {v}").unwrap(),
                    },
                }
            }
        }
        writeln!(out, "verdict: {}", self.verdict).unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{check_degenerate, Counterexample};
    use crate::corpus::bottom_chain_model;

    #[test]
    fn verdict_is_the_worst_entry() {
        let mut r = Report::new(vec!["x".into()]);
        r.push("a", CheckResult::new("t"));
        let mut bad = CheckResult::new("t");
        bad.fail(Counterexample::new("no", vec![]));
        r.push("b", bad);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn mirror_keeps_element_tuples() {
        let mut r = Report::new(vec!["check".into()]);
        r.push("A", check_degenerate(&bottom_chain_model(2)));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["results"][0]["counterexamples"][0]["elements"], json!([["a", "0"], ["b", "1"]]));
        assert!(r.to_text().contains("[fail] degenerate A"));
    }
}

//! Structured scan results: per-check tallies, violations with exact
//! margins, extremes, and the text / line-delimited-records renderers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::radical::RadicalSum;

/// How many violations (and equality witnesses) are stored verbatim per
/// check; later ones are counted but dropped from the listing.
pub const STORED_PER_CHECK: usize = 64;

/// One failed (or contextually reported) check instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Position in the source: edge mask, line number, or sample index.
    pub graph_index: u64,
    /// graph6 of the offending graph; absent for self-contained suites.
    pub graph6: Option<String>,
    pub suite: &'static str,
    pub check: &'static str,
    pub hard: bool,
    /// Exact form of the margin that carried the wrong sign.
    pub margin_exact: String,
    pub margin_decimal: String,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub skipped: u64,
    pub violations: u64,
}

/// Global minimum of `f` over the scan, with its witness.
#[derive(Clone, Debug)]
pub struct Extremes {
    pub min_f: RadicalSum,
    pub graph_index: u64,
    pub graph6: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub source: String,
    pub suites: Vec<&'static str>,
    /// Graphs delivered by the source.
    pub scanned: u64,
    /// Malformed graph6 lines tolerated under skip-bad.
    pub parse_warnings: u64,
    /// (suite, check) → counts; `checked + skipped` instances per check.
    pub tallies: BTreeMap<(&'static str, &'static str), Tally>,
    pub violations: Vec<Violation>,
    /// Violations beyond the per-check storage cap (still counted in
    /// tallies).
    pub dropped_violations: u64,
    pub extremes: Option<Extremes>,
    /// Graphs achieving `f = √2 − 1` (capped listing + full count).
    pub equality_count: u64,
    pub equality_witnesses: Vec<String>,
    /// Full hard-violation count, including dropped ones.
    pub hard_violation_count: u64,
}

impl VerifyReport {
    pub fn hard_violations(&self) -> u64 {
        self.hard_violation_count
    }

    pub fn total_violations(&self) -> u64 {
        self.tallies.values().map(|t| t.violations).sum()
    }

    /// Process exit code: hard violations fail, contextual ones do not.
    pub fn exit_code(&self) -> i32 {
        if self.hard_violations() > 0 {
            1
        } else {
            0
        }
    }

    /// Human-readable summary.
    pub fn render_text(&self, digits: usize) -> String {
        let mut out = String::new();
        out.push_str(&format!("source: {}\n", self.source));
        out.push_str(&format!("suites: {}\n", self.suites.join(", ")));
        out.push_str(&format!("graphs scanned: {}\n", self.scanned));
        if self.parse_warnings > 0 {
            out.push_str(&format!("parse warnings (skipped lines): {}\n", self.parse_warnings));
        }
        for (&(suite, check), tally) in &self.tallies {
            out.push_str(&format!(
                "  {suite}/{check}: checked {}, skipped {}, violations {}\n",
                tally.checked, tally.skipped, tally.violations
            ));
        }
        for v in &self.violations {
            out.push_str(&format!(
                "violation [{}] {}/{} at index {}{}: margin {} ~ {}{}\n",
                if v.hard { "hard" } else { "contextual" },
                v.suite,
                v.check,
                v.graph_index,
                v.graph6
                    .as_deref()
                    .map(|s| format!(" graph6 {s}"))
                    .unwrap_or_default(),
                v.margin_exact,
                v.margin_decimal,
                if v.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", v.detail)
                },
            ));
        }
        if self.dropped_violations > 0 {
            out.push_str(&format!(
                "... {} further violations not listed\n",
                self.dropped_violations
            ));
        }
        if let Some(ext) = &self.extremes {
            out.push_str(&format!(
                "minimum f: {} ~ {} at graph6 {} (index {})\n",
                ext.min_f,
                ext.min_f.decimal(digits),
                ext.graph6,
                ext.graph_index
            ));
            out.push_str(&format!(
                "equality witnesses (f = √2 - 1): {}{}\n",
                self.equality_count,
                if self.equality_witnesses.is_empty() {
                    String::new()
                } else {
                    let listed = self.equality_witnesses.join(" ");
                    let suffix = if (self.equality_witnesses.len() as u64) < self.equality_count {
                        " ..."
                    } else {
                        ""
                    };
                    format!(" [{listed}{suffix}]")
                }
            ));
        }
        let hard = self.hard_violations();
        out.push_str(&format!(
            "result: {} ({} hard / {} total violations, {} scanned)\n",
            if hard == 0 { "PASS" } else { "FAIL" },
            hard,
            self.total_violations(),
            self.scanned
        ));
        out
    }

    /// Line-delimited structured records: one per violation plus a
    /// summary line.
    pub fn render_records(&self, digits: usize) -> String {
        #[derive(Serialize)]
        struct ViolationRecord<'a> {
            record: &'static str,
            #[serde(flatten)]
            violation: &'a Violation,
        }
        #[derive(Serialize)]
        struct ExtremesRecord<'a> {
            min_f_exact: String,
            min_f_decimal: String,
            graph6: &'a str,
            graph_index: u64,
        }
        #[derive(Serialize)]
        struct SummaryRecord<'a> {
            record: &'static str,
            source: &'a str,
            suites: &'a [&'static str],
            scanned: u64,
            parse_warnings: u64,
            hard_violations: u64,
            total_violations: u64,
            dropped_violations: u64,
            tallies: BTreeMap<String, Tally>,
            #[serde(skip_serializing_if = "Option::is_none")]
            extremes: Option<ExtremesRecord<'a>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            equality_count: Option<u64>,
            #[serde(skip_serializing_if = "Vec::is_empty")]
            equality_witnesses: Vec<String>,
        }

        let mut out = String::new();
        for v in &self.violations {
            let rec = ViolationRecord {
                record: "violation",
                violation: v,
            };
            out.push_str(&serde_json::to_string(&rec).expect("serializable"));
            out.push('\n');
        }
        let summary = SummaryRecord {
            record: "summary",
            source: &self.source,
            suites: &self.suites,
            scanned: self.scanned,
            parse_warnings: self.parse_warnings,
            hard_violations: self.hard_violations(),
            total_violations: self.total_violations(),
            dropped_violations: self.dropped_violations,
            tallies: self
                .tallies
                .iter()
                .map(|(&(s, c), t)| (format!("{s}/{c}"), *t))
                .collect(),
            extremes: self.extremes.as_ref().map(|e| ExtremesRecord {
                min_f_exact: e.min_f.to_string(),
                min_f_decimal: e.min_f.decimal(digits),
                graph6: &e.graph6,
                graph_index: e.graph_index,
            }),
            equality_count: self.extremes.is_some().then_some(self.equality_count),
            equality_witnesses: self.equality_witnesses.clone(),
        };
        out.push_str(&serde_json::to_string(&summary).expect("serializable"));
        out.push('\n');
        out
    }
}

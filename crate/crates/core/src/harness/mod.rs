//! Verification harness: graph sources, the suite registry, the
//! parallel scan driver, and structured reports.
//!
//! The three entry points mirror the CLI:
//! - [`verify_conjecture`] runs the path-minimum suite (the main
//!   inequality, its equality class, and the two corollary gaps);
//! - [`verify_lemmas`] runs a named selection of lemma suites;
//! - [`verify_constants`] runs the closed-form suite.

pub mod report;
pub mod scan;
pub mod source;
pub mod suites;

pub use report::{Extremes, Tally, VerifyReport, Violation};
pub use scan::{scan, scan_graphs, ScanOptions, Sink};
pub use source::{random_gnp, random_tree, sample_rng, GraphSource, SourceError};
pub use suites::{default_lemma_suites, registry, suite_by_name, Suite, SuiteKind, SuiteScope};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error("unknown suite {0:?} (known: {1})")]
    UnknownSuite(String, String),
}

fn known_suites() -> String {
    registry()
        .iter()
        .map(|s| s.name())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Resolves user-supplied suite names against the registry.
pub fn resolve_suites(names: &[String]) -> Result<Vec<&'static dyn Suite>, HarnessError> {
    names
        .iter()
        .map(|n| {
            suite_by_name(n).ok_or_else(|| HarnessError::UnknownSuite(n.clone(), known_suites()))
        })
        .collect()
}

/// Scans the source against the path-minimum suite.
pub fn verify_conjecture(
    source: &GraphSource,
    opts: ScanOptions,
) -> Result<VerifyReport, HarnessError> {
    let suites = [suite_by_name("path-minimum").expect("registered")];
    Ok(scan(Some(source), &suites, opts)?)
}

/// Scans the source against the selected lemma suites (the default set
/// when `names` is `None`).
pub fn verify_lemmas(
    source: &GraphSource,
    names: Option<&[String]>,
    opts: ScanOptions,
) -> Result<VerifyReport, HarnessError> {
    let suites = match names {
        Some(names) => resolve_suites(names)?,
        None => default_lemma_suites(),
    };
    Ok(scan(Some(source), &suites, opts)?)
}

/// Runs the closed-form constants suite; needs no graph source.
pub fn verify_constants(opts: ScanOptions) -> Result<VerifyReport, HarnessError> {
    let suites = [suite_by_name("closed-forms").expect("registered")];
    Ok(scan(None, &suites, opts)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjecture_over_exhaustive_n4() {
        let report = verify_conjecture(
            &GraphSource::Exhaustive { n: 4 },
            ScanOptions { workers: 2, digits: 6 },
        )
        .unwrap();
        assert_eq!(report.scanned, 38, "labeled connected graphs on 4 vertices");
        assert_eq!(report.hard_violations(), 0);
        // 4! / 2 labelings of the path achieve the minimum.
        assert_eq!(report.equality_count, 12);
        let extremes = report.extremes.unwrap();
        assert_eq!(extremes.min_f, crate::invariants::f_floor());
    }

    #[test]
    fn lemmas_over_exhaustive_n4_are_clean() {
        let report = verify_lemmas(
            &GraphSource::Exhaustive { n: 4 },
            None,
            ScanOptions { workers: 2, digits: 6 },
        )
        .unwrap();
        assert_eq!(report.hard_violations(), 0, "{}", report.render_text(6));
    }

    #[test]
    fn unknown_suite_is_rejected() {
        let err = verify_lemmas(
            &GraphSource::Exhaustive { n: 3 },
            Some(&["nope".to_string()]),
            ScanOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, HarnessError::UnknownSuite(..)));
    }

    #[test]
    fn constants_verify_cleanly() {
        let report = verify_constants(ScanOptions::default()).unwrap();
        assert_eq!(report.hard_violations(), 0, "{}", report.render_text(6));
        assert_eq!(report.scanned, 0);
    }

    #[test]
    fn skip_accounting_covers_every_scanned_graph() {
        // Sparse G(8, 0.1) samples are mostly disconnected; the
        // conjecture check skips those, and checked + skipped must add
        // back up to the source cardinality.
        let source = GraphSource::Gnp { n: 8, p: 0.1, count: 200, seed: 3 };
        let report = verify_conjecture(&source, ScanOptions::default()).unwrap();
        assert_eq!(report.scanned, 200);
        let t = report.tallies[&("path-minimum", "f-at-least-floor")];
        assert_eq!(t.checked + t.skipped, report.scanned);
        assert!(t.skipped > 0);
        assert!(t.checked > 0);
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let source = GraphSource::Gnp {
            n: 14,
            p: 0.3,
            count: 60,
            seed: 11,
        };
        let one = verify_lemmas(&source, None, ScanOptions { workers: 1, digits: 6 }).unwrap();
        let eight = verify_lemmas(&source, None, ScanOptions { workers: 8, digits: 6 }).unwrap();
        assert_eq!(one.render_records(6), eight.render_records(6));
    }

    #[test]
    fn graph6_file_scan_reports_line_numbers_and_skips() {
        let dir = std::env::temp_dir().join(format!("randic-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("mixed.g6");
        std::fs::write(&path, "Bw\n!!\nBW\n").unwrap();

        let strict = scan(
            Some(&GraphSource::Graph6File { path: path.clone(), skip_bad: false }),
            &[suite_by_name("path-minimum").unwrap()],
            ScanOptions::default(),
        );
        match strict {
            Err(SourceError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected a parse error, got {other:?}"),
        }

        let lenient = scan(
            Some(&GraphSource::Graph6File { path: path.clone(), skip_bad: true }),
            &[suite_by_name("path-minimum").unwrap()],
            ScanOptions::default(),
        )
        .unwrap();
        assert_eq!(lenient.scanned, 2);
        assert_eq!(lenient.parse_warnings, 1);
        std::fs::remove_file(&path).ok();
    }
}

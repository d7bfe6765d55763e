//! Parallel scan driver: feeds graphs from a source through the
//! selected suites and merges per-worker findings associatively, so the
//! report is identical for any worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::format::{parse_graph6, to_graph6};
use crate::graph::Graph;
use crate::interval::Interval;
use crate::radical::RadicalSum;

use super::report::{Extremes, Tally, VerifyReport, Violation, STORED_PER_CHECK};
use super::source::{connected_graph_for_mask, mask_count, sample_rng, GraphSource, SourceError};
use super::suites::{Suite, SuiteScope};

/// Scan configuration.
#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub workers: usize,
    /// Fraction digits for decimal renderings inside the report.
    pub digits: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { workers: 1, digits: 6 }
    }
}

/// Per-worker accumulation; merged pairwise by [`merge`].
#[derive(Default)]
pub(super) struct LocalAcc {
    scanned: u64,
    parse_warnings: u64,
    tallies: BTreeMap<(&'static str, &'static str), Tally>,
    /// Sorted by graph index (drivers feed indices in ascending order).
    violations: Vec<Violation>,
    hard_count: u64,
    dropped: u64,
    min_f: Option<(RadicalSum, u64, String)>,
    eq_count: u64,
    eq_witnesses: Vec<(u64, String)>,
    first_error: Option<(u64, String)>,
}

/// Recording interface handed to suites; one per (graph, suite) pair.
pub struct Sink<'a> {
    acc: &'a mut LocalAcc,
    suite: &'static str,
    hard: bool,
    graph_index: u64,
    graph: Option<&'a Graph>,
    graph6: Option<String>,
    digits: usize,
}

impl Sink<'_> {
    fn graph6_memo(&mut self) -> Option<String> {
        if self.graph6.is_none() {
            self.graph6 = self.graph.map(to_graph6);
        }
        self.graph6.clone()
    }

    fn tally(&mut self, check: &'static str) -> &mut Tally {
        self.acc.tallies.entry((self.suite, check)).or_default()
    }

    pub fn checked(&mut self, check: &'static str) {
        self.tally(check).checked += 1;
    }

    pub fn skipped(&mut self, check: &'static str) {
        self.tally(check).skipped += 1;
    }

    fn push_violation(
        &mut self,
        check: &'static str,
        margin_exact: String,
        margin_decimal: String,
        detail: String,
    ) {
        let tally = self.tally(check);
        tally.violations += 1;
        let stored = tally.violations as usize;
        if self.hard {
            self.acc.hard_count += 1;
        }
        if stored > STORED_PER_CHECK {
            self.acc.dropped += 1;
            return;
        }
        let graph6 = self.graph6_memo();
        self.acc.violations.push(Violation {
            graph_index: self.graph_index,
            graph6,
            suite: self.suite,
            check,
            hard: self.hard,
            margin_exact,
            margin_decimal,
            detail,
        });
    }

    /// Violation whose margin is an exact radical sum.
    pub fn violation(&mut self, check: &'static str, margin: &RadicalSum, detail: String) {
        self.push_violation(check, margin.to_string(), margin.decimal(self.digits), detail);
    }

    /// Violation whose margin is a certified enclosure.
    pub fn violation_enclosure(&mut self, check: &'static str, margin: &Interval, detail: String) {
        let digits = self.digits;
        let lo = RadicalSum::from_rational(margin.lo.clone()).decimal(digits);
        let hi = RadicalSum::from_rational(margin.hi.clone()).decimal(digits);
        self.push_violation(check, format!("[{lo}, {hi}]"), lo, detail);
    }

    /// Violation with no numeric margin (aborts, missing witnesses).
    pub fn violation_plain(&mut self, check: &'static str, detail: String) {
        self.push_violation(check, "-".into(), "-".into(), detail);
    }

    /// Feeds the extremes tracker and the equality-witness list.
    pub fn record_f(&mut self, f: &RadicalSum, is_equality: bool) {
        let graph6 = self.graph6_memo().unwrap_or_default();
        let index = self.graph_index;
        let better = match &self.acc.min_f {
            None => true,
            Some((best, best_index, _)) => match f.cmp_exact(best) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => index < *best_index,
                std::cmp::Ordering::Greater => false,
            },
        };
        if better {
            self.acc.min_f = Some((f.clone(), index, graph6.clone()));
        }
        if is_equality {
            self.acc.eq_count += 1;
            if self.acc.eq_witnesses.len() < STORED_PER_CHECK {
                self.acc.eq_witnesses.push((index, graph6));
            }
        }
    }
}

fn process_graph(
    mut acc: LocalAcc,
    index: u64,
    graph: &Graph,
    suites: &[&'static dyn Suite],
    digits: usize,
) -> LocalAcc {
    acc.scanned += 1;
    for suite in suites {
        if suite.scope() != SuiteScope::PerGraph {
            continue;
        }
        let mut sink = Sink {
            acc: &mut acc,
            suite: suite.name(),
            hard: suite.kind().is_hard(),
            graph_index: index,
            graph: Some(graph),
            graph6: None,
            digits,
        };
        suite.check_graph(graph, &mut sink);
    }
    acc
}

fn merge(mut a: LocalAcc, mut b: LocalAcc) -> LocalAcc {
    if b.scanned == 0 && b.tallies.is_empty() && b.first_error.is_none() {
        return a;
    }
    a.scanned += b.scanned;
    a.parse_warnings += b.parse_warnings;
    a.hard_count += b.hard_count;
    a.dropped += b.dropped;
    for (key, tally) in b.tallies {
        let entry = a.tallies.entry(key).or_default();
        entry.checked += tally.checked;
        entry.skipped += tally.skipped;
        entry.violations += tally.violations;
    }

    // Merge the index-sorted violation lists, re-capping per check.
    if !b.violations.is_empty() || !a.violations.is_empty() {
        let mut merged = Vec::with_capacity(a.violations.len() + b.violations.len());
        {
            let mut left = a.violations.drain(..).peekable();
            let mut right = b.violations.drain(..).peekable();
            loop {
                let take_left = match (left.peek(), right.peek()) {
                    (Some(l), Some(r)) => l.graph_index <= r.graph_index,
                    (Some(_), None) => true,
                    (None, Some(_)) => false,
                    (None, None) => break,
                };
                merged.push(if take_left {
                    left.next().unwrap()
                } else {
                    right.next().unwrap()
                });
            }
        }
        let mut kept_per_check: BTreeMap<(&'static str, &'static str), usize> = BTreeMap::new();
        let mut kept = Vec::with_capacity(merged.len());
        for v in merged {
            let count = kept_per_check.entry((v.suite, v.check)).or_insert(0);
            if *count < STORED_PER_CHECK {
                *count += 1;
                kept.push(v);
            } else {
                a.dropped += 1;
            }
        }
        a.violations = kept;
    }

    a.min_f = match (a.min_f.take(), b.min_f.take()) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => match x.0.cmp_exact(&y.0) {
            std::cmp::Ordering::Less => Some(x),
            std::cmp::Ordering::Greater => Some(y),
            std::cmp::Ordering::Equal => Some(if x.1 <= y.1 { x } else { y }),
        },
    };

    a.eq_count += b.eq_count;
    let mut witnesses = std::mem::take(&mut a.eq_witnesses);
    witnesses.append(&mut b.eq_witnesses);
    witnesses.sort_by_key(|(i, _)| *i);
    witnesses.truncate(STORED_PER_CHECK);
    a.eq_witnesses = witnesses;

    a.first_error = match (a.first_error.take(), b.first_error.take()) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
    };
    a
}

/// Runs the selected suites over a source (when given) on `workers`
/// threads. Self-contained suites run once regardless of the source.
pub fn scan(
    source: Option<&GraphSource>,
    suites: &[&'static dyn Suite],
    opts: ScanOptions,
) -> Result<VerifyReport, SourceError> {
    if let Some(source) = source {
        source.validate()?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| SourceError::BadParameter(format!("thread pool: {e}")))?;

    let mut acc = match source {
        None => LocalAcc::default(),
        Some(GraphSource::Exhaustive { n }) => {
            let n = *n;
            pool.install(|| {
                (0..mask_count(n) as usize)
                    .into_par_iter()
                    .with_min_len(4096)
                    .fold(LocalAcc::default, |acc, mask| {
                        match connected_graph_for_mask(n, mask as u64) {
                            Some(g) => process_graph(acc, mask as u64, &g, suites, opts.digits),
                            None => acc,
                        }
                    })
                    .reduce(LocalAcc::default, merge)
            })
        }
        Some(GraphSource::Graph6File { path, skip_bad }) => {
            let text = std::fs::read_to_string(path).map_err(|e| SourceError::Io {
                path: path.clone(),
                message: e.to_string(),
            })?;
            let lines: Vec<&str> = text.lines().collect();
            let skip_bad = *skip_bad;
            let acc = pool.install(|| {
                lines
                    .par_iter()
                    .enumerate()
                    .with_min_len(256)
                    .fold(LocalAcc::default, |mut acc, (i, line)| {
                        let index = (i + 1) as u64; // report line numbers
                        match parse_graph6(line) {
                            Ok(g) => process_graph(acc, index, &g, suites, opts.digits),
                            Err(e) => {
                                if skip_bad {
                                    acc.parse_warnings += 1;
                                } else if acc.first_error.is_none() {
                                    acc.first_error = Some((index, e.to_string()));
                                }
                                acc
                            }
                        }
                    })
                    .reduce(LocalAcc::default, merge)
            });
            if let Some((line, message)) = &acc.first_error {
                return Err(SourceError::Parse {
                    path: path.clone(),
                    line: *line as usize,
                    message: message.clone(),
                });
            }
            acc
        }
        Some(GraphSource::Gnp { n, p, count, seed }) => {
            let (n, p, seed) = (*n, *p, *seed);
            pool.install(|| {
                (0..*count as usize)
                    .into_par_iter()
                    .with_min_len(64)
                    .fold(LocalAcc::default, |acc, i| {
                        let g = super::source::random_gnp(n, p, &mut sample_rng(seed, i as u64));
                        process_graph(acc, i as u64, &g, suites, opts.digits)
                    })
                    .reduce(LocalAcc::default, merge)
            })
        }
        Some(GraphSource::Trees { n, count, seed }) => {
            let (n, seed) = (*n, *seed);
            pool.install(|| {
                (0..*count as usize)
                    .into_par_iter()
                    .with_min_len(64)
                    .fold(LocalAcc::default, |acc, i| {
                        let g = super::source::random_tree(n, &mut sample_rng(seed, i as u64));
                        process_graph(acc, i as u64, &g, suites, opts.digits)
                    })
                    .reduce(LocalAcc::default, merge)
            })
        }
    };

    // Self-contained suites contribute once.
    for suite in suites {
        if suite.scope() != SuiteScope::SelfContained {
            continue;
        }
        let mut sink = Sink {
            acc: &mut acc,
            suite: suite.name(),
            hard: suite.kind().is_hard(),
            graph_index: 0,
            graph: None,
            graph6: None,
            digits: opts.digits,
        };
        suite.run_self_contained(&mut sink);
    }

    Ok(finish(acc, source.map_or_else(|| "none".into(), GraphSource::describe), suites))
}

/// Convenience for tests and fixtures: scan an in-memory list of graphs
/// on the current thread.
pub fn scan_graphs(
    graphs: &[Graph],
    suites: &[&'static dyn Suite],
    opts: ScanOptions,
) -> VerifyReport {
    let mut acc = graphs
        .iter()
        .enumerate()
        .fold(LocalAcc::default(), |acc, (i, g)| {
            process_graph(acc, i as u64, g, suites, opts.digits)
        });
    for suite in suites {
        if suite.scope() != SuiteScope::SelfContained {
            continue;
        }
        let mut sink = Sink {
            acc: &mut acc,
            suite: suite.name(),
            hard: suite.kind().is_hard(),
            graph_index: 0,
            graph: None,
            graph6: None,
            digits: opts.digits,
        };
        suite.run_self_contained(&mut sink);
    }
    finish(acc, "in-memory".into(), suites)
}

fn finish(acc: LocalAcc, source: String, suites: &[&'static dyn Suite]) -> VerifyReport {
    let has_extremes = acc.min_f.is_some();
    VerifyReport {
        source,
        suites: suites.iter().map(|s| s.name()).collect(),
        scanned: acc.scanned,
        parse_warnings: acc.parse_warnings,
        tallies: acc.tallies,
        violations: acc.violations,
        dropped_violations: acc.dropped,
        extremes: acc.min_f.map(|(min_f, graph_index, graph6)| Extremes {
            min_f,
            graph_index,
            graph6,
        }),
        equality_count: if has_extremes { acc.eq_count } else { 0 },
        equality_witnesses: acc.eq_witnesses.into_iter().map(|(_, g)| g).collect(),
        hard_violation_count: acc.hard_count,
    }
}

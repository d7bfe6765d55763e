//! Acceptance gate: every exit criterion re-verified from scratch, one
//! pass/fail line per criterion (`--nocapture` to see them).
//!
//! All verdicts are exact; the only tolerances below are on decimal
//! rendering, never on a comparison.

use std::time::Instant;

use randic_core::format::{parse_graph6, to_graph6};
use randic_core::graph::Graph;
use randic_core::harness::{
    scan, suite_by_name, verify_conjecture, verify_constants, verify_lemmas, GraphSource,
    ScanOptions, Suite, VerifyReport,
};
use randic_core::invariants::f_floor;
use randic_core::radical::{RadicalSum, Rational};

use num::{BigInt, One};
use rayon::prelude::*;

fn criterion(number: u32, pass: bool, detail: &str) {
    println!(
        "criterion {number}: {} - {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number} failed: {detail}");
}

/// Independent oracle: labeled connected graph counts via the classic
/// recurrence c(n) = 2^C(n,2) − Σ_{k<n} C(n−1,k−1)·c(k)·2^C(n−k,2).
fn connected_counts(max_n: usize) -> Vec<u128> {
    let choose2 = |n: usize| n * n.saturating_sub(1) / 2;
    let mut binom = vec![vec![0u128; max_n + 1]; max_n + 1];
    for n in 0..=max_n {
        binom[n][0] = 1;
        for k in 1..=n {
            binom[n][k] = binom[n - 1][k - 1] + if k < n { binom[n - 1][k] } else { 0 };
        }
    }
    let mut c = vec![0u128; max_n + 1];
    for n in 1..=max_n {
        let mut total = 1u128 << choose2(n);
        for k in 1..n {
            total -= binom[n - 1][k - 1] * c[k] * (1u128 << choose2(n - k));
        }
        c[n] = total;
    }
    c
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn tally(report: &VerifyReport, suite: &'static str, check: &'static str) -> (u64, u64) {
    let t = report.tallies[&(suite, check)];
    (t.checked, t.violations)
}

/// Criteria 1, 2 and 4 share the exhaustive corpus, so one scan per
/// order drives all three; the per-order counts are pinned against the
/// independent recurrence oracle.
#[test]
#[allow(clippy::needless_range_loop)]
fn criteria_1_2_4_exhaustive_theorem_corollaries_reduction() {
    let oracle = connected_counts(7);
    assert_eq!(&oracle[3..=7], &[4, 38, 728, 26_704, 1_866_256]);

    let suites: Vec<&'static dyn Suite> = vec![
        suite_by_name("path-minimum").unwrap(),
        suite_by_name("reduction-audit").unwrap(),
    ];
    let opts = ScanOptions { workers: 2, digits: 6 };

    let mut theorem_ok = true;
    let mut corollary_ok = true;
    let mut reduction_ok = true;
    let mut details = Vec::new();
    let started = Instant::now();
    let mut n7_elapsed = 0.0f64;

    for n in 3..=7usize {
        let t0 = Instant::now();
        let report = scan(Some(&GraphSource::Exhaustive { n }), &suites, opts).unwrap();
        let elapsed = t0.elapsed().as_secs_f64();
        if n == 7 {
            n7_elapsed = elapsed;
        }
        let expected = oracle[n] as u64;
        assert_eq!(report.scanned, expected, "connected count mismatch at n={n}");

        let (checked, violations) = tally(&report, "path-minimum", "f-at-least-floor");
        theorem_ok &= checked == expected && violations == 0;
        let (checked, violations) = tally(&report, "path-minimum", "equality-exactly-on-paths");
        theorem_ok &= checked == expected && violations == 0;
        theorem_ok &= report.equality_count == factorial(n as u64) / 2;
        theorem_ok &= report.extremes.as_ref().unwrap().min_f == f_floor();

        let (checked, violations) = tally(&report, "path-minimum", "difference-gap");
        corollary_ok &= checked == expected && violations == 0;
        let (checked, violations) = tally(&report, "path-minimum", "ratio-gap");
        corollary_ok &= checked == expected && violations == 0;

        for check in ["no-abort", "trace-monotone", "core-degree-floor"] {
            let (checked, violations) = tally(&report, "reduction-audit", check);
            reduction_ok &= violations == 0;
            if check == "no-abort" {
                reduction_ok &= checked == expected;
            }
        }
        details.push(format!("n={n}: {expected} graphs in {elapsed:.1}s"));
    }

    criterion(
        1,
        theorem_ok && n7_elapsed < 600.0,
        &format!(
            "f >= √2-1 with equality exactly on paths over {} ({} total, n=7 in {:.0}s < 600s)",
            details.join(", "),
            oracle[3..=7].iter().sum::<u128>(),
            n7_elapsed
        ),
    );
    criterion(
        2,
        corollary_ok,
        "both corollary gaps nonnegative with equality exactly on paths over the same corpus",
    );
    criterion(
        4,
        reduction_ok,
        &format!(
            "reduction loop audited on every connected graph, n <= 7: zero aborts, \
             strict R decrease and D non-decrease per step, cores keep no \
             non-essential vertex of degree <= 8 (total {:.0}s)",
            started.elapsed().as_secs_f64()
        ),
    );
}

#[test]
fn criterion_3_hard_lemma_suites() {
    let opts = ScanOptions { workers: 2, digits: 6 };
    let hard_checks = [
        ("degree-sum-bound", "bound-holds"),
        ("degree-sum-bound", "regular-equality"),
        ("low-degree-delete", "strict-decrease"),
        ("deletion-condition", "weak-implies-decrease"),
        ("deletion-condition", "oriented-implies-decrease"),
        ("edge-gap", "gap-above-minus-half"),
        ("essential-noncut", "f-decreases"),
        ("subdivision", "case-sign-agreement"),
        ("randic-floor", "bound-holds"),
        ("randic-floor", "equality-only-on-stars"),
    ];

    let mut sources = vec![
        GraphSource::Exhaustive { n: 3 },
        GraphSource::Exhaustive { n: 4 },
        GraphSource::Exhaustive { n: 5 },
        GraphSource::Exhaustive { n: 6 },
    ];
    // >= 10^4 random graphs across p in {0.1, 0.3, 0.5} and n <= 40.
    for (i, p) in [0.1f64, 0.3, 0.5].iter().enumerate() {
        for (j, n) in [10usize, 20, 30, 40].iter().enumerate() {
            sources.push(GraphSource::Gnp {
                n: *n,
                p: *p,
                count: 900,
                seed: 1000 + (i * 4 + j) as u64,
            });
        }
    }
    // >= 10^4 random trees with n <= 40.
    for (j, n) in [5usize, 10, 20, 40].iter().enumerate() {
        sources.push(GraphSource::Trees {
            n: *n,
            count: 2_500,
            seed: 2000 + j as u64,
        });
    }

    let mut graphs = 0u64;
    let mut random_graphs = 0u64;
    let mut tree_graphs = 0u64;
    let mut violations = 0u64;
    let mut exercised = std::collections::BTreeMap::new();
    for source in &sources {
        let report = verify_lemmas(source, None, opts).unwrap();
        graphs += report.scanned;
        match source {
            GraphSource::Gnp { .. } => random_graphs += report.scanned,
            GraphSource::Trees { .. } => tree_graphs += report.scanned,
            _ => {}
        }
        for (suite, check) in hard_checks {
            if let Some(t) = report.tallies.get(&(suite, check)) {
                violations += t.violations;
                *exercised.entry((suite, check)).or_insert(0u64) += t.checked;
            }
        }
    }
    let all_exercised = hard_checks.iter().all(|k| exercised.get(k).copied().unwrap_or(0) > 0);
    criterion(
        3,
        violations == 0 && random_graphs >= 10_000 && tree_graphs >= 10_000 && all_exercised,
        &format!(
            "hard lemma suites: 0 violations over {graphs} graphs \
             (exhaustive n<=6, {random_graphs} G(n,p), {tree_graphs} trees); \
             every hard check exercised"
        ),
    );
}

#[test]
fn criterion_5_closed_form_constants() {
    let report = verify_constants(ScanOptions { workers: 1, digits: 6 }).unwrap();
    let mut ok = report.hard_violations() == 0;
    for (check, expected_checked) in [
        ("h-at-9", 1),
        ("h-at-1", 1),
        ("h9-beats-short-diameters", 1),
        ("b-closed-form", 31),
        ("h-monotone", 999),
        ("phi-monotone", 394),
        ("phi-at-3", 1),
        ("final-gap-positive", 494),
        ("growth-dominates", 494),
        ("phi-below-deletion-threshold", 9_992),
    ] {
        let (checked, violations) = tally(&report, "closed-forms", check);
        ok &= checked == expected_checked && violations == 0;
    }
    criterion(
        5,
        ok,
        "h(9) = 4 + √2/3 exactly; b matches its closed form through i=30; \
         final gap certified positive for k in [7,500]; \
         φ(d/2.9) < 2/√d certified for d in [9,10000]",
    );
}

#[test]
#[allow(clippy::needless_range_loop)]
fn criterion_6_infrastructure_exactness() {
    // graph6 round-trip identity over every enumerated connected graph
    // with n <= 7.
    let oracle = connected_counts(7);
    let mut roundtrip_ok = true;
    let mut round_tripped = 0u64;
    for n in 2..=7usize {
        let bits = n * (n - 1) / 2;
        let verified: u64 = (0..(1u64 << bits))
            .into_par_iter()
            .map(|mask| {
                let g = Graph::from_triangle_mask(n, mask).unwrap();
                if !g.is_connected() {
                    return 0;
                }
                let back = parse_graph6(&to_graph6(&g)).unwrap();
                assert_eq!(back, g, "round-trip mismatch at n={n} mask={mask}");
                1
            })
            .sum();
        roundtrip_ok &= verified == oracle[n] as u64;
        round_tripped += verified;
    }

    // sign() decides escalating near-ties: continued-fraction
    // convergents of √2 approach it like 1/q².
    let sqrt2 = RadicalSum::sqrt_integer(2).unwrap();
    let (mut p0, mut q0) = (BigInt::one(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::from(3), BigInt::from(2));
    let mut signs_ok = true;
    for _ in 0..80 {
        let expected = if &p1 * &p1 > &q1 * &q1 * 2 { 1 } else { -1 };
        let approx = RadicalSum::from_rational(Rational::new(p1.clone(), q1.clone()));
        let mut diff = approx;
        diff.sub_assign(&sqrt2);
        signs_ok &= diff.sign() == expected;
        let p2 = &p1 * 2 + &p0;
        let q2 = &q1 * 2 + &q0;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
    }
    // Exact cancellation stays symbolic: √8 − 2√2 = 0.
    let mut zero = RadicalSum::sqrt_integer(8).unwrap();
    zero.sub_assign(&sqrt2.scale(&Rational::new(BigInt::from(2), BigInt::one())));
    signs_ok &= zero.sign() == 0 && zero.is_zero();

    // Identical reports for 1 and 8 workers, byte for byte.
    let mut parallel_ok = true;
    for source in [
        GraphSource::Exhaustive { n: 5 },
        GraphSource::Gnp { n: 25, p: 0.3, count: 400, seed: 99 },
        GraphSource::Trees { n: 30, count: 400, seed: 77 },
    ] {
        let one = verify_conjecture(&source, ScanOptions { workers: 1, digits: 6 }).unwrap();
        let eight = verify_conjecture(&source, ScanOptions { workers: 8, digits: 6 }).unwrap();
        parallel_ok &= one.render_records(6) == eight.render_records(6);
        let one = verify_lemmas(&source, None, ScanOptions { workers: 1, digits: 6 }).unwrap();
        let eight = verify_lemmas(&source, None, ScanOptions { workers: 8, digits: 6 }).unwrap();
        parallel_ok &= one.render_records(6) == eight.render_records(6);
    }

    criterion(
        6,
        roundtrip_ok && signs_ok && parallel_ok,
        &format!(
            "graph6 round-trip on all {round_tripped} enumerated graphs n <= 7; \
             sign() decided 80 convergent near-ties and a symbolic zero; \
             1-worker and 8-worker reports byte-identical on 3 sources"
        ),
    );
}

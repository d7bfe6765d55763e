//! The verification suites, each one strategy behind the [`Suite`]
//! trait, registered by name and selected at runtime (CLI `--suites`).
//!
//! Hard suites assert proven facts and fail the process on violation;
//! contextual suites report findings that are only guaranteed under
//! hypotheses a scan cannot see (minimal-counterexample context), so
//! their findings are data, not failures.

use num::BigInt;

use crate::constants::{b_closed_form, b_seq, delta_bound, final_gap, h, h_interval, phi, HValue};
use crate::graph::Graph;
use crate::interval::Interval;
use crate::invariants::{
    corollary_gaps_from, degree_sum_lower_bound, f_floor, is_path_graph, is_star_graph,
    randic_index,
};
use crate::radical::{RadicalSum, Rational};
use crate::reduction::{
    attach_check, deletion_holds, edge_deletion_gap, heuristic_orientation, reduce_to_core,
    subdivision_case, vertex_deletion_gap, weak_deletion_holds, AttachOutcome, SubdivisionCase,
};
use crate::structure::{essential_mask_unchecked, local_minimum_vertices};

use super::scan::Sink;
use super::source::{random_gnp, sample_rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    /// Violations indicate a bug (or a counterexample); they fail the
    /// process.
    Hard,
    /// Report-only findings.
    Contextual,
}

impl SuiteKind {
    pub fn is_hard(self) -> bool {
        matches!(self, SuiteKind::Hard)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteScope {
    /// Runs once per scanned graph.
    PerGraph,
    /// Runs once per scan (fixtures, closed forms).
    SelfContained,
}

/// One verification strategy.
pub trait Suite: Sync {
    fn name(&self) -> &'static str;
    fn kind(&self) -> SuiteKind;
    fn summary(&self) -> &'static str;
    fn scope(&self) -> SuiteScope {
        SuiteScope::PerGraph
    }
    fn check_graph(&self, _g: &Graph, _sink: &mut Sink<'_>) {}
    fn run_self_contained(&self, _sink: &mut Sink<'_>) {}
}

/// Every registered suite.
pub fn registry() -> &'static [&'static dyn Suite] {
    &[
        &PathMinimum,
        &DegreeSumBound,
        &LowDegreeDelete,
        &DeletionCondition,
        &EdgeGap,
        &EssentialNoncut,
        &Subdivision,
        &RandicFloor,
        &LocalMinimumWitness,
        &AttachMargin,
        &ReductionAudit,
        &ClosedForms,
    ]
}

pub fn suite_by_name(name: &str) -> Option<&'static dyn Suite> {
    registry().iter().copied().find(|s| s.name() == name)
}

/// Default selection for `verify lemmas`. The reduction audit is
/// excluded (it is expensive on large random graphs) but remains
/// individually selectable.
pub fn default_lemma_suites() -> Vec<&'static dyn Suite> {
    [
        "degree-sum-bound",
        "low-degree-delete",
        "deletion-condition",
        "edge-gap",
        "essential-noncut",
        "subdivision",
        "randic-floor",
        "local-minimum-witness",
        "attach-margin",
    ]
    .iter()
    .map(|n| suite_by_name(n).expect("registered"))
    .collect()
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn half() -> RadicalSum {
    RadicalSum::from_rational(rat(1, 2))
}

/// Certifies an interval-valued quantity positive, doubling precision a
/// few times before giving up.
fn certify_positive(mut eval: impl FnMut(u32) -> Interval) -> Result<(), Box<Interval>> {
    for prec in [128u32, 256, 512] {
        let iv = eval(prec);
        if iv.is_certainly_positive() {
            return Ok(());
        }
        if iv.is_certainly_negative() {
            return Err(Box::new(iv));
        }
    }
    Err(Box::new(eval(512)))
}

// ---------------------------------------------------------------------------
// Conjecture suite
// ---------------------------------------------------------------------------

/// `f = R − D/2` is minimised exactly by paths: `f ≥ √2 − 1` on
/// connected graphs with at least 3 vertices, with equality only on
/// paths, and both corollary gaps are nonnegative with the same
/// equality class.
struct PathMinimum;

impl Suite for PathMinimum {
    fn name(&self) -> &'static str {
        "path-minimum"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "f = R - D/2 stays at or above √2 - 1, with equality exactly on paths"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        if !g.is_connected() || g.n() < 2 {
            sink.skipped("f-at-least-floor");
            return;
        }
        let randic = randic_index(g);
        let diameter = g.diameter();
        let mut f = randic.clone();
        f.sub_assign(&RadicalSum::from_rational(Rational::new(
            BigInt::from(diameter),
            BigInt::from(2),
        )));
        let mut margin = f.clone();
        margin.sub_assign(&f_floor());

        if g.n() == 2 {
            // K₂ is a strict data point; the equality classification
            // applies from three vertices up.
            sink.checked("f-at-least-floor");
            if margin.sign() != 1 {
                sink.violation("f-at-least-floor", &margin, "n=2 must be strict".into());
            }
            sink.skipped("equality-exactly-on-paths");
            return;
        }

        let sign = margin.sign();
        sink.checked("f-at-least-floor");
        if sign < 0 {
            sink.violation("f-at-least-floor", &margin, String::new());
        }
        let path = is_path_graph(g);
        sink.checked("equality-exactly-on-paths");
        if (sign == 0) != path {
            sink.violation(
                "equality-exactly-on-paths",
                &margin,
                format!("path-shaped: {path}, margin sign {sign}"),
            );
        }

        let (gap1, gap2) = corollary_gaps_from(&randic, diameter, g.n());
        for (check, gap) in [("difference-gap", gap1), ("ratio-gap", gap2)] {
            let s = gap.sign();
            sink.checked(check);
            if s < 0 || (s == 0) != path {
                sink.violation(check, &gap, format!("path-shaped: {path}, gap sign {s}"));
            }
        }

        sink.record_f(&f, sign == 0);
    }
}

// ---------------------------------------------------------------------------
// Lemma suites
// ---------------------------------------------------------------------------

/// `R ≥ (Σ√dᵢ)/(2√Δ)` on connected graphs, tight on regular ones.
struct DegreeSumBound;

impl Suite for DegreeSumBound {
    fn name(&self) -> &'static str {
        "degree-sum-bound"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "R is at least the degree-sum bound (Σ√d)/(2√Δ), tight on regular graphs"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        if !g.is_connected() || g.n() < 2 {
            sink.skipped("bound-holds");
            return;
        }
        let bound = degree_sum_lower_bound(g).expect("connected with an edge");
        let mut margin = randic_index(g);
        margin.sub_assign(&bound);
        let sign = margin.sign();
        sink.checked("bound-holds");
        if sign < 0 {
            sink.violation("bound-holds", &margin, String::new());
        }
        if g.max_degree() == g.min_degree() {
            sink.checked("regular-equality");
            if sign != 0 {
                sink.violation("regular-equality", &margin, "regular graph".into());
            }
        } else {
            sink.skipped("regular-equality");
        }
    }
}

/// Deleting any non-isolated vertex of degree at most 4 strictly
/// decreases R, on every graph.
struct LowDegreeDelete;

impl Suite for LowDegreeDelete {
    fn name(&self) -> &'static str {
        "low-degree-delete"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "deleting a non-isolated vertex of degree <= 4 strictly decreases R"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        for v in 0..g.n() {
            let d = g.degree(v);
            if d == 0 {
                // R is unchanged by isolated vertices; the strict claim
                // needs at least one incident edge.
                sink.skipped("strict-decrease");
                continue;
            }
            if d > 4 {
                continue;
            }
            let gap = vertex_deletion_gap(g, v);
            sink.checked("strict-decrease");
            if gap.sign() != 1 {
                sink.violation("strict-decrease", &gap, format!("vertex {v} degree {d}"));
            }
        }
    }
}

/// The weak (and, where the heuristic orientation certifies it, the
/// oriented) deletion condition implies a strict R decrease.
struct DeletionCondition;

impl Suite for DeletionCondition {
    fn name(&self) -> &'static str {
        "deletion-condition"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "vertices passing the weak or oriented deletion condition strictly decrease R"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        for v in 0..g.n() {
            if g.degree(v) == 0 {
                sink.skipped("weak-implies-decrease");
                continue;
            }
            if weak_deletion_holds(g, v) {
                let gap = vertex_deletion_gap(g, v);
                sink.checked("weak-implies-decrease");
                if gap.sign() != 1 {
                    sink.violation("weak-implies-decrease", &gap, format!("vertex {v}"));
                }
                continue;
            }
            sink.skipped("weak-implies-decrease");
            // The oriented condition is strictly sharper; exercise it
            // where the weak one fails.
            let o = heuristic_orientation(g, v);
            if deletion_holds(g, v, &o).expect("heuristic is well formed") {
                let gap = vertex_deletion_gap(g, v);
                sink.checked("oriented-implies-decrease");
                if gap.sign() != 1 {
                    sink.violation("oriented-implies-decrease", &gap, format!("vertex {v}"));
                }
            } else {
                sink.skipped("oriented-implies-decrease");
            }
        }
    }
}

/// Deleting a non-leaf edge costs R less than 1/2.
struct EdgeGap;

impl Suite for EdgeGap {
    fn name(&self) -> &'static str {
        "edge-gap"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "R(G) - R(G - uv) > -1/2 on non-leaf edges"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        for (u, v) in g.edges() {
            if g.degree(u) < 2 || g.degree(v) < 2 {
                sink.skipped("gap-above-minus-half");
                continue;
            }
            let mut margin = edge_deletion_gap(g, u, v).expect("non-leaf edge");
            margin.add_assign(&half());
            sink.checked("gap-above-minus-half");
            if margin.sign() != 1 {
                sink.violation("gap-above-minus-half", &margin, format!("edge ({u},{v})"));
            }
        }
    }
}

/// Deleting an essential non-cut edge strictly decreases `f`.
struct EssentialNoncut;

impl Suite for EssentialNoncut {
    fn name(&self) -> &'static str {
        "essential-noncut"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "deleting an essential non-cut edge strictly decreases f"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        if !g.is_connected() || g.n() < 2 {
            sink.skipped("f-decreases");
            return;
        }
        let essential = essential_mask_unchecked(g);
        let diameter = g.diameter();
        for (u, v) in g.edges() {
            if essential & (1 << u) == 0 || essential & (1 << v) == 0 {
                continue;
            }
            if g.is_cut_edge(u, v).expect("edge exists") {
                sink.skipped("f-decreases");
                continue;
            }
            let removed = g.delete_edge(u, v).expect("edge exists");
            let mut margin = edge_deletion_gap(g, u, v).expect("non-cut edges are non-leaf");
            let d_removed = removed.diameter();
            margin.add_assign(&RadicalSum::from_rational(Rational::new(
                BigInt::from(i64::from(d_removed) - i64::from(diameter)),
                BigInt::from(2),
            )));
            sink.checked("f-decreases");
            if margin.sign() != 1 {
                sink.violation("f-decreases", &margin, format!("edge ({u},{v})"));
            }
        }
    }
}

/// The subdivision delta matches its degree classification.
struct Subdivision;

impl Suite for Subdivision {
    fn name(&self) -> &'static str {
        "subdivision"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "subdividing an edge changes R by exactly/below/above 1/2 according to endpoint degrees"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        for (u, v) in g.edges() {
            let (case, delta) = subdivision_case(g, u, v).expect("edge exists");
            let expected = match case {
                SubdivisionCase::Equal => 0,
                SubdivisionCase::Less => -1,
                SubdivisionCase::Greater => 1,
                SubdivisionCase::Uncovered => {
                    sink.skipped("case-sign-agreement");
                    continue;
                }
            };
            sink.checked("case-sign-agreement");
            if delta.sign() != expected {
                sink.violation(
                    "case-sign-agreement",
                    &delta,
                    format!("edge ({u},{v}) classified {case:?}"),
                );
            }
        }
    }
}

/// `R ≥ √(n−1)` on connected graphs, with equality exactly on stars.
struct RandicFloor;

impl Suite for RandicFloor {
    fn name(&self) -> &'static str {
        "randic-floor"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "R is at least √(n-1), with equality exactly on stars"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        if !g.is_connected() || g.n() < 2 {
            sink.skipped("bound-holds");
            return;
        }
        let mut margin = randic_index(g);
        margin.sub_assign(&RadicalSum::sqrt_integer((g.n() - 1) as u64).expect("n <= 62"));
        let sign = margin.sign();
        sink.checked("bound-holds");
        if sign < 0 {
            sink.violation("bound-holds", &margin, String::new());
        }
        let star = is_star_graph(g);
        sink.checked("equality-only-on-stars");
        if (sign == 0) != star {
            sink.violation(
                "equality-only-on-stars",
                &margin,
                format!("star-shaped: {star}, margin sign {sign}"),
            );
        }
    }
}

/// When R fails to drop at a local-minimum vertex of degree ≥ 3, a
/// descending 2-step to an essential edge must exist.
struct LocalMinimumWitness;

impl Suite for LocalMinimumWitness {
    fn name(&self) -> &'static str {
        "local-minimum-witness"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Contextual
    }
    fn summary(&self) -> &'static str {
        "a non-decreasing local-minimum vertex has a lower-degree path onto an essential edge"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        if !g.is_connected() || g.n() < 2 {
            sink.skipped("witness-exists");
            return;
        }
        let essential = essential_mask_unchecked(g);
        let candidates = local_minimum_vertices(g).expect("connected");
        for v in candidates {
            let dv = g.degree(v);
            if dv < 3 {
                continue;
            }
            let gap = vertex_deletion_gap(g, v);
            sink.checked("witness-exists");
            if gap.sign() == 1 {
                continue;
            }
            let witness = g.neighbors(v).any(|w| {
                g.degree(w) < dv
                    && g.neighbors(w).any(|y| {
                        g.degree(y) < dv
                            && essential & (1 << w) != 0
                            && essential & (1 << y) != 0
                    })
            });
            if !witness {
                sink.violation(
                    "witness-exists",
                    &gap,
                    format!("vertex {v} degree {dv}: no qualifying edge pair"),
                );
            }
        }
    }
}

/// Attaching a large part by its minimum-degree vertex raises R above
/// the host's, checked over constructed fixtures.
struct AttachMargin;

impl Suite for AttachMargin {
    fn name(&self) -> &'static str {
        "attach-margin"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Contextual
    }
    fn summary(&self) -> &'static str {
        "gluing a part of order >= 8 at its minimum-degree vertex raises R above the host"
    }
    fn scope(&self) -> SuiteScope {
        SuiteScope::SelfContained
    }

    fn run_self_contained(&self, sink: &mut Sink<'_>) {
        let hosts = [
            (Graph::path(3).unwrap(), 1usize),
            (Graph::cycle(4).unwrap(), 0),
            (Graph::path(5).unwrap(), 2),
        ];
        let mut parts: Vec<(Graph, usize)> = vec![
            (Graph::complete(8).unwrap(), 0),
            (Graph::complete(9).unwrap(), 0),
            (Graph::complete(10).unwrap(), 3),
            (Graph::star(8).unwrap(), 1),  // leaf attains minimum degree
            (Graph::star(9).unwrap(), 2),
            (Graph::star(8).unwrap(), 0),  // center: premise violation
            (Graph::complete(7).unwrap(), 0), // too small: premise violation
        ];
        for (i, (n, p)) in [(10usize, 0.4f64), (12, 0.3), (14, 0.5)].iter().enumerate() {
            let g = random_gnp(*n, *p, &mut sample_rng(0x617474, i as u64));
            let u = (0..g.n()).min_by_key(|&v| g.degree(v)).unwrap();
            parts.push((g, u));
        }

        for (host, hv) in &hosts {
            for (part, pv) in &parts {
                match attach_check(host, *hv, part, *pv).expect("indices valid") {
                    AttachOutcome::PremiseViolation(_) => sink.skipped("glued-margin-positive"),
                    AttachOutcome::Verdict { sign, margin } => {
                        sink.checked("glued-margin-positive");
                        if sign != 1 {
                            sink.violation(
                                "glued-margin-positive",
                                &margin,
                                format!("part n={}", part.n()),
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Runs the reduction loop and audits its trace and fixpoint.
struct ReductionAudit;

impl Suite for ReductionAudit {
    fn name(&self) -> &'static str {
        "reduction-audit"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "the deletion loop terminates with audited steps and no remaining low-degree non-essential vertex"
    }

    fn check_graph(&self, g: &Graph, sink: &mut Sink<'_>) {
        if !g.is_connected() {
            sink.skipped("no-abort");
            return;
        }
        sink.checked("no-abort");
        let (core, trace) = match reduce_to_core(g) {
            Ok(pair) => pair,
            Err(e) => {
                sink.violation_plain("no-abort", e.to_string());
                return;
            }
        };
        // Steps were verified exactly inside the loop; audit the ledger
        // once more from the recorded values.
        sink.checked("trace-monotone");
        for step in &trace.steps {
            let mut drop = step.randic_before.clone();
            drop.sub_assign(&step.randic_after);
            if drop.sign() != 1 || step.diameter_after < step.diameter_before {
                sink.violation(
                    "trace-monotone",
                    &drop,
                    format!("step deleting original vertex {}", step.original_label),
                );
            }
        }
        sink.checked("core-degree-floor");
        let essential = essential_mask_unchecked(&core);
        for v in 0..core.n() {
            // Isolated vertices are never deletable (R would not drop),
            // so the floor claim applies to vertices with an edge.
            if essential & (1 << v) == 0 && (1..=8).contains(&core.degree(v)) {
                sink.violation_plain(
                    "core-degree-floor",
                    format!(
                        "core keeps non-essential vertex of degree {} ({} steps)",
                        core.degree(v),
                        trace.steps.len()
                    ),
                );
            }
        }
    }
}

/// The closed-form constants: exact identities, monotonic grids, and
/// certified sweeps.
struct ClosedForms;

impl ClosedForms {
    fn exact_identities(sink: &mut Sink<'_>) {
        // h(9) = 4 + √2/3, exactly.
        let HValue::Exact(h9) = h(&rat(9, 1), 128).expect("positive") else {
            panic!("h(9) must evaluate exactly");
        };
        let mut expected = RadicalSum::from_integer(4);
        expected.add_assign(&RadicalSum::sqrt_integer(2).unwrap().scale(&rat(1, 3)));
        let mut diff = h9.clone();
        diff.sub_assign(&expected);
        sink.checked("h-at-9");
        if !diff.is_zero() {
            sink.violation("h-at-9", &diff, String::new());
        }

        // h(1) = √2 − 1, exactly.
        let HValue::Exact(h1) = h(&rat(1, 1), 128).expect("positive") else {
            panic!("h(1) must evaluate exactly");
        };
        let mut diff = h1;
        diff.sub_assign(&f_floor());
        sink.checked("h-at-1");
        if !diff.is_zero() {
            sink.violation("h-at-1", &diff, String::new());
        }

        // h(9) exceeds D/2 + √2 − 1 for every diameter D ≤ 8.
        let mut margin = h9;
        margin.sub_assign(&RadicalSum::from_integer(3));
        margin.sub_assign(&RadicalSum::sqrt_integer(2).unwrap());
        sink.checked("h9-beats-short-diameters");
        if margin.sign() != 1 {
            sink.violation("h9-beats-short-diameters", &margin, String::new());
        }
    }

    fn sequence_closed_form(sink: &mut Sink<'_>) {
        for i in 0..=30 {
            let diff = b_seq(i) - b_closed_form(i);
            sink.checked("b-closed-form");
            if !num::Zero::is_zero(&diff) {
                sink.violation(
                    "b-closed-form",
                    &RadicalSum::from_rational(diff),
                    format!("index {i}"),
                );
            }
        }
    }

    fn monotone_grids(sink: &mut Sink<'_>) {
        // h increasing over 1000 points of (0, 10⁴].
        let mut prev: Option<Interval> = None;
        for j in 1..=1000i64 {
            let iv = h_interval(&rat(10 * j, 1), 128);
            if let Some(p) = &prev {
                sink.checked("h-monotone");
                if !p.certainly_below(&iv) {
                    sink.violation_enclosure("h-monotone", &iv.sub(p), format!("x={}", 10 * j));
                }
            }
            prev = Some(iv);
        }

        // φ decreasing over (2.5, 200].
        let mut prev: Option<Interval> = None;
        for j in 1..=395i64 {
            let x = rat(5, 2) + rat(j, 2);
            let iv = phi(&x, 160).expect("positive");
            if let Some(p) = &prev {
                sink.checked("phi-monotone");
                if !iv.certainly_below(p) {
                    sink.violation_enclosure("phi-monotone", &p.sub(&iv), format!("x={x}"));
                }
            }
            prev = Some(iv);
        }

        // φ(3) = 1/√3: the correction term vanishes.
        let iv = phi(&rat(3, 1), 192).expect("positive");
        let exact = RadicalSum::inv_sqrt(3).unwrap().eval_interval(256);
        sink.checked("phi-at-3");
        if !(iv.lo <= exact.lo && exact.hi <= iv.hi) {
            sink.violation_enclosure("phi-at-3", &iv, "enclosure misses 1/√3".into());
        }
    }

    fn certified_sweeps(sink: &mut Sink<'_>) {
        // Final gap positive across the block-length sweep.
        for k in 7..=500u64 {
            sink.checked("final-gap-positive");
            if let Err(iv) = certify_positive(|prec| final_gap(k, prec).expect("k >= 7")) {
                sink.violation_enclosure("final-gap-positive", &iv, format!("k={k}"));
            }
        }

        // Four more layers raise h by more than 2 while the diameter
        // term adds exactly 2: the gap stays positive past the sweep.
        for k in 7..=500u64 {
            sink.checked("growth-dominates");
            let result = certify_positive(|prec| {
                h_interval(&delta_bound(k + 4).unwrap(), prec)
                    .sub(&h_interval(&delta_bound(k).unwrap(), prec))
                    .sub(&Interval::from_integer(2))
            });
            if let Err(iv) = result {
                sink.violation_enclosure("growth-dominates", &iv, format!("k={k}"));
            }
        }

        // φ(d/2.9) < 2/√d for all integer degrees in [9, 10⁴].
        for d in 9..=10_000i64 {
            sink.checked("phi-below-deletion-threshold");
            let x = rat(10 * d, 29);
            let result = certify_positive(|prec| {
                let bound = RadicalSum::inv_sqrt(d as u64)
                    .unwrap()
                    .scale(&rat(2, 1))
                    .eval_interval(prec);
                bound.sub(&phi(&x, prec).expect("positive"))
            });
            if let Err(iv) = result {
                sink.violation_enclosure("phi-below-deletion-threshold", &iv, format!("d={d}"));
            }
        }
    }
}

impl Suite for ClosedForms {
    fn name(&self) -> &'static str {
        "closed-forms"
    }
    fn kind(&self) -> SuiteKind {
        SuiteKind::Hard
    }
    fn summary(&self) -> &'static str {
        "exact identities and certified sweeps for h, φ, the b sequence and the final gap"
    }
    fn scope(&self) -> SuiteScope {
        SuiteScope::SelfContained
    }

    fn run_self_contained(&self, sink: &mut Sink<'_>) {
        Self::exact_identities(sink);
        Self::sequence_closed_form(sink);
        Self::monotone_grids(sink);
        Self::certified_sweeps(sink);
    }
}

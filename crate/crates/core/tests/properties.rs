//! Property tests: codec round trips, locality of the exact deltas
//! against full recomputation, sign algebra, interval nesting, and
//! relabeling invariance.

use proptest::prelude::*;

use randic_core::format::{parse_graph6, to_graph6};
use randic_core::graph::{Graph, UNREACHABLE};
use randic_core::harness::{scan_graphs, suite_by_name, ScanOptions, Suite};
use randic_core::invariants::{f_value, randic_index};
use randic_core::radical::{RadicalSum, Rational};
use randic_core::reduction::{edge_deletion_gap, subdivision_case, vertex_deletion_gap};

use num::BigInt;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Arbitrary graph on 2..=10 vertices via its upper-triangle edge mask.
fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=10)
        .prop_flat_map(|n| {
            let bits = n * (n - 1) / 2;
            (Just(n), 0u64..(1u64 << bits))
        })
        .prop_map(|(n, mask)| Graph::from_triangle_mask(n, mask).unwrap())
}

/// Arbitrary graph on up to 62 vertices (sparser, for codec tests).
fn wide_graph() -> impl Strategy<Value = Graph> {
    (2usize..=62)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(proptest::bool::weighted(0.2), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for col in 1..n {
                for row in 0..col {
                    if bits[k] {
                        edges.push((row, col));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
}

/// Radical sums over a small squarefree pool with bounded rationals.
fn radical_sum() -> impl Strategy<Value = RadicalSum> {
    let term = (
        proptest::sample::select(vec![1u64, 2, 3, 5, 6, 7, 10, 13, 15]),
        -40i64..=40,
        1i64..=12,
    );
    proptest::collection::vec(term, 0..5).prop_map(|terms| {
        let mut sum = RadicalSum::zero();
        for (m, num, den) in terms {
            let mut part = RadicalSum::sqrt_integer(m).unwrap();
            part = part.scale(&rat(num, den));
            sum.add_assign(&part);
        }
        sum
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in wide_graph()) {
        let encoded = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&encoded).unwrap(), g);
    }

    #[test]
    fn vertex_gap_matches_recompute(g in small_graph(), sel in 0usize..10) {
        let v = sel % g.n();
        let mut expected = randic_index(&g);
        expected.sub_assign(&randic_index(&g.delete_vertex(v).unwrap()));
        prop_assert_eq!(vertex_deletion_gap(&g, v), expected);
    }

    #[test]
    fn edge_gap_matches_recompute(g in small_graph(), sel in 0usize..64) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[sel % edges.len()];
        prop_assume!(g.degree(u) >= 2 && g.degree(v) >= 2);
        let mut expected = randic_index(&g);
        expected.sub_assign(&randic_index(&g.delete_edge(u, v).unwrap()));
        prop_assert_eq!(edge_deletion_gap(&g, u, v).unwrap(), expected);
    }

    #[test]
    fn subdivision_delta_matches_recompute(g in small_graph(), sel in 0usize..64) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[sel % edges.len()];
        let (_, delta) = subdivision_case(&g, u, v).unwrap();
        let mut expected = randic_index(&g.subdivide_edge(u, v).unwrap());
        expected.sub_assign(&randic_index(&g));
        expected.sub_assign(&RadicalSum::from_rational(rat(1, 2)));
        prop_assert_eq!(delta, expected);
    }

    #[test]
    fn sign_is_antisymmetric(a in radical_sum(), b in radical_sum()) {
        let mut diff = a.clone();
        diff.sub_assign(&b);
        let mut neg = b.clone();
        neg.sub_assign(&a);
        prop_assert_eq!(diff.sign(), -neg.sign());
        let mut zero = a.clone();
        zero.sub_assign(&a);
        prop_assert_eq!(zero.sign(), 0);
    }

    #[test]
    fn combine_is_the_linear_combination(a in radical_sum(), b in radical_sum(),
                                         ca in -9i64..=9, cb in -9i64..=9) {
        let combined = RadicalSum::combine(&a, &b, &rat(ca, 1), &rat(cb, 1));
        let mut expected = a.scale(&rat(ca, 1));
        expected.add_assign(&b.scale(&rat(cb, 1)));
        prop_assert_eq!(combined, expected);
    }

    #[test]
    fn intervals_nest_as_precision_grows(a in radical_sum()) {
        let coarse = a.eval_interval(64);
        let fine = a.eval_interval(256);
        prop_assert!(coarse.lo <= fine.lo);
        prop_assert!(fine.hi <= coarse.hi);
    }

    #[test]
    fn decimal_rounds_to_half_ulp(num in -2000i64..=2000, den in 1i64..=99, digits in 1usize..=5) {
        let q = rat(num, den);
        let rendered = RadicalSum::from_rational(q.clone()).decimal(digits);
        let parsed: f64 = rendered.parse().unwrap();
        let q_f64 = num as f64 / den as f64;
        let half_ulp = 0.5 / 10f64.powi(digits as i32) + 1e-12;
        prop_assert!((parsed - q_f64).abs() <= half_ulp, "{rendered} vs {q_f64}");
    }

    #[test]
    fn distances_are_symmetric_with_triangle_inequality(g in small_graph()) {
        let t = g.distances();
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(t.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(t.get(u, v), t.get(v, u));
                for w in 0..n {
                    let (a, b, c) = (t.get(u, v), t.get(v, w), t.get(u, w));
                    if a != UNREACHABLE && b != UNREACHABLE {
                        prop_assert!(c != UNREACHABLE);
                        prop_assert!(u32::from(c) <= u32::from(a) + u32::from(b));
                    }
                }
            }
        }
    }

    #[test]
    fn edge_deletion_never_shrinks_diameter(g in small_graph(), sel in 0usize..64) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[sel % edges.len()];
        let before = g.diameter();
        let after = g.delete_edge(u, v).unwrap();
        // Distances only grow when the component structure survives.
        if after.is_connected() == g.is_connected() && !g.is_cut_edge(u, v).unwrap() {
            prop_assert!(after.diameter() >= before);
        }
    }

    #[test]
    fn deleting_a_vertex_drops_neighbor_degrees_by_one(g in small_graph(), sel in 0usize..10) {
        let v = sel % g.n();
        let h = g.delete_vertex(v).unwrap();
        for u in 0..g.n() {
            if u == v {
                continue;
            }
            let mapped = if u > v { u - 1 } else { u };
            prop_assert_eq!(
                h.degree(mapped),
                g.degree(u) - u32::from(g.has_edge(u, v))
            );
        }
    }

    #[test]
    fn subdivision_bookkeeping(g in small_graph(), sel in 0usize..64) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[sel % edges.len()];
        let s = g.subdivide_edge(u, v).unwrap();
        prop_assert_eq!(s.degree(u), g.degree(u));
        prop_assert_eq!(s.degree(v), g.degree(v));
        prop_assert_eq!(s.degree(g.n()), 2);
        prop_assert_eq!(s.edge_count(), g.edge_count() + 1);
        prop_assert!(!s.has_edge(u, v));
    }

    #[test]
    fn relabeling_preserves_invariants_and_verdicts(
        g in small_graph(),
        perm in Just((0usize..10).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let perm: Vec<usize> = {
            // Restrict the shuffled 0..10 template to the graph order.
            let mut slots: Vec<usize> = perm.into_iter().filter(|&x| x < g.n()).collect();
            slots.truncate(g.n());
            slots
        };
        prop_assume!(perm.len() == g.n());
        let relabeled = g.relabel(&perm);

        prop_assert_eq!(randic_index(&g), randic_index(&relabeled));
        prop_assert_eq!(g.diameter(), relabeled.diameter());
        prop_assert_eq!(g.is_connected(), relabeled.is_connected());
        if g.is_connected() {
            prop_assert_eq!(f_value(&g).unwrap(), f_value(&relabeled).unwrap());
        }

        let suites: Vec<&'static dyn Suite> = ["path-minimum", "edge-gap", "subdivision"]
            .iter()
            .map(|n| suite_by_name(n).unwrap())
            .collect();
        let a = scan_graphs(std::slice::from_ref(&g), &suites, ScanOptions::default());
        let b = scan_graphs(std::slice::from_ref(&relabeled), &suites, ScanOptions::default());
        prop_assert_eq!(a.hard_violations(), b.hard_violations());
        prop_assert_eq!(a.tallies, b.tallies);
    }
}

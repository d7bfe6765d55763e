//! The vertex-deletion calculus: per-neighbor conditions that certify a
//! strict Randić-index decrease under vertex deletion, the orientation
//! search behind the sharper condition, the reduction loop that applies
//! them until every non-essential vertex has degree at least 9, and the
//! exact edge-deletion / subdivision / attachment deltas.

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::invariants::{inv_sqrt_term, randic_index};
use crate::radical::{RadicalSum, Rational};
use crate::structure::essential_mask_unchecked;
use num::BigInt;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("malformed orientation: {0}")]
    MalformedOrientation(String),
    #[error("{0}-{1} is a leaf edge (an endpoint has degree 1)")]
    LeafEdge(usize, usize),
    #[error(
        "trace invariant violated deleting original vertex {label} at step {step}: {detail}"
    )]
    TraceInvariant {
        step: usize,
        label: usize,
        detail: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Reduced degree `d*`: one less than the degree except at leaves.
pub fn reduced_degree(g: &Graph, x: usize) -> u32 {
    let d = g.degree(x);
    if d >= 2 {
        d - 1
    } else {
        d
    }
}

/// Per-neighbor weak deletion condition at `v`: for every non-leaf
/// neighbor `u`,
///
/// ```text
/// (1/(d_u − 1)) · Σ_{x ∈ Γ(u)\{v}} 1/√(d*_x)  ≤  2/√(d_v)
/// ```
///
/// decided exactly. Holds vacuously when `v` has no non-leaf neighbor.
pub fn weak_deletion_holds(g: &Graph, v: usize) -> bool {
    let rhs = inv_sqrt_term(u64::from(g.degree(v)))
        .scale(&Rational::from_integer(BigInt::from(2)));
    for u in g.neighbors(v) {
        let du = g.degree(u);
        if du < 2 {
            continue;
        }
        let mut lhs = RadicalSum::zero();
        for x in g.neighbors(u) {
            if x == v {
                continue;
            }
            lhs.add_assign(inv_sqrt_term(u64::from(reduced_degree(g, x))));
        }
        let lhs = lhs.scale(&Rational::new(BigInt::from(1), BigInt::from(du - 1)));
        let mut margin = rhs.clone();
        margin.sub_assign(&lhs);
        if margin.sign() < 0 {
            return false;
        }
    }
    true
}

/// An orientation of the edges of the induced subgraph on `Γ(v)`: each
/// neighborhood edge carries exactly one direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn new(arcs: Vec<(usize, usize)>) -> Self {
        Self { arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    fn leaves(&self, tail: usize, head: usize) -> bool {
        self.arcs.contains(&(tail, head))
    }
}

/// Edges of the induced subgraph on `Γ(v)`, as `(a, b)` with `a < b`.
pub fn neighborhood_edges(g: &Graph, v: usize) -> Vec<(usize, usize)> {
    let row = g.row(v);
    let mut out = Vec::new();
    for a in g.neighbors(v) {
        let mut shared = g.row(a) & row;
        while shared != 0 {
            let b = shared.trailing_zeros() as usize;
            shared &= shared - 1;
            if b > a {
                out.push((a, b));
            }
        }
    }
    out
}

/// The oriented deletion condition at `v`: for every non-leaf neighbor
/// `u`,
///
/// ```text
/// (1/(d_u − 1)) · Σ_{x ∈ Γ(u)\{v}} 1/√(d_x − ε^u_x)  ≤  2/√(d_v)
/// ```
///
/// with `ε^u_x = 1` exactly when the orientation directs the
/// neighborhood edge `ux` from `u` to `x`.
pub fn deletion_holds(g: &Graph, v: usize, o: &Orientation) -> Result<bool, ReductionError> {
    let mut expected = neighborhood_edges(g, v);
    let mut seen: Vec<(usize, usize)> = o
        .arcs
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    expected.sort_unstable();
    seen.sort_unstable();
    if expected != seen {
        return Err(ReductionError::MalformedOrientation(format!(
            "orientation must cover exactly the {} neighborhood edges of vertex {v}",
            expected.len()
        )));
    }

    let rhs = inv_sqrt_term(u64::from(g.degree(v)))
        .scale(&Rational::from_integer(BigInt::from(2)));
    for u in g.neighbors(v) {
        let du = g.degree(u);
        if du < 2 {
            continue;
        }
        let mut lhs = RadicalSum::zero();
        for x in g.neighbors(u) {
            if x == v {
                continue;
            }
            let eps = u32::from(o.leaves(u, x));
            lhs.add_assign(inv_sqrt_term(u64::from(g.degree(x) - eps)));
        }
        let lhs = lhs.scale(&Rational::new(BigInt::from(1), BigInt::from(du - 1)));
        let mut margin = rhs.clone();
        margin.sub_assign(&lhs);
        if margin.sign() < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of [`search_orientation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientationSearch {
    /// An orientation satisfying the deletion condition.
    Satisfied(Orientation),
    /// Every orientation was tried; none satisfies the condition.
    Exhausted,
    /// More than [`MAX_SEARCH_EDGES`] neighborhood edges; not searched.
    TooLarge,
}

/// Cap on the exhaustive orientation search (2^20 cases).
pub const MAX_SEARCH_EDGES: usize = 20;

/// Heuristic orientation: every neighborhood edge leaves its
/// lower-degree endpoint, ties broken toward the lower index.
pub fn heuristic_orientation(g: &Graph, v: usize) -> Orientation {
    let arcs = neighborhood_edges(g, v)
        .into_iter()
        .map(|(a, b)| {
            if g.degree(b) < g.degree(a) {
                (b, a)
            } else {
                (a, b)
            }
        })
        .collect();
    Orientation::new(arcs)
}

/// Looks for an orientation satisfying the deletion condition at `v`:
/// the heuristic first, then exhaustive enumeration in a fixed order.
pub fn search_orientation(g: &Graph, v: usize) -> OrientationSearch {
    let edges = neighborhood_edges(g, v);
    if edges.len() > MAX_SEARCH_EDGES {
        return OrientationSearch::TooLarge;
    }
    let heuristic = heuristic_orientation(g, v);
    if deletion_holds(g, v, &heuristic).expect("heuristic orientation is well formed") {
        return OrientationSearch::Satisfied(heuristic);
    }
    for pattern in 0u32..(1u32 << edges.len()) {
        let arcs = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                if pattern >> i & 1 == 0 {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        let o = Orientation::new(arcs);
        if deletion_holds(g, v, &o).expect("enumerated orientation is well formed") {
            return OrientationSearch::Satisfied(o);
        }
    }
    OrientationSearch::Exhausted
}

/// Exact `R(G) − R(G − v)` via the local delta: only edges with an
/// endpoint in the closed neighborhood of `v` contribute.
pub fn vertex_deletion_gap(g: &Graph, v: usize) -> RadicalSum {
    let dv = u64::from(g.degree(v));
    let mut gap = RadicalSum::zero();
    let nbhd = g.row(v);
    for u in g.neighbors(v) {
        let du = u64::from(g.degree(u));
        // The removed edge uv itself.
        gap.add_assign(inv_sqrt_term(du * dv));
        // Edges from u to vertices outside v: u's degree drops by one,
        // and x's degree also drops when x is itself a neighbor of v.
        for x in g.neighbors(u) {
            if x == v {
                continue;
            }
            let dx = u64::from(g.degree(x));
            let x_in_nbhd = nbhd & (1 << x) != 0;
            if x_in_nbhd && x < u {
                continue; // count each neighborhood edge once
            }
            let new_dx = if x_in_nbhd { dx - 1 } else { dx };
            gap.add_assign(inv_sqrt_term(du * dx));
            gap.sub_assign(inv_sqrt_term((du - 1) * new_dx));
        }
    }
    gap
}

/// Exact `R(G) − R(G − uv)` for a non-leaf edge (both endpoint degrees
/// at least 2). The expected bound is `gap > −1/2`.
pub fn edge_deletion_gap(g: &Graph, u: usize, v: usize) -> Result<RadicalSum, ReductionError> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v).into());
    }
    let (du, dv) = (u64::from(g.degree(u)), u64::from(g.degree(v)));
    if du < 2 || dv < 2 {
        return Err(ReductionError::LeafEdge(u, v));
    }
    let mut gap = inv_sqrt_term(du * dv).clone();
    for (end, other, d) in [(u, v, du), (v, u, dv)] {
        for x in g.neighbors(end) {
            if x == other {
                continue;
            }
            let dx = u64::from(g.degree(x));
            gap.add_assign(inv_sqrt_term(d * dx));
            gap.sub_assign(inv_sqrt_term((d - 1) * dx));
        }
    }
    Ok(gap)
}

/// Classification of the subdivision delta by endpoint degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubdivisionCase {
    /// One endpoint has degree 2: the index grows by exactly 1/2.
    Equal,
    /// Both endpoints have degree ≥ 3: growth strictly below 1/2.
    Less,
    /// A leaf against degree ≥ 3: growth strictly above 1/2.
    Greater,
    /// Two leaves (an isolated edge component): outside the
    /// classification.
    Uncovered,
}

/// Classifies subdividing the edge `uv` and returns the exact value of
/// `R(G_{u·v}) − R(G) − 1/2`, whose sign must match the case.
pub fn subdivision_case(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<(SubdivisionCase, RadicalSum), ReductionError> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v).into());
    }
    let (du, dv) = (u64::from(g.degree(u)), u64::from(g.degree(v)));
    let case = match (du, dv) {
        (1, 1) => SubdivisionCase::Uncovered,
        (2, _) | (_, 2) => SubdivisionCase::Equal,
        (1, _) | (_, 1) => SubdivisionCase::Greater,
        _ => SubdivisionCase::Less,
    };
    // Endpoint degrees are unchanged by the subdivision, so the delta is
    // local to the replaced edge.
    let mut delta = inv_sqrt_term(2 * du).clone();
    delta.add_assign(inv_sqrt_term(2 * dv));
    delta.sub_assign(inv_sqrt_term(du * dv));
    delta.sub_assign(&RadicalSum::from_rational(Rational::new(
        BigInt::from(1),
        BigInt::from(2),
    )));
    Ok((case, delta))
}

/// Which rule authorised a deletion step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionRule {
    /// Degree at most 4: unconditional strict decrease.
    LowDegree,
    /// Weak deletion condition verified.
    WeakCondition,
    /// Oriented deletion condition verified by a searched orientation.
    OrientedCondition,
}

impl ReductionRule {
    pub fn tag(self) -> &'static str {
        match self {
            ReductionRule::LowDegree => "deg<=4",
            ReductionRule::WeakCondition => "weak-condition",
            ReductionRule::OrientedCondition => "oriented-condition",
        }
    }
}

/// One audited deletion.
#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub original_label: usize,
    pub rule: ReductionRule,
    pub randic_before: RadicalSum,
    pub randic_after: RadicalSum,
    pub diameter_before: u32,
    pub diameter_after: u32,
}

/// Audited deletion sequence; each step strictly decreases the Randić
/// index and never decreases the diameter.
#[derive(Clone, Debug, Default)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// Line-oriented rendering: one step per line with the rule tag and
    /// the exact deltas.
    pub fn render_lines(&self, digits: usize) -> Vec<String> {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut drop = s.randic_before.clone();
                drop.sub_assign(&s.randic_after);
                format!(
                    "step {}: delete v{} [{}] R {} -> {} (drop {} ~ {}) D {} -> {}",
                    i + 1,
                    s.original_label,
                    s.rule.tag(),
                    s.randic_before,
                    s.randic_after,
                    drop,
                    drop.decimal(digits),
                    s.diameter_before,
                    s.diameter_after,
                )
            })
            .collect()
    }
}

/// Repeatedly deletes a non-essential vertex that is either of degree at
/// most 4, or of degree at most 8 and certified by the weak or oriented
/// deletion condition, until no such vertex exists. Candidates are tried
/// in order of (degree, original label). Every step re-verifies the
/// strict R decrease and the D non-decrease with exact arithmetic; a
/// violation aborts with a diagnostic rather than continuing.
///
/// Deletions may disconnect intermediate graphs; diameters and
/// essentiality then use the component-wise maximum extension.
pub fn reduce_to_core(g: &Graph) -> Result<(Graph, ReductionTrace), ReductionError> {
    if !g.is_connected() {
        return Err(ReductionError::Disconnected);
    }
    let mut current = g.clone();
    let mut labels: Vec<usize> = (0..g.n()).collect();
    let mut trace = ReductionTrace::default();
    loop {
        let essential = essential_mask_unchecked(&current);
        // Isolated vertices leave R unchanged, so no rule certifies a
        // strict decrease for them; they are never candidates.
        let mut candidates: Vec<usize> = (0..current.n())
            .filter(|&v| {
                essential & (1 << v) == 0 && (1..=8).contains(&current.degree(v))
            })
            .collect();
        candidates.sort_by_key(|&v| (current.degree(v), labels[v]));

        let mut chosen = None;
        for v in candidates {
            let rule = if current.degree(v) <= 4 {
                ReductionRule::LowDegree
            } else if weak_deletion_holds(&current, v) {
                ReductionRule::WeakCondition
            } else if matches!(search_orientation(&current, v), OrientationSearch::Satisfied(_)) {
                ReductionRule::OrientedCondition
            } else {
                continue;
            };
            chosen = Some((v, rule));
            break;
        }
        let Some((v, rule)) = chosen else {
            return Ok((current, trace));
        };

        let randic_before = randic_index(&current);
        let diameter_before = current.diameter();
        let next = current.delete_vertex(v)?;
        let randic_after = randic_index(&next);
        let diameter_after = next.diameter();

        let mut drop = randic_before.clone();
        drop.sub_assign(&randic_after);
        if drop.sign() != 1 {
            return Err(ReductionError::TraceInvariant {
                step: trace.steps.len(),
                label: labels[v],
                detail: format!("Randić index did not strictly decrease (drop {drop})"),
            });
        }
        if diameter_after < diameter_before {
            return Err(ReductionError::TraceInvariant {
                step: trace.steps.len(),
                label: labels[v],
                detail: format!("diameter decreased {diameter_before} -> {diameter_after}"),
            });
        }

        trace.steps.push(ReductionStep {
            original_label: labels[v],
            rule,
            randic_before,
            randic_after,
            diameter_before,
            diameter_after,
        });
        labels.remove(v);
        current = next;
    }
}

/// Premise of the attachment bound that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AttachPremise {
    /// The attached part must have at least 8 vertices.
    Size,
    /// The shared vertex must have exactly two neighbors in the host.
    HostNeighborCount,
    /// The shared vertex must attain the attached part's minimum degree.
    MinimumDegree,
}

/// Outcome of [`attach_check`].
#[derive(Clone, Debug, PartialEq)]
pub enum AttachOutcome {
    PremiseViolation(AttachPremise),
    /// `sign` and exact value of `R(G) − R(G₁)` for the glued graph;
    /// expected +1 whenever the premises hold.
    Verdict { sign: i32, margin: RadicalSum },
}

/// Glues `g2` onto `g1` by identifying `u2 ∈ g2` with `u1 ∈ g1` and
/// checks that the Randić index of the combined graph exceeds that of
/// the host `g1`. Premises: `|g2| ≥ 8`, `u1` has exactly two neighbors
/// in `g1`, and `u2` attains the minimum degree of `g2`.
pub fn attach_check(
    g1: &Graph,
    u1: usize,
    g2: &Graph,
    u2: usize,
) -> Result<AttachOutcome, ReductionError> {
    if u1 >= g1.n() {
        return Err(GraphError::OutOfRange { index: u1, n: g1.n() }.into());
    }
    if u2 >= g2.n() {
        return Err(GraphError::OutOfRange { index: u2, n: g2.n() }.into());
    }
    if g2.n() < 8 {
        return Ok(AttachOutcome::PremiseViolation(AttachPremise::Size));
    }
    if g1.degree(u1) != 2 {
        return Ok(AttachOutcome::PremiseViolation(AttachPremise::HostNeighborCount));
    }
    if g2.degree(u2) != g2.min_degree() {
        return Ok(AttachOutcome::PremiseViolation(AttachPremise::MinimumDegree));
    }
    let glued = glue_at(g1, u1, g2, u2)?;
    let mut margin = randic_index(&glued);
    margin.sub_assign(&randic_index(g1));
    Ok(AttachOutcome::Verdict {
        sign: margin.sign(),
        margin,
    })
}

/// Union of `g1` and `g2` sharing exactly the identified vertex.
pub fn glue_at(g1: &Graph, u1: usize, g2: &Graph, u2: usize) -> Result<Graph, GraphError> {
    let n = g1.n() + g2.n() - 1;
    let map2 = |w: usize| -> usize {
        if w == u2 {
            u1
        } else if w < u2 {
            g1.n() + w
        } else {
            g1.n() + w - 1
        }
    };
    let mut edges = g1.edges();
    for (a, b) in g2.edges() {
        edges.push((map2(a), map2(b)));
    }
    Graph::from_edges(n, edges)
}

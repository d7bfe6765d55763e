//! The Randić index `R(G) = Σ_{uv∈E} 1/√(d_u·d_v)`, the diameter-coupled
//! functional `f(G) = R(G) − D(G)/2`, and their closed-form bounds, all
//! exact.

use std::sync::OnceLock;

use num::BigInt;
use thiserror::Error;

use crate::graph::Graph;
use crate::radical::{RadicalSum, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph must have at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("graph must have at least one edge")]
    Edgeless,
}

/// Precomputed `1/√p` for every degree product `p ≤ 61²`, so the
/// per-edge work of [`randic_index`] is one map update.
pub(crate) fn inv_sqrt_term(product: u64) -> &'static RadicalSum {
    static TABLE: OnceLock<Vec<RadicalSum>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut table = Vec::with_capacity(61 * 61 + 1);
        table.push(RadicalSum::zero()); // unused slot for product 0
        for p in 1..=(61 * 61) {
            table.push(RadicalSum::inv_sqrt(p).expect("products ≤ 61² factor"));
        }
        table
    });
    &table[product as usize]
}

/// Exact Randić index; edgeless graphs (including the empty graph)
/// give 0.
pub fn randic_index(g: &Graph) -> RadicalSum {
    let degrees = g.degrees();
    let mut sum = RadicalSum::zero();
    for u in 0..g.n() {
        for v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            let p = u64::from(degrees[u]) * u64::from(degrees[v]);
            sum.add_assign(inv_sqrt_term(p));
        }
    }
    sum
}

/// Exact value of `(Σᵢ√dᵢ)/(2√Δ)`, a lower bound on the Randić index of
/// connected graphs. Each term is computed as `√(dᵢ·Δ)/(2Δ)`.
pub fn degree_sum_lower_bound(g: &Graph) -> Result<RadicalSum, InvariantError> {
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    if g.n() < 2 {
        return Err(InvariantError::TooSmall { n: g.n(), min: 2 });
    }
    let max_degree = u64::from(g.max_degree());
    if max_degree == 0 {
        return Err(InvariantError::Edgeless);
    }
    let mut sum = RadicalSum::zero();
    let scale = Rational::new(BigInt::from(1), BigInt::from(2 * max_degree));
    for d in g.degrees() {
        let term = RadicalSum::sqrt_integer(u64::from(d) * max_degree)
            .expect("degree products ≤ 61² factor");
        sum.add_assign(&term.scale(&scale));
    }
    Ok(sum)
}

/// `f(G) = R(G) − D(G)/2`, exact; requires a connected graph.
pub fn f_value(g: &Graph) -> Result<RadicalSum, InvariantError> {
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    let mut f = randic_index(g);
    f.sub_assign(&RadicalSum::from_rational(Rational::new(
        BigInt::from(g.diameter()),
        BigInt::from(2),
    )));
    Ok(f)
}

/// The two conjectured path-extremal gaps for connected graphs on
/// `n ≥ 3` vertices, both nonnegative with equality exactly on paths:
///
/// - `gap1 = R − D − (√2 − (n+1)/2)`
/// - `gap2 = (2n−2)·R − (n−3+2√2)·D` (the ratio bound cleared of its
///   denominators so it stays in the radical-sum domain)
pub fn corollary_gaps(g: &Graph) -> Result<(RadicalSum, RadicalSum), InvariantError> {
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    if g.n() < 3 {
        return Err(InvariantError::TooSmall { n: g.n(), min: 3 });
    }
    Ok(corollary_gaps_from(
        &randic_index(g),
        g.diameter(),
        g.n(),
    ))
}

/// Gap computation from already-known `R`, `D` and `n` (connected,
/// `n ≥ 3`).
pub fn corollary_gaps_from(
    randic: &RadicalSum,
    diameter: u32,
    n: usize,
) -> (RadicalSum, RadicalSum) {
    let n = n as i64;
    let d = i64::from(diameter);
    let sqrt2 = RadicalSum::sqrt_integer(2).unwrap();

    let mut gap1 = randic.clone();
    gap1.sub_assign(&RadicalSum::from_integer(d));
    gap1.sub_assign(&sqrt2);
    gap1.add_assign(&RadicalSum::from_rational(Rational::new(
        BigInt::from(n + 1),
        BigInt::from(2),
    )));

    let mut gap2 = randic.scale(&Rational::from_integer(BigInt::from(2 * n - 2)));
    gap2.sub_assign(&RadicalSum::from_integer((n - 3) * d));
    gap2.sub_assign(&sqrt2.scale(&Rational::from_integer(BigInt::from(2 * d))));
    (gap1, gap2)
}

/// The reference constant `√2 − 1`, the minimum of `f` over connected
/// graphs on at least three vertices.
pub fn f_floor() -> RadicalSum {
    let mut v = RadicalSum::sqrt_integer(2).unwrap();
    v.sub_assign(&RadicalSum::from_integer(1));
    v
}

/// Structural path test: connected with degree multiset {1,1,2,…,2}
/// (`n ≥ 2`). Avoids isomorphism machinery; exact and cheap.
pub fn is_path_graph(g: &Graph) -> bool {
    if g.n() < 2 || !g.is_connected() {
        return false;
    }
    let mut ones = 0usize;
    for d in g.degrees() {
        match d {
            1 => ones += 1,
            2 => {}
            _ => return false,
        }
    }
    ones == 2
}

/// True iff the graph is a star `K_{1,n−1}` (`n ≥ 2`; `K₂ = K_{1,1}`).
pub fn is_star_graph(g: &Graph) -> bool {
    if g.n() < 2 || !g.is_connected() {
        return false;
    }
    let hub_degree = (g.n() - 1) as u32;
    let mut hubs = 0usize;
    for d in g.degrees() {
        if d == hub_degree {
            hubs += 1;
        } else if d != 1 {
            return false;
        }
    }
    // K₂ has two degree-1 vertices that both qualify as hubs.
    hubs == 1 || (g.n() == 2 && hubs == 2)
}

/// All exact invariants of one connected graph.
#[derive(Clone, Debug)]
pub struct InvariantBundle {
    pub n: usize,
    pub m: usize,
    pub randic: RadicalSum,
    pub diameter: u32,
    pub f: RadicalSum,
    pub max_degree: u32,
    pub min_degree: u32,
}

impl InvariantBundle {
    pub fn compute(g: &Graph) -> Result<Self, InvariantError> {
        if !g.is_connected() {
            return Err(InvariantError::Disconnected);
        }
        let randic = randic_index(g);
        let diameter = g.diameter();
        let mut f = randic.clone();
        f.sub_assign(&RadicalSum::from_rational(Rational::new(
            BigInt::from(diameter),
            BigInt::from(2),
        )));
        Ok(Self {
            n: g.n(),
            m: g.edge_count(),
            randic,
            diameter,
            f,
            max_degree: g.max_degree(),
            min_degree: g.min_degree(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn randic_examples() {
        // P₃ → √2.
        let p3 = Graph::path(3).unwrap();
        assert_eq!(randic_index(&p3), RadicalSum::sqrt_integer(2).unwrap());
        // K₄ → 2 (a k-regular graph on n vertices has R = n/2).
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(randic_index(&k4).as_rational(), Some(rat(2, 1)));
        // K₁,₈ → 8/√8 = 2√2.
        let star = Graph::star(9).unwrap();
        assert_eq!(
            randic_index(&star),
            RadicalSum::sqrt_integer(2).unwrap().scale(&rat(2, 1))
        );
        // Edgeless graphs give zero.
        assert!(randic_index(&Graph::empty(3).unwrap()).is_zero());
    }

    #[test]
    fn degree_sum_bound_examples() {
        let k4 = Graph::complete(4).unwrap();
        let b = degree_sum_lower_bound(&k4).unwrap();
        assert_eq!(b.as_rational(), Some(rat(2, 1)));
        assert_eq!(b, randic_index(&k4));

        // P₃ → 1/2 + √2/2 ≈ 1.2071 ≤ R(P₃) = √2.
        let p3 = Graph::path(3).unwrap();
        let b = degree_sum_lower_bound(&p3).unwrap();
        assert_eq!(b.decimal(4), "1.2071");
        let mut gap = randic_index(&p3);
        gap.sub_assign(&b);
        assert_eq!(gap.sign(), 1);

        // K₁,₃ → 1/2 + √3/2 ≈ 1.3660 ≤ √3.
        let star = Graph::star(4).unwrap();
        let b = degree_sum_lower_bound(&star).unwrap();
        assert_eq!(b.decimal(4), "1.3660");
        let mut gap = randic_index(&star);
        gap.sub_assign(&b);
        assert_eq!(gap.sign(), 1);

        let k3k2 = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(
            degree_sum_lower_bound(&k3k2),
            Err(InvariantError::Disconnected)
        );
    }

    #[test]
    fn f_value_examples() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(f_value(&p5).unwrap(), f_floor());
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(f_value(&k3).unwrap().as_rational(), Some(rat(1, 1)));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(f_value(&c4).unwrap().as_rational(), Some(rat(1, 1)));
    }

    #[test]
    fn corollary_gap_examples() {
        let p4 = Graph::path(4).unwrap();
        let (g1, g2) = corollary_gaps(&p4).unwrap();
        assert!(g1.is_zero());
        assert!(g2.is_zero());

        // K₃: gap1 = 5/2 − √2 > 0.
        let k3 = Graph::complete(3).unwrap();
        let (g1, g2) = corollary_gaps(&k3).unwrap();
        let mut expected = RadicalSum::from_rational(rat(5, 2));
        expected.sub_assign(&RadicalSum::sqrt_integer(2).unwrap());
        assert_eq!(g1, expected);
        assert_eq!(g2.sign(), 1);

        // C₄: gap1 = 5/2 − √2 > 0 as well.
        let c4 = Graph::cycle(4).unwrap();
        let (g1, g2) = corollary_gaps(&c4).unwrap();
        assert_eq!(g1, expected);
        assert_eq!(g2.sign(), 1);

        assert_eq!(
            corollary_gaps(&Graph::complete(2).unwrap()),
            Err(InvariantError::TooSmall { n: 2, min: 3 })
        );
    }

    #[test]
    fn path_and_star_classification() {
        assert!(is_path_graph(&Graph::path(2).unwrap()));
        assert!(is_path_graph(&Graph::path(6).unwrap()));
        assert!(!is_path_graph(&Graph::cycle(6).unwrap()));
        assert!(!is_path_graph(&Graph::star(4).unwrap()));
        // Disconnected degree-doppelgänger of a path: P₂ ⊎ C₄ has the
        // multiset {1,1,2,2,2,2} but is not a path.
        let fake = Graph::path(2)
            .unwrap()
            .disjoint_union(&Graph::cycle(4).unwrap())
            .unwrap();
        assert!(!is_path_graph(&fake));

        assert!(is_star_graph(&Graph::star(5).unwrap()));
        assert!(is_star_graph(&Graph::complete(2).unwrap()));
        assert!(is_star_graph(&Graph::path(3).unwrap())); // P₃ = K₁,₂
        assert!(!is_star_graph(&Graph::path(4).unwrap()));
    }

    #[test]
    fn bundle_ties_f_to_r_and_d() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let b = InvariantBundle::compute(&g).unwrap();
        let mut expect = b.randic.clone();
        expect.sub_assign(&RadicalSum::from_rational(rat(i64::from(b.diameter), 2)));
        assert_eq!(b.f, expect);
        assert!(b.max_degree >= b.min_degree);
    }
}

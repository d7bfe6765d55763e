//! Diameter-essential structure: essential vertices and edges, the
//! block decomposition they induce, local-minimum vertices, and per-block
//! layer profiles.
//!
//! A vertex is *essential* when deleting it strictly decreases the
//! diameter (equivalently, every shortest path between a diametral pair
//! passes through it); an edge is essential when both endpoints are.
//! Blocks are the connected components, on at least two vertices, of the
//! spanning subgraph of non-essential edges; essential paths are maximal
//! chains of essential edges.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, UNREACHABLE};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph must have at least 2 vertices")]
    TooSmall,
    #[error("root {root} is not a member of the block")]
    RootNotInBlock { root: usize },
}

/// Essential vertex test without a connectivity guard; diameters of
/// disconnected graphs are the maximum among the component diameters.
/// Used by the reduction loop, whose intermediate graphs may disconnect.
pub(crate) fn essential_mask_unchecked(g: &Graph) -> u64 {
    let full = g.full_mask();
    let diameter = g.diameter_masked(full);
    let mut mask = 0u64;
    for v in 0..g.n() {
        if g.diameter_masked(full & !(1 << v)) < diameter {
            mask |= 1 << v;
        }
    }
    mask
}

/// Vertices whose deletion strictly decreases the diameter.
pub fn essential_vertices(g: &Graph) -> Result<Vec<usize>, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    if g.n() < 2 {
        return Err(StructureError::TooSmall);
    }
    let mask = essential_mask_unchecked(g);
    Ok((0..g.n()).filter(|&v| mask & (1 << v) != 0).collect())
}

/// Edges whose endpoints are both essential.
pub fn essential_edges(g: &Graph) -> Result<Vec<(usize, usize)>, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let mask = essential_mask_unchecked(g);
    Ok(g.edges()
        .into_iter()
        .filter(|&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
        .collect())
}

/// Essential vertices/edges plus the induced coarse structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EssentialProfile {
    pub essential_vertices: Vec<usize>,
    pub essential_edges: Vec<(usize, usize)>,
    /// Connected components (≥ 2 vertices) of the spanning subgraph on
    /// non-essential edges.
    pub blocks: Vec<Vec<usize>>,
    /// Maximal chains of essential edges, as vertex sequences.
    pub essential_paths: Vec<Vec<usize>>,
}

impl EssentialProfile {
    pub fn path_lengths(&self) -> Vec<usize> {
        self.essential_paths.iter().map(|p| p.len() - 1).collect()
    }
}

/// Computes the full essential profile of a connected graph.
pub fn block_decomposition(g: &Graph) -> Result<EssentialProfile, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let mask = essential_mask_unchecked(g);
    let essential_vertices: Vec<usize> = (0..g.n()).filter(|&v| mask & (1 << v) != 0).collect();
    let mut essential_edges = Vec::new();
    let mut plain_adj: Vec<u64> = vec![0; g.n()]; // non-essential edges
    let mut chain_adj: Vec<u64> = vec![0; g.n()]; // essential edges
    for (u, v) in g.edges() {
        if mask & (1 << u) != 0 && mask & (1 << v) != 0 {
            essential_edges.push((u, v));
            chain_adj[u] |= 1 << v;
            chain_adj[v] |= 1 << u;
        } else {
            plain_adj[u] |= 1 << v;
            plain_adj[v] |= 1 << u;
        }
    }

    let blocks = components(&plain_adj, g.n())
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let essential_paths = maximal_chains(&chain_adj, g.n());
    Ok(EssentialProfile {
        essential_vertices,
        essential_edges,
        blocks,
        essential_paths,
    })
}

/// Connected components of a bitset adjacency, ascending by smallest
/// member; isolated vertices come out as singletons.
fn components(adj: &[u64], n: usize) -> Vec<Vec<usize>> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            next &= !comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        let mut members = Vec::new();
        let mut c = comp;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            members.push(v);
        }
        out.push(members);
    }
    out
}

/// Decomposes an edge set into maximal chains: walks split at vertices
/// whose degree in the chain subgraph differs from 2. Components that
/// are pure cycles are walked once from their smallest vertex.
fn maximal_chains(adj: &[u64], n: usize) -> Vec<Vec<usize>> {
    let deg = |v: usize| adj[v].count_ones();
    let mut used: Vec<u64> = vec![0; n]; // directed half-edges consumed
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let walk = |start: usize, used: &mut Vec<u64>| -> Vec<Vec<usize>> {
        let mut local = Vec::new();
        let mut row = adj[start] & !used[start];
        while row != 0 {
            let first = row.trailing_zeros() as usize;
            let mut seq = vec![start, first];
            used[start] |= 1 << first;
            used[first] |= 1 << start;
            let (mut prev, mut cur) = (start, first);
            // Extend while the current vertex is a plain chain interior.
            while deg(cur) == 2 {
                let next_row = adj[cur] & !(1u64 << prev);
                if next_row == 0 {
                    break;
                }
                let next = next_row.trailing_zeros() as usize;
                if used[cur] & (1 << next) != 0 {
                    break;
                }
                used[cur] |= 1 << next;
                used[next] |= 1 << cur;
                seq.push(next);
                prev = cur;
                cur = next;
            }
            local.push(seq);
            row = adj[start] & !used[start];
        }
        local
    };
    // Chains begin at vertices that are not interior (degree ≠ 2).
    for v in 0..n {
        if deg(v) != 0 && deg(v) != 2 {
            chains.extend(walk(v, &mut used));
        }
    }
    // Leftover edges belong to pure cycles.
    for v in 0..n {
        if adj[v] & !used[v] != 0 {
            chains.extend(walk(v, &mut used));
        }
    }
    chains.sort();
    chains
}

/// Non-essential vertices whose degree is minimal among the
/// non-essential vertices within distance two.
pub fn local_minimum_vertices(g: &Graph) -> Result<Vec<usize>, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::Disconnected);
    }
    let mask = essential_mask_unchecked(g);
    let dist = g.distances();
    let mut out = Vec::new();
    for v in 0..g.n() {
        if mask & (1 << v) != 0 {
            continue;
        }
        let ok = (0..g.n()).all(|u| {
            mask & (1 << u) != 0 || dist.get(u, v) > 2 || g.degree(u) >= g.degree(v)
        });
        if ok {
            out.push(v);
        }
    }
    Ok(out)
}

/// Per-block layer structure rooted at `z`: `layers[i]` holds the block
/// vertices at distance `i` from `z` within the induced block subgraph,
/// and `min_nonessential_degree[i]` is the minimum degree **in the whole
/// graph** over the layer's non-essential members (`None` when the layer
/// has no non-essential member).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerProfile {
    pub root: usize,
    pub layers: Vec<Vec<usize>>,
    pub min_nonessential_degree: Vec<Option<u32>>,
    /// Number of layers minus one.
    pub length: usize,
}

pub fn layer_profile(g: &Graph, block: &[usize], z: usize) -> Result<LayerProfile, StructureError> {
    let mut block_mask = 0u64;
    for &v in block {
        block_mask |= 1 << v;
    }
    if block_mask & (1 << z) == 0 {
        return Err(StructureError::RootNotInBlock { root: z });
    }
    let essential = essential_mask_unchecked(g);
    let mut dist = [UNREACHABLE; crate::graph::MAX_VERTICES];
    g.bfs_masked(z, block_mask, &mut dist[..g.n()]);
    let mut layers: Vec<Vec<usize>> = Vec::new();
    for &v in block {
        let d = dist[v];
        if d == UNREACHABLE {
            continue;
        }
        let d = usize::from(d);
        while layers.len() <= d {
            layers.push(Vec::new());
        }
        layers[d].push(v);
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    let min_nonessential_degree = layers
        .iter()
        .map(|layer| {
            layer
                .iter()
                .filter(|&&v| essential & (1 << v) == 0)
                .map(|&v| g.degree(v))
                .min()
        })
        .collect();
    let length = layers.len().saturating_sub(1);
    Ok(LayerProfile {
        root: z,
        layers,
        min_nonessential_degree,
        length,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn essential_vertex_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(essential_vertices(&p4).unwrap(), vec![0, 1, 2, 3]);

        // C₄: deleting any vertex leaves P₃ with the same diameter 2.
        let c4 = Graph::cycle(4).unwrap();
        assert!(essential_vertices(&c4).unwrap().is_empty());

        // K₁,₄: deleting a leaf keeps D = 2; deleting the center drops it.
        let star = Graph::star(5).unwrap();
        assert_eq!(essential_vertices(&star).unwrap(), vec![0]);

        let two = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(essential_vertices(&two), Err(StructureError::Disconnected));
    }

    #[test]
    fn essential_edge_examples() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(essential_edges(&p4).unwrap(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(essential_edges(&Graph::star(5).unwrap()).unwrap().is_empty());
        assert!(essential_edges(&Graph::cycle(6).unwrap()).unwrap().is_empty());
    }

    /// K₄ on {0,1,2,3} with a pendant path 0-4-5.
    fn k4_with_tail() -> Graph {
        Graph::from_edges(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5)],
        )
        .unwrap()
    }

    #[test]
    fn block_decomposition_examples() {
        let g = k4_with_tail();
        let profile = block_decomposition(&g).unwrap();
        assert_eq!(profile.essential_vertices, vec![0, 4, 5]);
        assert_eq!(profile.blocks, vec![vec![0, 1, 2, 3]]);
        assert_eq!(profile.essential_paths, vec![vec![0, 4, 5]]);
        assert_eq!(profile.path_lengths(), vec![2]);

        let p6 = Graph::path(6).unwrap();
        let profile = block_decomposition(&p6).unwrap();
        assert!(profile.blocks.is_empty());
        assert_eq!(profile.essential_paths, vec![vec![0, 1, 2, 3, 4, 5]]);
        assert_eq!(profile.path_lengths(), vec![5]);

        let c5 = Graph::cycle(5).unwrap();
        let profile = block_decomposition(&c5).unwrap();
        assert_eq!(profile.blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(profile.essential_paths.is_empty());
    }

    #[test]
    fn every_essential_edge_joins_essential_vertices() {
        for g in [k4_with_tail(), Graph::path(5).unwrap(), Graph::star(6).unwrap()] {
            let profile = block_decomposition(&g).unwrap();
            for (u, v) in &profile.essential_edges {
                assert!(profile.essential_vertices.contains(u));
                assert!(profile.essential_vertices.contains(v));
            }
        }
    }

    #[test]
    fn local_minimum_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(local_minimum_vertices(&c4).unwrap(), vec![0, 1, 2, 3]);

        let p4 = Graph::path(4).unwrap();
        assert!(local_minimum_vertices(&p4).unwrap().is_empty());

        let star = Graph::star(5).unwrap();
        assert_eq!(local_minimum_vertices(&star).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn layer_profile_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let block: Vec<usize> = (0..5).collect();
        let lp = layer_profile(&c5, &block, 0).unwrap();
        assert_eq!(
            lp.layers.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![1, 2, 2]
        );
        assert_eq!(lp.length, 2);
        assert_eq!(lp.min_nonessential_degree, vec![Some(2), Some(2), Some(2)]);

        let k4 = Graph::complete(4).unwrap();
        let block: Vec<usize> = (0..4).collect();
        let lp = layer_profile(&k4, &block, 2).unwrap();
        assert_eq!(
            lp.layers.iter().map(Vec::len).collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert_eq!(lp.min_nonessential_degree, vec![Some(3), Some(3)]);

        assert_eq!(
            layer_profile(&k4, &[0, 1], 3),
            Err(StructureError::RootNotInBlock { root: 3 })
        );
    }

    #[test]
    fn layer_with_only_essential_members_has_no_minimum() {
        // K₄ with tail: root the block at 0 (essential); layer 0 = {0}
        // contains only an essential vertex, so its entry is None.
        let g = k4_with_tail();
        let profile = block_decomposition(&g).unwrap();
        let lp = layer_profile(&g, &profile.blocks[0], 0).unwrap();
        assert_eq!(lp.min_nonessential_degree[0], None);
        assert_eq!(lp.min_nonessential_degree[1], Some(3));
    }

    #[test]
    fn layers_partition_the_block() {
        let g = k4_with_tail();
        let profile = block_decomposition(&g).unwrap();
        let block = &profile.blocks[0];
        for &z in block {
            let lp = layer_profile(&g, block, z).unwrap();
            let mut members: Vec<usize> = lp.layers.concat();
            members.sort_unstable();
            assert_eq!(&members, block);
            assert!(lp.layers.iter().all(|l| !l.is_empty()));
        }
    }

    #[test]
    fn deleting_nonessential_vertex_never_shrinks_diameter() {
        for g in [
            Graph::cycle(6).unwrap(),
            Graph::star(7).unwrap(),
            k4_with_tail(),
            Graph::complete(5).unwrap(),
        ] {
            let mask = essential_mask_unchecked(&g);
            let d = g.diameter();
            for v in 0..g.n() {
                if mask & (1 << v) == 0 {
                    assert!(g.delete_vertex(v).unwrap().diameter() >= d);
                }
            }
        }
    }
}

//! Simple undirected graphs on at most 62 vertices, stored as one `u64`
//! adjacency bitset per vertex.
//!
//! The 62-vertex cap keeps every adjacency row in a single machine word
//! and lets the graph6 codec use its single-byte size form. Graphs are
//! immutable after construction; the surgeries return new graphs.

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 62;

/// Distance value marking unreachable pairs in a [`DistanceTable`].
pub const UNREACHABLE: u8 = u8::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the supported maximum of {MAX_VERTICES}")]
    UnsupportedSize(usize),
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    OutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
}

#[inline(always)]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Simple undirected graph: `n` vertices indexed `0..n`, symmetric
/// adjacency bitsets, cached edge count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::UnsupportedSize(n));
        }
        Ok(Self {
            n,
            adj: vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    /// Decodes a graph from its upper-triangle bitmask, bits ordered
    /// column-major: x(0,1), x(0,2), x(1,2), x(0,3), … (the graph6 bit
    /// order). Used by the exhaustive enumerator; requires n ≤ 11 so the
    /// triangle fits in one word.
    pub fn from_triangle_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        assert!(n <= 11, "triangle mask only covers n ≤ 11");
        let mut g = Self::empty(n)?;
        let mut k = 0;
        for col in 1..n {
            for row in 0..col {
                if mask & bit(k) != 0 {
                    g.adj[row] |= bit(col);
                    g.adj[col] |= bit(row);
                    g.m += 1;
                }
                k += 1;
            }
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::OutOfRange { index: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::OutOfRange { index: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u] & bit(v) != 0 {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        self.m += 1;
        Ok(())
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge_checked(u, v).unwrap();
            }
        }
        Ok(g)
    }

    /// Path `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Cycle `0-1-…-(n-1)-0` (`n ≥ 3`).
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::path(n)?;
        if n >= 3 {
            g.add_edge_checked(n - 1, 0)?;
        }
        Ok(g)
    }

    /// Star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|v| (0, v)))
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline(always)]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn max_degree(&self) -> u32 {
        self.adj.iter().map(|r| r.count_ones()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.adj.iter().map(|r| r.count_ones()).min().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|r| r.count_ones()).collect()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    /// Non-leaf neighbors of `v`: those with degree ≥ 2.
    pub fn nonleaf_neighbors(&self, v: usize) -> Vec<usize> {
        self.neighbors(v).filter(|&u| self.degree(u) >= 2).collect()
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let mut higher = self.adj[u] & !(bit(u) | (bit(u) - 1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Mask with one bit per vertex.
    #[inline(always)]
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// BFS distances from `src` restricted to the vertices in `mask`
    /// (`src` must be in `mask`). Unreached entries are [`UNREACHABLE`].
    pub fn bfs_masked(&self, src: usize, mask: u64, out: &mut [u8]) {
        out[..self.n].fill(UNREACHABLE);
        debug_assert!(mask & bit(src) != 0);
        let mut visited = bit(src);
        let mut frontier = visited;
        out[src] = 0;
        let mut d = 0u8;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= mask & !visited;
            visited |= next;
            let mut nf = next;
            while nf != 0 {
                let v = nf.trailing_zeros() as usize;
                nf &= nf - 1;
                out[v] = d;
            }
            frontier = next;
        }
    }

    /// All-pairs BFS hop counts.
    pub fn distances(&self) -> DistanceTable {
        let mut dist = vec![UNREACHABLE; self.n * self.n];
        let mask = self.full_mask();
        for src in 0..self.n {
            let (row, _) = dist[src * self.n..].split_at_mut(self.n);
            self.bfs_masked(src, mask, row);
        }
        DistanceTable { n: self.n, dist }
    }

    /// Diameter over the vertices in `mask`: the maximum finite BFS
    /// distance, i.e. the maximum of the per-component diameters of the
    /// induced subgraph. Empty masks give 0.
    pub fn diameter_masked(&self, mask: u64) -> u32 {
        let mut best = 0u32;
        let mut buf = [0u8; MAX_VERTICES];
        let mut srcs = mask;
        while srcs != 0 {
            let src = srcs.trailing_zeros() as usize;
            srcs &= srcs - 1;
            self.bfs_masked(src, mask, &mut buf);
            let mut t = mask;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                let d = buf[v];
                if d != UNREACHABLE && u32::from(d) > best {
                    best = u32::from(d);
                }
            }
        }
        best
    }

    /// Diameter; for disconnected graphs, the maximum among the
    /// diameters of the connected components.
    pub fn diameter(&self) -> u32 {
        self.diameter_masked(self.full_mask())
    }

    /// True iff one BFS from vertex 0 reaches every vertex (single
    /// vertices are connected; so is the empty graph on 0 vertices).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mask = self.full_mask();
        let mut visited = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= mask & !visited;
            visited |= next;
            frontier = next;
        }
        visited == mask
    }

    /// True iff removing `uv` increases the number of connected
    /// components.
    pub fn is_cut_edge(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        // The edge is a cut edge iff v is unreachable from u without it.
        let mut visited = bit(u);
        let mut frontier = visited;
        let mask = self.full_mask();
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                let mut row = self.adj[w];
                if w == u {
                    row &= !bit(v);
                }
                if w == v {
                    row &= !bit(u);
                }
                next |= row;
            }
            next &= mask & !visited;
            if next & bit(v) != 0 {
                return Ok(false);
            }
            visited |= next;
            frontier = next;
        }
        Ok(true)
    }

    /// Induced subgraph on the other vertices; indices above `v` shift
    /// down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::OutOfRange { index: v, n: self.n });
        }
        let low = bit(v) - 1;
        let mut adj = Vec::with_capacity(self.n - 1);
        let mut m = 0usize;
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let row = self.adj[u] & !bit(v);
            let compacted = (row & low) | ((row & !(low | bit(v))) >> 1);
            m += compacted.count_ones() as usize;
            adj.push(compacted);
        }
        Ok(Graph {
            n: self.n - 1,
            adj,
            m: m / 2,
        })
    }

    /// Spanning subgraph with the edge `uv` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        g.m -= 1;
        Ok(g)
    }

    /// Replaces the edge `uv` by a path `u-w-v` through a new vertex
    /// `w = n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::UnsupportedSize(self.n + 1));
        }
        let w = self.n;
        let mut g = Graph {
            n: self.n + 1,
            adj: self.adj.clone(),
            m: self.m + 1,
        };
        g.adj.push(0);
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        g.adj[u] |= bit(w);
        g.adj[v] |= bit(w);
        g.adj[w] = bit(u) | bit(v);
        Ok(g)
    }

    /// Relabels the graph by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = self.adj[u];
            let mut mapped = 0u64;
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                mapped |= bit(perm[v]);
            }
            adj[perm[u]] = mapped;
        }
        Graph {
            n: self.n,
            adj,
            m: self.m,
        }
    }

    /// Disjoint union, the other graph's vertices renumbered after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::UnsupportedSize(n));
        }
        let mut adj = self.adj.clone();
        for v in 0..other.n {
            adj.push(other.adj[v] << self.n);
        }
        Ok(Graph {
            n,
            adj,
            m: self.m + other.m,
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over the set bits of a mask, ascending.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Symmetric matrix of BFS hop counts; [`UNREACHABLE`] marks pairs in
/// different components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceTable {
    #[inline(always)]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.dist[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Maximum finite entry.
    pub fn max_finite(&self) -> u32 {
        self.dist
            .iter()
            .filter(|&&d| d != UNREACHABLE)
            .map(|&d| u32::from(d))
            .max()
            .unwrap_or(0)
    }
}

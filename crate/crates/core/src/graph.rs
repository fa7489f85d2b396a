//! Compact simple graphs on at most 64 vertices.
//!
//! Each vertex owns one 64-bit row holding its neighbor set, so neighborhood
//! intersection and degree queries are single word operations. Graph values are
//! immutable once built; every construction returns a new graph.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// An undirected simple graph with vertices `0..n`.
///
/// Invariants: rows are symmetric, no vertex is its own neighbor, and no bit at
/// or above `n` is set in any row. Rows at index `n` and beyond are zero, so the
/// derived equality and hashing compare exactly the labeled graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

/// A proper 2-coloring: `sides[0]` holds every vertex colored 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub sides: [u64; 2],
}

impl Bipartition {
    /// Side sizes, smaller first.
    pub fn sizes(&self) -> (usize, usize) {
        let a = self.sides[0].count_ones() as usize;
        let b = self.sides[1].count_ones() as usize;
        (a.min(b), a.max(b))
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::ParamOutOfRange(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Builds the graph with exactly the listed edges; repeated pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::BadEdge { u, v, n });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor rows, validating every invariant.
    pub fn from_rows(rows: &[u64]) -> Result<Graph> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !all != 0 || row & bit(u) != 0 {
                let v = (row & (!all | bit(u))).trailing_zeros() as usize;
                return Err(Error::BadEdge { u, v, n });
            }
            g.adj[u] = row;
        }
        for u in 0..n {
            for v in Bits(g.adj[u]) {
                if g.adj[v] & bit(u) == 0 {
                    return Err(Error::BadEdge { u, v, n });
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::BadEdge { u, v, n: self.n });
        }
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    /// Copy of this graph with the edge `uv` removed (a no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::BadEdge { u, v, n: self.n });
        }
        let mut g = *self;
        g.clear_edge(u, v);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// `G ∇ H`: disjoint union plus every edge between the two parts.
    /// Vertices of `self` keep their labels; those of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.union(other)?;
        let a = self.n;
        let left = low_mask(a);
        let right = g.vertex_mask() & !left;
        for v in 0..a {
            g.adj[v] |= right;
        }
        for v in a..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Vertex-disjoint union, `other` relabeled after `self`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        g.adj[..self.n].copy_from_slice(self.rows());
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// `k` disjoint copies of `g`.
    pub fn disjoint_copies(k: usize, g: &Graph) -> Result<Graph> {
        if k == 0 {
            return Err(Error::ParamOutOfRange("disjoint_copies needs k >= 1".into()));
        }
        check_order(k.saturating_mul(g.n))?;
        let mut out = *g;
        for _ in 1..k {
            out = out.union(g)?;
        }
        Ok(out)
    }

    pub fn complement(&self) -> Graph {
        let mut g = *self;
        let all = self.vertex_mask();
        for v in 0..self.n {
            g.adj[v] = all & !self.adj[v] & !bit(v);
        }
        g
    }

    /// Graph induced on the vertices of `mask`, relabeled `0..|mask|` in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let verts: Vec<usize> = Bits(mask).collect();
        let mut g = Graph {
            n: verts.len(),
            adj: [0; MAX_ORDER],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    g.adj[i] |= bit(j);
                }
            }
        }
        g
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    ///
    /// `order` must be a permutation of `0..n`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        let mut pos = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_ORDER],
        };
        for (i, &v) in order.iter().enumerate() {
            let mut row = 0u64;
            for w in Bits(self.adj[v]) {
                row |= bit(pos[w]);
            }
            g.adj[i] = row;
        }
        g
    }

    /// Adds one vertex adjacent to exactly the vertices in `nbrs`.
    pub fn add_vertex(&self, nbrs: u64) -> Result<Graph> {
        let n = self.n + 1;
        check_order(n)?;
        if nbrs & !self.vertex_mask() != 0 {
            return Err(Error::BadEdge {
                u: self.n,
                v: (nbrs & !self.vertex_mask()).trailing_zeros() as usize,
                n,
            });
        }
        let mut g = *self;
        g.n = n;
        g.adj[self.n] = nbrs;
        for v in Bits(nbrs) {
            g.adj[v] |= bit(self.n);
        }
        Ok(g)
    }

    /// Vertex masks of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let comp = self.reach(left & left.wrapping_neg());
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn reach(&self, start: u64) -> u64 {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connectivity; graphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach(1) == self.vertex_mask()
    }

    /// A 2-coloring if one exists. The smallest vertex of each component is colored 0.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut sides = [0u64; 2];
        for comp in self.components() {
            let mut color = [comp & comp.wrapping_neg(), 0u64];
            let mut frontier = color[0];
            let mut side = 0;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                if next & color[side] != 0 {
                    return None;
                }
                side ^= 1;
                frontier = next & !color[side];
                color[side] |= next;
            }
            sides[0] |= color[0];
            sides[1] |= color[1];
        }
        Some(Bipartition { sides })
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == r)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderTooLarge { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

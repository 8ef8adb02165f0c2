//! Graphs as u64 adjacency bitsets.
//!
//! Everything in this crate works on simple undirected graphs with at most 64 vertices, so
//! one machine word per vertex is both the fastest and the simplest representation:
//! neighbourhoods are masks, set operations are single instructions, and connectivity is a
//! word-parallel flood fill.

use crate::error::{Error, Result};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

/// Hard cap imposed by the u64 bitset rows.
pub const MAX_VERTICES: usize = 64;

// ============================================================================
// VertexSet
// ============================================================================

/// A set of vertices stored as a bitmask. Ordering is by mask value, which is what the
/// deterministic witness tie-breaking below relies on.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> VertexSet {
        VertexSet(mask)
    }

    /// The full set {0, ..., n-1}.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> VertexSet {
        let mut mask = 0u64;
        for v in indices {
            debug_assert!(v < MAX_VERTICES);
            mask |= 1u64 << v;
        }
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Ascending iterator over the member indices.
    pub fn iter(self) -> BitIndices {
        BitIndices(self.0)
    }
}

/// Iterator over set bits, lowest first.
pub struct BitIndices(u64);

impl Iterator for BitIndices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&(v as u32))?;
        }
        seq.end()
    }
}

// ============================================================================
// Graph
// ============================================================================

/// Simple undirected graph on 1..=64 vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on n vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        let full = VertexSet::full(n).mask();
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        debug_assert!(g.invariants_ok());
        Ok(g)
    }

    /// Path v0 - v1 - ... - v(n-1).
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    /// Cycle on n >= 3 vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// Star K_{1,n-1} with the centre at vertex 0.
    pub fn star(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            g.add_edge(0, v)?;
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::InvalidVertex { index: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::InvalidVertex { index: v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    /// Overwrite the whole neighbor mask of u. Callers must restore symmetry themselves;
    /// this exists for bulk constructions that write every row.
    pub(crate) fn set_neighbors(&mut self, u: usize, mask: u64) {
        self.adj[u] = mask & !(1u64 << u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, in column-major order (the graph6 bit order).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> u64 {
        VertexSet::full(self.n).mask()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(VertexSet::EMPTY).unwrap() == 1
    }

    /// Number of connected components of G - removed. The removed set must leave at least
    /// one vertex.
    pub fn component_count(&self, removed: VertexSet) -> Result<usize> {
        let all = self.vertex_mask();
        if removed.mask() & !all != 0 {
            return Err(Error::InvalidVertex {
                index: (removed.mask() & !all).trailing_zeros() as usize,
                n: self.n,
            });
        }
        if removed.mask() == all {
            return Err(Error::RemovalLeavesNothing);
        }
        let mut unseen = all & !removed.mask();
        let mut count = 0;
        while unseen != 0 {
            let start = unseen & unseen.wrapping_neg();
            let mut comp = 0u64;
            let mut frontier = start;
            while frontier != 0 {
                comp |= frontier;
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v];
                }
                frontier = next & unseen & !comp;
            }
            unseen &= !comp;
            count += 1;
        }
        Ok(count)
    }

    /// Vertex sets of the connected components of G - removed, lowest vertex first.
    pub fn components(&self, removed: VertexSet) -> Result<Vec<VertexSet>> {
        let all = self.vertex_mask();
        if removed.mask() == all {
            return Err(Error::RemovalLeavesNothing);
        }
        let mut unseen = all & !removed.mask();
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen & unseen.wrapping_neg();
            let mut comp = 0u64;
            let mut frontier = start;
            while frontier != 0 {
                comp |= frontier;
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v];
                }
                frontier = next & unseen & !comp;
            }
            unseen &= !comp;
            out.push(VertexSet(comp));
        }
        Ok(out)
    }

    /// Disjoint union; vertices of g1 keep their labels, vertices of g2 are shifted up.
    pub fn union(g1: &Graph, g2: &Graph) -> Result<Graph> {
        let n = g1.n + g2.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow(n));
        }
        let mut g = Graph::new(n)?;
        g.adj[..g1.n].copy_from_slice(&g1.adj);
        for v in 0..g2.n {
            g.adj[g1.n + v] = g2.adj[v] << g1.n;
        }
        debug_assert!(g.invariants_ok());
        Ok(g)
    }

    /// Join: disjoint union plus all edges between the two sides, g1 labels first.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
        let mut g = Graph::union(g1, g2)?;
        let left = VertexSet::full(g1.n).mask();
        let right = g.vertex_mask() & !left;
        for v in 0..g1.n {
            g.adj[v] |= right;
        }
        for v in g1.n..g.n {
            g.adj[v] |= left;
        }
        debug_assert!(g.invariants_ok());
        Ok(g)
    }

    /// Relabel: vertex v of self becomes vertex perm[v] of the result.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation length {} != n = {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n {
                return Err(Error::InvalidVertex { index: p, n: self.n });
            }
            seen |= 1u64 << p;
        }
        if seen != self.vertex_mask() {
            return Err(Error::InvalidParameter("permutation is not a bijection".into()));
        }
        let mut g = Graph::new(self.n)?;
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                if u < v {
                    g.add_edge(perm[u], perm[v])?;
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on the kept vertices, relabeled in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let verts: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        if verts.is_empty() {
            return Err(Error::RemovalLeavesNothing);
        }
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn invariants_ok(&self) -> bool {
        let all = self.vertex_mask();
        for u in 0..self.n {
            if self.adj[u] & !all != 0 {
                return false;
            }
            if self.adj[u] >> u & 1 == 1 {
                return false;
            }
            for v in self.neighbors(u).iter() {
                if !self.has_edge(v, u) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex owns one `u64` row of its adjacency matrix, so neighbourhood
//! queries, intersections and degree counts are single word operations.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count representable by the bitset core.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An edge between two distinct vertices, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
}

impl EdgeRef {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(EdgeRef { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(EdgeRef { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::arg(format!("loop at vertex {a}"))),
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A finite simple undirected graph.
///
/// Invariants: rows are symmetric, the diagonal is clear, no bit at or above
/// `n` is set, and `m` is half the total population count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            m: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            let e = EdgeRef::new(a, b)?;
            if e.v >= n {
                return Err(Error::arg(format!("edge {e} out of range for n = {n}")));
            }
            if g.has_edge(e.u, e.v) {
                return Err(Error::arg(format!("duplicate edge {e}")));
            }
            g.insert_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mask = low_mask(n);
        let mut pop = 0usize;
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::arg(format!("row {v} has bits beyond n = {n}")));
            }
            if row & bit(v) != 0 {
                return Err(Error::arg(format!("loop at vertex {v}")));
            }
            let mut rest = row;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if rows[u] & bit(v) == 0 {
                    return Err(Error::arg(format!("asymmetric adjacency at {v}-{u}")));
                }
            }
            pop += row.count_ones() as usize;
        }
        Ok(Graph {
            n,
            adj: rows,
            m: pop / 2,
        })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>, m: usize) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).map(|g| g.m) == Ok(m));
        Graph {
            n: rows.len(),
            adj: rows,
            m,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// All edges in increasing `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut rest = self.adj[u] & !low_mask(u + 1);
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(EdgeRef { u, v })
            })
        })
    }

    /// Unordered vertex pairs not joined by an edge, in increasing order.
    pub fn non_edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        let full = low_mask(self.n);
        (0..self.n).flat_map(move |u| {
            let mut rest = !self.adj[u] & full & !low_mask(u + 1);
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(EdgeRef { u, v })
            })
        })
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        self.m += 1;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        self.m -= 1;
    }

    fn check_edge(&self, e: EdgeRef) -> Result<()> {
        if self.has_edge(e.u, e.v) {
            Ok(())
        } else {
            Err(Error::arg(format!("edge {e} is not present")))
        }
    }

    /// Copy of the graph with `e` added.
    pub fn with_edge(&self, e: EdgeRef) -> Result<Graph> {
        if e.v >= self.n {
            return Err(Error::arg(format!("edge {e} out of range for n = {}", self.n)));
        }
        if self.has_edge(e.u, e.v) {
            return Err(Error::arg(format!("edge {e} already present")));
        }
        let mut g = self.clone();
        g.insert_edge(e.u, e.v);
        Ok(g)
    }

    pub fn delete_edge(&self, e: EdgeRef) -> Result<Graph> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.remove_edge(e.u, e.v);
        Ok(g)
    }

    /// Induced subgraph on the vertices not in `vs`, relabelled so that the
    /// surviving vertices keep their relative order.
    pub fn delete_vertices(&self, vs: &[usize]) -> Result<Graph> {
        let mut removed = 0u64;
        for &v in vs {
            if v >= self.n {
                return Err(Error::arg(format!("vertex {v} out of range for n = {}", self.n)));
            }
            removed |= bit(v);
        }
        Ok(self.induced(low_mask(self.n) & !removed))
    }

    /// Induced subgraph on the vertex set `keep`, compacted.
    pub fn induced(&self, keep: u64) -> Graph {
        let kept: Vec<usize> = (0..self.n).filter(|&v| keep & bit(v) != 0).collect();
        let mut rows = Vec::with_capacity(kept.len());
        let mut pop = 0usize;
        for &v in &kept {
            let row = compress(self.adj[v] & keep, keep);
            pop += row.count_ones() as usize;
            rows.push(row);
        }
        Graph::from_rows_unchecked(rows, pop / 2)
    }

    /// `G(e/j)`: replaces edge `e` by a path through `j` new degree-two
    /// vertices numbered `n..n+j`.
    pub fn subdivide(&self, e: EdgeRef, j: usize) -> Result<Graph> {
        self.check_edge(e)?;
        if j == 0 {
            return Ok(self.clone());
        }
        let total = self.n + j;
        if total > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "subdividing to {total} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mut g = self.clone();
        g.remove_edge(e.u, e.v);
        g.n = total;
        g.adj.resize(total, 0);
        let mut prev = e.u;
        for w in self.n..total {
            g.insert_edge(prev, w);
            prev = w;
        }
        g.insert_edge(prev, e.v);
        Ok(g)
    }

    /// True iff the graph has at most one connected component. The null graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0) == low_mask(self.n)
    }

    /// Vertex set of the component containing `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        let mut seen = bit(v);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// True iff removing `e` disconnects its endpoints.
    pub fn is_bridge(&self, e: EdgeRef) -> bool {
        let mut g = self.clone();
        g.remove_edge(e.u, e.v);
        g.component_of(e.u) & bit(e.v) == 0
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (v, &pv) in perm.iter().enumerate() {
            let mut rest = self.adj[v];
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                rows[pv] |= bit(perm[u]);
            }
        }
        Graph::from_rows_unchecked(rows, self.m)
    }

    /// Disjoint union with vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for e in self.edges() {
            g.insert_edge(e.u, e.v);
        }
        for e in other.edges() {
            g.insert_edge(e.u + self.n, e.v + self.n);
        }
        Ok(g)
    }
}

/// Packs the bits of `row` selected by `keep` into the low positions.
fn compress(row: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    let mut idx = 0;
    let mut rest = keep;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        if row & (1u64 << v) != 0 {
            out |= 1u64 << idx;
        }
        idx += 1;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().map(|e| e.to_string()).collect();
        write!(f, "Graph(n={}, [{}])", self.n, edges.join(","))
    }
}

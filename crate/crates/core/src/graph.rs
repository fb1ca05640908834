//! Small simple undirected graphs stored as one `u64` adjacency row per vertex.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An unordered vertex pair, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must be distinct");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl From<[usize; 2]> for Edge {
    fn from(p: [usize; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Non-decreasing.
    pub degree_sequence: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderOverflow(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.rows[v] = full_mask(n) & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        Ok(g)
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let n = parts.iter().sum();
        let mut g = Graph::complete(n)?;
        let mut start = 0;
        for &p in parts {
            for a in start..start + p {
                for b in a + 1..start + p {
                    g.remove_edge(a, b);
                }
            }
            start += p;
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange(a.max(b)));
            }
            if a == b {
                return Err(Error::Parse(format!("loop at vertex {a}")));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.rows[a] >> b & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Inserts `ab`; no-op if present. Panics on a loop or out-of-range vertex.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n, "bad edge {a}-{b}");
        self.rows[a] |= 1 << b;
        self.rows[b] |= 1 << a;
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        if a < self.n && b < self.n {
            self.rows[a] &= !(1 << b);
            self.rows[b] &= !(1 << a);
        }
    }

    pub fn with_edge(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        g.add_edge(e.u, e.v);
        g
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        g.remove_edge(e.u, e.v);
        g
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.n >= MAX_ORDER {
            return Err(Error::OrderOverflow(self.n + 1));
        }
        self.rows.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.rows[u] & !full_mask(u + 1)).map(move |v| Edge { u, v })
        })
    }

    /// Missing vertex pairs in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let all = self.vertex_mask();
        (0..self.n).flat_map(move |u| {
            bits(!self.rows[u] & all & !full_mask(u + 1)).map(move |v| Edge { u, v })
        })
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.rows[v] & mask == mask & !(1 << v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Disjoint union with vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderOverflow(n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = full_mask(self.n);
        let right = full_mask(g.n) & !left;
        for v in 0..g.n {
            g.rows[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    /// Subgraph induced by `mask`, relabelled densely in increasing vertex order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let rows = keep
            .iter()
            .map(|&v| {
                bits(self.rows[v] & mask).fold(0u64, |acc, w| acc | 1 << pos[w])
            })
            .collect();
        Graph {
            n: keep.len(),
            rows,
        }
    }

    pub fn delete_vertices(&self, mask: u64) -> Graph {
        self.induced(self.vertex_mask() & !mask)
    }

    /// Relabels vertex `v` to `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[perm[v]] = bits(self.rows[v]).fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Graph { n: self.n, rows }
    }

    /// Merges the endpoints of `e` into `e.u`; vertices above `e.v` shift down by one.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::MissingEdge(e.u, e.v));
        }
        Ok(self.merge_vertices(e.u, e.v))
    }

    /// Identifies `b` into `a` (adjacent or not) and deletes `b`.
    pub(crate) fn merge_vertices(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        let nb = g.rows[b] & !(1 << a);
        for w in bits(nb) {
            g.rows[w] |= 1 << a;
        }
        g.rows[a] |= nb;
        g.rows[a] &= !(1 << b);
        g.delete_vertices(1 << b)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        DegreeStats {
            min_degree: seq.first().copied().unwrap_or(0),
            max_degree: seq.last().copied().unwrap_or(0),
            degree_sequence: seq,
        }
    }

    /// Connected components of the subgraph induced by `within`, each as a vertex mask,
    /// ordered by least vertex.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut left = within & self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                next &= within & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertex_mask())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub(crate) fn is_connected_within(&self, within: u64) -> bool {
        self.components_within(within).len() <= 1
    }

    /// Size of a minimum vertex cut; `n - 1` for complete graphs.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n;
        if n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        if self.is_complete() {
            return n - 1;
        }
        // Some vertex among the first kappa + 1 lies outside a minimum cut and is
        // non-adjacent to a vertex on the far side.
        let mut best = n - 1;
        let mut i = 0;
        while i <= best && i < n {
            for j in 0..n {
                if j != i && !self.has_edge(i, j) {
                    best = best.min(self.local_connectivity(i, j, best));
                }
            }
            i += 1;
        }
        best
    }

    /// Number of internally vertex-disjoint s-t paths (s, t non-adjacent), capped at `cap`.
    fn local_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        // Node 2v is v_in, 2v+1 is v_out; unit capacities.
        let n = self.n;
        let nodes = 2 * n;
        let mut cap_m = vec![vec![0i8; nodes]; nodes];
        for v in 0..n {
            cap_m[2 * v][2 * v + 1] = if v == s || v == t { i8::MAX } else { 1 };
            for w in bits(self.rows[v]) {
                cap_m[2 * v + 1][2 * w] = 1;
            }
        }
        let (src, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut parent = vec![usize::MAX; nodes];
        while flow < cap {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[src] = src;
            let mut queue = VecDeque::from([src]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for y in 0..nodes {
                    if parent[y] == usize::MAX && cap_m[x][y] > 0 {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != src {
                let x = parent[y];
                cap_m[x][y] -= 1;
                cap_m[y][x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    /// Edges whose endpoints have no common neighbour.
    pub fn non_triangular_edges(&self) -> Vec<Edge> {
        self.edges()
            .filter(|e| self.rows[e.u] & self.rows[e.v] == 0)
            .collect()
    }

    pub fn is_triangular(&self, e: Edge) -> bool {
        self.rows[e.u] & self.rows[e.v] != 0
    }

    /// Triangles as sorted vertex triples, lexicographically ordered.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in bits(self.rows[a] & !full_mask(a + 1)) {
                for c in bits(self.rows[a] & self.rows[b] & !full_mask(b + 1)) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, size: usize, cand: u64, best: &mut usize) {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            if cand == 0 {
                *best = size;
                return;
            }
            let mut c = cand;
            while c != 0 {
                if size + c.count_ones() as usize <= *best {
                    return;
                }
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                grow(g, size + 1, c & g.rows[v], best);
            }
        }
        let mut best = 0;
        grow(self, 0, self.vertex_mask(), &mut best);
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_edgeless() {
        for n in 1..=7 {
            let c = Graph::complete(n).unwrap().complement();
            assert_eq!(c.size(), 0);
            assert_eq!(c.order(), n);
        }
    }

    #[test]
    fn join_size_formula() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.join(&k1).unwrap(), Graph::complete(2).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        let p4 = Graph::path(4).unwrap();
        let j = c5.join(&p4).unwrap();
        assert_eq!(j.size(), 5 + 3 + 20);
        assert!(Graph::complete(40)
            .unwrap()
            .join(&Graph::complete(25).unwrap())
            .is_err());
    }

    #[test]
    fn contraction_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.contract_edge(Edge::new(0, 2)).unwrap(), Graph::complete(2).unwrap());
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.contract_edge(Edge::new(1, 3)).unwrap(), Graph::complete(4).unwrap());
        let c6 = Graph::cycle(6).unwrap();
        let c = c6.contract_edge(Edge::new(2, 3)).unwrap();
        assert_eq!((c.order(), c.size()), (5, 5));
        assert_eq!(c.degree_stats().degree_sequence, vec![2; 5]);
        assert!(c.is_connected());
        assert_eq!(
            c6.contract_edge(Edge::new(0, 3)),
            Err(Error::MissingEdge(0, 3))
        );
    }

    #[test]
    fn connectivity_small() {
        for n in 2..=9 {
            assert_eq!(Graph::complete(n).unwrap().vertex_connectivity(), n - 1);
        }
        assert_eq!(Graph::path(3).unwrap().vertex_connectivity(), 1);
        assert_eq!(Graph::cycle(7).unwrap().vertex_connectivity(), 2);
        let two = Graph::empty(4).unwrap();
        assert_eq!(two.vertex_connectivity(), 0);
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.vertex_connectivity(), 3);
    }

    #[test]
    fn non_triangular() {
        assert!(Graph::complete(5).unwrap().non_triangular_edges().is_empty());
        assert_eq!(Graph::cycle(5).unwrap().non_triangular_edges().len(), 5);
        assert_eq!(Graph::cycle(3).unwrap().non_triangular_edges().len(), 0);
    }

    #[test]
    fn degree_stats_of_k7_minus() {
        let g = Graph::complete(7).unwrap().without_edge(Edge::new(0, 1));
        let s = g.degree_stats();
        assert_eq!((s.min_degree, s.max_degree), (5, 6));
        assert_eq!(s.degree_sequence.iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn clique_number_and_triangles() {
        assert_eq!(Graph::complete(6).unwrap().clique_number(), 6);
        assert_eq!(Graph::cycle(6).unwrap().clique_number(), 2);
        assert_eq!(Graph::complete(4).unwrap().triangles().len(), 4);
    }

    #[test]
    fn induced_relabels_densely() {
        let g = Graph::cycle(6).unwrap();
        let h = g.delete_vertices(1 << 0);
        assert_eq!(h, Graph::path(5).unwrap());
    }
}

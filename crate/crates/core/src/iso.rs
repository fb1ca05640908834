//! Canonical labelling by partition refinement and individualisation, with
//! automorphism pruning of the search tree.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};
use crate::graph6;

/// Byte string identifying an isomorphism class (of a graph, or of a vertex-coloured graph).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", String::from_utf8_lossy(&self.0))
    }
}

/// Result of canonical labelling: `labeling[v]` is the canonical position of `v`.
#[derive(Debug, Clone)]
pub struct Canon {
    pub form: CanonicalForm,
    pub labeling: Vec<usize>,
    pub graph: Graph,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Canon {
    canon_with_colors(g, &vec![0; g.order()])
}

/// Canonical form of `g` with the vertex colouring `colors`; automorphisms must preserve colours.
pub fn canonical_form_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    canon_with_colors(g, colors).form
}

/// Canonical form of `g` with the vertices in `mask` marked.
pub fn canonical_form_marked(g: &Graph, mask: u64) -> CanonicalForm {
    let colors: Vec<u32> = (0..g.order()).map(|v| (mask >> v & 1) as u32).collect();
    canonical_form_colored(g, &colors)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_stats().degree_sequence == h.degree_stats().degree_sequence
        && canonical_form(g) == canonical_form(h)
}

/// Some isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let cg = canonical_labeling(g);
    let ch = canonical_labeling(h);
    if cg.form != ch.form {
        return None;
    }
    let mut inv_h = vec![0; h.order()];
    for (w, &p) in ch.labeling.iter().enumerate() {
        inv_h[p] = w;
    }
    Some(cg.labeling.iter().map(|&p| inv_h[p]).collect())
}

fn canon_with_colors(g: &Graph, colors: &[u32]) -> Canon {
    let n = g.order();
    assert_eq!(colors.len(), n);
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<u64> = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).fold(0u64, |m, v| m | 1 << v))
        .collect();

    let mut search = Search {
        rows: g.rows(),
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut path = Vec::new();
    if n > 0 {
        search.descend(cells, &mut path);
    }
    let labeling = search.best.map(|l| l.perm).unwrap_or_default();
    let graph = g.permute(&labeling);

    let mut key = graph6::encode(&graph).into_bytes();
    if palette.len() > 1 {
        let mut by_pos = vec![0u32; n];
        for v in 0..n {
            by_pos[labeling[v]] = colors[v];
        }
        key.push(0);
        for c in by_pos {
            key.extend_from_slice(&c.to_be_bytes());
        }
    }
    Canon {
        form: CanonicalForm(key),
        labeling,
        graph,
    }
}

struct Leaf {
    rows: Vec<u64>,
    perm: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn refine(&self, mut cells: Vec<u64>) -> Vec<u64> {
        loop {
            let mut next = Vec::with_capacity(self.n);
            for &cell in &cells {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut sigs: Vec<(Vec<u8>, usize)> = bits(cell)
                    .map(|v| {
                        let sig = cells
                            .iter()
                            .map(|&c| (self.rows[v] & c).count_ones() as u8)
                            .collect();
                        (sig, v)
                    })
                    .collect();
                sigs.sort_unstable();
                let mut i = 0;
                while i < sigs.len() {
                    let mut mask = 0u64;
                    let mut j = i;
                    while j < sigs.len() && sigs[j].0 == sigs[i].0 {
                        mask |= 1 << sigs[j].1;
                        j += 1;
                    }
                    next.push(mask);
                    i = j;
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    /// Explores the subtree below `cells`; returns `Some(level)` when the search should
    /// unwind to the node at depth `level`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = self.refine(cells);
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let (idx, &target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let depth = path.len();
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, path) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..idx]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[idx + 1..]);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if path.iter().all(|&x| a[x] == x) {
                any = true;
                for x in 0..self.n {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let mut perm = vec![0usize; self.n];
        for (pos, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = pos;
        }
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[perm[v]] = bits(self.rows[v]).fold(0, |acc, w| acc | 1 << perm[w]);
        }
        let leaf = Leaf {
            rows,
            perm,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                rows: leaf.rows.clone(),
                perm: leaf.perm.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.rows == leaf.rows {
            let level = common_prefix(&first.path, path);
            let auto = compose_auto(&first.perm, &leaf.perm);
            self.autos.push(auto);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let level = common_prefix(&best.path, path);
                let auto = compose_auto(&best.perm, &leaf.perm);
                self.autos.push(auto);
                Some(level)
            }
            std::cmp::Ordering::Greater => None,
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Automorphism mapping `v` to the vertex that `reference` sends where `other` sends `v`.
fn compose_auto(reference: &[usize], other: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; reference.len()];
    for (v, &p) in reference.iter().enumerate() {
        inv[p] = v;
    }
    other.iter().map(|&p| inv[p]).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectKind {
    Vertex,
    Edge,
    NonEdge,
    Triangle,
}

/// Orbits of objects of one kind under the full automorphism group. Each object is a
/// sorted vertex tuple; orbits are sorted by least member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPartition {
    pub kind: ObjectKind,
    pub orbits: Vec<Vec<Vec<usize>>>,
}

impl OrbitPartition {
    pub fn representatives(&self) -> Vec<&[usize]> {
        self.orbits.iter().map(|o| o[0].as_slice()).collect()
    }

    pub fn orbit_of(&self, object: &[usize]) -> Option<usize> {
        self.orbits
            .iter()
            .position(|o| o.iter().any(|x| x.as_slice() == object))
    }
}

/// Two objects share an orbit iff marking either yields the same canonical form.
pub fn orbits(g: &Graph, kind: ObjectKind) -> OrbitPartition {
    let objects: Vec<Vec<usize>> = match kind {
        ObjectKind::Vertex => (0..g.order()).map(|v| vec![v]).collect(),
        ObjectKind::Edge => g.edges().map(|e| vec![e.u, e.v]).collect(),
        ObjectKind::NonEdge => g.non_edges().map(|e| vec![e.u, e.v]).collect(),
        ObjectKind::Triangle => g.triangles().into_iter().map(|t| t.to_vec()).collect(),
    };
    let mut groups: BTreeMap<CanonicalForm, Vec<Vec<usize>>> = BTreeMap::new();
    for obj in objects {
        let mask = obj.iter().fold(0u64, |m, &v| m | 1 << v);
        groups
            .entry(canonical_form_marked(g, mask))
            .or_default()
            .push(obj);
    }
    let mut orbits: Vec<Vec<Vec<usize>>> = groups.into_values().collect();
    for o in &mut orbits {
        o.sort();
    }
    orbits.sort();
    OrbitPartition { kind, orbits }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        g.order() == h.order() && all_perms(g.order()).iter().any(|p| &g.permute(p) == h)
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                let e: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                Graph::from_edges(n, &e).unwrap()
            })
            .collect()
    }

    #[test]
    fn c5_self_complementary() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&c5.complement()));
    }

    #[test]
    fn canonical_equality_matches_brute_force_for_n4_and_n5() {
        for n in [4, 5] {
            let graphs = all_graphs(n);
            let forms: Vec<_> = graphs.iter().map(canonical_form).collect();
            let distinct: std::collections::BTreeSet<_> = forms.iter().collect();
            assert_eq!(distinct.len(), if n == 4 { 11 } else { 34 });
            // pairwise agreement on a strided sample
            for i in (0..graphs.len()).step_by(37) {
                for j in (0..graphs.len()).step_by(53) {
                    assert_eq!(
                        forms[i] == forms[j],
                        brute_isomorphic(&graphs[i], &graphs[j]),
                        "{:?} vs {:?}",
                        graphs[i],
                        graphs[j]
                    );
                }
            }
        }
    }

    #[test]
    fn isomorphism_map_is_valid() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 3)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        let h = g.permute(&perm);
        let iso = find_isomorphism(&g, &h).unwrap();
        assert_eq!(g.permute(&iso), h);
    }

    #[test]
    fn complete_graph_orbits_and_large_orders() {
        for n in [3, 8, 20, 64] {
            let k = Graph::complete(n).unwrap();
            let c = canonical_labeling(&k);
            assert_eq!(c.graph, k);
        }
        let o = orbits(&Graph::complete(6).unwrap(), ObjectKind::Edge);
        assert_eq!(o.orbits.len(), 1);
        assert_eq!(o.orbits[0].len(), 15);
    }

    #[test]
    fn path_vertex_orbits() {
        let p = Graph::path(5).unwrap();
        let o = orbits(&p, ObjectKind::Vertex);
        assert_eq!(o.orbits, vec![vec![vec![0], vec![4]], vec![vec![1], vec![3]], vec![vec![2]]]);
    }

    #[test]
    fn cycle_with_chord_non_edges() {
        let g = Graph::cycle(6).unwrap().with_edge(Edge::new(0, 3));
        let o = orbits(&g, ObjectKind::NonEdge);
        let total: usize = o.orbits.iter().map(|x| x.len()).sum();
        assert_eq!(total, 15 - 7);
        for orbit in &o.orbits {
            let forms: std::collections::BTreeSet<_> = orbit
                .iter()
                .map(|e| canonical_form(&g.with_edge(Edge::new(e[0], e[1]))))
                .collect();
            assert_eq!(forms.len(), 1);
        }
    }
}

//! Delta-wye and wye-delta moves, and closure of graph families under them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::iso::{canonical_labeling, CanonicalForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Move {
    #[serde(rename = "delta-y")]
    DeltaY,
    #[serde(rename = "y-delta")]
    YDelta,
}

/// Replaces the triangle's edges with a new vertex (index `n`) joined to its corners.
pub fn delta_y(g: &Graph, triangle: [usize; 3]) -> Result<Graph> {
    let [a, b, c] = triangle;
    if a.max(b).max(c) >= g.order()
        || a == b
        || b == c
        || a == c
        || !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
    {
        return Err(Error::NotATriangle(triangle));
    }
    let mut h = g.clone();
    h.remove_edge(a, b);
    h.remove_edge(b, c);
    h.remove_edge(a, c);
    let w = h.add_vertex()?;
    for x in triangle {
        h.add_edge(w, x);
    }
    Ok(h)
}

/// Deletes a degree-3 vertex and joins its neighbours pairwise; existing edges are kept
/// single, so the size can drop.
pub fn y_delta(g: &Graph, center: usize) -> Result<Graph> {
    if center >= g.order() {
        return Err(Error::VertexOutOfRange(center));
    }
    let degree = g.degree(center);
    if degree != 3 {
        return Err(Error::DegreeNotThree {
            vertex: center,
            degree,
        });
    }
    let nb: Vec<usize> = bits(g.neighbors(center)).collect();
    let mut h = g.clone();
    h.add_edge(nb[0], nb[1]);
    h.add_edge(nb[1], nb[2]);
    h.add_edge(nb[0], nb[2]);
    Ok(h.delete_vertices(1 << center))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClosureMember {
    /// Canonically labelled representative.
    pub graph: Graph,
    /// `None` for seeds.
    pub parent: Option<usize>,
    pub via: Option<Move>,
}

/// Members are indexed in discovery order; discovery follows canonical-key order.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    pub members: Vec<ClosureMember>,
    index: BTreeMap<CanonicalForm, usize>,
}

impl ClosureResult {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter().map(|m| &m.graph)
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.index.contains_key(&canonical_labeling(g).form)
    }

    pub fn position(&self, g: &Graph) -> Option<usize> {
        self.index.get(&canonical_labeling(g).form).copied()
    }

    /// Moves leading from a seed to member `i`.
    pub fn genealogy(&self, mut i: usize) -> Vec<Move> {
        let mut moves = Vec::new();
        while let (Some(p), Some(m)) = (self.members[i].parent, self.members[i].via) {
            moves.push(m);
            i = p;
        }
        moves.reverse();
        moves
    }
}

/// Least family containing `seeds` and closed under `moves`.
pub fn closure(seeds: &[Graph], moves: &[Move]) -> ClosureResult {
    let moves: BTreeSet<Move> = moves.iter().copied().collect();
    let mut out = ClosureResult {
        members: Vec::new(),
        index: BTreeMap::new(),
    };
    let mut pending: BTreeMap<CanonicalForm, usize> = BTreeMap::new();
    for s in seeds {
        out.insert(s, None, None, &mut pending);
    }
    while let Some((_, i)) = pending.pop_first() {
        let g = out.members[i].graph.clone();
        if moves.contains(&Move::DeltaY) {
            for t in g.triangles() {
                let h = delta_y(&g, t).expect("listed triangle");
                out.insert(&h, Some(i), Some(Move::DeltaY), &mut pending);
            }
        }
        if moves.contains(&Move::YDelta) {
            for v in (0..g.order()).filter(|&v| g.degree(v) == 3) {
                let h = y_delta(&g, v).expect("degree checked");
                out.insert(&h, Some(i), Some(Move::YDelta), &mut pending);
            }
        }
    }
    out
}

impl ClosureResult {
    fn insert(
        &mut self,
        g: &Graph,
        parent: Option<usize>,
        via: Option<Move>,
        pending: &mut BTreeMap<CanonicalForm, usize>,
    ) {
        let c = canonical_labeling(g);
        if self.index.contains_key(&c.form) {
            return;
        }
        let i = self.members.len();
        self.index.insert(c.form.clone(), i);
        pending.insert(c.form, i);
        self.members.push(ClosureMember {
            graph: c.graph,
            parent,
            via,
        });
    }
}

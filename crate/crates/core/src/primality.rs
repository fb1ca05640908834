//! Clique separators, prime/composite classification and clique-sum decomposition.

use serde::{Deserialize, Serialize};

use crate::certify::{certify_maxnik, Verdict};
use crate::construct::clique_sum_graphs;
use crate::graph::{bits, Graph};
use crate::iso::are_isomorphic;

/// All cliques with `1..=max_size` vertices, ordered by size then lexicographically.
pub fn cliques(g: &Graph, max_size: usize) -> Vec<u64> {
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); max_size + 1];
    fn grow(g: &Graph, clique: u64, cand: u64, size: usize, max: usize, out: &mut [Vec<u64>]) {
        for v in bits(cand) {
            let c = clique | 1 << v;
            out[size + 1].push(c);
            if size + 1 < max {
                // only higher vertices, so each clique is produced once
                let higher = cand & g.neighbors(v) & !((2u64 << v) - 1);
                grow(g, c, higher, size + 1, max, out);
            }
        }
    }
    if max_size > 0 {
        grow(g, 0, g.vertex_mask(), 0, max_size, &mut by_size);
    }
    let mut out = Vec::new();
    for mut level in by_size {
        level.sort_by_key(|&m| bits(m).collect::<Vec<_>>());
        out.extend(level);
    }
    out
}

/// Inclusion-minimal clique separators with at most `max_size` vertices, as masks in
/// (size, lexicographic) order.
pub fn clique_separators(g: &Graph, max_size: usize) -> Vec<u64> {
    let all = g.vertex_mask();
    let mut found: Vec<u64> = Vec::new();
    for c in cliques(g, max_size) {
        if found.iter().any(|&f| f & c == f) {
            continue;
        }
        if g.components_within(all & !c).len() >= 2 {
            found.push(c);
        }
    }
    found
}

/// Every inclusion-minimal clique whose removal disconnects `g`.
pub fn clique_cutsets(g: &Graph) -> Vec<Vec<usize>> {
    clique_separators(g, g.clique_number())
        .into_iter()
        .map(|c| bits(c).collect())
        .collect()
}

/// One side of a split: the induced piece, the separator's positions in it (in
/// increasing original order) and the original vertex of every piece vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub graph: Graph,
    pub clique: Vec<usize>,
    pub origin: Vec<usize>,
}

/// Splits on separator `cut` into (first component + cut) and (other components + cut).
pub fn split(g: &Graph, cut: u64) -> (Piece, Piece) {
    let comps = g.components_within(g.vertex_mask() & !cut);
    assert!(comps.len() >= 2, "not a separator");
    let first = comps[0];
    let rest = comps[1..].iter().fold(0, |m, c| m | c);
    let piece = |side: u64| {
        let mask = side | cut;
        let origin: Vec<usize> = bits(mask).collect();
        let clique = bits(cut)
            .map(|v| origin.iter().position(|&o| o == v).expect("cut vertex kept"))
            .collect();
        Piece {
            graph: g.induced(mask),
            clique,
            origin,
        }
    };
    (piece(first), piece(rest))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeVerdict {
    pub prime: bool,
    pub cutset: Option<Vec<usize>>,
}

pub fn is_prime(g: &Graph) -> PrimeVerdict {
    let first = clique_separators(g, g.clique_number()).into_iter().next();
    PrimeVerdict {
        prime: first.is_none(),
        cutset: first.map(|c| bits(c).collect()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Decomposition {
    Prime { prime: Graph },
    Sum {
        cutset: Vec<usize>,
        /// Separator positions inside each part.
        cliques: [Vec<usize>; 2],
        /// Vertex of the whole for every vertex of each part.
        origins: [Vec<usize>; 2],
        parts: Box<[Decomposition; 2]>,
    },
}

impl Decomposition {
    pub fn leaves(&self) -> Vec<&Graph> {
        match self {
            Decomposition::Prime { prime } => vec![prime],
            Decomposition::Sum { parts, .. } => parts.iter().flat_map(|p| p.leaves()).collect(),
        }
    }

    /// Glues the parts back together along the recorded cliques, restoring the
    /// original labels.
    pub fn reglue(&self) -> Graph {
        match self {
            Decomposition::Prime { prime } => prime.clone(),
            Decomposition::Sum { origins, parts, .. } => {
                let n = origins.iter().flatten().max().map_or(0, |&v| v + 1);
                let mut g = Graph::empty(n).expect("fits in the original");
                for (part, origin) in parts.iter().zip(origins) {
                    for e in part.reglue().edges() {
                        g.add_edge(origin[e.u], origin[e.v]);
                    }
                }
                g
            }
        }
    }
}

/// Recursive split on the first minimal clique separator.
pub fn decompose(g: &Graph) -> Decomposition {
    match clique_separators(g, g.clique_number()).first() {
        None => Decomposition::Prime { prime: g.clone() },
        Some(&cut) => {
            let (a, b) = split(g, cut);
            Decomposition::Sum {
                cutset: bits(cut).collect(),
                cliques: [a.clique.clone(), b.clique.clone()],
                origins: [a.origin.clone(), b.origin.clone()],
                parts: Box::new([decompose(&a.graph), decompose(&b.graph)]),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub holds: bool,
    pub detail: Vec<String>,
}

/// For every 2-vertex cut {x, y} of a maxnik graph: xy is an edge and each
/// ⟨component, {x, y}⟩ certifies MAXNIK.
pub fn check_lemma_npp9(g: &Graph) -> LemmaReport {
    let mut detail = Vec::new();
    let mut holds = true;
    let all = g.vertex_mask();
    for x in 0..g.order() {
        for y in x + 1..g.order() {
            let s = 1u64 << x | 1 << y;
            let comps = g.components_within(all & !s);
            if comps.len() < 2 {
                continue;
            }
            if !g.has_edge(x, y) {
                holds = false;
                detail.push(format!("cut {{{x}, {y}}} is not an edge"));
            }
            for c in comps {
                let piece = g.induced(c | s);
                let verdict = certify_maxnik(&piece).verdict;
                if verdict != Verdict::Maxnik {
                    holds = false;
                }
                detail.push(format!(
                    "cut {{{x}, {y}}}: piece of order {} is {verdict}",
                    piece.order()
                ));
            }
        }
    }
    if detail.is_empty() {
        detail.push("no 2-vertex cut".into());
    }
    LemmaReport { holds, detail }
}

/// If the complement has a K2 component, `g` is prime or two copies of K_n over K_{n-1}.
pub fn check_lemma_comp_k2(g: &Graph) -> Option<LemmaReport> {
    let co = g.complement();
    let has_k2 = co
        .components()
        .iter()
        .any(|&c| c.count_ones() == 2 && co.is_clique(c));
    if !has_k2 {
        return None;
    }
    let prime = is_prime(g).prime;
    let n = g.order() - 1;
    let double = n >= 2 && {
        let k = Graph::complete(n).expect("small");
        let c: Vec<usize> = (0..n - 1).collect();
        are_isomorphic(g, &clique_sum_graphs(&k, &c, &k, &c).expect("glue"))
    };
    Some(LemmaReport {
        holds: prime || double,
        detail: vec![format!("prime: {prime}; K_{n} glued to K_{n} over K_{}: {double}", n - 1)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{k7_minus, named_graph};

    #[test]
    fn cliques_of_k4() {
        let c = cliques(&Graph::complete(4).unwrap(), 4);
        assert_eq!(c.len(), 15);
        assert_eq!(c[0], 1);
        assert_eq!(*c.last().unwrap(), 0b1111);
    }

    #[test]
    fn complete_graphs_are_prime() {
        for n in 1..=7 {
            assert!(is_prime(&Graph::complete(n).unwrap()).prime);
        }
    }

    #[test]
    fn k7_minus_splits_on_a_5_clique() {
        let g = k7_minus();
        let cuts = clique_cutsets(&g);
        assert_eq!(cuts, vec![vec![2, 3, 4, 5, 6]]);
        let d = decompose(&g);
        assert_eq!(d.reglue(), g);
        let leaves = d.leaves();
        assert_eq!(leaves.len(), 2);
        assert!(leaves.iter().all(|l| l.is_complete() && l.order() == 6));
    }

    #[test]
    fn path_cut_vertices() {
        let p = Graph::path(4).unwrap();
        assert_eq!(clique_cutsets(&p), vec![vec![1], vec![2]]);
        let d = decompose(&p);
        assert_eq!(d.leaves().len(), 3);
        assert_eq!(d.reglue(), p);
    }

    #[test]
    fn comp_k2_examples() {
        let k4e = Graph::complete(4).unwrap().without_edge(crate::graph::Edge::new(0, 1));
        let r = check_lemma_comp_k2(&k4e).unwrap();
        assert!(r.holds);
        assert!(!is_prime(&k4e).prime);
        for name in ["K8-3K2", "G9,29"] {
            let g = named_graph(name).unwrap().graph;
            assert!(check_lemma_comp_k2(&g).unwrap().holds);
            assert!(is_prime(&g).prime);
        }
    }
}

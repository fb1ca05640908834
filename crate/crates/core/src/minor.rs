//! Exact minor containment for small patterns.
//!
//! A pattern `P` is a minor of `G` iff `P` is a subgraph of `G`, or of `G / e` for some
//! edge `e`. The search walks contractions depth first, memoising failed graphs by
//! canonical form. When every pattern vertex has degree at least 3, low-degree host
//! vertices are removed or suppressed first since no branch set needs them.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};
use crate::iso::{canonical_form, CanonicalForm};

/// Branch sets indexed by pattern vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorWitness {
    /// Disjoint, connected, and realising every pattern edge.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> Result<(), String> {
        if self.branch_sets.len() != pattern.order() {
            return Err(format!(
                "{} branch sets for a pattern of order {}",
                self.branch_sets.len(),
                pattern.order()
            ));
        }
        let mut used = 0u64;
        let mut masks = Vec::with_capacity(self.branch_sets.len());
        for (i, set) in self.branch_sets.iter().enumerate() {
            let mut mask = 0u64;
            for &v in set {
                if v >= host.order() {
                    return Err(format!("branch set {i} names vertex {v} outside the host"));
                }
                mask |= 1 << v;
            }
            if mask == 0 {
                return Err(format!("branch set {i} is empty"));
            }
            if mask & used != 0 {
                return Err(format!("branch set {i} overlaps an earlier one"));
            }
            if !host.is_connected_within(mask) {
                return Err(format!("branch set {i} is not connected"));
            }
            used |= mask;
            masks.push(mask);
        }
        for e in pattern.edges() {
            let reach = bits(masks[e.u]).fold(0u64, |m, v| m | host.neighbors(v));
            if reach & masks[e.v] == 0 {
                return Err(format!("pattern edge {e} is not realised"));
            }
        }
        Ok(())
    }
}

pub fn has_minor(host: &Graph, pattern: &Graph) -> Option<MinorWitness> {
    let p = pattern.order();
    if p == 0 {
        return Some(MinorWitness {
            branch_sets: Vec::new(),
        });
    }
    if p > host.order() || pattern.size() > host.size() {
        return None;
    }
    let mut search = MinorSearch::new(pattern);
    let sets: Vec<u64> = (0..host.order()).map(|v| 1u64 << v).collect();
    search.search(host.clone(), sets).map(|sets| MinorWitness {
        branch_sets: sets.into_iter().map(|m| bits(m).collect()).collect(),
    })
}

/// Non-planarity witness route: a K5 or K3,3 minor.
pub fn has_kuratowski_minor(g: &Graph) -> bool {
    let k5 = Graph::complete(5).expect("K5");
    let k33 = Graph::complete_multipartite(&[3, 3]).expect("K3,3");
    has_minor(g, &k33).is_some() || has_minor(g, &k5).is_some()
}

struct MinorSearch<'a> {
    pattern: &'a Graph,
    pattern_size: usize,
    min_degree: usize,
    /// Pattern vertices in matching order.
    order: Vec<usize>,
    failed: HashSet<CanonicalForm>,
}

impl<'a> MinorSearch<'a> {
    fn new(pattern: &'a Graph) -> Self {
        let p = pattern.order();
        let mut order = Vec::with_capacity(p);
        let mut placed = 0u64;
        while order.len() < p {
            let next = (0..p)
                .filter(|v| placed >> v & 1 == 0)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbors(v) & placed).count_ones(),
                        pattern.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex");
            placed |= 1 << next;
            order.push(next);
        }
        MinorSearch {
            pattern,
            pattern_size: pattern.size(),
            min_degree: pattern.degree_stats().min_degree,
            order,
            failed: HashSet::new(),
        }
    }

    fn search(&mut self, g: Graph, sets: Vec<u64>) -> Option<Vec<u64>> {
        let (g, sets) = self.reduce(g, sets);
        let p = self.pattern.order();
        if g.order() < p || g.size() < self.pattern_size {
            return None;
        }
        let key = canonical_form(&g);
        if self.failed.contains(&key) {
            return None;
        }
        if let Some(image) = self.embed(&g) {
            return Some(image.iter().map(|&v| sets[v]).collect());
        }
        if g.order() > p {
            let mut edges: Vec<_> = g.edges().collect();
            edges.sort_by_key(|e| ((g.neighbors(e.u) & g.neighbors(e.v)).count_ones(), *e));
            for e in edges {
                let (h, hs) = contract(&g, &sets, e.u, e.v);
                if let Some(found) = self.search(h, hs) {
                    return Some(found);
                }
            }
        }
        self.failed.insert(key);
        None
    }

    fn reduce(&self, mut g: Graph, mut sets: Vec<u64>) -> (Graph, Vec<u64>) {
        if self.min_degree == 0 {
            return (g, sets);
        }
        loop {
            let p = self.pattern.order();
            if g.order() <= p {
                return (g, sets);
            }
            let low = (0..g.order()).find(|&v| {
                let d = g.degree(v);
                d == 0 || (d == 1 && self.min_degree >= 2) || (d == 2 && self.min_degree >= 3)
            });
            let Some(v) = low else {
                return (g, sets);
            };
            if g.degree(v) == 2 {
                let a = g.neighbors(v).trailing_zeros() as usize;
                (g, sets) = contract(&g, &sets, a, v);
            } else {
                g = g.delete_vertices(1 << v);
                sets.remove(v);
            }
        }
    }

    /// Injective edge-preserving map pattern -> `g`, indexed by pattern vertex.
    fn embed(&self, g: &Graph) -> Option<Vec<usize>> {
        let p = self.pattern.order();
        let max_deg = (0..p).map(|v| self.pattern.degree(v)).max().unwrap_or(0);
        let mut at_least = vec![0u64; max_deg + 1];
        for v in 0..g.order() {
            let d = g.degree(v).min(max_deg);
            for mask in at_least.iter_mut().take(d + 1) {
                *mask |= 1 << v;
            }
        }
        let mut image = vec![usize::MAX; p];
        if self.extend(g, &at_least, 0, 0, &mut image) {
            Some(image)
        } else {
            None
        }
    }

    fn extend(&self, g: &Graph, at_least: &[u64], depth: usize, used: u64, image: &mut [usize]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let pv = self.order[depth];
        let mut cand = at_least[self.pattern.degree(pv)] & !used;
        for w in bits(self.pattern.neighbors(pv)) {
            if image[w] != usize::MAX {
                cand &= g.neighbors(image[w]);
            }
        }
        for c in bits(cand) {
            image[pv] = c;
            if self.extend(g, at_least, depth + 1, used | 1 << c, image) {
                return true;
            }
        }
        image[pv] = usize::MAX;
        false
    }
}

/// Contracts `b` into `a` (they need not be adjacent), carrying branch sets along.
fn contract(g: &Graph, sets: &[u64], a: usize, b: usize) -> (Graph, Vec<u64>) {
    let h = g.merge_vertices(a, b);
    let mut hs = sets.to_vec();
    hs[a] |= hs[b];
    hs.remove(b);
    (h, hs)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Assigns every host vertex to a pattern vertex or to nothing and checks the model.
    pub(crate) fn brute_force_minor(host: &Graph, pattern: &Graph) -> bool {
        let n = host.order();
        let p = pattern.order();
        if p == 0 {
            return true;
        }
        let mut assign = vec![0usize; n];
        loop {
            let mut masks = vec![0u64; p];
            for (v, &a) in assign.iter().enumerate() {
                if a > 0 {
                    masks[a - 1] |= 1 << v;
                }
            }
            let ok = masks.iter().all(|&m| m != 0 && host.is_connected_within(m))
                && pattern.edges().all(|e| {
                    bits(masks[e.u]).any(|v| host.neighbors(v) & masks[e.v] != 0)
                });
            if ok {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                assign[i] += 1;
                if assign[i] <= p {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn k5_in_k6() {
        let w = has_minor(&Graph::complete(6).unwrap(), &Graph::complete(5).unwrap()).unwrap();
        w.validate(&Graph::complete(6).unwrap(), &Graph::complete(5).unwrap()).unwrap();
    }

    #[test]
    fn petersen_has_k5_and_k33_minors() {
        let mut p = Graph::empty(10).unwrap();
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5);
            p.add_edge(i, i + 5);
            p.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        let k5 = Graph::complete(5).unwrap();
        let w = has_minor(&p, &k5).expect("Petersen contracts to K5");
        w.validate(&p, &k5).unwrap();
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        has_minor(&p, &k33).unwrap().validate(&p, &k33).unwrap();
        assert!(has_minor(&p, &Graph::complete(6).unwrap()).is_none());
    }

    #[test]
    fn cycles_and_paths() {
        let c8 = Graph::cycle(8).unwrap();
        assert!(has_minor(&c8, &Graph::cycle(3).unwrap()).is_some());
        assert!(has_minor(&c8, &Graph::complete(4).unwrap()).is_none());
        assert!(has_minor(&Graph::path(5).unwrap(), &Graph::cycle(3).unwrap()).is_none());
        // isolated pattern vertices need spare host vertices
        let two = Graph::empty(2).unwrap();
        assert!(has_minor(&Graph::complete(2).unwrap(), &two).is_some());
        assert!(has_minor(&Graph::complete(1).unwrap(), &two).is_none());
    }

    #[test]
    fn witness_validation_rejects_bad_models() {
        let k4 = Graph::complete(4).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let overlap = MinorWitness {
            branch_sets: vec![vec![0], vec![0, 1], vec![2]],
        };
        assert!(overlap.validate(&k4, &k3).is_err());
        let c4 = Graph::cycle(4).unwrap();
        let disconnected = MinorWitness {
            branch_sets: vec![vec![0, 2], vec![1], vec![3]],
        };
        assert!(disconnected.validate(&c4, &k3).is_err());
        let good = MinorWitness {
            branch_sets: vec![vec![0, 1], vec![2], vec![3]],
        };
        good.validate(&c4, &k3).unwrap();
    }

    #[test]
    fn agrees_with_brute_force_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let p = rng.gen_range(1..=5);
            let random = |rng: &mut rand::rngs::StdRng, n: usize, prob: f64| {
                let mut g = Graph::empty(n).unwrap();
                for a in 0..n {
                    for b in a + 1..n {
                        if rng.gen_bool(prob) {
                            g.add_edge(a, b);
                        }
                    }
                }
                g
            };
            let host = random(&mut rng, n, 0.6);
            let pat = random(&mut rng, p, 0.5);
            let fast = has_minor(&host, &pat);
            if let Some(w) = &fast {
                w.validate(&host, &pat).unwrap();
            }
            assert_eq!(fast.is_some(), brute_force_minor(&host, &pat), "{host:?} / {pat:?}");
        }
    }
}

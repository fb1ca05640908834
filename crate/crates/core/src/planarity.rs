//! Planarity by path addition (Demoucron–Malgrange–Pertuiset) on biconnected blocks,
//! plus k-apex and edge-maximality recognition.

use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    if g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g)
        .into_iter()
        .filter(|b| b.count_ones() >= 5)
        .all(|b| planar_biconnected(&g.induced(b)))
}

/// Vertex sets of the biconnected blocks (bridges included as 2-vertex blocks).
pub fn blocks(g: &Graph) -> Vec<u64> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<u64>,
    }
    fn dfs(s: &mut State, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for w in bits(s.g.neighbors(u)) {
            if s.disc[w] == 0 {
                s.stack.push((u, w));
                dfs(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut mask = 0u64;
                    while let Some((a, b)) = s.stack.pop() {
                        mask |= 1 << a | 1 << b;
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    s.out.push(mask);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let n = g.order();
    let mut s = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.out
}

enum Fragment {
    Chord(usize, usize),
    Component { inner: u64, attach: u64 },
}

impl Fragment {
    fn attachments(&self) -> u64 {
        match *self {
            Fragment::Chord(a, b) => 1 << a | 1 << b,
            Fragment::Component { attach, .. } => attach,
        }
    }
}

fn planar_biconnected(h: &Graph) -> bool {
    let n = h.order();
    let m = h.size();
    if n <= 4 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let cycle = find_cycle(h);
    debug_assert!(cycle.len() >= 3);
    let mut emb = vec![0u64; n];
    let mut emb_edges = 0;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb[a] |= 1 << b;
        emb[b] |= 1 << a;
        emb_edges += 1;
    }
    let mut emb_vs: u64 = cycle.iter().fold(0, |m, &v| m | 1 << v);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while emb_edges < m {
        let fragments = fragments(h, &emb, emb_vs);
        let face_masks: Vec<u64> = faces
            .iter()
            .map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = face_masks
                .iter()
                .enumerate()
                .filter(|(_, &fm)| fm & att == att)
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("some fragment exists while edges remain");
        let path = fragment_path(h, &fragments[fi]);
        for w in path.windows(2) {
            emb[w[0]] |= 1 << w[1];
            emb[w[1]] |= 1 << w[0];
            emb_edges += 1;
        }
        for &v in &path {
            emb_vs |= 1 << v;
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let inner = &path[1..path.len() - 1];
        let i = face.iter().position(|&v| v == a).unwrap();
        let j = face.iter().position(|&v| v == b).unwrap();
        let k = face.len();
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let mut out = Vec::new();
            let mut x = from;
            loop {
                out.push(face[x]);
                if x == to {
                    break;
                }
                x = (x + 1) % k;
            }
            out
        };
        let mut f1 = arc(i, j);
        f1.extend(inner.iter().rev());
        let mut f2 = arc(j, i);
        f2.extend(inner.iter());
        faces.push(f1);
        faces.push(f2);
    }
    true
}

/// Shortest cycle through the first edge; every edge of a block on >= 3 vertices lies on one.
fn find_cycle(h: &Graph) -> Vec<usize> {
    let e = h.edges().next().expect("block has an edge");
    let n = h.order();
    let mut parent = vec![usize::MAX; n];
    parent[e.u] = e.u;
    let mut queue = std::collections::VecDeque::from([e.u]);
    while let Some(x) = queue.pop_front() {
        for y in bits(h.neighbors(x)) {
            if x == e.u && y == e.v {
                continue;
            }
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut cyc = vec![e.v];
    let mut x = e.v;
    while x != e.u {
        x = parent[x];
        cyc.push(x);
    }
    cyc
}

fn fragments(h: &Graph, emb: &[u64], emb_vs: u64) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in bits(emb_vs) {
        for v in bits(h.neighbors(u) & !emb[u] & emb_vs) {
            if u < v {
                out.push(Fragment::Chord(u, v));
            }
        }
    }
    let rest = h.vertex_mask() & !emb_vs;
    for inner in h.components_within(rest) {
        let attach = bits(inner).fold(0u64, |m, v| m | h.neighbors(v)) & emb_vs;
        out.push(Fragment::Component { inner, attach });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(h: &Graph, frag: &Fragment) -> Vec<usize> {
    match *frag {
        Fragment::Chord(a, b) => vec![a, b],
        Fragment::Component { inner, attach } => {
            let a = attach.trailing_zeros() as usize;
            let start = (h.neighbors(a) & inner).trailing_zeros() as usize;
            let others = attach & !(1 << a);
            let mut parent = [usize::MAX; 64];
            parent[start] = start;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let hit = h.neighbors(x) & others;
                if hit != 0 {
                    let b = hit.trailing_zeros() as usize;
                    let mut mid = vec![x];
                    let mut y = x;
                    while y != start {
                        y = parent[y];
                        mid.push(y);
                    }
                    mid.reverse();
                    let mut path = vec![a];
                    path.extend(mid);
                    path.push(b);
                    return path;
                }
                for y in bits(h.neighbors(x) & inner) {
                    if parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            unreachable!("fragment of a biconnected graph has two attachments")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexVerdict {
    pub k: usize,
    pub apex: bool,
    /// First deletion set (lexicographic) leaving a planar graph.
    pub witness: Option<Vec<usize>>,
}

/// Whether deleting some `k` vertices (all of them when `n <= k`) leaves a planar graph.
pub fn is_k_apex(g: &Graph, k: usize) -> ApexVerdict {
    let n = g.order();
    let k_eff = k.min(n);
    let mut subset: Vec<usize> = (0..k_eff).collect();
    loop {
        let mask = subset.iter().fold(0u64, |m, &v| m | 1 << v);
        if is_planar(&g.delete_vertices(mask)) {
            return ApexVerdict {
                k,
                apex: true,
                witness: Some(subset),
            };
        }
        // next combination in lexicographic order
        let mut i = k_eff;
        loop {
            if i == 0 {
                return ApexVerdict {
                    k,
                    apex: false,
                    witness: None,
                };
            }
            i -= 1;
            if subset[i] < n - k_eff + i {
                subset[i] += 1;
                for j in i + 1..k_eff {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn is_two_apex(g: &Graph) -> bool {
    is_k_apex(g, 2).apex
}

/// Planar and either complete on at most two vertices or a triangulation.
pub fn is_maximal_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 2 {
        return g.is_complete();
    }
    g.size() == 3 * n - 6 && is_planar(g)
}

/// For `n >= 7`, 2-apex with `5n - 15` edges; below that only `K_n` qualifies.
pub fn is_maximal_2apex(g: &Graph) -> bool {
    let n = g.order();
    if n < 7 {
        return g.is_complete();
    }
    g.size() == 5 * n - 15 && is_two_apex(g)
}

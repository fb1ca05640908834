//! Clique sums with lemma preconditions, the infinite families, and the size planner.

use serde::{Deserialize, Serialize};

use crate::certify::{certify_maxnik, Certificate, Evidence, Lemma, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_ORDER};
use crate::library::{k7_minus, octahedron, ObstructionLibrary};
use crate::planarity::is_maximal_planar;

/// Glues `g2` onto `g1` identifying `c2[i]` with `c1[i]`. Vertices of `g1` keep their
/// labels; the other vertices of `g2` follow in increasing order.
pub fn clique_sum_graphs(g1: &Graph, c1: &[usize], g2: &Graph, c2: &[usize]) -> Result<Graph> {
    if c1.len() != c2.len() {
        return Err(Error::Precondition {
            lemma: "clique sum".into(),
            reason: format!("cliques of sizes {} and {}", c1.len(), c2.len()),
        });
    }
    for (g, c) in [(g1, c1), (g2, c2)] {
        if let Some(&v) = c.iter().find(|&&v| v >= g.order()) {
            return Err(Error::VertexOutOfRange(v));
        }
        let mask = c.iter().fold(0u64, |m, &v| m | 1 << v);
        if mask.count_ones() as usize != c.len() || !g.is_clique(mask) {
            return Err(Error::Precondition {
                lemma: "clique sum".into(),
                reason: format!("{c:?} is not a clique"),
            });
        }
    }
    let order = g1.order() + g2.order() - c1.len();
    if order > MAX_ORDER {
        return Err(Error::OrderOverflow(order));
    }
    let mut map = vec![usize::MAX; g2.order()];
    for (&a, &b) in c1.iter().zip(c2) {
        map[b] = a;
    }
    let mut next = g1.order();
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut g = g1.clone();
    for _ in g1.order()..order {
        g.add_vertex()?;
    }
    for e in g2.edges() {
        g.add_edge(map[e.u], map[e.v]);
    }
    Ok(g)
}

fn precondition(lemma: Lemma, reason: impl Into<String>) -> Error {
    Error::Precondition {
        lemma: lemma.to_string(),
        reason: reason.into(),
    }
}

pub(crate) fn disk_triangle(g: &Graph, t: &[usize]) -> bool {
    use crate::iso::{are_isomorphic, canonical_form_marked};
    let mask = t.iter().fold(0u64, |m, &v| m | 1 << v);
    ObstructionLibrary::shared().triangle_disk_axioms.iter().any(|ax| match ax.triangle {
        None => are_isomorphic(&ax.graph, g),
        Some(at) => {
            let am = at.iter().fold(0u64, |m, &v| m | 1 << v);
            ax.graph.order() == g.order()
                && ax.graph.size() == g.size()
                && canonical_form_marked(&ax.graph, am) == canonical_form_marked(g, mask)
        }
    })
}

pub(crate) fn in_k4(g: &Graph, t: &[usize]) -> bool {
    t.iter().fold(g.vertex_mask(), |m, &v| m & g.neighbors(v)) != 0
}

/// Strongest verdict `lemma` grants for these operands, or the failed hypothesis.
pub fn gluing_conclusion(lemma: Lemma, operands: [&Certificate; 2], cliques: &[Vec<usize>; 2]) -> Result<Verdict> {
    let t = lemma.clique_size();
    if cliques.iter().any(|c| c.len() != t) {
        return Err(precondition(lemma, format!("needs a {t}-clique in each operand")));
    }
    let nik = |v: Verdict| matches!(v, Verdict::Nik | Verdict::Maxnik);
    match lemma {
        Lemma::Npp7Vertex | Lemma::Npp7Edge => {
            if !operands.iter().all(|c| nik(c.verdict)) {
                return Err(precondition(lemma, "operands must be nIK"));
            }
            Ok(Verdict::Nik)
        }
        Lemma::Npp10 => {
            if !operands.iter().all(|c| c.verdict == Verdict::Maxnik) {
                return Err(precondition(lemma, "operands must be maxnik"));
            }
            let triangular = operands
                .iter()
                .zip(cliques)
                .all(|(c, k)| c.graph.is_triangular(Edge::new(k[0], k[1])));
            if triangular {
                return Err(precondition(lemma, "glued edge is triangular in both operands"));
            }
            Ok(Verdict::Maxnik)
        }
        Lemma::TriangleSum => {
            if !operands.iter().all(|c| c.verdict == Verdict::Maxnik) {
                return Err(precondition(lemma, "operands must be maxnik"));
            }
            for (c, k) in operands.iter().zip(cliques) {
                if !disk_triangle(&c.graph, k) {
                    return Err(precondition(lemma, "triangle is not a registered disk-bounding triangle"));
                }
            }
            let free = operands.iter().zip(cliques).any(|(c, k)| !in_k4(&c.graph, k));
            Ok(if free { Verdict::Maxnik } else { Verdict::Nik })
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GluingSpec {
    pub lemma: Lemma,
    /// Certificates carry the operand graphs.
    pub operands: [Certificate; 2],
    pub cliques: [Vec<usize>; 2],
}

/// Glues the operands and certifies the result with the lemma's conclusion.
pub fn clique_sum(spec: GluingSpec) -> Result<Certificate> {
    let verdict = gluing_conclusion(spec.lemma, [&spec.operands[0], &spec.operands[1]], &spec.cliques)?;
    let g = clique_sum_graphs(
        &spec.operands[0].graph,
        &spec.cliques[0],
        &spec.operands[1].graph,
        &spec.cliques[1],
    )?;
    Ok(Certificate {
        verdict,
        graph: g,
        evidence: Evidence::Construction {
            lemma: spec.lemma,
            cliques: spec.cliques,
        },
        children: spec.operands.into(),
    })
}

fn maxnik_cert(g: &Graph) -> Result<Certificate> {
    let c = certify_maxnik(g);
    if c.verdict != Verdict::Maxnik {
        return Err(Error::ConstructionInvariant(format!("operand certified {}", c.verdict)));
    }
    Ok(c)
}

fn e9_cert() -> Result<Certificate> {
    let e9 = &ObstructionLibrary::shared()
        .named("E9")
        .ok_or_else(|| Error::UnknownName("E9".into()))?
        .graph;
    maxnik_cert(e9)
}

fn first_non_triangular(g: &Graph) -> Result<Edge> {
    g.non_triangular_edges()
        .into_iter()
        .next()
        .ok_or_else(|| Error::ConstructionInvariant("no non-triangular edge left".into()))
}

/// Edge sum of `base` and `piece`, on the first non-triangular edge of each.
fn glue_on_edge(base: Certificate, site: Edge, piece: Certificate, piece_edge: Edge) -> Result<Certificate> {
    clique_sum(GluingSpec {
        lemma: Lemma::Npp10,
        operands: [base, piece],
        cliques: [vec![site.u, site.v], vec![piece_edge.u, piece_edge.v]],
    })
}

/// `i` copies of E9 glued one after another along non-triangular edges.
pub fn chain_gi(i: usize) -> Result<Certificate> {
    if i == 0 {
        return Err(Error::OutOfRange("chain index must be at least 1".into()));
    }
    if 7 * i + 2 > MAX_ORDER {
        return Err(Error::OrderOverflow(7 * i + 2));
    }
    let e9 = e9_cert()?;
    let e9_edge = first_non_triangular(&e9.graph)?;
    let mut g = e9.clone();
    for _ in 1..i {
        let site = first_non_triangular(&g.graph)?;
        g = glue_on_edge(g, site, e9.clone(), e9_edge)?;
    }
    let m = g.graph.size();
    if m != 20 * i + 1 {
        return Err(Error::ConstructionInvariant(format!("chain of {i} has {m} edges")));
    }
    let nt = g.graph.non_triangular_edges().len();
    if nt < 6 {
        return Err(Error::ConstructionInvariant(format!("chain of {i} has {nt} non-triangular edges")));
    }
    Ok(g)
}

/// `k` copies of E9 sharing one non-triangular edge, with a triangle glued on each of
/// the other non-triangular edges: order 12k + 2, size 30k + 1.
pub fn npp5_family(k: usize) -> Result<Certificate> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    if 12 * k + 2 > MAX_ORDER {
        return Err(Error::OrderOverflow(12 * k + 2));
    }
    let e9 = e9_cert()?;
    let e9_edge = first_non_triangular(&e9.graph)?;
    let mut g = e9.clone();
    for _ in 1..k {
        g = glue_on_edge(g, e9_edge, e9.clone(), e9_edge)?;
    }
    let k3 = maxnik_cert(&Graph::complete(3)?)?;
    loop {
        let sites: Vec<Edge> = g
            .graph
            .non_triangular_edges()
            .into_iter()
            .filter(|&e| e != e9_edge)
            .collect();
        let Some(&site) = sites.first() else { break };
        g = glue_on_edge(g, site, k3.clone(), Edge::new(0, 1))?;
    }
    let (n, m) = (g.graph.order(), g.graph.size());
    if (n, m) != (12 * k + 2, 30 * k + 1) {
        return Err(Error::ConstructionInvariant(format!("npp5({k}) has order {n} and size {m}")));
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub target: usize,
    /// Chain length; 0 for the special cases.
    pub base: usize,
    /// Each addend a = C(t, 2) - 1 stands for a K_t glued on a non-triangular edge.
    pub addends: Vec<usize>,
    pub special: Option<String>,
    pub sites: Vec<Edge>,
}

const ADDENDS: [usize; 4] = [14, 9, 5, 2];

/// Fewest addends from {2, 5, 9, 14} summing to `k` (at most 6), larger addends first.
pub fn plan_addends(k: usize) -> Option<Vec<usize>> {
    // best[s] = shortest descending list summing to s, ties to the lexicographically largest
    let mut best: Vec<Option<Vec<usize>>> = vec![None; k + 1];
    best[0] = Some(Vec::new());
    for s in 1..=k {
        let mut pick: Option<Vec<usize>> = None;
        for &a in &ADDENDS {
            if a > s {
                continue;
            }
            if let Some(prev) = &best[s - a] {
                if prev.first().is_some_and(|&f| f > a) {
                    // keep lists descending; the same multiset is reached another way
                    continue;
                }
                let mut cand = vec![a];
                cand.extend(prev);
                let better = match &pick {
                    None => true,
                    Some(p) => cand.len() < p.len() || (cand.len() == p.len() && cand > *p),
                };
                if better {
                    pick = Some(cand);
                }
            }
        }
        best[s] = pick;
    }
    best[k].take().filter(|p| p.len() <= 6)
}

fn clique_for_addend(a: usize) -> usize {
    match a {
        2 => 3,
        5 => 4,
        9 => 5,
        14 => 6,
        _ => unreachable!("addend {a}"),
    }
}

/// A maxnik graph with exactly `n` edges, for `n >= 20`, `n != 22`.
pub fn size_construct(n: usize) -> Result<(ConstructionPlan, Certificate)> {
    if n < 20 {
        return Err(Error::OutOfRange(format!("size {n} < 20: no maxnik graph of order >= 7 is that small")));
    }
    if n == 22 {
        return Err(Error::Unrepresentable(22));
    }
    if n == 20 {
        let plan = ConstructionPlan {
            target: 20,
            base: 0,
            addends: Vec::new(),
            special: Some("K7-".into()),
            sites: Vec::new(),
        };
        return Ok((plan, maxnik_cert(&k7_minus())?));
    }
    if n == 24 {
        let lib = ObstructionLibrary::shared();
        let axiom = lib
            .triangle_axiom("E9")
            .and_then(|a| a.triangle)
            .ok_or_else(|| Error::ConstructionInvariant("E9 disk triangle missing".into()))?;
        let cert = clique_sum(GluingSpec {
            lemma: Lemma::TriangleSum,
            operands: [e9_cert()?, maxnik_cert(&Graph::complete(4)?)?],
            cliques: [axiom.to_vec(), vec![0, 1, 2]],
        })?;
        let plan = ConstructionPlan {
            target: 24,
            base: 0,
            addends: Vec::new(),
            special: Some("E9+K3+K4".into()),
            sites: Vec::new(),
        };
        return Ok((plan, cert));
    }
    let mut i = (n - 1) / 20;
    let mut k = n - (20 * i + 1);
    if k == 1 || k == 3 {
        i -= 1;
        k += 20;
    }
    let addends = plan_addends(k).ok_or(Error::Unrepresentable(n))?;
    let extra: usize = addends.iter().map(|&a| clique_for_addend(a) - 2).sum();
    let order = 7 * i + 2 + extra;
    if order > MAX_ORDER {
        return Err(Error::OrderOverflow(order));
    }
    let mut g = chain_gi(i)?;
    let mut sites = Vec::new();
    for &a in &addends {
        let site = first_non_triangular(&g.graph)?;
        let piece = maxnik_cert(&Graph::complete(clique_for_addend(a))?)?;
        g = glue_on_edge(g, site, piece, Edge::new(0, 1))?;
        sites.push(site);
    }
    if g.graph.size() != n {
        return Err(Error::ConstructionInvariant(format!(
            "planned size {n}, built {}",
            g.graph.size()
        )));
    }
    let plan = ConstructionPlan {
        target: n,
        base: i,
        addends,
        special: None,
        sites,
    };
    Ok((plan, g))
}

/// Removes `e = uv`, adds a vertex joined to `u`, `v` and the two apexes of the triangles on `e`.
pub fn subdivide_retriangulate(t: &Graph, e: Edge) -> Result<Graph> {
    if !t.has_edge(e.u, e.v) {
        return Err(Error::MissingEdge(e.u, e.v));
    }
    let apexes: Vec<usize> = crate::graph::bits(t.neighbors(e.u) & t.neighbors(e.v)).collect();
    if apexes.len() != 2 {
        return Err(Error::Precondition {
            lemma: "subdivide".into(),
            reason: format!("edge {e} lies in {} triangles, expected 2", apexes.len()),
        });
    }
    let mut g = t.without_edge(e);
    let w = g.add_vertex()?;
    for v in [e.u, e.v, apexes[0], apexes[1]] {
        g.add_edge(w, v);
    }
    Ok(g)
}

/// Triangulation on `order` vertices from the octahedron by repeatedly subdividing
/// the edge between the newest vertex and the fixed endpoint.
pub fn prime_triangulation(order: usize) -> Result<Graph> {
    if order < 6 {
        return Err(Error::OutOfRange(format!("triangulation order {order} < 6")));
    }
    let mut t = octahedron();
    let fixed = 2;
    let mut edge = Edge::new(0, fixed);
    while t.order() < order {
        t = subdivide_retriangulate(&t, edge)?;
        edge = Edge::new(t.order() - 1, fixed);
    }
    let ok = is_maximal_planar(&t) && t.vertex_connectivity() >= 4 && t.clique_number() <= 3;
    if !ok {
        return Err(Error::ConstructionInvariant(format!(
            "triangulation of order {order} is not a 4-connected K4-free triangulation"
        )));
    }
    Ok(t)
}

/// The prime triangulation of order `n - 2` joined with K2.
pub fn prime_family(n: usize) -> Result<Graph> {
    if !(8..=MAX_ORDER).contains(&n) {
        return Err(Error::OutOfRange(format!("prime family order must be in 8..=64, got {n}")));
    }
    prime_triangulation(n - 2)?.join(&Graph::complete(2)?)
}

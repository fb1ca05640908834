//! IK / nIK / maxnik verdicts backed by re-checkable evidence.
//!
//! Inference rules:
//! - 2-apex graphs are nIK.
//! - A graph with n >= 7 and m >= 5n - 14 has a K7 minor, hence is IK.
//! - A graph with an MMIK minor is IK.
//! - Up to order 8, nIK is equivalent to 2-apex.
//! - Clique sums over K1 / K2 of nIK graphs are nIK; an edge sum of maxnik graphs is
//!   maxnik when the edge is non-triangular on one side; a K3 sum along disk-bounding
//!   triangles is nIK, and maxnik when one triangle lies in no K4.
//! - E9 and G9,29 are nIK (trusted axioms).

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::{clique_sum_graphs, disk_triangle, gluing_conclusion, in_k4};
use crate::graph::{Edge, Graph};
use crate::iso::{are_isomorphic, find_isomorphism, orbits, ObjectKind};
use crate::library::ObstructionLibrary;
use crate::minor::{has_minor, MinorWitness};
use crate::planarity::{is_k_apex, is_planar, is_two_apex};
use crate::primality::{clique_separators, split};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Ik,
    Nik,
    Maxnik,
    NotMaxnik,
    Unknown,
}

impl Verdict {
    pub fn is_definite(self) -> bool {
        self != Verdict::Unknown
    }

    /// MAXNIK implies nIK.
    fn is_nik(self) -> bool {
        matches!(self, Verdict::Nik | Verdict::Maxnik)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Ik => "IK",
            Verdict::Nik => "NIK",
            Verdict::Maxnik => "MAXNIK",
            Verdict::NotMaxnik => "NOT_MAXNIK",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma {
    /// Clique sum over K1 of nIK graphs.
    #[serde(rename = "NPP7-v")]
    Npp7Vertex,
    /// Clique sum over K2 of nIK graphs.
    #[serde(rename = "NPP7-e")]
    Npp7Edge,
    /// Edge sum of maxnik graphs, edge non-triangular on one side.
    #[serde(rename = "NPP10")]
    Npp10,
    /// K3 sum along disk-bounding triangles.
    #[serde(rename = "New")]
    TriangleSum,
}

impl Lemma {
    pub fn clique_size(self) -> usize {
        match self {
            Lemma::Npp7Vertex => 1,
            Lemma::Npp7Edge | Lemma::Npp10 => 2,
            Lemma::TriangleSum => 3,
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::Npp7Vertex => "NPP7-v",
            Lemma::Npp7Edge => "NPP7-e",
            Lemma::Npp10 => "NPP10",
            Lemma::TriangleSum => "New",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", content = "evidence", rename_all = "kebab-case")]
pub enum Evidence {
    /// Deleting these vertices leaves a planar graph.
    ApexPair { apex: Vec<usize> },
    SizeBound { order: usize, size: usize },
    MinorOf {
        pattern: String,
        pattern_graph: Graph,
        witness: MinorWitness,
    },
    Axiom { name: String },
    /// Complete graph on at most 6 vertices; child 0 is its nIK certificate.
    SmallOrder { order: usize },
    /// Order at most 8 and not 2-apex.
    NotTwoApex { order: usize },
    /// Child 0 certifies nIK; child i + 1 certifies `g + representatives[i]` IK.
    PerNonEdge { representatives: Vec<Edge> },
    /// Children are the operands; `cliques[i]` lists the glued clique in operand i,
    /// matched position by position.
    Construction { lemma: Lemma, cliques: [Vec<usize>; 2] },
    /// Child 0 certifies `g + edge` nIK.
    Extendable { edge: Edge },
    /// Child 0 certifies `g` IK.
    IkSubject,
    Necessary { failures: Vec<String> },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub graph: Graph,
    #[serde(flatten)]
    pub evidence: Evidence,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Certificate>,
}

impl Certificate {
    fn leaf(verdict: Verdict, g: &Graph, evidence: Evidence) -> Self {
        Certificate {
            verdict,
            graph: g.clone(),
            evidence,
            children: Vec::new(),
        }
    }

    fn node(verdict: Verdict, g: &Graph, evidence: Evidence, children: Vec<Certificate>) -> Self {
        Certificate {
            verdict,
            graph: g.clone(),
            evidence,
            children,
        }
    }

    fn unknown(g: &Graph) -> Self {
        Certificate::leaf(Verdict::Unknown, g, Evidence::None)
    }

    /// Name of the rule at the root, as serialised.
    pub fn rule(&self) -> &'static str {
        match self.evidence {
            Evidence::ApexPair { .. } => "apex-pair",
            Evidence::SizeBound { .. } => "size-bound",
            Evidence::MinorOf { .. } => "minor-of",
            Evidence::Axiom { .. } => "axiom",
            Evidence::SmallOrder { .. } => "small-order",
            Evidence::NotTwoApex { .. } => "not-two-apex",
            Evidence::PerNonEdge { .. } => "per-non-edge",
            Evidence::Construction { .. } => "construction",
            Evidence::Extendable { .. } => "extendable",
            Evidence::IkSubject => "ik-subject",
            Evidence::Necessary { .. } => "necessary",
            Evidence::None => "none",
        }
    }
}

/// IK by the size bound or an obstruction minor; never claims nIK.
pub fn certify_ik(g: &Graph) -> Certificate {
    let (n, m) = (g.order(), g.size());
    let lib = ObstructionLibrary::shared();
    if let Some(p) = lib.pattern_for(g) {
        let map = find_isomorphism(&p.graph, g).expect("same canonical form");
        return Certificate::leaf(
            Verdict::Ik,
            g,
            Evidence::MinorOf {
                pattern: p.name.clone(),
                pattern_graph: p.graph.clone(),
                witness: MinorWitness {
                    branch_sets: map.into_iter().map(|v| vec![v]).collect(),
                },
            },
        );
    }
    if n >= 7 && m + 14 >= 5 * n {
        return Certificate::leaf(Verdict::Ik, g, Evidence::SizeBound { order: n, size: m });
    }
    for p in &lib.mmik_patterns {
        let (pn, pm) = (p.graph.order(), p.graph.size());
        if pn > n || pm > m {
            continue;
        }
        if let Some(witness) = has_minor(g, &p.graph) {
            return Certificate::leaf(
                Verdict::Ik,
                g,
                Evidence::MinorOf {
                    pattern: p.name.clone(),
                    pattern_graph: p.graph.clone(),
                    witness,
                },
            );
        }
    }
    Certificate::unknown(g)
}

pub fn certify_nik(g: &Graph) -> Certificate {
    let apex = is_k_apex(g, 2);
    if let Some(w) = apex.witness {
        return Certificate::leaf(Verdict::Nik, g, Evidence::ApexPair { apex: w });
    }
    let lib = ObstructionLibrary::shared();
    if let Some(ax) = lib.axiom_for(g) {
        return Certificate::leaf(Verdict::Nik, g, Evidence::Axiom { name: ax.name.clone() });
    }
    if g.order() <= 8 {
        return Certificate::leaf(Verdict::Ik, g, Evidence::NotTwoApex { order: g.order() });
    }
    for cut in clique_separators(g, 3) {
        let t = cut.count_ones() as usize;
        let (a, b) = split(g, cut);
        let cliques = [a.clique.clone(), b.clique.clone()];
        if t <= 2 {
            let ca = certify_nik(&a.graph);
            if !ca.verdict.is_nik() {
                continue;
            }
            let cb = certify_nik(&b.graph);
            if !cb.verdict.is_nik() {
                continue;
            }
            let lemma = if t == 1 { Lemma::Npp7Vertex } else { Lemma::Npp7Edge };
            return Certificate::node(Verdict::Nik, g, Evidence::Construction { lemma, cliques }, vec![ca, cb]);
        }
        if let Some(cert) = triangle_sum(g, &a.graph, &b.graph, cliques) {
            // the nIK conclusion holds regardless of the K4 condition
            return Certificate { verdict: Verdict::Nik, ..cert };
        }
    }
    Certificate::unknown(g)
}

/// K3 sum whose operands are registered disk-triangle axioms and certify MAXNIK.
fn triangle_sum(g: &Graph, a: &Graph, b: &Graph, cliques: [Vec<usize>; 2]) -> Option<Certificate> {
    if !disk_triangle(a, &cliques[0]) || !disk_triangle(b, &cliques[1]) {
        return None;
    }
    let ca = certify_maxnik(a);
    let cb = certify_maxnik(b);
    if ca.verdict != Verdict::Maxnik || cb.verdict != Verdict::Maxnik {
        return None;
    }
    let verdict = if !in_k4(a, &cliques[0]) || !in_k4(b, &cliques[1]) {
        Verdict::Maxnik
    } else {
        Verdict::Nik
    };
    Some(Certificate::node(
        verdict,
        g,
        Evidence::Construction {
            lemma: Lemma::TriangleSum,
            cliques,
        },
        vec![ca, cb],
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryReport {
    pub failures: Vec<String>,
}

impl NecessaryReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Structural conditions every maxnik graph satisfies.
pub fn check_necessary(g: &Graph) -> NecessaryReport {
    let (n, m) = (g.order(), g.size());
    let stats = g.degree_stats();
    let mut failures = Vec::new();
    let two_connected = match n {
        0 | 1 => true,
        2 => g.is_complete(),
        _ => g.vertex_connectivity() >= 2,
    };
    if !two_connected {
        failures.push("not 2-connected".to_string());
    }
    if n >= 3 && stats.min_degree < 2 {
        failures.push(format!("minimum degree {} < 2", stats.min_degree));
    }
    if n >= 7 && !(20..=5 * n - 15).contains(&m) {
        failures.push(format!("size {m} outside [20, {}]", 5 * n - 15));
    }
    if n >= 5 && 4 * m < 7 * n {
        failures.push(format!("size {m} < 7n/4 = {}", (7 * n).div_ceil(4)));
    }
    for v in 0..n {
        if g.degree(v) == 3 && !g.is_clique(g.neighbors(v)) {
            failures.push(format!("degree-3 vertex {v} has non-adjacent neighbours"));
        }
    }
    if n > 0 && stats.max_degree == 2 && !(n == 3 && g.is_complete()) {
        failures.push("maximum degree 2 but not K3".to_string());
    }
    if n > 0 && stats.max_degree == 3 && !(n == 4 && g.is_complete()) {
        failures.push("maximum degree 3 but not K4".to_string());
    }
    NecessaryReport { failures }
}

pub fn certify_maxnik(g: &Graph) -> Certificate {
    let report = check_necessary(g);
    if !report.passes() {
        return Certificate::leaf(
            Verdict::NotMaxnik,
            g,
            Evidence::Necessary {
                failures: report.failures,
            },
        );
    }
    if g.is_complete() {
        let nik = certify_nik(g);
        return match nik.verdict {
            Verdict::Nik => Certificate::node(Verdict::Maxnik, g, Evidence::SmallOrder { order: g.order() }, vec![nik]),
            Verdict::Ik => Certificate::node(Verdict::NotMaxnik, g, Evidence::IkSubject, vec![nik]),
            _ => Certificate::unknown(g),
        };
    }
    if !is_two_apex(g) {
        if let Some(cert) = maxnik_by_construction(g) {
            return cert;
        }
    }
    let nik = certify_nik(g);
    match nik.verdict {
        Verdict::Nik => {}
        Verdict::Ik => return Certificate::node(Verdict::NotMaxnik, g, Evidence::IkSubject, vec![nik]),
        _ => return Certificate::unknown(g),
    }
    let reps: Vec<Edge> = orbits(g, ObjectKind::NonEdge)
        .representatives()
        .iter()
        .map(|r| Edge::new(r[0], r[1]))
        .collect();
    let subs: Vec<Certificate> = reps
        .par_iter()
        .map(|&e| {
            let h = g.with_edge(e);
            if let Some(w) = is_k_apex(&h, 2).witness {
                return Certificate::leaf(Verdict::Nik, &h, Evidence::ApexPair { apex: w });
            }
            let ik = certify_ik(&h);
            if ik.verdict == Verdict::Ik {
                return ik;
            }
            certify_nik(&h)
        })
        .collect();
    if let Some((i, c)) = subs.iter().enumerate().find(|(_, c)| c.verdict == Verdict::Nik) {
        return Certificate::node(Verdict::NotMaxnik, g, Evidence::Extendable { edge: reps[i] }, vec![c.clone()]);
    }
    if subs.iter().any(|c| c.verdict != Verdict::Ik) {
        return Certificate::unknown(g);
    }
    let mut children = vec![nik];
    children.extend(subs);
    Certificate::node(Verdict::Maxnik, g, Evidence::PerNonEdge { representatives: reps }, children)
}

/// MAXNIK through an edge sum or a triangle sum of MAXNIK pieces.
fn maxnik_by_construction(g: &Graph) -> Option<Certificate> {
    for cut in clique_separators(g, 3) {
        let t = cut.count_ones();
        if t < 2 {
            continue;
        }
        let (a, b) = split(g, cut);
        let cliques = [a.clique.clone(), b.clique.clone()];
        if t == 2 {
            let e = |p: &crate::primality::Piece| Edge::new(p.clique[0], p.clique[1]);
            if a.graph.is_triangular(e(&a)) && b.graph.is_triangular(e(&b)) {
                continue;
            }
            let ca = certify_maxnik(&a.graph);
            if ca.verdict != Verdict::Maxnik {
                continue;
            }
            let cb = certify_maxnik(&b.graph);
            if cb.verdict != Verdict::Maxnik {
                continue;
            }
            return Some(Certificate::node(
                Verdict::Maxnik,
                g,
                Evidence::Construction {
                    lemma: Lemma::Npp10,
                    cliques,
                },
                vec![ca, cb],
            ));
        }
        if let Some(cert) = triangle_sum(g, &a.graph, &b.graph, cliques) {
            if cert.verdict == Verdict::Maxnik {
                return Some(cert);
            }
        }
    }
    None
}

fn reject(reason: impl Into<String>) -> crate::Error {
    crate::Error::Certificate(reason.into())
}

/// Re-checks every node of `cert` from scratch.
pub fn validate(cert: &Certificate) -> crate::Result<()> {
    let g = &cert.graph;
    let (n, m) = (g.order(), g.size());
    let kids = &cert.children;
    let need_kids = |k: usize| -> crate::Result<()> {
        if kids.len() != k {
            return Err(reject(format!("{} expects {k} children, found {}", cert.rule(), kids.len())));
        }
        Ok(())
    };
    let expect = |v: &[Verdict]| -> crate::Result<()> {
        if !v.contains(&cert.verdict) {
            return Err(reject(format!("rule {} cannot give {}", cert.rule(), cert.verdict)));
        }
        Ok(())
    };
    for c in kids {
        validate(c)?;
    }
    match &cert.evidence {
        Evidence::ApexPair { apex } => {
            expect(&[Verdict::Nik])?;
            need_kids(0)?;
            if apex.len() > 2 || apex.iter().any(|&v| v >= n) {
                return Err(reject("bad apex set"));
            }
            let mask = apex.iter().fold(0u64, |a, &v| a | 1 << v);
            if !is_planar(&g.delete_vertices(mask)) {
                return Err(reject("apex deletion is not planar"));
            }
        }
        Evidence::SizeBound { order, size } => {
            expect(&[Verdict::Ik])?;
            if (*order, *size) != (n, m) || n < 7 || m + 14 < 5 * n {
                return Err(reject("size bound does not apply"));
            }
        }
        Evidence::MinorOf {
            pattern,
            pattern_graph,
            witness,
        } => {
            expect(&[Verdict::Ik])?;
            let lib = ObstructionLibrary::shared();
            let p = lib
                .pattern(pattern)
                .ok_or_else(|| reject(format!("{pattern} is not a registered obstruction")))?;
            if &p.graph != pattern_graph {
                return Err(reject(format!("{pattern} graph differs from the registry")));
            }
            witness.validate(g, pattern_graph).map_err(reject)?;
        }
        Evidence::Axiom { name } => {
            expect(&[Verdict::Nik])?;
            match ObstructionLibrary::shared().axiom_for(g) {
                Some(a) if &a.name == name => {}
                _ => return Err(reject(format!("{name} is not an axiom for this graph"))),
            }
        }
        Evidence::SmallOrder { order } => {
            expect(&[Verdict::Maxnik])?;
            need_kids(1)?;
            if *order != n || n > 6 || !g.is_complete() || kids[0].verdict != Verdict::Nik || kids[0].graph != *g {
                return Err(reject("small-order rule does not apply"));
            }
        }
        Evidence::NotTwoApex { order } => {
            expect(&[Verdict::Ik])?;
            if *order != n || n > 8 || is_two_apex(g) {
                return Err(reject("not-two-apex rule does not apply"));
            }
        }
        Evidence::PerNonEdge { representatives } => {
            expect(&[Verdict::Maxnik])?;
            need_kids(representatives.len() + 1)?;
            if kids[0].verdict != Verdict::Nik || kids[0].graph != *g {
                return Err(reject("first child must certify the graph nIK"));
            }
            let expected: Vec<Edge> = orbits(g, ObjectKind::NonEdge)
                .representatives()
                .iter()
                .map(|r| Edge::new(r[0], r[1]))
                .collect();
            if &expected != representatives {
                return Err(reject("non-edge orbit representatives do not match"));
            }
            for (e, c) in representatives.iter().zip(&kids[1..]) {
                if c.verdict != Verdict::Ik || c.graph != g.with_edge(*e) {
                    return Err(reject(format!("addition of {e} is not certified IK")));
                }
            }
        }
        Evidence::Construction { lemma, cliques } => {
            need_kids(2)?;
            validate_construction(cert, *lemma, cliques)?;
        }
        Evidence::Extendable { edge } => {
            expect(&[Verdict::NotMaxnik])?;
            need_kids(1)?;
            if g.has_edge(edge.u, edge.v) || kids[0].graph != g.with_edge(*edge) || kids[0].verdict != Verdict::Nik {
                return Err(reject("extension is not certified nIK"));
            }
        }
        Evidence::IkSubject => {
            expect(&[Verdict::NotMaxnik])?;
            need_kids(1)?;
            if kids[0].graph != *g || kids[0].verdict != Verdict::Ik {
                return Err(reject("child must certify the graph IK"));
            }
        }
        Evidence::Necessary { failures } => {
            expect(&[Verdict::NotMaxnik])?;
            if failures.is_empty() || check_necessary(g).failures != *failures {
                return Err(reject("necessary-condition failures do not recompute"));
            }
        }
        Evidence::None => expect(&[Verdict::Unknown])?,
    }
    Ok(())
}

fn validate_construction(cert: &Certificate, lemma: Lemma, cliques: &[Vec<usize>; 2]) -> crate::Result<()> {
    let [a, b] = [&cert.children[0], &cert.children[1]];
    let t = lemma.clique_size();
    for (c, k) in cliques.iter().zip([a, b]) {
        if c.len() != t || c.iter().any(|&v| v >= k.graph.order()) {
            return Err(reject(format!("{lemma} needs a {t}-clique in each operand")));
        }
        let mask = c.iter().fold(0u64, |m, &v| m | 1 << v);
        if mask.count_ones() as usize != t || !k.graph.is_clique(mask) {
            return Err(reject(format!("{lemma}: glued set is not a clique")));
        }
    }
    let glued = clique_sum_graphs(&a.graph, &cliques[0], &b.graph, &cliques[1])?;
    if !are_isomorphic(&glued, &cert.graph) {
        return Err(reject(format!("{lemma}: operands do not glue to the graph")));
    }
    let granted = gluing_conclusion(lemma, [a, b], cliques).map_err(|e| reject(e.to_string()))?;
    let ok = cert.verdict == granted || (cert.verdict == Verdict::Nik && granted == Verdict::Maxnik);
    if !ok {
        return Err(reject(format!("{lemma} grants {granted}, certificate claims {}", cert.verdict)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{g9_29, k7_minus, named_graph};

    fn e9() -> Graph {
        named_graph("E9").unwrap().graph
    }

    #[test]
    fn ik_examples() {
        let k7 = certify_ik(&Graph::complete(7).unwrap());
        assert_eq!(k7.verdict, Verdict::Ik);
        match &k7.evidence {
            Evidence::MinorOf { pattern, witness, .. } => {
                assert_eq!(pattern, "K7");
                assert!(witness.branch_sets.iter().all(|b| b.len() == 1));
            }
            other => panic!("unexpected {other:?}"),
        }
        let plus = named_graph("E9+e").unwrap().graph;
        let c = certify_ik(&plus);
        assert!(matches!(&c.evidence, Evidence::MinorOf { pattern, .. } if pattern == "E9+e"));
        assert_eq!(certify_ik(&Graph::cycle(5).unwrap()).verdict, Verdict::Unknown);
        validate(&k7).unwrap();
        validate(&c).unwrap();
    }

    #[test]
    fn nik_examples() {
        let k6 = certify_nik(&Graph::complete(6).unwrap());
        assert!(matches!(k6.evidence, Evidence::ApexPair { .. }));
        let c = certify_nik(&e9());
        assert_eq!(c.evidence, Evidence::Axiom { name: "E9".into() });
        let k3311 = Graph::complete_multipartite(&[3, 3, 1, 1]).unwrap();
        assert_eq!(certify_nik(&k3311).verdict, Verdict::Ik);
        for cert in [k6, c] {
            assert_eq!(cert.verdict, Verdict::Nik);
            validate(&cert).unwrap();
        }
    }

    #[test]
    fn maxnik_examples() {
        for g in [k7_minus(), e9(), Graph::complete(3).unwrap(), g9_29(), Graph::complete(1).unwrap()] {
            let c = certify_maxnik(&g);
            assert_eq!(c.verdict, Verdict::Maxnik, "{g:?}");
            validate(&c).unwrap();
        }
        let k33 = certify_maxnik(&Graph::complete_multipartite(&[3, 3]).unwrap());
        assert_eq!(k33.verdict, Verdict::NotMaxnik);
        assert!(matches!(&k33.evidence, Evidence::Necessary { failures } if failures.iter().any(|f| f.contains("degree-3"))));
        let c7 = certify_maxnik(&Graph::cycle(7).unwrap());
        assert!(matches!(&c7.evidence, Evidence::Necessary { failures } if failures.iter().any(|f| f.contains("maximum degree 2"))));
        assert_eq!(certify_maxnik(&Graph::complete(7).unwrap()).verdict, Verdict::NotMaxnik);
    }

    #[test]
    fn e9_additions_split_by_orbit() {
        let c = certify_maxnik(&e9());
        let patterns: Vec<String> = c.children[1..]
            .iter()
            .map(|k| match &k.evidence {
                Evidence::MinorOf { pattern, .. } => pattern.clone(),
                other => panic!("{other:?}"),
            })
            .collect();
        assert_eq!(patterns.len(), 2);
        assert!(patterns.contains(&"E9+e".to_string()));
        assert!(patterns.contains(&"F9".to_string()));
    }

    #[test]
    fn orbit_reduction_matches_full_sweep() {
        for g in [e9(), g9_29()] {
            for e in g.non_edges() {
                let c = certify_ik(&g.with_edge(e));
                assert_eq!(c.verdict, Verdict::Ik, "{e}");
                validate(&c).unwrap();
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let c = certify_maxnik(&e9());
        let text = serde_json::to_string(&c).unwrap();
        assert!(text.starts_with(r#"{"verdict":"MAXNIK","graph":""#));
        assert!(text.contains(r#""rule":"per-non-edge""#));
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let mut c = certify_maxnik(&k7_minus());
        c.children.pop();
        assert!(validate(&c).is_err());
        let mut bad = certify_nik(&Graph::complete(6).unwrap());
        bad.graph = Graph::complete(7).unwrap();
        assert!(validate(&bad).is_err());
        let fake = Certificate {
            verdict: Verdict::Nik,
            graph: e9(),
            evidence: Evidence::Axiom { name: "G9,29".into() },
            children: vec![],
        };
        assert!(validate(&fake).is_err());
    }
}

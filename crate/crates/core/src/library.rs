//! Named graphs and the obstruction / axiom sets used by certification.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{closure, ClosureResult, Move};
use crate::graph::{Edge, Graph};
use crate::iso::{are_isomorphic, canonical_form, canonical_labeling, orbits, CanonicalForm, ObjectKind};
use crate::planarity::{is_maximal_2apex, is_two_apex};
use crate::survey::enumerate_triangulations;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ExplicitDefinition,
    ClosureDerived,
    DecompositionDerived,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub provenance: Provenance,
}

impl NamedGraph {
    fn new(name: &str, graph: Graph, provenance: Provenance) -> Self {
        NamedGraph {
            name: name.to_string(),
            graph,
            provenance,
        }
    }
}

/// Names accepted by [`named_graph`], besides `K<n>`.
pub const NAMES: &[&str] = &[
    "K7-",
    "K8-3K2",
    "K8-P3",
    "G9,29",
    "octahedron",
    "K3,3",
    "K3,3,1,1",
    "E9",
    "F9",
    "E9+e",
    "Big-Y",
    "Long-Y",
    "Hat",
    "House",
    "Pentagon-bar",
];

fn invalid(name: &str, reason: impl Into<String>) -> Error {
    Error::Validation {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn check(name: &str, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(invalid(name, reason))
    }
}

fn shape(name: &str, g: &Graph, n: usize, m: usize) -> Result<()> {
    if (g.order(), g.size()) != (n, m) {
        return Err(invalid(
            name,
            format!("expected ({n}, {m}), found ({}, {})", g.order(), g.size()),
        ));
    }
    Ok(())
}

pub fn k7_minus() -> Graph {
    Graph::complete(7).expect("K7").without_edge(Edge::new(0, 1))
}

/// Complement of 3K2 ⊔ 2K1: pairs {0,1}, {2,3}, {4,5} are the missing edges.
pub fn k8_minus_3k2() -> Graph {
    let mut g = Graph::complete(8).expect("K8");
    for (a, b) in [(0, 1), (2, 3), (4, 5)] {
        g.remove_edge(a, b);
    }
    g
}

/// K8 minus the three edges of the path 0-1-2-3.
pub fn k8_minus_p3() -> Graph {
    let mut g = Graph::complete(8).expect("K8");
    for (a, b) in [(0, 1), (1, 2), (2, 3)] {
        g.remove_edge(a, b);
    }
    g
}

/// Complement of K1 ⊔ K2 ⊔ C6: vertex 0 alone, {1,2} the K2, 3..=8 the hexagon.
pub fn g9_29() -> Graph {
    let mut h = Graph::empty(9).expect("order 9");
    h.add_edge(1, 2);
    for i in 0..6 {
        h.add_edge(3 + i, 3 + (i + 1) % 6);
    }
    h.complement()
}

pub fn octahedron() -> Graph {
    Graph::complete_multipartite(&[2, 2, 2]).expect("octahedron")
}

/// `g` plus a new vertex adjacent to the clique `mask`, i.e. `g ⊕ K_{t+1}` over `K_t`.
pub(crate) fn cone_over(g: &Graph, mask: u64) -> Graph {
    let mut h = g.clone();
    let w = h.add_vertex().expect("within cap");
    for v in crate::graph::bits(mask) {
        h.add_edge(w, v);
    }
    h
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// K7^- as K6 glued to K6 over a 5-clique; the two cone vertices are non-adjacent.
pub fn recipe_k7_minus() -> Graph {
    cone_over(&Graph::complete(6).expect("K6"), mask_of(&[1, 2, 3, 4, 5]))
}

/// K7^- (missing 0-1) with K6 glued over a 5-clique containing exactly one of 0, 1.
pub fn recipe_k8_minus_p3() -> Graph {
    cone_over(&k7_minus(), mask_of(&[0, 2, 3, 4, 5]))
}

// On k8_minus_p3 the path is 0-1-2-3 and 4..=7 are the other vertices.

pub fn recipe_big_y() -> Graph {
    cone_over(&k8_minus_p3(), mask_of(&[0, 3, 4, 5, 6]))
}

pub fn recipe_hat() -> Graph {
    cone_over(&k8_minus_p3(), mask_of(&[0, 2, 4, 5, 6]))
}

pub fn recipe_house() -> Graph {
    cone_over(&k8_minus_p3(), mask_of(&[1, 4, 5, 6, 7]))
}

pub fn recipe_long_y() -> Graph {
    cone_over(&k8_minus_3k2(), mask_of(&[0, 2, 4, 6, 7]))
}

/// The five order-9 maximal 2-apex graphs: joins of the 7-vertex triangulations with K2.
pub fn order9_maximal_2apex() -> Vec<Graph> {
    let k2 = Graph::complete(2).expect("K2");
    enumerate_triangulations(7)
        .iter()
        .map(|t| canonical_labeling(&t.join(&k2).expect("order 9")).graph)
        .collect()
}

fn validate_e9(e9: &Graph) -> Result<()> {
    let name = "E9";
    shape(name, e9, 9, 21)?;
    let stats = e9.degree_stats();
    check(name, stats.degree_sequence == [4, 4, 4, 5, 5, 5, 5, 5, 5], "degrees must be three 4s and six 5s")?;
    let nt = e9.non_triangular_edges();
    check(name, nt.len() == 6, "expected exactly 6 non-triangular edges")?;
    check(
        name,
        nt.iter().all(|e| {
            let mut d = [e9.degree(e.u), e9.degree(e.v)];
            d.sort();
            d == [4, 5]
        }),
        "non-triangular edges must join degree 4 to degree 5",
    )?;
    check(name, e9.vertex_connectivity() == 4, "expected 4-connected")?;
    check(name, e9.clique_number() == 3, "largest clique must be a triangle")?;
    check(name, !is_two_apex(e9), "must not be 2-apex")?;
    check(
        name,
        orbits(e9, ObjectKind::NonEdge).orbits.len() == 2,
        "expected exactly 2 non-edge orbits",
    )?;
    Ok(())
}

/// The unique order-9, size-21 member with minimum degree at least 4.
pub fn identify_e9(heawood: &ClosureResult) -> Result<NamedGraph> {
    let candidates: Vec<&Graph> = heawood
        .graphs()
        .filter(|g| g.order() == 9 && g.size() == 21 && g.degree_stats().min_degree >= 4)
        .collect();
    if candidates.len() != 1 {
        return Err(Error::IdentificationAmbiguous {
            name: "E9".into(),
            detail: format!("{} candidates of order 9, size 21, min degree >= 4", candidates.len()),
        });
    }
    let e9 = candidates[0].clone();
    validate_e9(&e9)?;
    Ok(NamedGraph::new("E9", e9, Provenance::ClosureDerived))
}

/// Splits the two non-edge additions of E9: one contains an order-9 member of the K7
/// ∆Y family (that member is F9), the other is kept as the pattern E9+e.
pub fn identify_f9_and_e9_plus_e(e9: &Graph, k7_family: &ClosureResult) -> Result<(NamedGraph, NamedGraph)> {
    let order9: BTreeMap<CanonicalForm, &Graph> = k7_family
        .graphs()
        .filter(|g| g.order() == 9)
        .map(|g| (canonical_form(g), g))
        .collect();
    let mut hits = Vec::new();
    let mut misses = Vec::new();
    for rep in orbits(e9, ObjectKind::NonEdge).representatives() {
        let plus = e9.with_edge(Edge::new(rep[0], rep[1]));
        let found = plus
            .edges()
            .find_map(|e| order9.get(&canonical_form(&plus.without_edge(e))).copied());
        match found {
            Some(f9) => hits.push(f9.clone()),
            None => misses.push(plus),
        }
    }
    if hits.len() != 1 || misses.len() != 1 {
        return Err(Error::IdentificationAmbiguous {
            name: "F9".into(),
            detail: format!("{} non-edge orbits contain a K7-family member", hits.len()),
        });
    }
    let f9 = hits.pop().expect("one hit");
    shape("F9", &f9, 9, 21)?;
    let plus = canonical_labeling(&misses[0]).graph;
    shape("E9+e", &plus, 9, 22)?;
    Ok((
        NamedGraph::new("F9", f9, Provenance::ClosureDerived),
        NamedGraph::new("E9+e", plus, Provenance::ClosureDerived),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternFamily {
    K7,
    K3311,
    E9PlusE,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Pattern {
    pub name: String,
    pub graph: Graph,
    pub family: PatternFamily,
    #[serde(skip)]
    pub min_degree: usize,
}

/// A triangle known to bound a disk in some knotless embedding; `None` means any triangle.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TriangleAxiom {
    pub name: String,
    pub graph: Graph,
    pub triangle: Option<[usize; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObstructionLibrary {
    /// Sorted by (order, size, canonical key): cheapest minor tests first.
    pub mmik_patterns: Vec<Pattern>,
    pub nik_axioms: Vec<NamedGraph>,
    pub triangle_disk_axioms: Vec<TriangleAxiom>,
    /// Obstructions referred to but not available as adjacency data.
    pub absent: Vec<String>,
    /// Triangle orbits of E9 with no common neighbour; the axiom uses the first.
    pub e9_disk_triangle_orbits: usize,
    #[serde(skip)]
    named: BTreeMap<String, NamedGraph>,
    #[serde(skip)]
    axiom_index: BTreeMap<CanonicalForm, usize>,
    #[serde(skip)]
    pattern_index: BTreeMap<CanonicalForm, usize>,
}

impl ObstructionLibrary {
    pub fn build() -> Result<Self> {
        let k7 = Graph::complete(7)?;
        let k3311 = Graph::complete_multipartite(&[3, 3, 1, 1])?;
        let k7_dy = closure(std::slice::from_ref(&k7), &[Move::DeltaY]);
        let heawood = closure(std::slice::from_ref(&k7), &[Move::DeltaY, Move::YDelta]);
        let k3311_family = closure(std::slice::from_ref(&k3311), &[Move::DeltaY, Move::YDelta]);

        let e9 = identify_e9(&heawood)?;
        let (f9, e9_plus_e) = identify_f9_and_e9_plus_e(&e9.graph, &k7_dy)?;

        let mut seen: BTreeMap<CanonicalForm, Pattern> = BTreeMap::new();
        let mut add = |g: &Graph, name: String, family: PatternFamily| {
            let c = canonical_labeling(g);
            seen.entry(c.form).or_insert_with(|| Pattern {
                name,
                min_degree: c.graph.degree_stats().min_degree,
                graph: c.graph,
                family,
            });
        };
        let f9_key = canonical_form(&f9.graph);
        for (i, g) in k7_dy.graphs().enumerate() {
            let name = if i == 0 {
                "K7".to_string()
            } else if canonical_form(g) == f9_key {
                "F9".to_string()
            } else {
                format!("K7-family[{i}]")
            };
            add(g, name, PatternFamily::K7);
        }
        for (i, g) in k3311_family.graphs().enumerate() {
            let name = if i == 0 {
                "K3,3,1,1".to_string()
            } else {
                format!("K3,3,1,1-family[{i}]")
            };
            add(g, name, PatternFamily::K3311);
        }
        add(&e9_plus_e.graph, "E9+e".into(), PatternFamily::E9PlusE);
        let mut mmik_patterns: Vec<(CanonicalForm, Pattern)> = seen.into_iter().collect();
        mmik_patterns.sort_by(|(ka, a), (kb, b)| {
            (a.graph.order(), a.graph.size(), ka).cmp(&(b.graph.order(), b.graph.size(), kb))
        });
        let mmik_patterns: Vec<Pattern> = mmik_patterns.into_iter().map(|(_, p)| p).collect();

        let g929 = NamedGraph::new("G9,29", g9_29(), Provenance::ExplicitDefinition);
        shape("G9,29", &g929.graph, 9, 29)?;
        let nik_axioms = vec![e9.clone(), g929];

        let disk_orbits: Vec<Vec<Vec<usize>>> = orbits(&e9.graph, ObjectKind::Triangle)
            .orbits
            .into_iter()
            .filter(|o| {
                let t = &o[0];
                e9.graph.neighbors(t[0]) & e9.graph.neighbors(t[1]) & e9.graph.neighbors(t[2]) == 0
            })
            .collect();
        let Some(first) = disk_orbits.first() else {
            return Err(Error::IdentificationAmbiguous {
                name: "E9 disk triangle".into(),
                detail: "no triangle without a common neighbour".into(),
            });
        };
        let t = [first[0][0], first[0][1], first[0][2]];
        let triangle_disk_axioms = vec![
            TriangleAxiom {
                name: "E9".into(),
                graph: e9.graph.clone(),
                triangle: Some(t),
            },
            TriangleAxiom {
                name: "K4".into(),
                graph: Graph::complete(4)?,
                triangle: None,
            },
        ];

        let mut named = BTreeMap::new();
        let explicit = [
            ("K7-", k7_minus()),
            ("K8-3K2", k8_minus_3k2()),
            ("K8-P3", k8_minus_p3()),
            ("G9,29", g9_29()),
            ("octahedron", octahedron()),
            ("K3,3", Graph::complete_multipartite(&[3, 3])?),
            ("K3,3,1,1", k3311),
        ];
        for (name, g) in explicit {
            named.insert(name.to_string(), NamedGraph::new(name, g, Provenance::ExplicitDefinition));
        }
        for ng in [e9, f9, e9_plus_e] {
            named.insert(ng.name.clone(), ng);
        }
        for ng in name_order9_maximal_2apex()? {
            named.insert(ng.name.clone(), ng);
        }

        let mut lib = ObstructionLibrary {
            mmik_patterns,
            nik_axioms,
            triangle_disk_axioms,
            absent: vec!["G9,28".into()],
            e9_disk_triangle_orbits: disk_orbits.len(),
            named,
            axiom_index: BTreeMap::new(),
            pattern_index: BTreeMap::new(),
        };
        lib.pattern_index = lib
            .mmik_patterns
            .iter()
            .enumerate()
            .map(|(i, p)| (canonical_form(&p.graph), i))
            .collect();
        lib.axiom_index = lib
            .nik_axioms
            .iter()
            .enumerate()
            .map(|(i, a)| (canonical_form(&a.graph), i))
            .collect();
        lib.validate()?;
        Ok(lib)
    }

    /// Built on first use and shared afterwards.
    pub fn shared() -> &'static ObstructionLibrary {
        static LIB: OnceLock<ObstructionLibrary> = OnceLock::new();
        LIB.get_or_init(|| ObstructionLibrary::build().expect("obstruction library builds"))
    }

    fn validate(&self) -> Result<()> {
        for p in &self.mmik_patterns {
            check(&p.name, p.graph.size() >= 21, "IK patterns need at least 21 edges")?;
        }
        for a in &self.nik_axioms {
            let key = canonical_form(&a.graph);
            check(
                &a.name,
                self.mmik_patterns.iter().all(|p| canonical_form(&p.graph) != key),
                "axiom listed as an obstruction",
            )?;
        }
        for (name, g) in &self.named {
            validate_named(name, g)?;
        }
        Ok(())
    }

    pub fn named(&self, name: &str) -> Option<&NamedGraph> {
        self.named.get(name)
    }

    pub fn pattern(&self, name: &str) -> Option<&Pattern> {
        self.mmik_patterns.iter().find(|p| p.name == name)
    }

    /// Index of the nIK axiom isomorphic to `g`.
    pub fn axiom_for(&self, g: &Graph) -> Option<&NamedGraph> {
        self.axiom_index.get(&canonical_form(g)).map(|&i| &self.nik_axioms[i])
    }

    /// The obstruction isomorphic to `g`, if any.
    pub fn pattern_for(&self, g: &Graph) -> Option<&Pattern> {
        self.pattern_index.get(&canonical_form(g)).map(|&i| &self.mmik_patterns[i])
    }

    pub fn triangle_axiom(&self, name: &str) -> Option<&TriangleAxiom> {
        self.triangle_disk_axioms.iter().find(|a| a.name == name)
    }
}

fn validate_named(name: &str, ng: &NamedGraph) -> Result<()> {
    let g = &ng.graph;
    match name {
        "K7-" => shape(name, g, 7, 20),
        "K8-3K2" | "K8-P3" => {
            shape(name, g, 8, 25)?;
            check(name, is_maximal_2apex(g), "must be maximal 2-apex")
        }
        "G9,29" => {
            shape(name, g, 9, 29)?;
            let comps = g.complement().components();
            let mut sizes: Vec<u32> = comps.iter().map(|c| c.count_ones()).collect();
            sizes.sort();
            check(name, sizes == [1, 2, 6], "complement must have components of sizes 1, 2, 6")?;
            let six = comps.iter().find(|c| c.count_ones() == 6).expect("6-component");
            let hex = g.complement().induced(*six);
            check(name, are_isomorphic(&hex, &Graph::cycle(6)?), "6-component must be a cycle")
        }
        "octahedron" => shape(name, g, 6, 12),
        "K3,3" => shape(name, g, 6, 9),
        "K3,3,1,1" => shape(name, g, 8, 22),
        "E9" => validate_e9(g),
        "F9" => shape(name, g, 9, 21),
        "E9+e" => shape(name, g, 9, 22),
        "Big-Y" | "Long-Y" | "Hat" | "House" | "Pentagon-bar" => {
            shape(name, g, 9, 30)?;
            check(name, is_maximal_2apex(g), "must be maximal 2-apex")
        }
        _ => Ok(()),
    }
}

/// Assigns the five order-9 maximal 2-apex graphs their names by matching the composite
/// recipes; the one left over is Pentagon-bar.
pub fn name_order9_maximal_2apex() -> Result<Vec<NamedGraph>> {
    let all = order9_maximal_2apex();
    if all.len() != 5 {
        return Err(Error::IdentificationAmbiguous {
            name: "order-9 maximal 2-apex".into(),
            detail: format!("{} graphs instead of 5", all.len()),
        });
    }
    let recipes = [
        ("Big-Y", recipe_big_y()),
        ("Long-Y", recipe_long_y()),
        ("Hat", recipe_hat()),
        ("House", recipe_house()),
    ];
    let mut taken = vec![false; all.len()];
    let mut out = Vec::new();
    for (name, r) in recipes {
        let hits: Vec<usize> = (0..all.len()).filter(|&i| are_isomorphic(&all[i], &r)).collect();
        if hits.len() != 1 || taken[hits[0]] {
            return Err(Error::IdentificationAmbiguous {
                name: name.into(),
                detail: "recipe does not single out one unused graph".into(),
            });
        }
        taken[hits[0]] = true;
        out.push(NamedGraph::new(name, all[hits[0]].clone(), Provenance::DecompositionDerived));
    }
    let rest = taken.iter().position(|t| !t).expect("one left");
    out.push(NamedGraph::new(
        "Pentagon-bar",
        all[rest].clone(),
        Provenance::DecompositionDerived,
    ));
    Ok(out)
}

/// Looks up a named graph; `K<n>` builds a complete graph.
pub fn named_graph(name: &str) -> Result<NamedGraph> {
    if let Some(rest) = name.strip_prefix('K') {
        if let Ok(n) = rest.parse::<usize>() {
            return Ok(NamedGraph::new(name, Graph::complete(n)?, Provenance::ExplicitDefinition));
        }
    }
    ObstructionLibrary::shared()
        .named(name)
        .cloned()
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::has_minor;

    #[test]
    fn explicit_shapes() {
        assert_eq!((k7_minus().order(), k7_minus().size()), (7, 20));
        assert_eq!(k8_minus_p3().size(), 25);
        assert_eq!(g9_29().size(), 29);
        assert!(are_isomorphic(&recipe_k7_minus(), &k7_minus()));
        assert!(are_isomorphic(&recipe_k8_minus_p3(), &k8_minus_p3()));
    }

    #[test]
    fn library_contents() {
        let lib = ObstructionLibrary::shared();
        assert_eq!(lib.mmik_patterns.len(), 14 + 58 + 1);
        assert!(lib.pattern("K7").is_some());
        assert!(lib.pattern("K3,3,1,1").is_some());
        assert!(lib.pattern("E9+e").is_some());
        assert!(lib.pattern("F9").is_some());
        assert_eq!(lib.absent, vec!["G9,28".to_string()]);
        let sizes: Vec<_> = lib.mmik_patterns.iter().map(|p| (p.graph.order(), p.graph.size())).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sizes, sorted);
        assert!(lib.e9_disk_triangle_orbits >= 1);
        let t = lib.triangle_axiom("E9").unwrap().triangle.unwrap();
        let e9 = &lib.named("E9").unwrap().graph;
        assert!(e9.is_clique(mask_of(&t)));
    }

    #[test]
    fn e9_is_not_above_any_pattern() {
        let lib = ObstructionLibrary::shared();
        let e9 = &lib.named("E9").unwrap().graph;
        for p in &lib.mmik_patterns {
            assert!(!are_isomorphic(&p.graph, e9));
            assert!(has_minor(e9, &p.graph).is_none(), "{} is a minor of E9", p.name);
        }
    }

    #[test]
    fn names_resolve() {
        for name in NAMES {
            let ng = named_graph(name).unwrap();
            assert_eq!(&ng.name, name);
        }
        assert_eq!(named_graph("K5").unwrap().graph.size(), 10);
        assert!(matches!(named_graph("K9-"), Err(Error::UnknownName(_))));
    }
}

//! Exhaustive sweeps over small isomorphism classes and the summary tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certify::{certify_maxnik, check_necessary, validate, Certificate, Verdict};
use crate::graph::{bits, Graph};
use crate::graph6;
use crate::iso::{canonical_labeling, CanonicalForm};
use crate::library::{k7_minus, ObstructionLibrary};
use crate::planarity::{is_maximal_2apex, is_maximal_planar};

/// Largest order for which every isomorphism class is generated.
pub const MAX_SWEEP_ORDER: usize = 8;

/// One canonical representative per isomorphism class of order `n`, sorted by key.
///
/// Classes of order `n` arise from classes of order `n - 1` by adding a vertex with every
/// possible neighbourhood, deduplicated by canonical form.
pub fn graph_classes(n: usize) -> &'static [Graph] {
    assert!(n <= MAX_SWEEP_ORDER, "class sweep limited to order {MAX_SWEEP_ORDER}");
    static CACHE: [OnceLock<Vec<Graph>>; MAX_SWEEP_ORDER + 1] = [const { OnceLock::new() }; MAX_SWEEP_ORDER + 1];
    CACHE[n].get_or_init(|| {
        if n == 0 {
            return vec![Graph::empty(0).expect("order 0")];
        }
        extend_classes(graph_classes(n - 1), |_| true)
    })
}

/// Adds one vertex to every parent in every way, keeping children accepted by `keep`,
/// one per isomorphism class.
fn extend_classes(parents: &[Graph], keep: impl Fn(&Graph) -> bool + Sync) -> Vec<Graph> {
    let found: BTreeMap<CanonicalForm, Graph> = parents
        .par_iter()
        .flat_map_iter(|p| {
            let keep = &keep;
            (0u64..1 << p.order()).filter_map(move |nb| {
                let mut g = p.clone();
                let w = g.add_vertex().expect("small order");
                for v in bits(nb) {
                    g.add_edge(w, v);
                }
                if !keep(&g) {
                    return None;
                }
                let c = canonical_labeling(&g);
                Some((c.form, c.graph))
            })
        })
        .collect();
    found.into_values().collect()
}

/// Isomorphism classes of order `MAX_SWEEP_ORDER + 1` with exactly `m` edges.
pub fn order9_classes_of_size(m: usize) -> Vec<Graph> {
    let n = MAX_SWEEP_ORDER + 1;
    // deleting any vertex of degree d leaves an order-8 graph with m - d edges
    let parents: Vec<Graph> = graph_classes(n - 1)
        .iter()
        .filter(|p| p.size() <= m && p.size() + (n - 1) >= m)
        .cloned()
        .collect();
    extend_classes(&parents, |g| g.size() == m)
}

/// Maximal planar graphs on `n` vertices, `3 <= n <= 8`.
pub fn enumerate_triangulations(n: usize) -> Vec<Graph> {
    assert!((3..=MAX_SWEEP_ORDER).contains(&n), "order must be in 3..=8");
    graph_classes(n)
        .par_iter()
        .filter(|g| g.size() == 3 * n - 6 && is_maximal_planar(g))
        .cloned()
        .collect()
}

/// Edge-maximal 2-apex graphs on `n` vertices, `n <= 8`.
pub fn enumerate_maximal_2apex(n: usize) -> Vec<Graph> {
    graph_classes(n)
        .par_iter()
        .filter(|g| is_maximal_2apex(g))
        .cloned()
        .collect()
}

/// Result of certifying every isomorphism class of one order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Sweep {
    pub order: usize,
    pub classes: usize,
    pub maxnik: Vec<Certificate>,
    /// Classes left UNKNOWN; must be 0 through order 8.
    pub unknown: Vec<Graph>,
}

fn sweep(order: usize, graphs: &[Graph]) -> Sweep {
    let verdicts: Vec<Certificate> = graphs.par_iter().map(certify_maxnik).collect();
    let mut maxnik = Vec::new();
    let mut unknown = Vec::new();
    for c in verdicts {
        match c.verdict {
            Verdict::Maxnik => maxnik.push(c),
            Verdict::Unknown => unknown.push(c.graph),
            _ => {}
        }
    }
    Sweep {
        order,
        classes: graphs.len(),
        maxnik,
        unknown,
    }
}

/// Certifies every class of order `n <= 8`.
pub fn sweep_maxnik(n: usize) -> Sweep {
    sweep(n, graph_classes(n))
}

pub fn enumerate_maxnik(n: usize) -> Vec<Graph> {
    sweep_maxnik(n).maxnik.into_iter().map(|c| c.graph).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Classified {
    pub name: String,
    pub graph: Graph,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Order9Report {
    pub graphs: Vec<Classified>,
    pub maximal_2apex_count: usize,
    pub all_certified: bool,
    pub sizes: Vec<usize>,
    /// What the sweep does not establish.
    pub scope: String,
}

/// Certifies the five maximal 2-apex graphs of order 9, E9 and G9,29.
pub fn verify_order9() -> Order9Report {
    let lib = ObstructionLibrary::shared();
    let names = ["Big-Y", "Long-Y", "Hat", "House", "Pentagon-bar", "E9", "G9,29"];
    let graphs: Vec<Classified> = names
        .par_iter()
        .map(|name| {
            let graph = lib.named(name).expect("registered").graph.clone();
            let certificate = certify_maxnik(&graph);
            Classified {
                name: name.to_string(),
                graph,
                certificate,
            }
        })
        .collect();
    let all_certified = graphs
        .iter()
        .all(|c| c.certificate.verdict == Verdict::Maxnik && validate(&c.certificate).is_ok());
    let maximal_2apex_count = crate::library::order9_maximal_2apex()
        .iter()
        .filter(|g| is_maximal_2apex(g))
        .count();
    let mut sizes: Vec<usize> = graphs.iter().map(|c| c.graph.size()).collect();
    sizes.sort();
    Order9Report {
        graphs,
        maximal_2apex_count,
        all_certified,
        sizes,
        scope: "proves the seven graphs maxnik and counts the maximal 2-apex graphs; \
                does not exclude other order-9 maxnik graphs"
            .into(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Size20Report {
    /// Maxnik graphs with exactly 20 edges among orders 7..=9.
    pub size20: Vec<Graph>,
    pub unique_is_k7_minus: bool,
    /// Maxnik graphs with at most 20 edges among orders 1..=9.
    pub at_most_20: Vec<Graph>,
    pub at_most_20_are_small: bool,
    pub classes_checked: usize,
    pub unknown: usize,
}

pub fn verify_size20() -> Size20Report {
    let mut size20 = Vec::new();
    let mut at_most_20 = Vec::new();
    let mut checked = 0;
    let mut unknown = 0;
    for n in 1..=MAX_SWEEP_ORDER {
        let graphs: Vec<Graph> = graph_classes(n).iter().filter(|g| g.size() <= 20).cloned().collect();
        let s = sweep(n, &graphs);
        checked += s.classes;
        unknown += s.unknown.len();
        at_most_20.extend(s.maxnik.into_iter().map(|c| c.graph));
    }
    let nine = order9_classes_of_size(20);
    let s = sweep(MAX_SWEEP_ORDER + 1, &nine);
    checked += s.classes;
    unknown += s.unknown.len();
    at_most_20.extend(s.maxnik.into_iter().map(|c| c.graph));
    // order-9 graphs with fewer than 20 edges fail the 20 <= m bound outright
    size20.extend(at_most_20.iter().filter(|g| g.size() == 20).cloned());
    let unique_is_k7_minus =
        size20.len() == 1 && crate::iso::are_isomorphic(&size20[0], &k7_minus());
    let at_most_20_are_small = at_most_20.len() == 7 && at_most_20.iter().all(|g| g.order() <= 7);
    Size20Report {
        size20,
        unique_is_k7_minus,
        at_most_20,
        at_most_20_are_small,
        classes_checked: checked,
        unknown,
    }
}

/// All certified maxnik graphs through order 9: the full sweeps for n <= 8 and the
/// seven order-9 graphs.
pub fn classified_through_9() -> BTreeMap<usize, Vec<Graph>> {
    let mut out: BTreeMap<usize, Vec<Graph>> = (1..=MAX_SWEEP_ORDER).map(|n| (n, enumerate_maxnik(n))).collect();
    out.insert(9, verify_order9().graphs.into_iter().map(|c| c.graph).collect());
    out
}

/// Published least size/order ratios, orders 1..=9.
pub const REFERENCE_MIN_RATIO: [&str; 9] = ["0", "1/2", "1", "3/2", "2", "5/2", "20/7", "25/8", "21/9"];
/// Published minimum and maximum degree cells, orders 1..=9.
pub const REFERENCE_MIN_DEGREE: [&str; 9] = ["0", "1", "2", "3", "4", "5", "5", "5 or 6", "4 to 7"];
pub const REFERENCE_MAX_DEGREE: [&str; 9] = ["0", "1", "2", "3", "4", "5", "6", "7", "5 to 8"];

fn parse_ratio(cell: &str) -> Ratio<u64> {
    match cell.split_once('/') {
        Some((a, b)) => Ratio::new(a.trim().parse().expect("numerator"), b.trim().parse().expect("denominator")),
        None => Ratio::from_integer(cell.trim().parse().expect("integer")),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatioRow {
    pub order: usize,
    /// Reduced, e.g. "7/3".
    pub computed: String,
    pub reference: String,
    pub matches: bool,
}

pub fn table_ve_from(classified: &BTreeMap<usize, Vec<Graph>>) -> Vec<RatioRow> {
    classified
        .iter()
        .map(|(&n, graphs)| {
            let least = graphs
                .iter()
                .map(|g| Ratio::new(g.size() as u64, n as u64))
                .min()
                .expect("every order has a maxnik graph");
            let reference = REFERENCE_MIN_RATIO[n - 1];
            RatioRow {
                order: n,
                computed: least.to_string(),
                reference: reference.to_string(),
                matches: least == parse_ratio(reference),
            }
        })
        .collect()
}

pub fn table_ve() -> Vec<RatioRow> {
    table_ve_from(&classified_through_9())
}

/// Degree cell: a single value, "a or b" (exactly those values) or "a to b" (range).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DegreeCell {
    Values(BTreeSet<usize>),
    Range(usize, usize),
}

impl DegreeCell {
    pub fn parse(cell: &str) -> DegreeCell {
        if let Some((a, b)) = cell.split_once(" to ") {
            return DegreeCell::Range(a.trim().parse().expect("lower"), b.trim().parse().expect("upper"));
        }
        DegreeCell::Values(cell.split(" or ").map(|v| v.trim().parse().expect("value")).collect())
    }

    fn agrees(&self, observed: &BTreeSet<usize>) -> bool {
        match self {
            DegreeCell::Values(v) => v == observed,
            DegreeCell::Range(lo, hi) => {
                observed.first() == Some(lo) && observed.last() == Some(hi)
            }
        }
    }
}

fn describe(observed: &BTreeSet<usize>) -> String {
    let v: Vec<String> = observed.iter().map(|d| d.to_string()).collect();
    match v.len() {
        1 => v[0].clone(),
        2 => format!("{} or {}", v[0], v[1]),
        _ => format!("{} to {}", v[0], v[v.len() - 1]),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeRow {
    pub order: usize,
    pub min_degrees: BTreeSet<usize>,
    pub max_degrees: BTreeSet<usize>,
    pub min_matches: bool,
    pub max_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub order: usize,
    pub quantity: String,
    pub computed: String,
    pub reference: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order {}: {} computed {} vs reference {}",
            self.order, self.quantity, self.computed, self.reference
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DegreeTable {
    pub rows: Vec<DegreeRow>,
    pub discrepancies: Vec<Discrepancy>,
}

pub fn table_deg_from(classified: &BTreeMap<usize, Vec<Graph>>) -> DegreeTable {
    let mut rows = Vec::new();
    let mut discrepancies = Vec::new();
    for (&n, graphs) in classified {
        let stats: Vec<_> = graphs.iter().map(|g| g.degree_stats()).collect();
        let min_degrees: BTreeSet<usize> = stats.iter().map(|s| s.min_degree).collect();
        let max_degrees: BTreeSet<usize> = stats.iter().map(|s| s.max_degree).collect();
        let (rmin, rmax) = (REFERENCE_MIN_DEGREE[n - 1], REFERENCE_MAX_DEGREE[n - 1]);
        let min_matches = DegreeCell::parse(rmin).agrees(&min_degrees);
        let max_matches = DegreeCell::parse(rmax).agrees(&max_degrees);
        for (ok, quantity, observed, reference) in [
            (min_matches, "minimum degree", &min_degrees, rmin),
            (max_matches, "maximum degree", &max_degrees, rmax),
        ] {
            if !ok {
                discrepancies.push(Discrepancy {
                    order: n,
                    quantity: quantity.into(),
                    computed: describe(observed),
                    reference: reference.into(),
                });
            }
        }
        rows.push(DegreeRow {
            order: n,
            min_degrees,
            max_degrees,
            min_matches,
            max_matches,
        });
    }
    DegreeTable { rows, discrepancies }
}

pub fn table_deg() -> DegreeTable {
    table_deg_from(&classified_through_9())
}

/// Necessary-condition failures among certified maxnik graphs (expected empty).
pub fn bound_violations<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Vec<(String, Vec<String>)> {
    graphs
        .into_iter()
        .filter_map(|g| {
            let r = check_necessary(g);
            (!r.passes()).then(|| (graph6::encode(g), r.failures))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| graph_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn degree_cells() {
        assert_eq!(DegreeCell::parse("5"), DegreeCell::Values([5].into()));
        assert_eq!(DegreeCell::parse("5 or 6"), DegreeCell::Values([5, 6].into()));
        assert_eq!(DegreeCell::parse("4 to 7"), DegreeCell::Range(4, 7));
        assert!(DegreeCell::parse("4 to 7").agrees(&[4, 5, 7].into()));
        assert!(!DegreeCell::parse("4 to 7").agrees(&[4, 5, 6].into()));
        assert_eq!(parse_ratio("21/9"), Ratio::new(7, 3));
    }

    #[test]
    fn small_orders_have_only_complete_maxnik() {
        for n in 1..=6 {
            let found = enumerate_maxnik(n);
            assert_eq!(found.len(), 1);
            assert!(found[0].is_complete());
        }
    }

    #[test]
    fn triangulation_counts() {
        let counts: Vec<usize> = (3..=7).map(|n| enumerate_triangulations(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5]);
    }
}

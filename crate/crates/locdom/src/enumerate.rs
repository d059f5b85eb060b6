//! Exhaustive generation of small graphs up to isomorphism, and bound
//! sweeps over them.
//!
//! The generator grows graphs edge by edge from the empty graph on `n`
//! vertices, keeping one representative per isomorphism class via the
//! canonical-deletion rule: a child is accepted only if deleting the
//! canonically last edge of the child gives back the parent's class.
//! Canonical labels come from equitable-partition refinement with
//! individualize-and-refine branching, so they are exact (no invariant
//! collisions), at the cost of a small practicable order ceiling.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::solve::{ld_number_exact, SolveBudget, SolveError};
use crate::twins::twin_report;

/// Practicality ceiling for the built-in generator.
const MAX_ENUM_ORDER: usize = 12;
/// Ceiling for exact canonical labeling.
const MAX_CANON_ORDER: usize = 16;

/// Errors from enumeration and sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    /// The order exceeds the documented ceiling for the operation.
    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    /// An exact solve inside a sweep gave up or rejected its input.
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Degree restriction for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeFilter {
    /// Maximum degree 3.
    Subcubic,
    /// Exactly `d`-regular, `d ≤ 3`.
    Regular(usize),
}

/// Which graphs to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumFilter {
    /// Exact number of vertices (`1 ≤ n ≤ 12` for the built-in generator).
    pub n: usize,
    pub degree: DegreeFilter,
    /// Keep only connected graphs.
    pub connected: bool,
    /// Keep only graphs without open or closed twins.
    pub twin_free: bool,
}

/// The bound a sweep checks each solved graph against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepBound {
    /// `γ^LD ≤ ⌊n/2⌋`.
    HalfOrder,
}

/// One solved graph inside a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    /// Canonical graph6 form (raw form if the graph is too large to
    /// canonicalize).
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub open_twin_pairs: usize,
    pub closed_twin_pairs: usize,
    pub gamma: usize,
    pub witness: VertexSet,
}

impl SweepRecord {
    pub fn is_twin_free(&self) -> bool {
        self.open_twin_pairs == 0 && self.closed_twin_pairs == 0
    }

    /// `γ^LD / n`.
    pub fn ratio(&self) -> f64 {
        self.gamma as f64 / self.n as f64
    }

    /// Attains the half-order bound exactly (`2γ = n`).
    pub fn is_tight(&self) -> bool {
        2 * self.gamma == self.n
    }

    /// Exceeds the checked bound.
    pub fn violates(&self, bound: SweepBound) -> bool {
        match bound {
            SweepBound::HalfOrder => self.gamma > self.n / 2,
        }
    }
}

/// Outcome of sweeping a set of graphs against a bound.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub bound: SweepBound,
    /// One record per graph, in input (canonical) order.
    pub records: Vec<SweepRecord>,
}

impl SweepReport {
    pub fn count(&self) -> usize {
        self.records.len()
    }

    /// Records exceeding the bound; empty iff every graph satisfies it.
    pub fn violations(&self) -> Vec<&SweepRecord> {
        self.records
            .iter()
            .filter(|r| r.violates(self.bound))
            .collect()
    }

    /// Records attaining `2γ = n` exactly.
    pub fn tight(&self) -> Vec<&SweepRecord> {
        self.records.iter().filter(|r| r.is_tight()).collect()
    }

    pub fn max_ratio(&self) -> Option<f64> {
        self.records
            .iter()
            .map(SweepRecord::ratio)
            .max_by(|a, b| a.total_cmp(b))
    }
}

/// Canonical graph6 form: equal strings iff the graphs are isomorphic.
///
/// Errors with [`EnumError::OrderTooLarge`] above 16 vertices.
pub fn canonical_form(g: &Graph) -> Result<String, EnumError> {
    Ok(canon(g)?.0)
}

/// The canonically relabeled graph and the permutation (old index → new
/// index) that produces it.
///
/// Errors with [`EnumError::OrderTooLarge`] above 16 vertices.
pub fn canonical_relabeling(g: &Graph) -> Result<(Graph, Vec<usize>), EnumError> {
    let (_, graph, perm) = canon(g)?;
    Ok((graph, perm))
}

/// Connected/degree/twin-filtered graphs on exactly `filter.n` vertices,
/// one canonically labeled representative per isomorphism class, ordered
/// by canonical form.
///
/// Errors with [`EnumError::OrderTooLarge`] above 12 vertices. Panics if
/// `filter.n = 0` or a regular degree exceeds 3.
pub fn enumerate_graphs(filter: EnumFilter) -> Result<Vec<Graph>, EnumError> {
    assert!(filter.n >= 1, "enumeration needs at least one vertex");
    if let DegreeFilter::Regular(d) = filter.degree {
        assert!(d <= 3, "regular degree {d} out of range 0..=3");
    }
    if filter.n > MAX_ENUM_ORDER {
        return Err(EnumError::OrderTooLarge {
            n: filter.n,
            max: MAX_ENUM_ORDER,
        });
    }
    let cap = match filter.degree {
        DegreeFilter::Subcubic => 3,
        DegreeFilter::Regular(d) => d,
    };
    let empty = Graph::empty(filter.n);
    let root_form = canonical_form(&empty).expect("n ≤ 12");
    let mut found: Vec<(String, Graph)> = Vec::new();
    grow(&empty, &root_form, cap, filter, &mut found);
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, g)| g).collect())
}

/// Depth-first canonical-deletion search below `g` (whose canonical form
/// is `form`). Each isomorphism class on `filter.n` vertices with maximum
/// degree ≤ `cap` is reached exactly once.
fn grow(g: &Graph, form: &str, cap: usize, filter: EnumFilter, found: &mut Vec<(String, Graph)>) {
    if let Some(representative) = emit(g, filter) {
        found.push((form.to_owned(), representative));
    }
    let mut child_forms: HashSet<String> = HashSet::new();
    for u in 0..g.n() {
        if g.degree(u) >= cap {
            continue;
        }
        for v in u + 1..g.n() {
            if g.degree(v) >= cap || g.has_edge(u, v) {
                continue;
            }
            let child = g.with_edge(u, v);
            let (child_form, child_canon, perm) = canon(&child).expect("n ≤ 12");
            if !child_forms.insert(child_form.clone()) {
                continue;
            }
            // The canonically last edge of the child, pulled back to the
            // child's own labels.
            let &(a, b) = child_canon.edges().last().expect("child has an edge");
            let mut inverse = vec![0; child.n()];
            for (old, &new) in perm.iter().enumerate() {
                inverse[new] = old;
            }
            let last_edge = (inverse[a], inverse[b]);
            let accepted = if last_edge == (u, v) || last_edge == (v, u) {
                true
            } else {
                let shrunk = child.remove_edges(&[last_edge]).expect("edge exists");
                canonical_form(&shrunk).expect("n ≤ 12") == form
            };
            if accepted {
                grow(&child, &child_form, cap, filter, found);
            }
        }
    }
}

/// The canonical representative of `g` if it matches the filter.
fn emit(g: &Graph, filter: EnumFilter) -> Option<Graph> {
    let degree_ok = match filter.degree {
        DegreeFilter::Subcubic => true,
        DegreeFilter::Regular(d) => (0..g.n()).all(|v| g.degree(v) == d),
    };
    if !degree_ok || (filter.connected && !g.is_connected()) {
        return None;
    }
    if filter.twin_free && !twin_report(g).is_twin_free() {
        return None;
    }
    Some(canon(g).expect("n ≤ 12").1)
}

/// Solves every graph and records the outcome against `bound`.
///
/// Graphs beyond the canonicalization ceiling are recorded under their raw
/// graph6 form. Propagates solver budget errors.
pub fn sweep_graphs(
    graphs: &[Graph],
    bound: SweepBound,
    budget: SolveBudget,
) -> Result<SweepReport, EnumError> {
    let records = graphs
        .par_iter()
        .map(|g| {
            let solved = ld_number_exact(g, budget)?;
            let twins = twin_report(g);
            Ok(SweepRecord {
                graph6: canonical_form(g).unwrap_or_else(|_| to_graph6(g)),
                n: g.n(),
                m: g.edge_count(),
                open_twin_pairs: twins.open_pairs.len(),
                closed_twin_pairs: twins.closed_pairs.len(),
                gamma: solved.value,
                witness: solved.witness,
            })
        })
        .collect::<Result<Vec<_>, EnumError>>()?;
    Ok(SweepReport { bound, records })
}

/// Enumerates per `filter` and sweeps the result against `bound`.
pub fn sweep_conjecture(
    filter: EnumFilter,
    bound: SweepBound,
    budget: SolveBudget,
) -> Result<SweepReport, EnumError> {
    let graphs = enumerate_graphs(filter)?;
    sweep_graphs(&graphs, bound, budget)
}

/// Exact canonical labeling by individualize-and-refine: returns the
/// minimal graph6 string over all refinement-discrete labelings, the
/// relabeled graph, and the permutation achieving it.
fn canon(g: &Graph) -> Result<(String, Graph, Vec<usize>), EnumError> {
    if g.n() > MAX_CANON_ORDER {
        return Err(EnumError::OrderTooLarge {
            n: g.n(),
            max: MAX_CANON_ORDER,
        });
    }
    let mut cells = vec![(0..g.n()).collect::<Vec<_>>()];
    if g.n() == 0 {
        cells.clear();
    }
    refine(g, &mut cells);
    let mut search = CanonSearch {
        g,
        best: None,
        first_leaf_of: HashMap::new(),
        automorphisms: Vec::new(),
    };
    search.explore(cells, &mut Vec::new());
    let (string, perm) = search.best.expect("at least one discrete labeling");
    let relabeled = apply(g, &perm);
    Ok((string, relabeled, perm))
}

fn apply(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::from_edges(g.n(), &edges).expect("permutation preserves validity")
}

/// Splits cells until every cell's vertices have identical neighbor
/// counts into every cell (an equitable partition). Deterministic: new
/// cells are ordered by their count signatures.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut cell_of = vec![0usize; g.n()];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let mut split: Option<(usize, Vec<Vec<usize>>)> = None;
        for (ci, cell) in cells.iter().enumerate() {
            if cell.len() <= 1 {
                continue;
            }
            let mut groups: BTreeMap<Vec<(usize, usize)>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                for &w in g.open_neighbors(v) {
                    *counts.entry(cell_of[w]).or_insert(0) += 1;
                }
                groups
                    .entry(counts.into_iter().collect())
                    .or_default()
                    .push(v);
            }
            if groups.len() > 1 {
                split = Some((ci, groups.into_values().collect()));
                break;
            }
        }
        match split {
            Some((ci, replacement)) => {
                cells.splice(ci..=ci, replacement);
            }
            None => return,
        }
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    best: Option<(String, Vec<usize>)>,
    /// First permutation reaching each leaf string; bounded, used only to
    /// discover automorphisms.
    first_leaf_of: HashMap<String, Vec<usize>>,
    /// Discovered automorphism generators (old labels → old labels);
    /// bounded, used only to prune equivalent branches.
    automorphisms: Vec<Vec<usize>>,
}

const MAX_STORED_LEAVES: usize = 4096;
const MAX_STORED_AUTOMORPHISMS: usize = 64;

impl CanonSearch<'_> {
    fn explore(&mut self, cells: Vec<Vec<usize>>, fixed: &mut Vec<usize>) {
        if let Some(target) = cells.iter().position(|c| c.len() > 1) {
            let mut candidates = cells[target].clone();
            candidates.sort_unstable();
            let mut tried: Vec<usize> = Vec::new();
            for v in candidates {
                if self.in_pruned_orbit(&tried, fixed, v) {
                    continue;
                }
                tried.push(v);
                let mut child = cells.clone();
                let rest: Vec<usize> = child[target].iter().copied().filter(|&w| w != v).collect();
                child.splice(target..=target, [vec![v], rest]);
                refine(self.g, &mut child);
                fixed.push(v);
                self.explore(child, fixed);
                fixed.pop();
            }
            return;
        }
        let mut perm = vec![0usize; self.g.n()];
        for (position, cell) in cells.iter().enumerate() {
            perm[cell[0]] = position;
        }
        let string = to_graph6(&apply(self.g, &perm));
        if let Some(first) = self.first_leaf_of.get(&string) {
            if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                let mut first_inverse = vec![0usize; perm.len()];
                for (old, &new) in first.iter().enumerate() {
                    first_inverse[new] = old;
                }
                let auto: Vec<usize> = perm.iter().map(|&new| first_inverse[new]).collect();
                if auto.iter().enumerate().any(|(i, &pi)| pi != i) {
                    self.automorphisms.push(auto);
                }
            }
        } else if self.first_leaf_of.len() < MAX_STORED_LEAVES {
            self.first_leaf_of.insert(string.clone(), perm.clone());
        }
        if self.best.as_ref().is_none_or(|(b, _)| string < *b) {
            self.best = Some((string, perm));
        }
    }

    /// True if a discovered automorphism fixing everything individualized
    /// so far maps an already-tried candidate to `v` — branching on `v`
    /// would retrace an explored subtree.
    fn in_pruned_orbit(&self, tried: &[usize], fixed: &[usize], v: usize) -> bool {
        if tried.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let mut orbit: HashSet<usize> = tried.iter().copied().collect();
        loop {
            let mut grew = false;
            for auto in &self.automorphisms {
                if fixed.iter().any(|&f| auto[f] != f) {
                    continue;
                }
                for w in orbit.clone() {
                    if orbit.insert(auto[w]) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return orbit.contains(&v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::subcubic_lower_bound;

    fn subcubic(n: usize, connected: bool, twin_free: bool) -> EnumFilter {
        EnumFilter {
            n,
            degree: DegreeFilter::Subcubic,
            connected,
            twin_free,
        }
    }

    fn cubic(n: usize) -> EnumFilter {
        EnumFilter {
            n,
            degree: DegreeFilter::Regular(3),
            connected: true,
            twin_free: false,
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let base = canonical_form(&p4).unwrap();
        // All 24 labelings of a path on four vertices.
        let perms = permutations(4);
        for perm in perms {
            let relabeled = apply(&p4, &perm);
            assert_eq!(canonical_form(&relabeled).unwrap(), base);
        }
    }

    #[test]
    fn non_isomorphic_graphs_get_distinct_forms() {
        let k33 = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_ne!(
            canonical_form(&k33).unwrap(),
            canonical_form(&prism).unwrap()
        );
    }

    #[test]
    fn canonical_relabeling_applies_its_permutation() {
        let g = Graph::from_edges(5, &[(4, 2), (2, 0), (0, 3), (3, 1)]).unwrap();
        let (canonical, perm) = canonical_relabeling(&g).unwrap();
        assert_eq!(apply(&g, &perm), canonical);
        assert_eq!(to_graph6(&canonical), canonical_form(&g).unwrap());
    }

    #[test]
    fn order_ceilings_are_enforced() {
        let p17 = Graph::from_edges(17, &(0..16).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        assert_eq!(
            canonical_form(&p17),
            Err(EnumError::OrderTooLarge { n: 17, max: 16 })
        );
        let p16 = Graph::from_edges(16, &(0..15).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        assert!(canonical_form(&p16).is_ok());
        assert_eq!(
            enumerate_graphs(subcubic(13, true, false)),
            Err(EnumError::OrderTooLarge { n: 13, max: 12 })
        );
    }

    /// Every labeled graph on `n` vertices, filtered and deduplicated by
    /// canonical form — an independent oracle for the generator.
    fn brute_force_count(n: usize, filter: EnumFilter) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut forms = HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if !g.is_subcubic() {
                continue;
            }
            if emit(&g, filter).is_some() {
                forms.insert(canonical_form(&g).unwrap());
            }
        }
        forms.len()
    }

    #[test]
    fn generator_matches_brute_force_on_small_orders() {
        for n in 1..=6 {
            for (connected, twin_free) in [(false, false), (true, false), (true, true)] {
                let filter = subcubic(n, connected, twin_free);
                assert_eq!(
                    enumerate_graphs(filter).unwrap().len(),
                    brute_force_count(n, filter),
                    "subcubic n={n} connected={connected} twin_free={twin_free}"
                );
            }
            let filter = cubic(n);
            assert_eq!(
                enumerate_graphs(filter).unwrap().len(),
                brute_force_count(n, filter),
                "cubic n={n}"
            );
        }
    }

    #[test]
    fn all_four_vertex_graphs_are_subcubic() {
        // On four vertices the degree cap is vacuous, so the generator
        // must produce all 11 graphs; 6 are connected, and P₄ is the only
        // connected twin-free one.
        assert_eq!(
            enumerate_graphs(subcubic(4, false, false)).unwrap().len(),
            11
        );
        assert_eq!(enumerate_graphs(subcubic(4, true, false)).unwrap().len(), 6);
        let twin_free = enumerate_graphs(subcubic(4, true, true)).unwrap();
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(twin_free.len(), 1);
        assert_eq!(canonical_form(&twin_free[0]), canonical_form(&p4));
    }

    #[test]
    fn cubic_counts_match_the_literature() {
        assert_eq!(enumerate_graphs(cubic(4)).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(cubic(6)).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(cubic(8)).unwrap().len(), 5);
        let ten = enumerate_graphs(cubic(10)).unwrap();
        assert_eq!(ten.len(), 19);
        assert!(ten.iter().all(|g| g.is_cubic() && g.is_connected()));
    }

    #[test]
    fn output_is_sorted_by_canonical_form_and_canonically_labeled() {
        let graphs = enumerate_graphs(subcubic(5, true, false)).unwrap();
        let forms: Vec<String> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        let mut sorted = forms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(forms, sorted, "sorted and duplicate-free");
        for g in &graphs {
            assert_eq!(
                &canonical_relabeling(g).unwrap().0,
                g,
                "emitted in canonical labels"
            );
        }
    }

    #[test]
    fn sweep_finds_k33_as_the_only_small_cubic_outlier() {
        let report =
            sweep_conjecture(cubic(6), SweepBound::HalfOrder, SolveBudget::default()).unwrap();
        assert_eq!(report.count(), 2);
        let violations = report.violations();
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].gamma, 4);
        assert_eq!(violations[0].open_twin_pairs, 6, "K₃,₃'s two sides");
        // The prism attains the bound exactly and is twin-free.
        let tight = report.tight();
        assert_eq!(tight.len(), 1);
        assert!(tight[0].is_twin_free());
        assert_eq!(tight[0].gamma, 3);
    }

    #[test]
    fn twin_free_sweeps_respect_bound_and_slater() {
        for n in [5, 6, 7] {
            let report = sweep_conjecture(
                subcubic(n, true, true),
                SweepBound::HalfOrder,
                SolveBudget::default(),
            )
            .unwrap();
            assert!(report.violations().is_empty(), "n={n}");
            for record in &report.records {
                let g = crate::graph6::parse_graph6(&record.graph6).unwrap();
                assert!(
                    record.gamma >= subcubic_lower_bound(&g).unwrap(),
                    "Slater bound"
                );
            }
        }
    }

    #[test]
    fn sweeps_are_deterministic() {
        let filter = subcubic(6, true, false);
        let a = sweep_conjecture(filter, SweepBound::HalfOrder, SolveBudget::default()).unwrap();
        let b = sweep_conjecture(filter, SweepBound::HalfOrder, SolveBudget::default()).unwrap();
        assert_eq!(a, b);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for shorter in permutations(n - 1) {
            for slot in 0..=shorter.len() {
                let mut perm = shorter.clone();
                perm.insert(slot, n - 1);
                out.push(perm);
            }
        }
        out
    }
}

//! Twin detection, leaf/support identification, triangle and 4-cycle
//! listing, and the structural facts that hold in twin-free subcubic graphs.
//!
//! Two vertices are *open twins* when `N(u) = N(v)` (forcing them
//! non-adjacent) and *closed twins* when `N[u] = N[v]` (forcing them
//! adjacent).  A graph is *twin-free* when it has neither kind.  In a
//! twin-free subcubic graph three structural facts hold: no two triangles
//! share an edge, every 4-cycle is induced, and — in the triangle-free case —
//! two vertices lying on a common 4-cycle have no common neighbor outside it.
//! [`check_structure_lemmas`] verifies all three exhaustively.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Complete listing of twin pairs, each as `(u, v, shared_degree)` with
/// `u < v`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwinReport {
    /// Pairs with equal open neighborhoods (never adjacent).
    pub open_pairs: Vec<(usize, usize, usize)>,
    /// Pairs with equal closed neighborhoods (always adjacent).
    pub closed_pairs: Vec<(usize, usize, usize)>,
}

impl TwinReport {
    /// True iff the graph has no twins of either kind.
    pub fn is_twin_free(&self) -> bool {
        self.open_pairs.is_empty() && self.closed_pairs.is_empty()
    }
}

/// A counterexample to one of the structural facts (none exist for
/// twin-free subcubic graphs; a non-empty list indicates a checker or
/// hypothesis bug worth surfacing loudly).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureViolation {
    /// Two distinct triangles share the edge.
    TrianglesShareEdge {
        first: (usize, usize, usize),
        second: (usize, usize, usize),
        edge: (usize, usize),
    },
    /// A 4-cycle carries a chord.
    ChordedFourCycle {
        cycle: (usize, usize, usize, usize),
        chord: (usize, usize),
    },
    /// Two diagonal vertices of a 4-cycle have a common neighbor outside it
    /// (triangle-free graphs only).
    StrayCommonNeighbor {
        cycle: (usize, usize, usize, usize),
        pair: (usize, usize),
        outside: usize,
    },
}

impl std::fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureViolation::TrianglesShareEdge { first, second, edge } => write!(
                f,
                "triangles {first:?} and {second:?} share edge ({},{})",
                edge.0, edge.1
            ),
            StructureViolation::ChordedFourCycle { cycle, chord } => {
                write!(f, "4-cycle {cycle:?} has chord ({},{})", chord.0, chord.1)
            }
            StructureViolation::StrayCommonNeighbor { cycle, pair, outside } => write!(
                f,
                "diagonal pair ({},{}) of 4-cycle {cycle:?} has common neighbor {outside} outside it",
                pair.0, pair.1
            ),
        }
    }
}

/// Outcome of [`check_structure_lemmas`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// Number of triangles examined.
    pub triangle_count: usize,
    /// Number of 4-cycles examined.
    pub four_cycle_count: usize,
    /// Whether the common-neighbor fact was in scope (it requires
    /// triangle-freeness; the other two facts are always checked).
    pub common_neighbor_checked: bool,
    /// All violations found; empty means every fact held.
    pub violations: Vec<StructureViolation>,
}

impl StructureReport {
    /// True iff no violations were found.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Error raised when the structural facts are out of scope.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    /// The graph is not subcubic or not twin-free.
    #[error("structure facts require a twin-free subcubic graph: {reason}")]
    HypothesisViolated { reason: String },
}

/// Lists every twin pair of the graph.
pub fn twin_report(g: &Graph) -> TwinReport {
    let mut report = TwinReport::default();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.degree(u) != g.degree(v) {
                continue;
            }
            if g.open_neighbors(u) == g.open_neighbors(v) {
                report.open_pairs.push((u, v, g.degree(u)));
            } else if g.has_edge(u, v) && closed_equal(g, u, v) {
                report.closed_pairs.push((u, v, g.degree(u)));
            }
        }
    }
    report
}

fn closed_equal(g: &Graph, u: usize, v: usize) -> bool {
    let rest = |a: usize, b: usize| -> Vec<usize> {
        g.open_neighbors(a)
            .iter()
            .copied()
            .filter(|&w| w != b)
            .collect()
    };
    rest(u, v) == rest(v, u)
}

/// Open twin pairs whose shared degree is exactly `d`.
pub fn open_twins_of_degree(g: &Graph, d: usize) -> Vec<(usize, usize)> {
    twin_report(g)
        .open_pairs
        .into_iter()
        .filter(|&(_, _, deg)| deg == d)
        .map(|(u, v, _)| (u, v))
        .collect()
}

/// The leaves (degree-1 vertices) and supports (vertices adjacent to a
/// leaf) of the graph.
pub fn leaves_and_supports(g: &Graph) -> (VertexSet, VertexSet) {
    let leaves: VertexSet = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    let supports: VertexSet = leaves.iter().map(|v| g.open_neighbors(v)[0]).collect();
    (leaves, supports)
}

/// All triangles, each once as an ascending triple, sorted.
pub fn triangles(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for &w in g.open_neighbors(v) {
            if w > v && g.has_edge(u, w) {
                out.push((u, v, w));
            }
        }
    }
    out.sort_unstable();
    out
}

/// All 4-cycles (chords allowed), each once in canonical rotation: minimum
/// vertex first, its smaller cycle-neighbor second.  Sorted.
pub fn four_cycles(g: &Graph) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for &b in g.open_neighbors(a) {
            if b < a {
                continue;
            }
            for &c in g.open_neighbors(b) {
                if c <= a || c == b {
                    continue;
                }
                for &d in g.open_neighbors(c) {
                    // b < d makes b the canonical second vertex.
                    if d > b && d != a && g.has_edge(d, a) {
                        out.push((a, b, c, d));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Checks the three structural facts over every triangle and 4-cycle.
///
/// Errors unless the graph is subcubic and twin-free — outside that
/// hypothesis the facts simply do not hold.  Within it, any reported
/// violation would be a genuine counterexample.
pub fn check_structure_lemmas(g: &Graph) -> Result<StructureReport, StructureError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(StructureError::HypothesisViolated {
            reason: format!("vertex {v} has degree {}", g.degree(v)),
        });
    }
    let twins = twin_report(g);
    if let Some(&(u, v, _)) = twins.open_pairs.first() {
        return Err(StructureError::HypothesisViolated {
            reason: format!("vertices {u} and {v} are open twins"),
        });
    }
    if let Some(&(u, v, _)) = twins.closed_pairs.first() {
        return Err(StructureError::HypothesisViolated {
            reason: format!("vertices {u} and {v} are closed twins"),
        });
    }

    let tris = triangles(g);
    let cycles = four_cycles(g);
    let mut violations = Vec::new();

    // No two triangles share an edge.
    for (i, &t1) in tris.iter().enumerate() {
        for &t2 in &tris[i + 1..] {
            if let Some(edge) = shared_edge(t1, t2) {
                violations.push(StructureViolation::TrianglesShareEdge {
                    first: t1,
                    second: t2,
                    edge,
                });
            }
        }
    }

    // Every 4-cycle is induced.
    for &(a, b, c, d) in &cycles {
        for chord in [(a, c), (b, d)] {
            if g.has_edge(chord.0, chord.1) {
                violations.push(StructureViolation::ChordedFourCycle {
                    cycle: (a, b, c, d),
                    chord,
                });
            }
        }
    }

    // Triangle-free only: diagonal vertices of a 4-cycle have no common
    // neighbor outside it.
    let common_neighbor_checked = tris.is_empty();
    if common_neighbor_checked {
        for &(a, b, c, d) in &cycles {
            for (pair, inside) in [((a, c), [b, d]), ((b, d), [a, c])] {
                for &w in g.open_neighbors(pair.0) {
                    if !inside.contains(&w) && g.has_edge(w, pair.1) {
                        violations.push(StructureViolation::StrayCommonNeighbor {
                            cycle: (a, b, c, d),
                            pair,
                            outside: w,
                        });
                    }
                }
            }
        }
    }

    Ok(StructureReport {
        triangle_count: tris.len(),
        four_cycle_count: cycles.len(),
        common_neighbor_checked,
        violations,
    })
}

fn shared_edge(t1: (usize, usize, usize), t2: (usize, usize, usize)) -> Option<(usize, usize)> {
    let edges = |(a, b, c): (usize, usize, usize)| [(a, b), (a, c), (b, c)];
    edges(t1).into_iter().find(|e| edges(t2).contains(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn prism() -> Graph {
        Graph::from_edges(
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
        .unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edges(
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
        .unwrap()
    }

    /// Ten-vertex cubic graph containing both twin kinds: a 10-cycle with
    /// chords 0-3, 1-8, 2-9, 4-6, 5-7.
    fn tight_cubic_10() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..10).map(|v| (v, (v + 1) % 10)).collect();
        edges.extend([(0, 3), (1, 8), (2, 9), (4, 6), (5, 7)]);
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn c4_has_two_open_pairs() {
        let report = twin_report(&c4());
        assert_eq!(report.open_pairs, vec![(0, 2, 2), (1, 3, 2)]);
        assert!(report.closed_pairs.is_empty());
        assert!(!report.is_twin_free());
    }

    #[test]
    fn k4_pairs_are_all_closed() {
        let report = twin_report(&k4());
        assert!(report.open_pairs.is_empty());
        assert_eq!(report.closed_pairs.len(), 6);
        assert!(report.closed_pairs.iter().all(|&(_, _, d)| d == 3));
    }

    #[test]
    fn tight_cubic_has_both_kinds() {
        let report = twin_report(&tight_cubic_10());
        assert!(report.open_pairs.contains(&(0, 2, 3)));
        assert!(report.closed_pairs.contains(&(5, 6, 3)));
    }

    #[test]
    fn p4_is_twin_free() {
        assert!(twin_report(&p4()).is_twin_free());
        assert!(open_twins_of_degree(&p4(), 1).is_empty());
        assert!(open_twins_of_degree(&p4(), 2).is_empty());
        assert!(open_twins_of_degree(&p4(), 3).is_empty());
    }

    #[test]
    fn star_leaves_are_degree_one_twins() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(open_twins_of_degree(&star, 1), vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn k33_sides_are_degree_three_twins() {
        assert_eq!(
            open_twins_of_degree(&k33(), 3),
            vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
        );
    }

    #[test]
    fn twin_relations_are_symmetric_and_transitive() {
        for g in [c4(), k4(), k33(), tight_cubic_10()] {
            let report = twin_report(&g);
            for pairs in [&report.open_pairs, &report.closed_pairs] {
                for &(a, b, _) in pairs {
                    for &(c, d, _) in pairs {
                        // Transitivity: a~b and b~d with a<d forces a~d.
                        if b == c && a != d {
                            let (x, y) = (a.min(d), a.max(d));
                            assert!(
                                pairs.iter().any(|&(p, q, _)| (p, q) == (x, y)),
                                "missing transitive pair ({x},{y}) in {g:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn at_most_one_degree_three_twin_outside_k33() {
        for g in [tight_cubic_10(), prism(), c4()] {
            let pairs = open_twins_of_degree(&g, 3);
            for v in 0..g.n() {
                let partners = pairs.iter().filter(|&&(a, b)| a == v || b == v).count();
                assert!(partners <= 1, "vertex {v} has {partners} twins in {g:?}");
            }
        }
    }

    #[test]
    fn leaves_and_supports_of_p4() {
        let (leaves, supports) = leaves_and_supports(&p4());
        assert_eq!(leaves, VertexSet::from([0, 3]));
        assert_eq!(supports, VertexSet::from([1, 2]));
    }

    #[test]
    fn cycles_have_no_leaves() {
        let (leaves, supports) = leaves_and_supports(&c4());
        assert!(leaves.is_empty());
        assert!(supports.is_empty());
    }

    #[test]
    fn triangle_listing() {
        assert_eq!(
            triangles(&k4()),
            vec![(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        );
        assert!(triangles(&c4()).is_empty());
        assert!(triangles(&p4()).is_empty());
        assert_eq!(triangles(&prism()), vec![(0, 1, 2), (3, 4, 5)]);
    }

    #[test]
    fn four_cycle_listing() {
        assert_eq!(four_cycles(&c4()), vec![(0, 1, 2, 3)]);
        assert!(four_cycles(&p4()).is_empty());
        assert_eq!(
            four_cycles(&k4()),
            vec![(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)]
        );
    }

    #[test]
    fn cube_has_six_face_cycles() {
        let cube = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        assert_eq!(four_cycles(&cube).len(), 6);
        let report = check_structure_lemmas(&cube).unwrap();
        assert!(report.passed());
        assert!(report.common_neighbor_checked);
        assert_eq!(report.four_cycle_count, 6);
    }

    #[test]
    fn prism_passes_structure_checks() {
        let report = check_structure_lemmas(&prism()).unwrap();
        assert!(report.passed());
        // The common-neighbor fact needs triangle-freeness, so the prism
        // skips it.
        assert!(!report.common_neighbor_checked);
        assert_eq!(report.triangle_count, 2);
    }

    #[test]
    fn structure_checks_reject_twins_and_high_degree() {
        assert!(matches!(
            check_structure_lemmas(&k4()),
            Err(StructureError::HypothesisViolated { .. })
        ));
        assert!(matches!(
            check_structure_lemmas(&k33()),
            Err(StructureError::HypothesisViolated { .. })
        ));
        let k5: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let k5 = Graph::from_edges(5, &k5).unwrap();
        assert!(matches!(
            check_structure_lemmas(&k5),
            Err(StructureError::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn twin_free_paths_pass_vacuously() {
        let report = check_structure_lemmas(&p4()).unwrap();
        assert!(report.passed());
        assert_eq!((report.triangle_count, report.four_cycle_count), (0, 0));
        assert!(report.common_neighbor_checked);
    }
}

//! Immutable simple undirected graphs and compact vertex sets.
//!
//! Vertices are integer indices `0..n`.  Editing operations
//! ([`Graph::remove_edges`], [`Graph::remove_vertices`]) return new values so
//! that recursive algorithms can hold several intermediate graphs at once;
//! vertex removal compacts the indices and returns a [`VertexMapping`] for
//! translating sets between the old and new index spaces.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Errors raised by graph constructors and editors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// A vertex index was `>= n`.
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    /// An edge `(v, v)` was supplied.
    #[error("loop edge at vertex {0} is not allowed")]
    LoopEdge(usize),
    /// An edge scheduled for removal does not exist.
    #[error("edge ({0}, {1}) is not present")]
    EdgeNotPresent(usize, usize),
}

// ---------------------------------------------------------------------------
// VertexSet
// ---------------------------------------------------------------------------

/// A compact set of vertex indices.
///
/// Backed by a bitset; the internal vector is kept normalized (no trailing
/// zero words) so that structural equality and hashing coincide with set
/// equality regardless of how the set was built.
///
/// `Ord` compares the *sorted element sequences* lexicographically, so
/// `{0,2} < {0,3} < {1}`.  This is the order used for "lexicographically
/// smallest witness" contracts throughout the crate.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty set.
    pub fn new() -> Self {
        VertexSet { words: Vec::new() }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True iff the set has no elements.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Membership test.
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1u64 << (v % 64)) != 0)
    }

    /// Inserts `v`; returns true if it was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        let word = v / 64;
        if word >= self.words.len() {
            self.words.resize(word + 1, 0);
        }
        let bit = 1u64 << (v % 64);
        let fresh = self.words[word] & bit == 0;
        self.words[word] |= bit;
        fresh
    }

    /// Removes `v`; returns true if it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        let word = v / 64;
        if word >= self.words.len() {
            return false;
        }
        let bit = 1u64 << (v % 64);
        let present = self.words[word] & bit != 0;
        self.words[word] &= !bit;
        self.normalize();
        present
    }

    /// Iterates the elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    /// The smallest element, if any.
    ///
    /// Named `first` rather than `min` so calls do not resolve to
    /// [`Ord::min`], whose by-value receiver wins method lookup.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Set union.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut words = vec![0u64; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0);
        }
        let mut s = VertexSet { words };
        s.normalize();
        s
    }

    /// Set intersection.
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut words = vec![0u64; self.words.len().min(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words[i] & other.words[i];
        }
        let mut s = VertexSet { words };
        s.normalize();
        s
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words.clone();
        for (i, w) in words.iter_mut().enumerate() {
            *w &= !other.words.get(i).copied().unwrap_or(0);
        }
        let mut s = VertexSet { words };
        s.normalize();
        s
    }

    /// True iff every element of `self` is in `other`.
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Returns `self ∪ {v}` without mutating `self`.
    pub fn with(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    /// Returns `self \ {v}` without mutating `self`.
    pub fn without(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// ---------------------------------------------------------------------------
// VertexMapping
// ---------------------------------------------------------------------------

/// Injective partial map from old vertex indices to new ones, produced by
/// [`Graph::remove_vertices`].
///
/// The surviving vertices are compacted preserving their relative order, so
/// the map is monotone on its domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMapping {
    forward: Vec<Option<usize>>,
    inverse: Vec<usize>,
    removed: Vec<usize>,
}

impl VertexMapping {
    /// New index of the old vertex `old`, or `None` if it was removed.
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.forward.get(old).copied().flatten()
    }

    /// Old index of the new vertex `new`.
    ///
    /// Panics if `new` is out of range for the reduced graph.
    pub fn to_old(&self, new: usize) -> usize {
        self.inverse[new]
    }

    /// The removed old indices, in increasing order.
    pub fn removed(&self) -> &[usize] {
        &self.removed
    }

    /// Order of the original graph.
    pub fn old_n(&self) -> usize {
        self.forward.len()
    }

    /// Order of the reduced graph.
    pub fn new_n(&self) -> usize {
        self.inverse.len()
    }

    /// Translates a set over the reduced graph back to old indices.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_old(v)).collect()
    }

    /// Translates a set over the original graph to new indices, dropping
    /// removed vertices.
    pub fn project(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.to_new(v)).collect()
    }
}

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// Immutable simple undirected graph with sorted adjacency lists.
///
/// Invariants (maintained by every constructor and editor):
/// adjacency is symmetric, loop-free, and each list is strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list; duplicate edges (in either
    /// orientation) are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::IndexOutOfRange { index: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Open neighborhood `N(v)` as a sorted slice.
    pub fn open_neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s: VertexSet = self.adj[v].iter().copied().collect();
        s.insert(v);
        s
    }

    /// Adjacency test.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// True iff the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff every degree is at most 3.
    pub fn is_subcubic(&self) -> bool {
        self.adj.iter().all(|list| list.len() <= 3)
    }

    /// True iff the graph is 3-regular.
    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|list| list.len() == 3)
    }

    /// Returns the graph with the given edges removed.
    pub fn remove_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= g.n() {
                    return Err(GraphError::IndexOutOfRange { index: w, n: g.n() });
                }
            }
            let (Ok(iu), Ok(iv)) = (g.adj[u].binary_search(&v), g.adj[v].binary_search(&u)) else {
                return Err(GraphError::EdgeNotPresent(u, v));
            };
            g.adj[u].remove(iu);
            g.adj[v].remove(iv);
            g.m -= 1;
        }
        Ok(g)
    }

    /// Removes the given vertices (and their incident edges), compacting the
    /// surviving indices while preserving their relative order.
    ///
    /// All members of `vs` must be `< n`.
    pub fn remove_vertices(&self, vs: &VertexSet) -> (Graph, VertexMapping) {
        for v in vs.iter() {
            assert!(v < self.n(), "remove_vertices: vertex {v} out of range");
        }
        let mut forward = vec![None; self.n()];
        let mut inverse = Vec::new();
        for (v, slot) in forward.iter_mut().enumerate() {
            if !vs.contains(v) {
                *slot = Some(inverse.len());
                inverse.push(v);
            }
        }
        let mut adj = Vec::with_capacity(inverse.len());
        let mut m = 0;
        for &old in &inverse {
            let list: Vec<usize> = self.adj[old].iter().filter_map(|&w| forward[w]).collect();
            m += list.len();
            adj.push(list);
        }
        let mapping = VertexMapping {
            forward,
            inverse,
            removed: vs.iter().collect(),
        };
        (Graph { adj, m: m / 2 }, mapping)
    }

    /// Connected components as sorted vertex sets, ordered by their minimum
    /// element.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// DOT export; vertices in `witness` are drawn filled.
    pub fn to_dot(&self, witness: Option<&VertexSet>) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.n() {
            if witness.is_some_and(|w| w.contains(v)) {
                out.push_str(&format!("  {v} [style=filled];\n"));
            } else {
                out.push_str(&format!("  {v};\n"));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Returns the graph with edge `(u, v)` added (used by the enumerator).
    pub(crate) fn with_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u != v && u < self.n() && v < self.n() && !self.has_edge(u, v));
        let mut g = self.clone();
        let iu = g.adj[u].binary_search(&v).unwrap_err();
        g.adj[u].insert(iu, v);
        let iv = g.adj[v].binary_search(&u).unwrap_err();
        g.adj[v].insert(iv, u);
        g.m += 1;
        g
    }

    /// Checks the representation invariants, panicking with a description on
    /// any violation.  Test harness aid.
    pub fn validate(&self) {
        let mut m = 0;
        for (v, list) in self.adj.iter().enumerate() {
            m += list.len();
            assert!(
                list.windows(2).all(|w| w[0] < w[1]),
                "adjacency list of {v} is not strictly increasing: {list:?}"
            );
            for &w in list {
                assert!(w < self.n(), "neighbor {w} of {v} out of range");
                assert!(w != v, "loop at {v}");
                assert!(
                    self.adj[w].binary_search(&v).is_ok(),
                    "edge ({v}, {w}) is not symmetric"
                );
            }
        }
        assert_eq!(m % 2, 0, "odd total adjacency length");
        assert_eq!(self.m, m / 2, "cached edge count {} != {}", self.m, m / 2);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n(),
            self.m,
            self.edges()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn from_edges_builds_p4() {
        let g = p4();
        g.validate();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.open_neighbors(1), &[0, 2]);
        assert_eq!(g.degree(0), 1);
    }

    #[test]
    fn from_edges_dedups_both_orientations() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 0)]).unwrap();
        g.validate();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn from_edges_rejects_out_of_range() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::IndexOutOfRange { index: 2, n: 2 })
        );
    }

    #[test]
    fn from_edges_rejects_loops() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::LoopEdge(1))
        );
    }

    #[test]
    fn remove_edges_splits_p4() {
        let g = p4().remove_edges(&[(1, 2)]).unwrap();
        g.validate();
        assert_eq!(g.edge_count(), 2);
        let comps = g.components();
        assert_eq!(
            comps,
            vec![VertexSet::from([0, 1]), VertexSet::from([2, 3])]
        );
    }

    #[test]
    fn remove_edges_k4() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let g = k4.remove_edges(&[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn remove_edges_missing_edge() {
        assert_eq!(
            p4().remove_edges(&[(0, 2)]),
            Err(GraphError::EdgeNotPresent(0, 2))
        );
    }

    #[test]
    fn remove_vertices_compacts() {
        let (g, map) = p4().remove_vertices(&VertexSet::from([3]));
        g.validate();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(map.to_new(0), Some(0));
        assert_eq!(map.to_new(2), Some(2));
        assert_eq!(map.to_new(3), None);
        assert_eq!(map.removed(), &[3]);
    }

    #[test]
    fn remove_vertices_k4_to_k2() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (g, map) = k4.remove_vertices(&VertexSet::from([0, 1]));
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        assert_eq!(map.to_old(0), 2);
        assert_eq!(map.lift(&VertexSet::from([0, 1])), VertexSet::from([2, 3]));
    }

    #[test]
    fn remove_vertices_empty_is_identity() {
        let (g, map) = p4().remove_vertices(&VertexSet::new());
        assert_eq!(g, p4());
        assert_eq!(map.to_new(2), Some(2));
        assert!(map.removed().is_empty());
    }

    #[test]
    fn components_ordered_by_minimum() {
        let g = Graph::from_edges(5, &[(3, 4), (0, 2)]).unwrap();
        assert_eq!(
            g.components(),
            vec![
                VertexSet::from([0, 2]),
                VertexSet::from([1]),
                VertexSet::from([3, 4])
            ]
        );
    }

    #[test]
    fn components_of_empty_graph() {
        let g = Graph::empty(3);
        assert_eq!(g.components().len(), 3);
        assert!(!g.is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn degree_predicates() {
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
        assert!(prism.is_cubic());
        assert!(prism.is_subcubic());
        assert!(p4().is_subcubic());
        assert!(!p4().is_cubic());
        let k5: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        assert!(!Graph::from_edges(5, &k5).unwrap().is_subcubic());
    }

    #[test]
    fn mapping_round_trips_sets() {
        let (_, map) = p4().remove_vertices(&VertexSet::from([1]));
        let s = VertexSet::from([0, 2]);
        assert_eq!(map.lift(&map.project(&s)), s);
        assert_eq!(map.project(&VertexSet::from([1, 3])), VertexSet::from([2]));
    }

    #[test]
    fn vertex_set_ordering_is_lexicographic_on_sequences() {
        let a = VertexSet::from([0, 2]);
        let b = VertexSet::from([0, 3]);
        let c = VertexSet::from([1]);
        assert!(a < b);
        assert!(b < c);
        assert!(VertexSet::new() < a);
    }

    #[test]
    fn vertex_set_operations() {
        let a = VertexSet::from([0, 2, 5]);
        let b = VertexSet::from([2, 3]);
        assert_eq!(a.union(&b), VertexSet::from([0, 2, 3, 5]));
        assert_eq!(a.intersection(&b), VertexSet::from([2]));
        assert_eq!(a.difference(&b), VertexSet::from([0, 5]));
        assert!(VertexSet::from([2]).is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.len(), 3);
        assert_eq!(a.first(), Some(0));
        assert_eq!(format!("{a}"), "{0, 2, 5}");
    }

    #[test]
    fn vertex_set_equality_is_structural_after_removals() {
        let mut a = VertexSet::from([1, 100]);
        a.remove(100);
        assert_eq!(a, VertexSet::from([1]));
        let mut hasher_input = std::collections::HashSet::new();
        hasher_input.insert(a);
        assert!(hasher_input.contains(&VertexSet::from([1])));
    }

    #[test]
    fn dot_export_marks_witness() {
        let dot = p4().to_dot(Some(&VertexSet::from([1])));
        assert!(dot.contains("1 [style=filled];"));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.starts_with("graph {"));
    }
}

//! I-set computation and LD / LTD verification.
//!
//! For a set `S` and a vertex `v`, the *code* of `v` is
//! `I(S; v) = N[v] ∩ S`.  `S` is *locating-dominating* (LD) when every
//! vertex outside `S` has a non-empty code and those codes are pairwise
//! distinct; it is *locating-total dominating* (LTD) when additionally every
//! vertex of the graph — members of `S` included — has an *open* neighbor
//! in `S`.

use std::collections::HashMap;

use crate::graph::{Graph, GraphError, VertexSet};

/// Outcome of an LD / LTD verification.
///
/// Failures carry the smallest witness: the smallest-indexed undominated
/// vertex, or the lexicographically smallest unseparated pair.  Undomination
/// is reported before separation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LdVerdict {
    /// The set satisfies the checked property.
    Valid,
    /// For LD: a vertex outside the set with empty code.  For LTD: a vertex
    /// (possibly inside the set) with no open neighbor in the set.
    Undominated(usize),
    /// Two vertices outside the set whose codes coincide.
    Unseparated(usize, usize),
}

impl LdVerdict {
    /// True iff the verdict is [`LdVerdict::Valid`].
    pub fn is_valid(&self) -> bool {
        matches!(self, LdVerdict::Valid)
    }
}

impl std::fmt::Display for LdVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LdVerdict::Valid => write!(f, "valid"),
            LdVerdict::Undominated(v) => write!(f, "undominated {v}"),
            LdVerdict::Unseparated(u, v) => write!(f, "unseparated {u} {v}"),
        }
    }
}

/// The code `I(S; v) = N[v] ∩ S`.
///
/// Members of `s` outside `[0, n)` cannot intersect `N[v]` and are ignored.
pub fn iset(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet, GraphError> {
    if v >= g.n() {
        return Err(GraphError::IndexOutOfRange { index: v, n: g.n() });
    }
    Ok(g.closed_neighbors(v).intersection(s))
}

fn check_set_in_range(g: &Graph, s: &VertexSet) {
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        panic!(
            "set member {v} out of range for a graph on {} vertices",
            g.n()
        );
    }
}

/// Checks whether `s` is locating-dominating in `g`.
///
/// Panics if `s` contains a vertex `≥ n`.
pub fn verify_ld(g: &Graph, s: &VertexSet) -> LdVerdict {
    check_set_in_range(g, s);
    for v in 0..g.n() {
        if !s.contains(v) && g.closed_neighbors(v).intersection(s).is_empty() {
            return LdVerdict::Undominated(v);
        }
    }
    separation_verdict(g, s)
}

/// Checks whether `s` is locating-total dominating in `g`.
///
/// Panics if `s` contains a vertex `≥ n`.
///
/// The total-domination scan covers every vertex, so the reported
/// [`LdVerdict::Undominated`] vertex may itself belong to `s` (a member
/// without an open neighbor in `s` breaks total domination).
pub fn verify_ltd(g: &Graph, s: &VertexSet) -> LdVerdict {
    check_set_in_range(g, s);
    for v in 0..g.n() {
        if g.open_neighbors(v).iter().all(|w| !s.contains(*w)) {
            return LdVerdict::Undominated(v);
        }
    }
    separation_verdict(g, s)
}

/// Reports the lexicographically smallest pair of distinct vertices outside
/// `s` with equal codes, assuming domination already holds.
fn separation_verdict(g: &Graph, s: &VertexSet) -> LdVerdict {
    // Per code class, only the first two members matter: they form the
    // class's smallest pair.  `Some(first)` awaits a partner; `None` marks a
    // class whose pair is already recorded.
    let mut seen: HashMap<VertexSet, Option<usize>> = HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.n() {
        if s.contains(v) {
            continue;
        }
        let code = g.closed_neighbors(v).intersection(s);
        match seen.get_mut(&code) {
            Some(slot) => {
                if let Some(first) = slot.take() {
                    let pair = (first, v);
                    if best.is_none_or(|b| pair < b) {
                        best = Some(pair);
                    }
                }
            }
            None => {
                seen.insert(code, Some(v));
            }
        }
    }
    match best {
        Some((u, v)) => LdVerdict::Unseparated(u, v),
        None => LdVerdict::Valid,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn iset_is_closed_neighborhood_intersection() {
        let s = VertexSet::from([0, 2]);
        assert_eq!(iset(&p4(), &s, 1).unwrap(), VertexSet::from([0, 2]));
        assert_eq!(iset(&p4(), &VertexSet::new(), 1).unwrap(), VertexSet::new());
        // v ∈ S puts v itself in the code.
        assert!(iset(&p4(), &s, 2).unwrap().contains(2));
        assert_eq!(
            iset(&p4(), &s, 9),
            Err(GraphError::IndexOutOfRange { index: 9, n: 4 })
        );
    }

    #[test]
    fn ld_accepts_p4_witness() {
        assert_eq!(verify_ld(&p4(), &VertexSet::from([0, 2])), LdVerdict::Valid);
    }

    #[test]
    fn ld_reports_equal_codes() {
        assert_eq!(
            verify_ld(&k4(), &VertexSet::from([0, 1])),
            LdVerdict::Unseparated(2, 3)
        );
    }

    #[test]
    fn ld_reports_smallest_undominated_vertex() {
        assert_eq!(
            verify_ld(&p4(), &VertexSet::from([0])),
            LdVerdict::Undominated(2)
        );
    }

    #[test]
    fn undomination_precedes_separation() {
        // S = {0} on K₄ ∪ {isolated}: vertex 4 is undominated, while 1,2,3
        // share the code {0}.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            verify_ld(&g, &VertexSet::from([0])),
            LdVerdict::Undominated(4)
        );
    }

    #[test]
    fn unseparated_pair_is_lexicographically_smallest() {
        // Codes over S = {4, 5}: I(0)={4}, I(1)={5}, I(2)={5}, I(3)={4}.
        // The scan meets (1,2) first, but (0,3) is smaller.
        let g = Graph::from_edges(6, &[(0, 4), (1, 5), (2, 5), (3, 4)]).unwrap();
        assert_eq!(
            verify_ld(&g, &VertexSet::from([4, 5])),
            LdVerdict::Unseparated(0, 3)
        );
    }

    #[test]
    fn ltd_accepts_inner_pair_on_p4() {
        assert_eq!(
            verify_ltd(&p4(), &VertexSet::from([1, 2])),
            LdVerdict::Valid
        );
    }

    #[test]
    fn ltd_requires_open_neighbor_for_members() {
        // {0, 2} is LD on P₄, but 0 has no neighbor in the set.
        assert_eq!(
            verify_ltd(&p4(), &VertexSet::from([0, 2])),
            LdVerdict::Undominated(0)
        );
    }

    #[test]
    fn ltd_rejects_empty_set() {
        assert_eq!(
            verify_ltd(&p4(), &VertexSet::new()),
            LdVerdict::Undominated(0)
        );
    }

    #[test]
    fn ltd_detects_separation_failures_too() {
        assert_eq!(
            verify_ltd(&k4(), &VertexSet::from([0, 1])),
            LdVerdict::Unseparated(2, 3)
        );
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(verify_ltd(&c4, &VertexSet::from([0, 1])), LdVerdict::Valid);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn rejects_out_of_range_set_members() {
        verify_ld(&p4(), &VertexSet::from([7]));
    }
}

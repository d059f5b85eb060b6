//! Exact minimum LD / LTD solvers and lower bounds.
//!
//! [`ld_number_exact`] and [`ltd_number_exact`] run a two-phase
//! branch-and-bound: phase one proves the optimum value, phase two re-searches
//! at exactly that value in vertex-index order (in-branch first), so the first
//! complete assignment is the lexicographically smallest optimal witness in
//! sorted-sequence order.  Both phases decide one vertex per node and detect
//! doomed partial assignments immediately: a decision to exclude a vertex can
//! strand a vertex without potential dominators or freeze a pair of excluded
//! vertices on equal codes, and only exclusion decisions can do either, so
//! in-branches descend unchecked.
//!
//! The search is single-threaded and its node order is fixed, making value,
//! witness, and node count reproducible.  Internally vertices live in `u128`
//! masks; graphs beyond 128 vertices panic (documented cap, far above what
//! exhaustive LD work reaches).

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::ld::{verify_ld, LdVerdict};

/// Node budget for the exact solvers; `Default` is unlimited.
///
/// Only node counts are supported — a wall-clock limit would make results
/// depend on machine speed, breaking the determinism contract.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveBudget {
    /// Maximum search-tree nodes across both phases, `None` for unlimited.
    pub max_nodes: Option<u64>,
}

impl SolveBudget {
    /// No limit.
    pub fn unlimited() -> Self {
        SolveBudget { max_nodes: None }
    }

    /// At most `max_nodes` search-tree nodes.
    pub fn nodes(max_nodes: u64) -> Self {
        SolveBudget {
            max_nodes: Some(max_nodes),
        }
    }
}

/// A proven optimum with its certified witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// The minimum set size.
    pub value: usize,
    /// The lexicographically smallest optimal set (sorted-sequence order).
    pub witness: VertexSet,
    /// Search-tree nodes expanded (a determinism-checkable statistic).
    pub explored: u64,
}

/// Errors raised by the solvers and bounds.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// The node budget ran out.  `witness` is the best set found (always
    /// valid; `|witness| = upper`).  When `lower == upper` the value is
    /// proven and only the lexicographic witness search was cut short.
    #[error("node budget exhausted after {explored} nodes: optimum in [{lower}, {upper}]")]
    BudgetExceeded {
        upper: usize,
        lower: usize,
        witness: VertexSet,
        explored: u64,
    },
    /// Total domination is impossible: some vertex has no neighbor at all.
    #[error("vertex {0} is isolated, so no total dominating set exists")]
    IsolatedVertex(usize),
    /// The subcubic-only bound was asked about a graph with a degree-4+
    /// vertex.
    #[error("vertex {vertex} has degree {degree} > 3, graph is not subcubic")]
    NotSubcubic { vertex: usize, degree: usize },
}

/// Minimum LD-set size, certified witness, and node count.
///
/// Panics if `n > 128`.
pub fn ld_number_exact(g: &Graph, budget: SolveBudget) -> Result<SolveResult, SolveError> {
    solve(g, false, budget)
}

/// Minimum LTD-set size, certified witness, and node count.
///
/// Panics if `n > 128`.
pub fn ltd_number_exact(g: &Graph, budget: SolveBudget) -> Result<SolveResult, SolveError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(SolveError::IsolatedVertex(v));
    }
    solve(g, true, budget)
}

/// The ⌈n/3⌉ lower bound on γ^LD for subcubic graphs.
///
/// Each chosen vertex has at most three neighbors outside the set, and
/// distinct singleton codes are scarce; together these cap the vertices a
/// set of size k can locate at 2k, so n ≤ 3·γ^LD.
pub fn subcubic_lower_bound(g: &Graph) -> Result<usize, SolveError> {
    if let Some(vertex) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(SolveError::NotSubcubic {
            vertex,
            degree: g.degree(vertex),
        });
    }
    Ok(g.n().div_ceil(3))
}

/// Reference LD solver: tries every subset in increasing size, then
/// lexicographic order, and returns the first valid one.
///
/// `explored` counts subsets tested.  Panics if `n > 20` (documented
/// practicality limit — the scan is exponential by design).
pub fn naive_ld_number(g: &Graph) -> SolveResult {
    assert!(g.n() <= 20, "naive solver is limited to 20 vertices");
    let mut explored = 0;
    for size in 0..=g.n() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let s: VertexSet = combo.iter().copied().collect();
            explored += 1;
            if verify_ld(g, &s) == LdVerdict::Valid {
                return SolveResult {
                    value: size,
                    witness: s,
                    explored,
                };
            }
            if !next_combination(&mut combo, g.n()) {
                break;
            }
        }
    }
    unreachable!("the full vertex set is always locating-dominating");
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn solve(g: &Graph, total: bool, budget: SolveBudget) -> Result<SolveResult, SolveError> {
    assert!(g.n() <= 128, "exact solver is limited to 128 vertices");
    if g.n() == 0 {
        return Ok(SolveResult {
            value: 0,
            witness: VertexSet::new(),
            explored: 0,
        });
    }
    Searcher::new(g, total, budget).run()
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

fn mask_to_set(mask: u128) -> VertexSet {
    bits(mask).collect()
}

struct Searcher {
    n: usize,
    closed: Vec<u128>,
    open: Vec<u128>,
    full: u128,
    total: bool,
    max_deg: usize,
    global_lb: usize,
    order: Vec<usize>,
    max_nodes: Option<u64>,
    explored: u64,
    abort: bool,
    best: usize,
    best_witness: u128,
    /// Minimum lower bound over subtrees skipped because of the abort; the
    /// proven lower bound on unwind is `min(best, frontier_min)`.
    frontier_min: usize,
    found: Option<u128>,
}

impl Searcher {
    fn new(g: &Graph, total: bool, budget: SolveBudget) -> Searcher {
        let n = g.n();
        let open: Vec<u128> = (0..n)
            .map(|v| g.open_neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
            .collect();
        let closed: Vec<u128> = (0..n).map(|v| open[v] | 1 << v).collect();
        let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        let global_lb = if g.is_subcubic() {
            n.div_ceil(3)
        } else {
            // Codes are distinct non-empty subsets of the chosen set.
            (0..n).find(|&k| k + (1usize << k.min(60)) > n).unwrap_or(n)
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Searcher {
            n,
            closed,
            open,
            full: if n == 128 {
                u128::MAX
            } else {
                (1u128 << n) - 1
            },
            total,
            max_deg,
            global_lb,
            order,
            max_nodes: budget.max_nodes,
            explored: 0,
            abort: false,
            best: n,
            best_witness: if n == 128 {
                u128::MAX
            } else {
                (1u128 << n) - 1
            },
            frontier_min: usize::MAX,
            found: None,
        }
    }

    fn run(mut self) -> Result<SolveResult, SolveError> {
        self.value_search(0, 0, 0);
        if self.abort {
            return Err(SolveError::BudgetExceeded {
                upper: self.best,
                lower: self.best.min(self.frontier_min),
                witness: mask_to_set(self.best_witness),
                explored: self.explored,
            });
        }
        // γ = n means the full vertex set is the unique (hence smallest)
        // optimal witness.
        if self.best < self.n {
            self.witness_search(0, 0, 0);
        } else {
            self.found = Some(self.best_witness);
        }
        if self.abort {
            // The value is proven; only the lexicographic re-search was cut
            // short, so the incumbent is optimal but possibly not smallest.
            return Err(SolveError::BudgetExceeded {
                upper: self.best,
                lower: self.best,
                witness: mask_to_set(self.best_witness),
                explored: self.explored,
            });
        }
        let witness = self.found.expect("the proven optimum is achievable");
        Ok(SolveResult {
            value: self.best,
            witness: mask_to_set(witness),
            explored: self.explored,
        })
    }

    fn enter_node(&mut self) -> bool {
        self.explored += 1;
        if self.max_nodes.is_some_and(|cap| self.explored > cap) {
            self.abort = true;
        }
        !self.abort
    }

    /// Phase one: prove the optimum value, branching high-degree vertices
    /// first with inclusion tried before exclusion.
    fn value_search(&mut self, in_mask: u128, out_mask: u128, depth: usize) {
        if !self.enter_node() {
            self.frontier_min = self.frontier_min.min(self.lower_bound(in_mask, out_mask));
            return;
        }
        if depth == self.n {
            // Leaves are valid by construction: the incremental death checks
            // rule out undominated vertices and frozen equal codes.
            let size = in_mask.count_ones() as usize;
            if size < self.best {
                self.best = size;
                self.best_witness = in_mask;
            }
            return;
        }
        let v = self.order[depth];
        let with_v = in_mask | 1 << v;
        if self.lower_bound(with_v, out_mask) < self.best {
            self.value_search(with_v, out_mask, depth + 1);
        }
        let without_v = out_mask | 1 << v;
        if self.abort {
            self.frontier_min = self.frontier_min.min(self.lower_bound(in_mask, without_v));
            return;
        }
        if self.lower_bound(in_mask, without_v) < self.best
            && !self.exclusion_is_dead(v, in_mask, without_v)
        {
            self.value_search(in_mask, without_v, depth + 1);
        }
    }

    /// Phase two: first complete assignment of size `best` in index order
    /// with inclusion first — the lexicographically smallest optimum.
    fn witness_search(&mut self, in_mask: u128, out_mask: u128, v: usize) {
        if self.found.is_some() || !self.enter_node() {
            return;
        }
        if v == self.n {
            debug_assert_eq!(in_mask.count_ones() as usize, self.best);
            self.found = Some(in_mask);
            return;
        }
        let with_v = in_mask | 1 << v;
        if self.lower_bound(with_v, out_mask) <= self.best {
            self.witness_search(with_v, out_mask, v + 1);
        }
        if self.found.is_some() || self.abort {
            return;
        }
        let without_v = out_mask | 1 << v;
        if self.lower_bound(in_mask, without_v) <= self.best
            && !self.exclusion_is_dead(v, in_mask, without_v)
        {
            self.witness_search(in_mask, without_v, v + 1);
        }
    }

    /// Size bound for any completion of the partial assignment.
    fn lower_bound(&self, in_mask: u128, out_mask: u128) -> usize {
        let chosen = in_mask.count_ones() as usize;
        let uncovered = if self.total {
            (0..self.n).filter(|&v| self.open[v] & in_mask == 0).count()
        } else {
            bits(out_mask)
                .filter(|&v| self.closed[v] & in_mask == 0)
                .count()
        };
        // Every vertex still to be covered needs an *open* neighbor added
        // (an uncovered excluded vertex is never its own dominator, and a
        // future member never totally dominates itself), so each addition
        // covers at most max_deg of them.
        let need = match (uncovered, self.max_deg) {
            (0, _) => 0,
            (_, 0) => return usize::MAX / 2,
            (u, d) => u.div_ceil(d),
        };
        (chosen + need).max(self.global_lb)
    }

    /// True iff excluding `u` (already folded into `out_mask`) makes the
    /// partial assignment uncompletable: some vertex lost its last potential
    /// dominator, or two excluded vertices hold equal codes with no
    /// undecided separator left.
    fn exclusion_is_dead(&self, u: usize, in_mask: u128, out_mask: u128) -> bool {
        let alive = self.full & !out_mask; // chosen ∪ undecided
        let undecided = alive & !in_mask;
        if self.total {
            if bits(self.closed[u]).any(|v| self.open[v] & alive == 0) {
                return true;
            }
        } else {
            let affected = (self.open[u] & out_mask) | 1 << u;
            if bits(affected).any(|v| self.closed[v] & alive == 0) {
                return true;
            }
        }
        for v in bits(self.closed[u] & out_mask) {
            let code_v = self.closed[v] & in_mask;
            for w in bits(out_mask & !(1 << v)) {
                if self.closed[w] & in_mask == code_v
                    && (self.closed[v] ^ self.closed[w]) & undecided == 0
                {
                    return true;
                }
            }
        }
        false
    }
}

//! Parametric generators for the example graphs and infinite families used
//! throughout the crate, each bundled with a designated witness set and the
//! value it certifies.
//!
//! The extremal families show where the `⌊n/2⌋` bound for twin-free
//! subcubic graphs is tight and how badly it fails once twins are allowed:
//!
//! * [`FamilySpec::Deg1Twins`] — trees with degree-1 open twins reaching
//!   `γ^LD = 7n/12`;
//! * [`FamilySpec::Deg2Twins`] — trees with degree-2 open twins reaching
//!   `γ^LD = 8n/15`;
//! * [`FamilySpec::ClosedReg`] — `r`-regular graphs (`r ≥ 4`) with closed
//!   twins reaching `γ^LD = (3r−4)/(3r+3)·n`;
//! * [`FamilySpec::TightSubcubic`] — twin-free subcubic graphs attaining
//!   `γ^LD = n/2` exactly;
//! * [`FamilySpec::TightCubic10`] — the 10-vertex cubic graph (with twins)
//!   attaining `n/2`;
//! * [`FamilySpec::LtdComb`] — combs whose minimum locating-total-dominating
//!   sets take two of every three vertices;
//! * [`FamilySpec::FGraph`]/[`FamilySpec::F3Prime`] — the anchored gadgets
//!   `F₀…F₆` from [`crate::fgraph`], with the hand-picked small LD-sets the
//!   case analysis relies on.
//!
//! Every generated witness is re-verified at construction time, so a
//! transcription slip in a layout panics immediately instead of propagating
//! a wrong claim.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::fgraph::{f_graph, FLabel};
use crate::graph::{Graph, VertexSet};
use crate::ld::{verify_ld, verify_ltd};
use crate::solve::{ld_number_exact, SolveBudget};

/// Errors from [`generate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    /// A parameter is outside the family's valid range.
    #[error("bad parameter for {family}: {reason}")]
    BadParameter {
        family: &'static str,
        reason: String,
    },
}

fn bad(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::BadParameter {
        family,
        reason: reason.into(),
    }
}

/// What the bundled witness certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimKind {
    /// The witness is a minimum LD-set; `claimed` is `γ^LD`.
    ExactGamma,
    /// The witness is a valid LD-set; `claimed` is only an upper bound.
    UpperBoundWitness,
    /// The witness is a minimum LTD-set; `claimed` is `γ^LTD`.
    ExactLtd,
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimKind::ExactGamma => "exact",
            ClaimKind::UpperBoundWitness => "upper-bound",
            ClaimKind::ExactLtd => "exact-ltd",
        })
    }
}

/// Family name without parameters; the unit of CLI `--kind` parsing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    LtdComb,
    Deg1Twins,
    Deg2Twins,
    ClosedReg,
    TightSubcubic,
    TightCubic10,
    FGraph,
    F3Prime,
    Prism,
    P2BoxC4,
    Path,
    CompleteK,
    StarK1,
    CompleteBipartite33,
}

impl FamilyKind {
    /// All kinds, in documentation order.
    pub const ALL: [FamilyKind; 14] = [
        FamilyKind::LtdComb,
        FamilyKind::Deg1Twins,
        FamilyKind::Deg2Twins,
        FamilyKind::ClosedReg,
        FamilyKind::TightSubcubic,
        FamilyKind::TightCubic10,
        FamilyKind::FGraph,
        FamilyKind::F3Prime,
        FamilyKind::Prism,
        FamilyKind::P2BoxC4,
        FamilyKind::Path,
        FamilyKind::CompleteK,
        FamilyKind::StarK1,
        FamilyKind::CompleteBipartite33,
    ];

    /// Stable kebab-case name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::LtdComb => "ltd-comb",
            FamilyKind::Deg1Twins => "deg1-twins",
            FamilyKind::Deg2Twins => "deg2-twins",
            FamilyKind::ClosedReg => "closed-reg",
            FamilyKind::TightSubcubic => "tight-subcubic",
            FamilyKind::TightCubic10 => "tight-cubic10",
            FamilyKind::FGraph => "f-graph",
            FamilyKind::F3Prime => "f3-prime",
            FamilyKind::Prism => "prism",
            FamilyKind::P2BoxC4 => "p2-box-c4",
            FamilyKind::Path => "path",
            FamilyKind::CompleteK => "complete",
            FamilyKind::StarK1 => "star",
            FamilyKind::CompleteBipartite33 => "k33",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| bad("kind", format!("unknown family `{s}`")))
    }
}

/// A fully parameterized family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Comb with spine length `p ≥ 1` and a pendant 2-path per spine
    /// vertex; `n = 3p`, minimum LTD-set of size `2p`.
    LtdComb { p: usize },
    /// `3k` centers, each with two pendant leaves (degree-1 open twins) and
    /// a spine vertex; `n = 12k`, `γ^LD = 7k`.
    Deg1Twins { k: usize },
    /// `5k` spine vertices, each carrying an 11-vertex gadget with two
    /// degree-2 open-twin pairs; `n = 60k`, `γ^LD = 32k`.
    Deg2Twins { k: usize },
    /// `3k` cliques of size `r−1` (pairwise closed twins), each joined to
    /// its own connectors `aᵢ, bᵢ`, spine cycle `bᵢ—a_{i+1}`; `r`-regular,
    /// `r ≥ 4`, `n = (3r+3)k`, `γ^LD = (3r−4)k`.
    ClosedReg { r: usize, k: usize },
    /// Twin-free subcubic graph with `γ^LD = n/2`: a path `p₁..p_{4k+1}`
    /// with a pendant `uᵢ` per `pᵢ` and extra edges `uᵢu_{i+1}` two out of
    /// every four steps; `n = 8k+2`.
    TightSubcubic { k: usize },
    /// The 10-vertex cubic graph with `γ^LD = 5 = n/2` (it has both an
    /// open and a closed twin pair).
    TightCubic10,
    /// The anchored gadget `Fᵢ`, `i ∈ 0..=6`.
    FGraph { i: usize },
    /// `F₃` minus the pendant `x̂′` (equivalently `F₀` plus the edge
    /// `ŷẑ`); the 5-vertex base case with LD-set `{v̂, ẑ}`.
    F3Prime,
    /// Triangular prism `K₃ × K₂`.
    Prism,
    /// Cube graph `P₂ × C₄`.
    P2BoxC4,
    /// Path on `n ≥ 1` vertices; `γ^LD = ⌈2n/5⌉`.
    Path { n: usize },
    /// Complete graph on `n ≥ 2` vertices; `γ^LD = n−1`.
    CompleteK { n: usize },
    /// Star with `leaves ≥ 1` leaves; `γ^LD = leaves`.
    StarK1 { leaves: usize },
    /// `K₃,₃`, the cubic graph with `γ^LD = 4 > n/2`.
    CompleteBipartite33,
}

impl FamilySpec {
    /// The parameterless kind.
    pub fn kind(self) -> FamilyKind {
        match self {
            FamilySpec::LtdComb { .. } => FamilyKind::LtdComb,
            FamilySpec::Deg1Twins { .. } => FamilyKind::Deg1Twins,
            FamilySpec::Deg2Twins { .. } => FamilyKind::Deg2Twins,
            FamilySpec::ClosedReg { .. } => FamilyKind::ClosedReg,
            FamilySpec::TightSubcubic { .. } => FamilyKind::TightSubcubic,
            FamilySpec::TightCubic10 => FamilyKind::TightCubic10,
            FamilySpec::FGraph { .. } => FamilyKind::FGraph,
            FamilySpec::F3Prime => FamilyKind::F3Prime,
            FamilySpec::Prism => FamilyKind::Prism,
            FamilySpec::P2BoxC4 => FamilyKind::P2BoxC4,
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::CompleteK { .. } => FamilyKind::CompleteK,
            FamilySpec::StarK1 { .. } => FamilyKind::StarK1,
            FamilySpec::CompleteBipartite33 => FamilyKind::CompleteBipartite33,
        }
    }

    /// Builds a spec from a kind plus the generic CLI parameters. `k`
    /// doubles as the size parameter for `path`/`complete`/`star` (their
    /// `n` or leaf count) and as the index for `f-graph`; `p` is the
    /// `ltd-comb` spine length; `r` is the `closed-reg` degree.
    pub fn from_kind_params(
        kind: FamilyKind,
        k: Option<usize>,
        r: Option<usize>,
        p: Option<usize>,
    ) -> Result<FamilySpec, FamilyError> {
        let need = |param: Option<usize>, name: &str| {
            param.ok_or_else(|| bad(kind.name(), format!("missing parameter --{name}")))
        };
        Ok(match kind {
            FamilyKind::LtdComb => FamilySpec::LtdComb { p: need(p, "p")? },
            FamilyKind::Deg1Twins => FamilySpec::Deg1Twins { k: need(k, "k")? },
            FamilyKind::Deg2Twins => FamilySpec::Deg2Twins { k: need(k, "k")? },
            FamilyKind::ClosedReg => FamilySpec::ClosedReg {
                r: need(r, "r")?,
                k: need(k, "k")?,
            },
            FamilyKind::TightSubcubic => FamilySpec::TightSubcubic { k: need(k, "k")? },
            FamilyKind::TightCubic10 => FamilySpec::TightCubic10,
            FamilyKind::FGraph => FamilySpec::FGraph { i: need(k, "k")? },
            FamilyKind::F3Prime => FamilySpec::F3Prime,
            FamilyKind::Prism => FamilySpec::Prism,
            FamilyKind::P2BoxC4 => FamilySpec::P2BoxC4,
            FamilyKind::Path => FamilySpec::Path { n: need(k, "k")? },
            FamilyKind::CompleteK => FamilySpec::CompleteK { n: need(k, "k")? },
            FamilyKind::StarK1 => FamilySpec::StarK1 {
                leaves: need(k, "k")?,
            },
            FamilyKind::CompleteBipartite33 => FamilySpec::CompleteBipartite33,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::LtdComb { p } => write!(f, "ltd-comb p={p}"),
            FamilySpec::Deg1Twins { k } => write!(f, "deg1-twins k={k}"),
            FamilySpec::Deg2Twins { k } => write!(f, "deg2-twins k={k}"),
            FamilySpec::ClosedReg { r, k } => write!(f, "closed-reg r={r} k={k}"),
            FamilySpec::TightSubcubic { k } => write!(f, "tight-subcubic k={k}"),
            FamilySpec::FGraph { i } => write!(f, "f-graph {i}"),
            FamilySpec::Path { n } => write!(f, "path n={n}"),
            FamilySpec::CompleteK { n } => write!(f, "complete n={n}"),
            FamilySpec::StarK1 { leaves } => write!(f, "star leaves={leaves}"),
            other => f.write_str(other.kind().name()),
        }
    }
}

/// A generated family member: the graph, its designated witness, and the
/// value the witness certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub witness: VertexSet,
    /// The certified value (`|witness|` in every current family).
    pub claimed: usize,
    pub claim_kind: ClaimKind,
    /// Human-readable vertex names, indexed by vertex.
    pub labels: Vec<String>,
}

/// Builds the requested family member and re-verifies its witness.
///
/// Panics if a layout produces an invalid witness — that is a bug in the
/// generator, not an input error.
pub fn generate(spec: FamilySpec) -> Result<FamilyInstance, FamilyError> {
    let instance = match spec {
        FamilySpec::LtdComb { p } => ltd_comb(p)?,
        FamilySpec::Deg1Twins { k } => deg1_twins(k)?,
        FamilySpec::Deg2Twins { k } => deg2_twins(k)?,
        FamilySpec::ClosedReg { r, k } => closed_reg(r, k)?,
        FamilySpec::TightSubcubic { k } => tight_subcubic(k)?,
        FamilySpec::TightCubic10 => tight_cubic10(),
        FamilySpec::FGraph { i } => f_graph_instance(i)?,
        FamilySpec::F3Prime => f3_prime(),
        FamilySpec::Prism => prism(),
        FamilySpec::P2BoxC4 => p2_box_c4(),
        FamilySpec::Path { n } => path(n)?,
        FamilySpec::CompleteK { n } => complete(n)?,
        FamilySpec::StarK1 { leaves } => star(leaves)?,
        FamilySpec::CompleteBipartite33 => k33(),
    };
    let verdict = match instance.claim_kind {
        ClaimKind::ExactGamma | ClaimKind::UpperBoundWitness => {
            verify_ld(&instance.graph, &instance.witness)
        }
        ClaimKind::ExactLtd => verify_ltd(&instance.graph, &instance.witness),
    };
    assert!(
        verdict.is_valid(),
        "generator bug: witness for {spec} fails verification ({verdict})"
    );
    assert_eq!(
        instance.witness.len(),
        instance.claimed,
        "generator bug: witness size mismatch for {spec}"
    );
    assert_eq!(instance.labels.len(), instance.graph.n());
    Ok(instance)
}

fn instance(
    n: usize,
    edges: &[(usize, usize)],
    witness: impl IntoIterator<Item = usize>,
    claim_kind: ClaimKind,
    labels: Vec<String>,
) -> FamilyInstance {
    let graph = Graph::from_edges(n, edges).expect("family layouts are valid");
    let witness: VertexSet = witness.into_iter().collect();
    let claimed = witness.len();
    FamilyInstance {
        graph,
        witness,
        claimed,
        claim_kind,
        labels,
    }
}

/// Spine `v₁..v_p`; each `vᵢ` carries a pendant path `sᵢ—tᵢ`. The LTD-set
/// takes every `sᵢ, tᵢ`: `tᵢ` forces `sᵢ` (its only neighbor), and with
/// all `sᵢ` present each `tᵢ` is needed to separate `vᵢ` from `tᵢ`.
fn ltd_comb(p: usize) -> Result<FamilyInstance, FamilyError> {
    if p == 0 {
        return Err(bad("ltd-comb", "spine length p must be ≥ 1"));
    }
    let mut edges = Vec::new();
    let mut labels = vec![String::new(); 3 * p];
    for i in 0..p {
        let (s, t) = (p + 2 * i, p + 2 * i + 1);
        if i + 1 < p {
            edges.push((i, i + 1));
        }
        edges.push((i, s));
        edges.push((s, t));
        labels[i] = format!("v_{}", i + 1);
        labels[s] = format!("s_{}", i + 1);
        labels[t] = format!("t_{}", i + 1);
    }
    let witness = (p..3 * p).collect::<Vec<_>>();
    Ok(instance(
        3 * p,
        &edges,
        witness,
        ClaimKind::ExactLtd,
        labels,
    ))
}

/// Blocks `aᵢ, bᵢ, cᵢ, vᵢ` (`bᵢ` joined to the leaf twins `aᵢ, cᵢ` and to
/// the spine vertex `vᵢ`), spine path over the `vᵢ`. Each leaf-twin pair
/// costs a leaf plus its center, and every third spine vertex is needed to
/// separate the remaining spine.
fn deg1_twins(k: usize) -> Result<FamilyInstance, FamilyError> {
    if k == 0 {
        return Err(bad("deg1-twins", "k must be ≥ 1"));
    }
    let blocks = 3 * k;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut witness = Vec::new();
    for i in 0..blocks {
        let (a, b, c, v) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        edges.extend([(b, a), (b, c), (b, v)]);
        if i + 1 < blocks {
            edges.push((v, v + 4));
        }
        labels.extend([
            format!("a_{}", i + 1),
            format!("b_{}", i + 1),
            format!("c_{}", i + 1),
            format!("v_{}", i + 1),
        ]);
        witness.extend([b, c]);
        if i % 3 == 1 {
            witness.push(v);
        }
    }
    Ok(instance(
        12 * k,
        &edges,
        witness,
        ClaimKind::ExactGamma,
        labels,
    ))
}

/// Spine `v₁..v₅ₖ`; each `vᵢ` carries the 11-vertex gadget: `uᵢ` splits
/// into branch vertices `pᵢ, qᵢ`, each holding a degree-2 open-twin pair
/// (`tᵢ,t′ᵢ` under `rᵢ`, and `sᵢ,s′ᵢ` under `wᵢ`) with a pendant leaf on
/// the twins' common neighbor. Six gadget vertices per block plus two
/// spine vertices per five blocks give `32k` on `n = 60k`.
fn deg2_twins(k: usize) -> Result<FamilyInstance, FamilyError> {
    if k == 0 {
        return Err(bad("deg2-twins", "k must be ≥ 1"));
    }
    let blocks = 5 * k;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut witness = Vec::new();
    for i in 0..blocks {
        let base = 12 * i;
        let [v, u, p, t, tp, r, l, q, s, sp, w, m] =
            [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11].map(|o| base + o);
        edges.extend([
            (v, u),
            (u, p),
            (u, q),
            (p, t),
            (p, tp),
            (t, r),
            (tp, r),
            (r, l),
            (q, s),
            (q, sp),
            (s, w),
            (sp, w),
            (w, m),
        ]);
        if i + 1 < blocks {
            edges.push((v, v + 12));
        }
        for name in ["v", "u", "p", "t", "t'", "r", "l", "q", "s", "s'", "w", "m"] {
            labels.push(format!("{name}_{}", i + 1));
        }
        witness.extend([p, t, r, q, s, w]);
        if i % 5 == 1 || i % 5 == 3 {
            witness.push(v);
        }
    }
    Ok(instance(
        60 * k,
        &edges,
        witness,
        ClaimKind::ExactGamma,
        labels,
    ))
}

/// `3k` cliques of size `r−1`, each fully joined to its own connectors
/// `aᵢ` and `bᵢ` (not adjacent to each other), spine cycle `bᵢ—a_{i+1}`.
/// The clique vertices are pairwise closed twins, so all but one per
/// clique must be taken; `aᵢ`/`bᵢ` connectors are added two per three
/// cliques to separate the rest.
fn closed_reg(r: usize, k: usize) -> Result<FamilyInstance, FamilyError> {
    if r < 4 {
        return Err(bad("closed-reg", "degree r must be ≥ 4"));
    }
    if k == 0 {
        return Err(bad("closed-reg", "k must be ≥ 1"));
    }
    let blocks = 3 * k;
    let block_size = r + 1;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut witness = Vec::new();
    for i in 0..blocks {
        let base = i * block_size;
        let a = base + r - 1;
        let b = base + r;
        for x in 0..r - 1 {
            for y in x + 1..r - 1 {
                edges.push((base + x, base + y));
            }
            edges.push((base + x, a));
            edges.push((base + x, b));
            labels.push(format!("q_{}_{}", i + 1, x + 1));
        }
        labels.push(format!("a_{}", i + 1));
        labels.push(format!("b_{}", i + 1));
        edges.push((b, ((i + 1) % blocks) * block_size + r - 1));
        witness.extend(base..base + r - 2);
        match i % 3 {
            0 => witness.push(b),
            2 => witness.push(a),
            _ => {}
        }
    }
    Ok(instance(
        blocks * block_size,
        &edges,
        witness,
        ClaimKind::ExactGamma,
        labels,
    ))
}

/// Path `p₁..p_{4k+1}` with a pendant `uᵢ` on each `pᵢ` and edges
/// `uᵢuᵢ₊₁` two out of every four steps. Twin-free subcubic with
/// `γ^LD = 4k+1 = n/2`; the pendants `{uᵢ}` form a witness since
/// `I(pᵢ) = {uᵢ}` are pairwise distinct.
fn tight_subcubic(k: usize) -> Result<FamilyInstance, FamilyError> {
    if k == 0 {
        return Err(bad("tight-subcubic", "k must be ≥ 1"));
    }
    let path_len = 4 * k + 1;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for i in 0..path_len {
        let (p, u) = (2 * i, 2 * i + 1);
        edges.push((p, u));
        if i + 1 < path_len {
            edges.push((p, p + 2));
            if i % 4 == 1 || i % 4 == 2 {
                edges.push((u, u + 2));
            }
        }
        labels.push(format!("p_{}", i + 1));
        labels.push(format!("u_{}", i + 1));
    }
    let witness = (0..path_len).map(|i| 2 * i + 1).collect::<Vec<_>>();
    Ok(instance(
        8 * k + 2,
        &edges,
        witness,
        ClaimKind::ExactGamma,
        labels,
    ))
}

/// The 10-vertex cubic graph attaining `n/2`: a 10-cycle with chords
/// 0–3, 1–8, 2–9, 4–6, 5–7. It contains both an open twin pair (0,2)
/// and a closed twin pair (5,6).
fn tight_cubic10() -> FamilyInstance {
    let mut edges: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
    edges.extend([(0, 3), (1, 8), (2, 9), (4, 6), (5, 7)]);
    let labels = (0..10).map(|i| i.to_string()).collect();
    instance(10, &edges, [1, 2, 4, 6, 8], ClaimKind::ExactGamma, labels)
}

/// `Fᵢ` with its standard small LD-set: the stated witnesses for
/// `i ∈ 3..=6`, and a solver-computed minimum for `i ∈ 0..=2` (those
/// three arise only as intermediate hosts, so no hand witness is pinned).
fn f_graph_instance(i: usize) -> Result<FamilyInstance, FamilyError> {
    if i > 6 {
        return Err(bad("f-graph", format!("index {i} out of range 0..=6")));
    }
    let (graph, flabels) = f_graph(i);
    let labels = flabels.iter().map(FLabel::to_string).collect();
    let by_label = |wanted: &[FLabel]| -> Vec<usize> {
        wanted
            .iter()
            .map(|w| flabels.iter().position(|l| l == w).unwrap())
            .collect()
    };
    use FLabel::{XPrime, U, V, W, X, Y, Z};
    let (witness, claim_kind) = match i {
        3 => (by_label(&[XPrime, V, Z]), ClaimKind::UpperBoundWitness),
        4 => (by_label(&[V, W, X, Y]), ClaimKind::UpperBoundWitness),
        5 => (by_label(&[V, XPrime, Y]), ClaimKind::UpperBoundWitness),
        6 => (by_label(&[U, X, Y, Z]), ClaimKind::UpperBoundWitness),
        _ => {
            let solved = ld_number_exact(&graph, SolveBudget::default())
                .expect("unbudgeted solve on a fixed small graph");
            (solved.witness.iter().collect(), ClaimKind::ExactGamma)
        }
    };
    let witness: VertexSet = witness.into_iter().collect();
    let claimed = witness.len();
    Ok(FamilyInstance {
        graph,
        witness,
        claimed,
        claim_kind,
        labels,
    })
}

/// `F₃` without the pendant `x̂′`: the twins `û,v̂` with common neighbors
/// `x̂,ŷ,ẑ` and the single extra edge `ŷẑ`. `{v̂,ẑ}` is an LD-set.
fn f3_prime() -> FamilyInstance {
    let edges = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (3, 4)];
    let labels = ["u", "v", "x", "y", "z"].map(String::from).to_vec();
    instance(5, &edges, [1, 4], ClaimKind::UpperBoundWitness, labels)
}

fn prism() -> FamilyInstance {
    let edges = [
        (0, 1),
        (1, 2),
        (0, 2),
        (3, 4),
        (4, 5),
        (3, 5),
        (0, 3),
        (1, 4),
        (2, 5),
    ];
    let labels = (0..6).map(|i| i.to_string()).collect();
    instance(6, &edges, [0, 1, 3], ClaimKind::ExactGamma, labels)
}

fn p2_box_c4() -> FamilyInstance {
    let edges = [
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
    ];
    let labels = (0..8).map(|i| i.to_string()).collect();
    instance(8, &edges, [0, 1, 2, 4], ClaimKind::ExactGamma, labels)
}

/// `γ^LD(P_n) = ⌈2n/5⌉`, attained by taking the second and fourth vertex
/// of every five, plus the last vertex when `n ≡ 1, 3 (mod 5)`.
fn path(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n == 0 {
        return Err(bad("path", "n must be ≥ 1"));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let mut witness: Vec<usize> = (0..n).filter(|i| matches!(i % 5, 1 | 3)).collect();
    if matches!(n % 5, 1 | 3) {
        witness.push(n - 1);
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    Ok(instance(n, &edges, witness, ClaimKind::ExactGamma, labels))
}

fn complete(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 2 {
        return Err(bad("complete", "n must be ≥ 2"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    Ok(instance(n, &edges, 0..n - 1, ClaimKind::ExactGamma, labels))
}

fn star(leaves: usize) -> Result<FamilyInstance, FamilyError> {
    if leaves == 0 {
        return Err(bad("star", "leaf count must be ≥ 1"));
    }
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|l| (0, l)).collect();
    let labels = (0..=leaves).map(|i| i.to_string()).collect();
    Ok(instance(
        leaves + 1,
        &edges,
        1..=leaves,
        ClaimKind::ExactGamma,
        labels,
    ))
}

fn k33() -> FamilyInstance {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push((u, v));
        }
    }
    let labels = (0..6).map(|i| i.to_string()).collect();
    instance(6, &edges, [0, 1, 3, 4], ClaimKind::ExactGamma, labels)
}

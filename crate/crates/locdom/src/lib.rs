//! Locating-dominating sets on subcubic graphs.
//!
//! A set `S ⊆ V(G)` is *locating-dominating* (an LD-set) if every vertex
//! `v ∉ S` has a non-empty code `I(v) = N[v] ∩ S` and the codes of the
//! vertices outside `S` are pairwise distinct.  The *location-domination
//! number* `γ^LD(G)` is the size of a smallest LD-set.
//!
//! This crate provides:
//!
//! * an immutable [`Graph`] value type with bit-exact graph6, edge-list and
//!   DOT I/O ([`graph`], [`graph6`], [`io`]);
//! * LD/LTD verification with concrete failure witnesses and exact
//!   branch-and-bound solvers ([`ld`], [`solve`]);
//! * twin detection, leaf/support identification, structural predicates for
//!   twin-free subcubic graphs, and embedding search for the special graphs
//!   `F₀…F₆` ([`twins`], [`fgraph`]);
//! * a constructive engine that builds a verified LD-set of size at most
//!   `⌊n/2⌋` for connected subcubic graphs without open twins of degree 1
//!   or 2 (other than `K₃`, `K₄`, `K₃,₃`), following an explicit case
//!   analysis and emitting a replayable certificate ([`construct`]);
//! * parametric generators for the tight and extremal families with their
//!   designated witnesses ([`families`]);
//! * exhaustive enumeration of small subcubic/cubic graphs up to isomorphism
//!   and conjecture sweeps over them ([`enumerate`]).

#![forbid(unsafe_code)]

pub mod construct;
pub mod enumerate;
pub mod families;
pub mod fgraph;
pub mod graph;
pub mod graph6;
pub mod io;
pub mod ld;
pub mod solve;
pub mod twins;

pub use construct::{
    construct_for_cubic, construct_half_ld, normalize_leaves_out, normalize_supports_in, CaseStep,
    ConstructError, HypothesisViolation, LdCertificate, RULE_TABLE,
};
pub use enumerate::{
    canonical_form, canonical_relabeling, enumerate_graphs, sweep_conjecture, sweep_graphs,
    DegreeFilter, EnumError, EnumFilter, SweepBound, SweepRecord, SweepReport,
};
pub use families::{generate, ClaimKind, FamilyError, FamilyInstance, FamilyKind, FamilySpec};
pub use fgraph::{
    f_graph, f_graph_order, find_f_embedding, find_f_embedding_with_u, FEmbedding, FLabel,
};
pub use graph::{Graph, GraphError, VertexMapping, VertexSet};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use io::{parse_any, parse_edge_list, to_edge_list, IoError};
pub use ld::{iset, verify_ld, verify_ltd, LdVerdict};
pub use solve::{
    ld_number_exact, ltd_number_exact, naive_ld_number, subcubic_lower_bound, SolveBudget,
    SolveError, SolveResult,
};
pub use twins::{
    check_structure_lemmas, four_cycles, leaves_and_supports, open_twins_of_degree, triangles,
    twin_report, StructureError, StructureReport, StructureViolation, TwinReport,
};

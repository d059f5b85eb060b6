//! The special graphs `F₀…F₆` and pinned-neighborhood subgraph search.
//!
//! Each `Fᵢ` contains a pair of degree-3 open twins `û, v̂` with common
//! neighbors `x̂, ŷ, ẑ`; the variants differ in how the second neighborhood
//! (`ŵ` and the primed vertices) is attached.  An *(F; U)-subgraph* of `G`
//! is an injective, edge-preserving image of `F` such that every vertex in
//! the anchor set `U` keeps its entire closed `G`-neighborhood inside the
//! image, with all its incident `G`-edges realized by `F`-edges.
//! Effectively a `U`-label must map to a `G`-vertex of exactly its
//! `F`-degree whose neighborhood is exactly the mapped `F`-neighborhood —
//! that is what lets a case analysis reason about the host graph around the
//! embedded copy.

use std::fmt;

use crate::graph::{Graph, VertexSet};

/// Vertex labels of the graphs `F₀…F₆` (each graph uses a subset).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FLabel {
    U,
    V,
    W,
    WPrime,
    X,
    XPrime,
    Y,
    YPrime,
    Z,
    ZPrime,
}

impl fmt::Display for FLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FLabel::U => "u",
            FLabel::V => "v",
            FLabel::W => "w",
            FLabel::WPrime => "w'",
            FLabel::X => "x",
            FLabel::XPrime => "x'",
            FLabel::Y => "y",
            FLabel::YPrime => "y'",
            FLabel::Z => "z",
            FLabel::ZPrime => "z'",
        };
        f.write_str(name)
    }
}

use FLabel::{WPrime, XPrime, YPrime, ZPrime, U, V, W, X, Y, Z};

/// Vertex label lists; the position of a label is its vertex index in
/// [`f_graph`]'s output.
const LABELS: [&[FLabel]; 7] = [
    &[U, V, X, Y, Z],
    &[U, V, W, WPrime, X, Y, Z],
    &[U, V, X, Y, YPrime, Z, ZPrime],
    &[U, V, X, XPrime, Y, Z],
    &[U, V, W, WPrime, X, XPrime, Y, Z],
    &[U, V, W, X, XPrime, Y, Z],
    &[U, V, X, XPrime, Y, YPrime, Z, ZPrime],
];

/// Edges over the label lists above, as index pairs.
const EDGES: [&[(usize, usize)]; 7] = [
    // F₀ = K₂,₃: u,v joined to x,y,z.
    &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
    // F₁: y,z share the extra neighbor w, which carries a pendant w'.
    &[
        (0, 4),
        (0, 5),
        (0, 6),
        (1, 4),
        (1, 5),
        (1, 6),
        (5, 2),
        (6, 2),
        (2, 3),
    ],
    // F₂: y and z carry separate pendants.
    &[
        (0, 2),
        (0, 3),
        (0, 5),
        (1, 2),
        (1, 3),
        (1, 5),
        (3, 4),
        (5, 6),
    ],
    // F₃: y,z adjacent (closed twins), x carries a pendant.
    &[
        (0, 2),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 4),
        (1, 5),
        (4, 5),
        (2, 3),
    ],
    // F₄: w joins y,z with pendant w'; x carries a pendant x'.
    &[
        (0, 4),
        (0, 6),
        (0, 7),
        (1, 4),
        (1, 6),
        (1, 7),
        (2, 6),
        (2, 7),
        (2, 3),
        (4, 5),
    ],
    // F₅: like F₄ but the pendants merge (w and x share the neighbor x').
    &[
        (0, 3),
        (0, 5),
        (0, 6),
        (1, 3),
        (1, 5),
        (1, 6),
        (2, 5),
        (2, 6),
        (3, 4),
        (2, 4),
    ],
    // F₆: x, y, z each carry their own pendant.
    &[
        (0, 2),
        (0, 4),
        (0, 6),
        (1, 2),
        (1, 4),
        (1, 6),
        (2, 3),
        (4, 5),
        (6, 7),
    ],
];

/// Anchor sets used by the case analysis.
const DEFAULT_U: [&[FLabel]; 7] = [
    &[U, V],
    &[U, V, W, X, Y, Z],
    &[U, V, X, Y, Z],
    &[U, V, X, Y, Z],
    &[U, V, W, X, Y, Z],
    &[U, V, W, X, Y, Z],
    &[U, V, X, Y, Z],
];

/// Number of vertices of `Fᵢ`.
///
/// Panics unless `i ≤ 6`.
pub fn f_graph_order(i: usize) -> usize {
    LABELS[i].len()
}

/// The graph `Fᵢ` together with the label of each vertex index.
///
/// Panics unless `i ≤ 6`.
pub fn f_graph(i: usize) -> (Graph, Vec<FLabel>) {
    let g = Graph::from_edges(LABELS[i].len(), EDGES[i]).expect("fixed edge lists are valid");
    (g, LABELS[i].to_vec())
}

/// An anchored embedding of some `Fᵢ` into a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FEmbedding {
    /// Which `Fᵢ` is embedded.
    pub family_index: usize,
    /// Label → host vertex, in label-list order.
    pub assignment: Vec<(FLabel, usize)>,
}

impl FEmbedding {
    /// Host vertex a label maps to.
    pub fn image_of(&self, label: FLabel) -> Option<usize> {
        self.assignment
            .iter()
            .find(|&&(l, _)| l == label)
            .map(|&(_, v)| v)
    }

    /// All host vertices in the image.
    pub fn images(&self) -> VertexSet {
        self.assignment.iter().map(|&(_, v)| v).collect()
    }
}

/// Finds an `(Fᵢ; U)`-subgraph with the anchor set the case analysis uses
/// (`F₀`: `{û,v̂}`; `F₁,F₄,F₅`: `{û,v̂,ŵ,x̂,ŷ,ẑ}`; `F₂,F₃,F₆`:
/// `{û,v̂,x̂,ŷ,ẑ}`), returning the lexicographically smallest assignment.
///
/// Panics unless `i ≤ 6`.
pub fn find_f_embedding(g: &Graph, i: usize) -> Option<FEmbedding> {
    find_f_embedding_with_u(g, i, DEFAULT_U[i])
}

/// Like [`find_f_embedding`] with an explicit anchor set.
///
/// Panics unless `i ≤ 6` and every anchor label belongs to `Fᵢ`.
pub fn find_f_embedding_with_u(g: &Graph, i: usize, u_set: &[FLabel]) -> Option<FEmbedding> {
    let labels = LABELS[i];
    let anchored: Vec<bool> = labels.iter().map(|l| u_set.contains(l)).collect();
    for l in u_set {
        assert!(labels.contains(l), "label {l} is not a vertex of F{i}");
    }
    let f_deg = {
        let mut d = vec![0usize; labels.len()];
        for &(a, b) in EDGES[i] {
            d[a] += 1;
            d[b] += 1;
        }
        d
    };
    let mut image = vec![usize::MAX; labels.len()];
    let mut used = vec![false; g.n()];
    let found = extend(g, i, &anchored, &f_deg, &mut image, &mut used, 0);
    if !found {
        return None;
    }
    let embedding = FEmbedding {
        family_index: i,
        assignment: labels.iter().copied().zip(image).collect(),
    };
    debug_assert!(embedding_is_valid(g, &embedding, u_set));
    Some(embedding)
}

/// Depth-first assignment of label index `k`; candidates ascend, so the
/// first complete assignment is lexicographically smallest.
fn extend(
    g: &Graph,
    i: usize,
    anchored: &[bool],
    f_deg: &[usize],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
) -> bool {
    if k == image.len() {
        return true;
    }
    'candidates: for w in 0..g.n() {
        if used[w] {
            continue;
        }
        // An anchored label keeps its whole neighborhood inside the image,
        // so its host degree is pinned; others just need room for their
        // F-edges.
        if anchored[k] {
            if g.degree(w) != f_deg[k] {
                continue;
            }
        } else if g.degree(w) < f_deg[k] {
            continue;
        }
        for prior in 0..k {
            let f_edge = EDGES[i].contains(&(prior, k)) || EDGES[i].contains(&(k, prior));
            let g_edge = g.has_edge(image[prior], w);
            if f_edge && !g_edge {
                continue 'candidates;
            }
            // Anchored vertices admit no host edges beyond their F-edges.
            if !f_edge && g_edge && (anchored[k] || anchored[prior]) {
                continue 'candidates;
            }
        }
        image[k] = w;
        used[w] = true;
        if extend(g, i, anchored, f_deg, image, used, k + 1) {
            return true;
        }
        used[w] = false;
        image[k] = usize::MAX;
    }
    false
}

/// Independent re-check of the embedding invariants: injectivity, every
/// F-edge realized, and anchored labels with exactly their mapped
/// F-neighborhood in the host.
fn embedding_is_valid(g: &Graph, emb: &FEmbedding, u_set: &[FLabel]) -> bool {
    let i = emb.family_index;
    let labels = LABELS[i];
    let image: Vec<usize> = emb.assignment.iter().map(|&(_, v)| v).collect();
    if emb
        .assignment
        .iter()
        .map(|&(l, _)| l)
        .ne(labels.iter().copied())
    {
        return false;
    }
    let distinct: VertexSet = image.iter().copied().collect();
    if distinct.len() != image.len() || image.iter().any(|&v| v >= g.n()) {
        return false;
    }
    if EDGES[i]
        .iter()
        .any(|&(a, b)| !g.has_edge(image[a], image[b]))
    {
        return false;
    }
    for (k, label) in labels.iter().enumerate() {
        if !u_set.contains(label) {
            continue;
        }
        let mapped_neighbors: VertexSet = EDGES[i]
            .iter()
            .filter_map(|&(a, b)| match () {
                _ if a == k => Some(image[b]),
                _ if b == k => Some(image[a]),
                _ => None,
            })
            .collect();
        let host_neighbors: VertexSet = g.open_neighbors(image[k]).iter().copied().collect();
        if host_neighbors != mapped_neighbors {
            return false;
        }
    }
    true
}

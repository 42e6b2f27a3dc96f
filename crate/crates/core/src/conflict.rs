//! Conflict graphs and validity checks for the three coloring kinds.
//!
//! A coloring of kind K is valid iff it is a proper coloring of the
//! corresponding conflict graph. For `TwoDistance` the conflict graph
//! contains the original edges, so properness on it already enforces
//! properness on the graph itself; for `Injective` and `ExactSquare`
//! adjacency alone is not a conflict.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum ColoringKind {
    /// Vertices at distance at most 2 must differ (includes properness).
    TwoDistance,
    /// Vertices with a common neighbor must differ.
    Injective,
    /// Vertices at distance exactly 2 must differ.
    ExactSquare,
}

impl ColoringKind {
    pub fn name(self) -> &'static str {
        match self {
            ColoringKind::TwoDistance => "2distance",
            ColoringKind::Injective => "injective",
            ColoringKind::ExactSquare => "exactsquare",
        }
    }

    pub fn parse(s: &str) -> Result<ColoringKind> {
        match s {
            "2distance" | "two-distance" | "2d" => Ok(ColoringKind::TwoDistance),
            "injective" | "inj" => Ok(ColoringKind::Injective),
            "exactsquare" | "exact-square" | "exact" => Ok(ColoringKind::ExactSquare),
            _ => Err(Error::input(format!("unknown coloring kind {s:?}"))),
        }
    }
}

/// Vertex-indexed color map; `None` marks uncolored vertices of a partial
/// coloring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    pub colors: Vec<Option<usize>>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Coloring {
        Coloring { colors: vec![None; n] }
    }

    pub fn total(colors: Vec<usize>) -> Coloring {
        Coloring { colors: colors.into_iter().map(Some).collect() }
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|c| c.is_some())
    }
}

/// Conflict graph of `g` for `kind`: same vertex set, one edge per pair of
/// vertices required to receive distinct colors.
pub fn conflict_graph(g: &Graph, kind: ColoringKind) -> Graph {
    let n = g.vertex_count();
    let mut out = Graph::new(n);
    // pairs with a common neighbor: cliques over each neighborhood
    let mut common = vec![Vec::new(); n];
    for w in 0..n {
        let nb = g.neighbors(w);
        for i in 0..nb.len() {
            for j in (i + 1)..nb.len() {
                common[nb[i]].push(nb[j]);
            }
        }
    }
    for u in 0..n {
        common[u].sort_unstable();
        common[u].dedup();
    }
    for u in 0..n {
        for &v in &common[u] {
            let conflict = match kind {
                ColoringKind::Injective => true,
                ColoringKind::ExactSquare => !g.has_edge(u, v),
                ColoringKind::TwoDistance => true,
            };
            if conflict && !out.has_edge(u, v) {
                out.add_edge(u, v).unwrap();
            }
        }
    }
    if kind == ColoringKind::TwoDistance {
        for (u, v) in g.edges() {
            if !out.has_edge(u, v) {
                out.add_edge(u, v).unwrap();
            }
        }
    }
    out
}

/// Validity of a total coloring; errors on a partial one.
pub fn is_valid(g: &Graph, kind: ColoringKind, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.vertex_count() {
        return Err(Error::input(format!(
            "coloring covers {} vertices, graph has {}",
            c.colors.len(),
            g.vertex_count()
        )));
    }
    if !c.is_total() {
        return Err(Error::input("coloring is partial; validity needs a total coloring"));
    }
    let conf = conflict_graph(g, kind);
    Ok(proper_on(&conf, c))
}

/// Properness of a (possibly partial) coloring on a conflict graph:
/// colored endpoints of every edge must differ.
pub fn proper_on(conflicts: &Graph, c: &Coloring) -> bool {
    conflicts.edges().iter().all(|&(u, v)| {
        match (c.colors[u], c.colors[v]) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        }
    })
}

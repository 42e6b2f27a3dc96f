//! Shared corpus construction and independent oracles for integration
//! tests. The oracles here are deliberately naive re-implementations,
//! kept separate from the library's code paths.

use distcolor::configs::TheoremId;
use distcolor::conflict::{ColoringKind, Coloring};
use distcolor::embed::PlaneGraph;
use distcolor::generate::{exhaustive_connected_graphs, random_plane_graph, RandomPlaneSpec};
use distcolor::graph::Graph;
use distcolor::planarity::planar_embedding;

pub fn embed(g: Graph) -> Option<PlaneGraph> {
    let rot = planar_embedding(&g).ok()?;
    PlaneGraph::build(g, rot).ok()
}

/// Exhaustive part of the corpus: every connected planar graph with max
/// degree 4 on at most `max_n` vertices, one embedding each.
pub fn exhaustive_plane_corpus(max_n: usize) -> Vec<PlaneGraph> {
    exhaustive_connected_graphs(max_n, 4)
        .into_iter()
        .filter_map(embed)
        .collect()
}

/// Random part of the corpus: connected plane graphs with max degree 4,
/// sizes 9..=60, both girth regimes, with and without densification.
pub fn random_plane_corpus(count: usize, seed_base: u64) -> Vec<PlaneGraph> {
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count {
        let seed = seed_base.wrapping_add(i);
        i += 1;
        let n = 9 + (seed % 52) as usize;
        let girth = if seed % 3 == 0 { 3 } else { 4 };
        let spec = RandomPlaneSpec {
            target_vertices: n,
            girth_min: girth,
            densify: seed % 2 == 0,
            seed,
        };
        if let Ok(pg) = random_plane_graph(spec) {
            out.push(pg);
        }
    }
    out
}

pub fn theorem_applies(pg: &PlaneGraph, t: TheoremId) -> bool {
    distcolor::configs::check_hypotheses(pg, t).is_ok()
}

/// Naive validity oracle straight from the definitions, via BFS distances.
pub fn naive_is_valid(g: &Graph, kind: ColoringKind, c: &Coloring) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        let dist = g.bfs_distances(u);
        for v in (u + 1)..n {
            let conflict = match kind {
                ColoringKind::TwoDistance => matches!(dist[v], Some(1) | Some(2)),
                ColoringKind::Injective => {
                    g.neighbors(u).iter().any(|&w| g.has_edge(v, w))
                }
                ColoringKind::ExactSquare => dist[v] == Some(2),
            };
            if conflict && c.colors[u] == c.colors[v] {
                return false;
            }
        }
    }
    true
}

/// Brute-force chromatic number: enumerate partitions of the vertex set
/// via restricted growth strings, keep the proper ones.
pub fn chromatic_bruteforce(g: &Graph) -> usize {
    fn rec(g: &Graph, assign: &mut Vec<usize>, next: usize, best: &mut usize) {
        let v = assign.len();
        if v == g.vertex_count() {
            *best = (*best).min(next);
            return;
        }
        if next >= *best {
            return;
        }
        for c in 0..=next.min(*best - 1) {
            let ok = g.neighbors(v).iter().all(|&w| w >= v || assign[w] != c);
            if ok {
                assign.push(c);
                rec(g, assign, next.max(c + 1), best);
                assign.pop();
            }
        }
    }
    if g.vertex_count() == 0 {
        return 0;
    }
    let mut best = g.vertex_count();
    rec(g, &mut Vec::new(), 0, &mut best);
    best
}

/// Exhaustive densest-subgraph oracle (all nonempty vertex subsets).
pub fn mad_exhaustive(g: &Graph) -> distcolor::Rational {
    let n = g.vertex_count();
    assert!(n <= 20);
    let edges = g.edges();
    let mut best = distcolor::charge::rat(0);
    for mask in 1u64..(1u64 << n) {
        let cnt = mask.count_ones() as i64;
        let es = edges
            .iter()
            .filter(|&&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
            .count() as i64;
        let d = distcolor::charge::frac(2 * es, cnt);
        if d > best {
            best = d;
        }
    }
    best
}

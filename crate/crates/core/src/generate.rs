//! Graph corpus generation: random connected plane graphs built by
//! planarity-preserving local operations, and exhaustive isomorphism-free
//! enumeration of small connected graphs.
//!
//! The random generator keeps the rotation system explicit the whole time,
//! so every produced graph carries a valid embedding by construction. Each
//! candidate operation is applied to a copy and committed only if the
//! degree bound, the girth bound, and the Euler check still hold.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embed::PlaneGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameters for one random plane graph.
#[derive(Clone, Copy, Debug)]
pub struct RandomPlaneSpec {
    pub target_vertices: usize,
    pub girth_min: usize,
    /// After growing, greedily add chords to push degrees toward 4.
    pub densify: bool,
    pub seed: u64,
}

/// Generates a connected plane graph with max degree 4 and the requested
/// girth bound. Deterministic for a fixed spec.
pub fn random_plane_graph(spec: RandomPlaneSpec) -> Result<PlaneGraph> {
    if spec.girth_min < 3 {
        return Err(Error::input("girth bound must be at least 3"));
    }
    if spec.target_vertices < spec.girth_min {
        return Err(Error::input("target size below the girth bound"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let start = spec.girth_min + rng.gen_range(0..2);
    let n0 = start.min(spec.target_vertices);
    let mut g = crate::graph::cycle(n0);
    let mut rot: Vec<Vec<usize>> = (0..n0)
        .map(|v| vec![(v + n0 - 1) % n0, (v + 1) % n0])
        .collect();

    let mut stall = 0;
    while g.vertex_count() < spec.target_vertices && stall < 200 {
        let choice = rng.gen_range(0..10);
        let grew = if choice < 3 {
            subdivide_random_edge(&mut g, &mut rot, &mut rng)
        } else if choice < 9 {
            add_random_path(&mut g, &mut rot, &mut rng, spec, false)
        } else {
            add_random_pendant(&mut g, &mut rot, &mut rng)
        };
        if grew {
            stall = 0;
        } else {
            stall += 1;
        }
    }
    if spec.densify {
        for _ in 0..(4 * g.vertex_count()) {
            add_random_path(&mut g, &mut rot, &mut rng, spec, true);
        }
    }
    PlaneGraph::build(g, rot)
}

fn subdivide_random_edge(g: &mut Graph, rot: &mut Vec<Vec<usize>>, rng: &mut ChaCha8Rng) -> bool {
    let edges = g.edges();
    let Some(&(u, v)) = edges.choose(rng) else { return false };
    let m = g.vertex_count();
    let mut g2 = g.clone();
    g2.remove_edge(u, v);
    let mut g3 = Graph::new(m + 1);
    for (a, b) in g2.edges() {
        g3.add_edge(a, b).unwrap();
    }
    g3.add_edge(u, m).unwrap();
    g3.add_edge(v, m).unwrap();
    let mut rot2 = rot.clone();
    rot2.push(vec![u, v]);
    for x in rot2[u].iter_mut() {
        if *x == v {
            *x = m;
        }
    }
    for x in rot2[v].iter_mut() {
        if *x == u {
            *x = m;
        }
    }
    *g = g3;
    *rot = rot2;
    true
}

/// Adds a path (or chord, when it keeps the girth bound) between two
/// occurrences on a randomly chosen face.
fn add_random_path(
    g: &mut Graph,
    rot: &mut Vec<Vec<usize>>,
    rng: &mut ChaCha8Rng,
    spec: RandomPlaneSpec,
    chord_only: bool,
) -> bool {
    let pg = match PlaneGraph::build(g.clone(), rot.clone()) {
        Ok(pg) => pg,
        Err(_) => return false,
    };
    let nf = pg.faces().len();
    if nf == 0 {
        return false;
    }
    let f = rng.gen_range(0..nf);
    let walk = &pg.face(f).walk;
    let d = walk.len();
    if d < 2 {
        return false;
    }
    let i = rng.gen_range(0..d);
    let j = rng.gen_range(0..d);
    if i == j {
        return false;
    }
    let u = walk[i].0;
    let v = walk[j].0;
    if u == v || g.degree(u) >= 4 || g.degree(v) >= 4 {
        return false;
    }
    let arc1 = (j + d - i) % d;
    let arc2 = (i + d - j) % d;
    // path length making both new cycles reach the girth bound
    let need = spec.girth_min.saturating_sub(arc1.min(arc2)).max(1);
    let extra = if chord_only || rng.gen_bool(0.7) { 0 } else { rng.gen_range(0..2) };
    let plen = need + extra;
    if chord_only && plen > 1 {
        return false;
    }
    if plen == 1 && g.has_edge(u, v) {
        return false;
    }
    let m = g.vertex_count();
    let interior = plen - 1;

    let mut g2 = Graph::new(m + interior);
    for (a, b) in g.edges() {
        g2.add_edge(a, b).unwrap();
    }
    let mut chain = vec![u];
    chain.extend(m..m + interior);
    chain.push(v);
    for w in chain.windows(2) {
        if g2.add_edge(w[0], w[1]).is_err() {
            return false;
        }
    }
    let mut rot2 = rot.clone();
    // entry darts at the two corners
    let x = walk[(i + d - 1) % d].0;
    let y = walk[(j + d - 1) % d].0;
    let first = chain[1];
    let lastp = chain[chain.len() - 2];
    insert_after(&mut rot2[u], x, first);
    insert_after(&mut rot2[v], y, lastp);
    for (k, &w) in chain.iter().enumerate().skip(1) {
        if w >= m {
            rot2.push(Vec::new());
            debug_assert_eq!(rot2.len() - 1, w);
            rot2[w] = vec![chain[k - 1], chain[k + 1]];
        }
    }
    if g2.max_degree() > 4 {
        return false;
    }
    if let Some(girth) = g2.girth() {
        if girth < spec.girth_min {
            return false;
        }
    }
    if PlaneGraph::build(g2.clone(), rot2.clone()).is_err() {
        return false;
    }
    *g = g2;
    *rot = rot2;
    true
}

fn insert_after(rot: &mut Vec<usize>, after: usize, what: usize) {
    let pos = rot.iter().position(|&x| x == after).unwrap();
    rot.insert(pos + 1, what);
}

fn add_random_pendant(g: &mut Graph, rot: &mut Vec<Vec<usize>>, rng: &mut ChaCha8Rng) -> bool {
    let n = g.vertex_count();
    let u = rng.gen_range(0..n);
    if g.degree(u) >= 4 || g.degree(u) == 0 {
        return false;
    }
    let m = n;
    let mut g2 = Graph::new(m + 1);
    for (a, b) in g.edges() {
        g2.add_edge(a, b).unwrap();
    }
    g2.add_edge(u, m).unwrap();
    let mut rot2 = rot.clone();
    let anchor = rot2[u][rng.gen_range(0..rot2[u].len())];
    insert_after(&mut rot2[u], anchor, m);
    rot2.push(vec![u]);
    *g = g2;
    *rot = rot2;
    true
}

// ---------------------------------------------------------------------------
// exhaustive enumeration of small connected graphs

/// All connected graphs with `1..=max_n` vertices and maximum degree at most
/// `max_degree`, one representative per isomorphism class.
pub fn exhaustive_connected_graphs(max_n: usize, max_degree: usize) -> Vec<Graph> {
    assert!(max_n <= 16, "exhaustive enumeration is for small n");
    let mut out: Vec<Graph> = Vec::new();
    let mut level: Vec<Graph> = vec![Graph::new(1)];
    out.extend(level.iter().cloned());
    for n in 2..=max_n {
        let mut keys: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut next: Vec<Graph> = Vec::new();
        for base in &level {
            // attach a new vertex to every feasible nonempty subset
            let candidates: Vec<usize> = (0..base.vertex_count())
                .filter(|&v| base.degree(v) < max_degree)
                .collect();
            let k = candidates.len();
            for mask in 1u32..(1 << k) {
                if (mask.count_ones() as usize) > max_degree {
                    continue;
                }
                let mut g = Graph::new(n);
                for (a, b) in base.edges() {
                    g.add_edge(a, b).unwrap();
                }
                for (idx, &v) in candidates.iter().enumerate() {
                    if mask & (1 << idx) != 0 {
                        g.add_edge(v, n - 1).unwrap();
                    }
                }
                let key = canonical_key(&g);
                if keys.insert(key) {
                    next.push(g);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Canonical adjacency key: the lexicographically largest row-bitmask matrix
/// over all vertex orderings compatible with iterated degree refinement.
pub fn canonical_key(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let colors = refine_colors(g);
    let mut best: Option<Vec<u32>> = None;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut rows: Vec<u32> = Vec::with_capacity(n);
    search_canonical(g, &colors, &mut perm, &mut used, &mut rows, &mut best, false);
    best.unwrap_or_default()
}

fn search_canonical(
    g: &Graph,
    colors: &[u64],
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    rows: &mut Vec<u32>,
    best: &mut Option<Vec<u32>>,
    mut strictly_greater: bool,
) {
    let n = g.vertex_count();
    let i = perm.len();
    if i == n {
        if best.is_none() || strictly_greater {
            *best = Some(rows.clone());
        }
        return;
    }
    // candidates: unused vertices of the minimal eligible color class
    let min_color = (0..n)
        .filter(|&v| !used[v])
        .map(|v| colors[v])
        .min()
        .unwrap();
    for v in 0..n {
        if used[v] || colors[v] != min_color {
            continue;
        }
        let mut row = 0u32;
        for (j, &w) in perm.iter().enumerate() {
            if g.has_edge(v, w) {
                row |= 1 << j;
            }
        }
        let mut sg = strictly_greater;
        if let Some(b) = best {
            if !sg {
                match row.cmp(&b[i]) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Greater => sg = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
        } else {
            sg = true;
        }
        perm.push(v);
        used[v] = true;
        rows.push(row);
        search_canonical(g, colors, perm, used, rows, best, sg);
        rows.pop();
        used[v] = false;
        perm.pop();
        strictly_greater = strictly_greater && false; // keep explicit
    }
}

/// 1-WL color refinement; returns a stable color per vertex.
fn refine_colors(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut colors: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    for _ in 0..n {
        let mut sigs: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        let next: Vec<u64> = sigs
            .drain(..)
            .map(|s| uniq.binary_search(&s).unwrap() as u64)
            .collect();
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

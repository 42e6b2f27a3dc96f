//! Planarity testing with embedding output, by incremental path addition
//! (Demoucron, Malgrange, Pertuiset).
//!
//! Each biconnected block is embedded separately: start from a cycle, then
//! repeatedly pick a fragment, route a path between two of its attachment
//! vertices through an admissible face, and split that face. A fragment with
//! no admissible face certifies nonplanarity. Blocks are glued at cut
//! vertices by concatenating their rotation cycles, which always yields a
//! plane embedding. Quadratic, which is plenty at the graph sizes used here.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Computes one plane embedding (a rotation system) of `g`, or an error if
/// `g` is not planar. Any embedding is acceptable; the result is
/// deterministic for a fixed input.
pub fn planar_embedding(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let contrib = embed_block(&block)?;
        for (v, cyc) in contrib {
            rotation[v].extend(cyc);
        }
    }
    Ok(rotation)
}

pub fn is_planar(g: &Graph) -> bool {
    planar_embedding(g).is_ok()
}

/// Biconnected components as edge lists, in a deterministic order.
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        edge_stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, u: usize, parent: usize) {
        s.disc[u] = s.timer;
        s.low[u] = s.timer;
        s.timer += 1;
        for i in 0..s.g.degree(u) {
            let w = s.g.neighbors(u)[i];
            if s.disc[w] == usize::MAX {
                s.edge_stack.push((u, w));
                dfs(s, w, u);
                s.low[u] = s.low[u].min(s.low[w]);
                if s.low[w] >= s.disc[u] {
                    let mut blk = Vec::new();
                    while let Some(e) = s.edge_stack.pop() {
                        blk.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    blk.reverse();
                    s.out.push(blk);
                }
            } else if w != parent && s.disc[w] < s.disc[u] {
                s.edge_stack.push((u, w));
                s.low[u] = s.low[u].min(s.disc[w]);
            }
        }
    }
    let n = g.vertex_count();
    let mut state = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        out: Vec::new(),
    };
    for root in 0..n {
        if state.disc[root] == usize::MAX {
            dfs(&mut state, root, usize::MAX);
        }
    }
    state.out
}

struct Fragment {
    /// Embedded vertices this fragment touches.
    attachments: BTreeSet<usize>,
    /// Interior (not yet embedded) vertices; empty for a chord.
    interior: BTreeSet<usize>,
    /// For a chord fragment, its single edge.
    chord: Option<(usize, usize)>,
}

/// Embeds one biconnected block; returns the rotation cycle of each vertex.
fn embed_block(edges: &[(usize, usize)]) -> Result<HashMap<usize, Vec<usize>>> {
    let mut verts: BTreeSet<usize> = BTreeSet::new();
    for &(u, v) in edges {
        verts.insert(u);
        verts.insert(v);
    }
    let adj: HashMap<usize, Vec<usize>> = {
        let mut a: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(u, v) in edges {
            a.entry(u).or_default().push(v);
            a.entry(v).or_default().push(u);
        }
        for l in a.values_mut() {
            l.sort_unstable();
        }
        a
    };

    let start_cycle = find_cycle(&adj, *verts.iter().next().unwrap())
        .ok_or_else(|| Error::internal("biconnected block without a cycle"))?;

    // faces as directed vertex cycles
    let mut faces: Vec<Vec<usize>> = Vec::new();
    faces.push(start_cycle.clone());
    faces.push(start_cycle.iter().rev().copied().collect());

    let mut embedded_v: HashSet<usize> = start_cycle.iter().copied().collect();
    let mut embedded_e: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..start_cycle.len() {
        let (a, b) = (start_cycle[i], start_cycle[(i + 1) % start_cycle.len()]);
        embedded_e.insert(norm(a, b));
    }

    loop {
        let fragments = compute_fragments(&verts, &adj, &embedded_v, &embedded_e);
        if fragments.is_empty() {
            break;
        }
        // admissible faces per fragment
        let mut choice: Option<(usize, usize)> = None; // (fragment idx, face idx)
        let mut fallback: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let fs: HashSet<usize> = f.iter().copied().collect();
                    frag.attachments.iter().all(|a| fs.contains(a))
                })
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => {
                    return Err(Error::embedding(
                        "graph is not planar (fragment with no admissible face)",
                    ))
                }
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if fallback.is_none() {
                        fallback = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.or(fallback).unwrap();
        let frag = &fragments[fi];

        let path = fragment_path(frag, &adj, &embedded_v);
        // split the face by the path
        let face = faces[face_idx].clone();
        let (a, b) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let mut f1: Vec<usize> = path.clone();
        {
            let mut t = (j + 1) % len;
            while t != i {
                f1.push(face[t]);
                t = (t + 1) % len;
            }
        }
        let mut f2: Vec<usize> = path.iter().rev().copied().collect();
        {
            let mut t = (i + 1) % len;
            while t != j {
                f2.push(face[t]);
                t = (t + 1) % len;
            }
        }
        faces[face_idx] = f1;
        faces.push(f2);

        for w in &path {
            embedded_v.insert(*w);
        }
        for k in 0..path.len() - 1 {
            embedded_e.insert(norm(path[k], path[k + 1]));
        }
    }

    // successor map -> rotation cycles
    let mut succ: HashMap<usize, HashMap<usize, usize>> = HashMap::new();
    for f in &faces {
        let len = f.len();
        for t in 0..len {
            let x = f[t];
            let v = f[(t + 1) % len];
            let y = f[(t + 2) % len];
            succ.entry(v).or_default().insert(x, y);
        }
    }
    let mut out = HashMap::new();
    for &v in &verts {
        let next = &succ[&v];
        let deg = adj[&v].len();
        let mut cyc = Vec::with_capacity(deg);
        let first = adj[&v][0];
        let mut cur = first;
        loop {
            cyc.push(cur);
            cur = *next
                .get(&cur)
                .ok_or_else(|| Error::internal("face successor map is incomplete"))?;
            if cur == first || cyc.len() > deg {
                break;
            }
        }
        if cyc.len() != deg {
            return Err(Error::internal("face successor map is not a single cycle"));
        }
        out.insert(v, cyc);
    }
    Ok(out)
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn find_cycle(adj: &HashMap<usize, Vec<usize>>, start: usize) -> Option<Vec<usize>> {
    fn dfs(
        adj: &HashMap<usize, Vec<usize>>,
        u: usize,
        parent: usize,
        path: &mut Vec<usize>,
        on_path: &mut HashSet<usize>,
        visited: &mut HashSet<usize>,
    ) -> Option<Vec<usize>> {
        path.push(u);
        on_path.insert(u);
        visited.insert(u);
        for &w in &adj[&u] {
            if w == parent {
                continue;
            }
            if on_path.contains(&w) {
                // back edge to an ancestor on the current path
                let i = path.iter().position(|&x| x == w).unwrap();
                return Some(path[i..].to_vec());
            }
            if !visited.contains(&w) {
                if let Some(c) = dfs(adj, w, u, path, on_path, visited) {
                    return Some(c);
                }
            }
        }
        path.pop();
        on_path.remove(&u);
        None
    }
    let mut path = Vec::new();
    let mut on_path = HashSet::new();
    let mut visited = HashSet::new();
    dfs(adj, start, usize::MAX, &mut path, &mut on_path, &mut visited)
}

fn compute_fragments(
    verts: &BTreeSet<usize>,
    adj: &HashMap<usize, Vec<usize>>,
    embedded_v: &HashSet<usize>,
    embedded_e: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut frags = Vec::new();
    // chords: non-embedded edges between embedded vertices
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for &u in verts {
        for &v in &adj[&u] {
            if u < v
                && embedded_v.contains(&u)
                && embedded_v.contains(&v)
                && !embedded_e.contains(&(u, v))
            {
                chords.push((u, v));
            }
        }
    }
    for (u, v) in chords {
        frags.push(Fragment {
            attachments: BTreeSet::from([u, v]),
            interior: BTreeSet::new(),
            chord: Some((u, v)),
        });
    }
    // components of the block minus embedded vertices
    let mut seen: HashSet<usize> = HashSet::new();
    for &s in verts {
        if embedded_v.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut interior = BTreeSet::new();
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen.insert(s);
        interior.insert(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[&u] {
                if embedded_v.contains(&w) {
                    attachments.insert(w);
                } else if seen.insert(w) {
                    interior.insert(w);
                    queue.push_back(w);
                }
            }
        }
        frags.push(Fragment { attachments, interior, chord: None });
    }
    frags
}

/// A path between two attachments of the fragment, internally disjoint from
/// the embedded subgraph.
fn fragment_path(
    frag: &Fragment,
    adj: &HashMap<usize, Vec<usize>>,
    embedded_v: &HashSet<usize>,
) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let mut iter = frag.attachments.iter();
    let a = *iter.next().unwrap();
    let b = *iter.next().unwrap();
    // BFS from a through interior vertices to b
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in &adj[&a] {
        if frag.interior.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in &adj[&u] {
            if w == b {
                let mut path = vec![b, u];
                let mut cur = u;
                while cur != a {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.reverse();
                return path;
            }
            if frag.interior.contains(&w) && !prev.contains_key(&w) && !embedded_v.contains(&w) {
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment attachments must be connected through its interior")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::embed::PlaneGraph;
    use crate::graph::{complete, cycle, Graph};

    fn check_embeds(g: Graph) {
        let rot = planar_embedding(&g).unwrap();
        PlaneGraph::build(g, rot).unwrap();
    }

    #[test]
    fn planar_fixtures_embed() {
        check_embeds(complete(4));
        check_embeds(cycle(7));
        check_embeds(constructions::theta_graph(4).unwrap());
        check_embeds(constructions::grid(3, 4).unwrap().graph().clone());
        // trees and disconnected graphs
        check_embeds(crate::graph::path(6));
        let mut g = Graph::new(7);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        g.add_edge(3, 4).unwrap();
        g.add_edge(2, 4).unwrap();
        check_embeds(g);
    }

    #[test]
    fn cut_vertex_gluing() {
        // two triangles sharing a vertex
        let mut g = Graph::new(5);
        for (u, v) in [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)] {
            g.add_edge(u, v).unwrap();
        }
        check_embeds(g);
    }

    #[test]
    fn nonplanar_rejected() {
        assert!(planar_embedding(&complete(5)).is_err());
        let mut k33 = Graph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                k33.add_edge(u, v).unwrap();
            }
        }
        assert!(planar_embedding(&k33).is_err());
        assert!(planar_embedding(&constructions::petersen()).is_err());
        assert!(planar_embedding(&constructions::incidence_graph_pg(2).unwrap()).is_err());
    }

    #[test]
    fn dense_planar_embeds() {
        // maximal planar graph on 6 vertices (octahedron)
        let mut g = Graph::new(6);
        for (u, v) in [
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1),
            (5, 1), (5, 2), (5, 3), (5, 4),
        ] {
            g.add_edge(u, v).unwrap();
        }
        let rot = planar_embedding(&g).unwrap();
        let pg = PlaneGraph::build(g, rot).unwrap();
        assert_eq!(pg.faces().len(), 8);
    }
}

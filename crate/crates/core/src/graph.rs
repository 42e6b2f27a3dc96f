//! Simple undirected graphs with the degree/distance/neighborhood metrics
//! used throughout, plus exact maximum average degree.
//!
//! Vertex IDs are dense 0-based integers and stay stable across queries.
//! Disconnected graphs are permitted; reductions may disconnect graphs.

use std::collections::VecDeque;

use crate::charge::{frac, rat, Rational};
use crate::error::{Error, Result};

/// Simple undirected graph as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges listed once, `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.adj.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::input(format!("vertex out of range: edge ({u},{v}) in graph on {n} vertices")));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::input(format!("duplicate edge ({u},{v})")));
        }
        let pu = self.adj[u].partition_point(|&x| x < v);
        self.adj[u].insert(pu, v);
        let pv = self.adj[v].partition_point(|&x| x < u);
        self.adj[v].insert(pv, u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].retain(|&x| x != v);
        self.adj[v].retain(|&x| x != u);
    }

    /// Removes `v`; IDs above `v` shift down by one.
    pub fn remove_vertex(&mut self, v: usize) {
        let nbrs = std::mem::take(&mut self.adj[v]);
        for u in nbrs {
            self.adj[u].retain(|&x| x != v);
        }
        self.adj.remove(v);
        for a in self.adj.iter_mut() {
            for x in a.iter_mut() {
                if *x > v {
                    *x -= 1;
                }
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distance; `None` when `u` and `v` are in different components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut dist = vec![None; self.adj.len()];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &w in &self.adj[x] {
                if dist[w].is_none() {
                    if w == v {
                        return Some(dx + 1);
                    }
                    dist[w] = Some(dx + 1);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.adj.len();
        let mut best: Option<usize> = None;
        // BFS from every vertex; a non-tree edge at depths (d1, d2) closes a
        // cycle of length d1 + d2 + 1 through the root.
        for src in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// N*: vertices at distance 1 or 2, sorted.
    pub fn two_distance_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.adj.len()];
        seen[v] = true;
        let mut out = Vec::new();
        for &u in &self.adj[v] {
            if !seen[u] {
                seen[u] = true;
                out.push(u);
            }
        }
        for &u in &self.adj[v] {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// N^{#2}: vertices at distance exactly 2, sorted.
    pub fn exact_two_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.two_distance_neighborhood(v);
        out.retain(|&w| !self.has_edge(v, w));
        out
    }

    /// d* = |N*|.
    pub fn two_distance_degree(&self, v: usize) -> usize {
        self.two_distance_neighborhood(v).len()
    }

    /// d^{#2} = |N^{#2}|.
    pub fn exact_two_degree(&self, v: usize) -> usize {
        self.exact_two_neighborhood(v).len()
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut comp = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut verts = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        verts.push(w);
                        queue.push_back(w);
                    }
                }
            }
            verts.sort_unstable();
            comps.push(verts);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Induced subgraph on `verts` (must be sorted, deduplicated).
    /// Returns the subgraph and the map from new IDs to old IDs.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut new_of_old = vec![usize::MAX; self.adj.len()];
        for (i, &v) in verts.iter().enumerate() {
            new_of_old[v] = i;
        }
        let mut g = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = new_of_old[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        (g, verts.to_vec())
    }

    /// Exact maximum average degree: max over nonempty subgraphs H of
    /// 2|E(H)|/|V(H)|. Computed by iterated maximum-density subgraph via
    /// min-cut (Dinkelbach iteration over exact rationals).
    pub fn mad(&self) -> Result<Rational> {
        let n = self.adj.len();
        if n == 0 {
            return Err(Error::input("mad of empty graph"));
        }
        let m = self.edge_count();
        if m == 0 {
            return Ok(rat(0));
        }
        // Maximum density = max_S |E(S)|/|S|; mad = 2 * that.
        // Dinkelbach: start from the whole graph's density; repeat max-flow
        // decision "is there S with q*e(S) - p*|S| > 0" and jump to the
        // witness's density until no improvement.
        let edges = self.edges();
        let mut best = frac(m as i64, n as i64);
        loop {
            let p = *best.numer();
            let q = *best.denom();
            match densest_improve(n, &edges, p, q) {
                Some(subset) => {
                    let es = edges
                        .iter()
                        .filter(|&&(u, v)| subset[u] && subset[v])
                        .count() as i64;
                    let vs = subset.iter().filter(|&&b| b).count() as i64;
                    let cand = frac(es, vs);
                    debug_assert!(cand > best);
                    best = cand;
                }
                None => break,
            }
        }
        Ok(best * rat(2))
    }
}

/// One Dinkelbach step: find S with q*e(S) - p*|S| > 0, or None.
/// Network: source -> edge node (cap q), edge node -> endpoints (inf),
/// vertex -> sink (cap p). Source side of a min cut gives S.
fn densest_improve(n: usize, edges: &[(usize, usize)], p: i64, q: i64) -> Option<Vec<bool>> {
    let m = edges.len();
    // nodes: 0 = source, 1..=m edges, m+1..=m+n vertices, m+n+1 sink
    let source = 0;
    let sink = m + n + 1;
    let mut net = Dinic::new(m + n + 2);
    let inf = q * m as i64 + p * n as i64 + 1;
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add_edge(source, 1 + i, q);
        net.add_edge(1 + i, 1 + m + u, inf);
        net.add_edge(1 + i, 1 + m + v, inf);
    }
    for v in 0..n {
        net.add_edge(1 + m + v, sink, p);
    }
    let flow = net.max_flow(source, sink);
    if flow >= q * m as i64 {
        return None; // min cut severs every edge node: no improving subset
    }
    let reach = net.min_cut_side(source);
    let subset: Vec<bool> = (0..n).map(|v| reach[1 + m + v]).collect();
    if subset.iter().any(|&b| b) {
        Some(subset)
    } else {
        None
    }
}

/// Dinic max-flow on integer capacities.
struct Dinic {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Dinic {
        Dinic {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        let e = self.to.len();
        self.head[u].push(e);
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(e + 1);
        self.to.push(u);
        self.cap.push(0);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, f: i64) -> i64 {
        if u == t {
            return f;
        }
        while self.iter[u] < self.head[u].len() {
            let e = self.head[u][self.iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Vertices reachable from `s` in the residual network.
    fn min_cut_side(&self, s: usize) -> Vec<bool> {
        let mut reach = vec![false; self.head.len()];
        reach[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !reach[v] {
                    reach[v] = true;
                    queue.push_back(v);
                }
            }
        }
        reach
    }
}

/// Cycle with `n` vertices.
pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).unwrap();
    }
    g
}

/// Path with `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n.saturating_sub(1) {
        g.add_edge(i, i + 1).unwrap();
    }
    g
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Circulant graph C_n(connections).
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph> {
    let mut g = Graph::new(n);
    for &s in steps {
        if s == 0 || s >= n {
            return Err(Error::input(format!("circulant step {s} out of range for n={n}")));
        }
        for v in 0..n {
            let w = (v + s) % n;
            if !g.has_edge(v, w) {
                g.add_edge(v, w)?;
            }
        }
    }
    Ok(g)
}

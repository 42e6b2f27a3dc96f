//! Exact list-coloring, chromatic number, precoloring extension, and
//! Hall-type feasibility.
//!
//! The list-coloring solver is a complete backtracking search with
//! most-constrained-vertex ordering (ties broken by smallest vertex ID),
//! ascending color order, forward checking, and Hall-violation pruning on
//! greedily collected cliques. Identical inputs give identical outputs.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conflict::{conflict_graph, proper_on, Coloring, ColoringKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-vertex color lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ListAssignment {
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    /// Uniform lists {0..k-1} for every vertex.
    pub fn uniform(n: usize, k: usize) -> ListAssignment {
        ListAssignment { lists: vec![(0..k).collect(); n] }
    }

    pub fn new(mut lists: Vec<Vec<usize>>) -> ListAssignment {
        for l in lists.iter_mut() {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct UnsatInfo {
    /// Mutually conflicting vertices whose lists cannot be distinctly
    /// colored (a Hall violator) when one was found; otherwise the
    /// neighborhood of the deepest failure.
    pub conflict_set: Vec<usize>,
}

#[derive(Clone, Debug)]
pub enum SolveResult {
    Colored(Coloring),
    Unsat(UnsatInfo),
}

impl SolveResult {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            SolveResult::Colored(c) => Some(c),
            SolveResult::Unsat(_) => None,
        }
    }

    pub fn is_sat(&self) -> bool {
        matches!(self, SolveResult::Colored(_))
    }
}

/// Exact list-coloring of a conflict graph. Every vertex must carry a list;
/// Unsat is a result, not an error.
pub fn color_with_lists(conflicts: &Graph, lists: &ListAssignment) -> SolveResult {
    let n = conflicts.vertex_count();
    assert_eq!(lists.lists.len(), n, "lists must cover all vertices");
    // the cap comfortably covers the Delta^2 + 1 cliques of squared graphs
    let cliques = greedy_cliques(conflicts, 20);
    let mut search = Search {
        g: conflicts,
        domains: lists.lists.clone(),
        assigned: vec![None; n],
        cliques: &cliques,
        vertex_cliques: index_cliques(n, &cliques),
        failure_hint: None,
    };
    // root-level Hall check over every tracked clique
    for (ci, clique) in cliques.iter().enumerate() {
        if let Some(violator) = search.hall_violator(ci) {
            return SolveResult::Unsat(UnsatInfo { conflict_set: violator });
        }
        let _ = clique;
    }
    if search.run() {
        let coloring = Coloring { colors: search.assigned.clone() };
        debug_assert!(proper_on(conflicts, &coloring));
        SolveResult::Colored(coloring)
    } else {
        let hint = search
            .failure_hint
            .unwrap_or_else(|| (0..n).collect());
        SolveResult::Unsat(UnsatInfo { conflict_set: hint })
    }
}

struct Search<'a> {
    g: &'a Graph,
    domains: Vec<Vec<usize>>,
    assigned: Vec<Option<usize>>,
    cliques: &'a [Vec<usize>],
    vertex_cliques: Vec<Vec<usize>>,
    failure_hint: Option<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn run(&mut self) -> bool {
        let pick = self.pick_vertex();
        let v = match pick {
            Some(v) => v,
            None => return true,
        };
        let colors = self.domains[v].clone();
        for c in colors {
            let removed = self.assign(v, c);
            let ok = removed.iter().all(|&(w, _)| !self.domains[w].is_empty())
                && self.vertex_cliques[v]
                    .iter()
                    .all(|&ci| self.hall_violator(ci).is_none());
            if ok && self.run() {
                return true;
            }
            self.unassign(v, removed);
        }
        if self.failure_hint.is_none() {
            let mut hint: Vec<usize> = self
                .g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| self.assigned[w].is_some())
                .collect();
            hint.push(v);
            hint.sort_unstable();
            self.failure_hint = Some(hint);
        }
        false
    }

    fn pick_vertex(&self) -> Option<usize> {
        (0..self.g.vertex_count())
            .filter(|&v| self.assigned[v].is_none())
            .min_by_key(|&v| (self.domains[v].len(), v))
    }

    fn assign(&mut self, v: usize, c: usize) -> Vec<(usize, usize)> {
        self.assigned[v] = Some(c);
        let mut removed = Vec::new();
        for &w in self.g.neighbors(v) {
            if self.assigned[w].is_none() {
                if let Ok(pos) = self.domains[w].binary_search(&c) {
                    self.domains[w].remove(pos);
                    removed.push((w, c));
                }
            }
        }
        removed
    }

    fn unassign(&mut self, v: usize, removed: Vec<(usize, usize)>) {
        self.assigned[v] = None;
        for (w, c) in removed {
            let pos = self.domains[w].partition_point(|&x| x < c);
            self.domains[w].insert(pos, c);
        }
    }

    /// Checks the clique's uncolored members for a system of distinct colors;
    /// returns a Hall-violating subset when none exists.
    fn hall_violator(&self, ci: usize) -> Option<Vec<usize>> {
        let members: Vec<usize> = self.cliques[ci]
            .iter()
            .copied()
            .filter(|&v| self.assigned[v].is_none())
            .collect();
        if members.is_empty() {
            return None;
        }
        let lists: Vec<&[usize]> = members.iter().map(|&v| self.domains[v].as_slice()).collect();
        match sdr_deficiency(&lists) {
            None => None,
            Some(bad) => Some(bad.into_iter().map(|i| members[i]).collect()),
        }
    }
}

/// Greedy maximal cliques covering every vertex, capped at `max_size`.
fn greedy_cliques(g: &Graph, max_size: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut cliques = Vec::new();
    for &s in &order {
        if covered[s] {
            continue;
        }
        let mut clique = vec![s];
        for &w in g.neighbors(s) {
            if clique.len() >= max_size {
                break;
            }
            if clique.iter().all(|&x| g.has_edge(x, w)) {
                clique.push(w);
            }
        }
        clique.sort_unstable();
        for &v in &clique {
            covered[v] = true;
        }
        if clique.len() >= 2 {
            cliques.push(clique);
        }
    }
    cliques
}

fn index_cliques(n: usize, cliques: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut idx = vec![Vec::new(); n];
    for (ci, c) in cliques.iter().enumerate() {
        for &v in c {
            idx[v].push(ci);
        }
    }
    idx
}

/// Bipartite matching of items to colors. Returns one chosen color per item
/// when a system of distinct colors exists.
pub fn sdr_feasible(lists: &[Vec<usize>]) -> Option<Vec<usize>> {
    let refs: Vec<&[usize]> = lists.iter().map(|l| l.as_slice()).collect();
    match sdr_deficiency(&refs) {
        Some(_) => None,
        None => {
            let (matched, assignment) = sdr_matching(&refs);
            debug_assert_eq!(matched, lists.len());
            Some(assignment.into_iter().map(|c| c.unwrap()).collect())
        }
    }
}

/// Maximum matching items -> colors (Kuhn's algorithm over the distinct
/// colors present). Returns (matched count, per-item color).
fn sdr_matching(lists: &[&[usize]]) -> (usize, Vec<Option<usize>>) {
    let mut colors: Vec<usize> = lists.iter().flat_map(|l| l.iter().copied()).collect();
    colors.sort_unstable();
    colors.dedup();
    let color_idx = |c: usize| colors.binary_search(&c).unwrap();
    let mut owner: Vec<Option<usize>> = vec![None; colors.len()]; // color -> item
    let mut matched = 0;
    for item in 0..lists.len() {
        let mut seen = vec![false; colors.len()];
        if kuhn(item, lists, &color_idx, &mut owner, &mut seen) {
            matched += 1;
        }
    }
    let mut assignment = vec![None; lists.len()];
    for (ci, o) in owner.iter().enumerate() {
        if let Some(item) = o {
            assignment[*item] = Some(colors[ci]);
        }
    }
    (matched, assignment)
}

fn kuhn(
    item: usize,
    lists: &[&[usize]],
    color_idx: &dyn Fn(usize) -> usize,
    owner: &mut Vec<Option<usize>>,
    seen: &mut Vec<bool>,
) -> bool {
    for &c in lists[item] {
        let ci = color_idx(c);
        if seen[ci] {
            continue;
        }
        seen[ci] = true;
        if owner[ci].is_none() || kuhn(owner[ci].unwrap(), lists, color_idx, owner, seen) {
            owner[ci] = Some(item);
            return true;
        }
    }
    false
}

/// When no SDR exists, returns the indices of a Hall-violating subset
/// (items reachable from an unmatched item by alternating paths; their
/// lists' union is smaller than the subset).
fn sdr_deficiency(lists: &[&[usize]]) -> Option<Vec<usize>> {
    let (matched, assignment) = sdr_matching(lists);
    if matched == lists.len() {
        return None;
    }
    let unmatched = assignment.iter().position(|a| a.is_none()).unwrap();
    // alternating BFS from the unmatched item
    let mut colors: Vec<usize> = lists.iter().flat_map(|l| l.iter().copied()).collect();
    colors.sort_unstable();
    colors.dedup();
    let mut item_of_color: std::collections::HashMap<usize, usize> = Default::default();
    for (i, a) in assignment.iter().enumerate() {
        if let Some(c) = a {
            item_of_color.insert(*c, i);
        }
    }
    let mut in_set = vec![false; lists.len()];
    in_set[unmatched] = true;
    let mut frontier = vec![unmatched];
    while let Some(i) = frontier.pop() {
        for &c in lists[i] {
            if let Some(&j) = item_of_color.get(&c) {
                if !in_set[j] {
                    in_set[j] = true;
                    frontier.push(j);
                }
            }
        }
    }
    Some((0..lists.len()).filter(|&i| in_set[i]).collect())
}

/// Exact chromatic number of a conflict graph: incremental k with uniform
/// lists, starting from a greedy clique lower bound (whose vertices are
/// pre-colored as symmetry breaking).
pub fn chromatic_number(conflicts: &Graph) -> usize {
    let n = conflicts.vertex_count();
    if n == 0 {
        return 0;
    }
    if conflicts.edge_count() == 0 {
        return 1;
    }
    let clique = best_greedy_clique(conflicts);
    let mut k = clique.len().max(1);
    loop {
        let lists = ListAssignment::uniform(n, k);
        let mut partial = Coloring::uncolored(n);
        for (i, &v) in clique.iter().enumerate() {
            partial.colors[v] = Some(i);
        }
        if solve_with_partial(conflicts, &lists, &partial).is_sat() {
            return k;
        }
        k += 1;
    }
}

fn best_greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best: Vec<usize> = Vec::new();
    for &s in order.iter().take(8) {
        let mut clique = vec![s];
        let mut cand: Vec<usize> = g.neighbors(s).to_vec();
        cand.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for w in cand {
            if clique.iter().all(|&x| g.has_edge(x, w)) {
                clique.push(w);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

fn solve_with_partial(conflicts: &Graph, lists: &ListAssignment, partial: &Coloring) -> SolveResult {
    let n = conflicts.vertex_count();
    let mut reduced = lists.clone();
    for v in 0..n {
        if let Some(c) = partial.colors[v] {
            reduced.lists[v] = vec![c];
        } else {
            let mut dom = reduced.lists[v].clone();
            for &w in conflicts.neighbors(v) {
                if let Some(c) = partial.colors[w] {
                    dom.retain(|&x| x != c);
                }
            }
            reduced.lists[v] = dom;
        }
    }
    color_with_lists(conflicts, &reduced)
}

/// Completes a partial coloring of `g` under `kind`, drawing the colors of
/// uncolored vertices from their residual lists (list minus the colors they
/// see). Errors if the partial coloring is already invalid.
pub fn extend_precoloring(
    g: &Graph,
    kind: ColoringKind,
    partial: &Coloring,
    lists: &ListAssignment,
) -> Result<SolveResult> {
    let n = g.vertex_count();
    if partial.colors.len() != n || lists.lists.len() != n {
        return Err(Error::input("partial coloring and lists must cover all vertices"));
    }
    let conflicts = conflict_graph(g, kind);
    if !proper_on(&conflicts, partial) {
        return Err(Error::input("partial coloring violates a conflict"));
    }
    if partial.is_total() {
        return Ok(SolveResult::Colored(partial.clone()));
    }
    Ok(solve_with_partial(&conflicts, lists, partial))
}

/// Outcome of the randomized k-choosability probe.
#[derive(Clone, Debug, Serialize)]
pub struct ChoosabilityReport {
    pub kind: String,
    pub k: usize,
    pub pool: usize,
    pub trials_requested: usize,
    pub trials_run: usize,
    /// A list assignment with no valid coloring, when one was found; the
    /// exact solver's Unsat makes it a certified refutation of
    /// k-choosability.
    pub refutation: Option<RefutedAssignment>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RefutedAssignment {
    pub trial: usize,
    pub lists: Vec<Vec<usize>>,
    pub conflict_set: Vec<usize>,
}

/// Draws random k-subsets of a color pool, solves each instance exactly,
/// and stops at the first refutation.
pub fn sampled_choosability(
    g: &Graph,
    kind: ColoringKind,
    k: usize,
    trials: usize,
    seed: u64,
    pool: usize,
) -> Result<ChoosabilityReport> {
    if pool < k {
        return Err(Error::input(format!("pool {pool} smaller than list size {k}")));
    }
    let n = g.vertex_count();
    let conflicts = conflict_graph(g, kind);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let palette: Vec<usize> = (0..pool).collect();
    let mut report = ChoosabilityReport {
        kind: kind.name().to_string(),
        k,
        pool,
        trials_requested: trials,
        trials_run: 0,
        refutation: None,
    };
    for trial in 0..trials {
        let lists: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let mut l: Vec<usize> = palette
                    .choose_multiple(&mut rng, k)
                    .copied()
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        report.trials_run = trial + 1;
        let assignment = ListAssignment::new(lists.clone());
        if let SolveResult::Unsat(info) = color_with_lists(&conflicts, &assignment) {
            report.refutation = Some(RefutedAssignment {
                trial,
                lists,
                conflict_set: info.conflict_set,
            });
            break;
        }
    }
    Ok(report)
}

//! Constructive coloring: find a reducible configuration, apply its
//! reduction surgery, color the smaller graph recursively, then extend the
//! coloring with the exact solver.
//!
//! Extension uses the general solver rather than the per-lemma hand case
//! analyses; the lemmas guarantee extendability, the solver finds it. After
//! every surgery the uncolored set is widened to cover all neighbors of
//! deleted vertices and endpoints of deleted edges, so every conflict of the
//! original graph that the surgery removed involves an uncolored vertex;
//! this keeps the inherited partial coloring valid and cannot hurt
//! extendability (uncoloring more vertices is monotone).

use serde_json::{json, Value};

use crate::configs::{self, bad_face_injg4, ConfigWitness, TheoremId};
use crate::conflict::Coloring;
use crate::embed::{surgery, PlaneGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io;
use crate::solver::{extend_precoloring, ListAssignment, SolveResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Surgery {
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    /// Delete a 2-vertex and join its neighbors with a new edge placed at
    /// its former rotation slots (DeleteVertex + AddEdge of the statement).
    ContractTwoVertex(usize),
}

#[derive(Clone, Debug)]
pub struct ReductionRecipe {
    pub lemma: String,
    pub surgery: Vec<Surgery>,
    /// Vertices re-colored during extension (original IDs). Widened
    /// automatically with the safety set around deletions.
    pub uncolored_after: Vec<usize>,
}

/// Extension failure: would contradict the lemma's proof. Carries the
/// subgraph, the lists, and the lemma for triage.
#[derive(Clone, Debug)]
pub struct GapReport {
    pub lemma: String,
    pub graph: Value,
    pub lists: Value,
    pub uncolored: Vec<usize>,
}

impl GapReport {
    pub fn to_json(&self) -> Value {
        json!({
            "lemma": self.lemma,
            "graph": self.graph,
            "lists": self.lists,
            "uncolored": self.uncolored,
        })
    }
}

#[derive(Clone, Debug)]
pub enum ConstructiveOutcome {
    Colored(Coloring),
    Gap(GapReport),
}

/// The surgery and uncolored set of the witness's lemma proof.
pub fn recipe_for(pg: &PlaneGraph, w: &ConfigWitness) -> Result<ReductionRecipe> {
    let g = pg.graph();
    let v = &w.vertices;
    let recipe = |surgery: Vec<Surgery>, uncolored: Vec<usize>| ReductionRecipe {
        lemma: w.lemma.clone(),
        surgery,
        uncolored_after: uncolored,
    };
    let r = match w.lemma.as_str() {
        // --- 2-distance, girth >= 4 ---
        "2dg4:minimumDegree" => {
            let u = v[0];
            match g.degree(u) {
                0 | 1 => recipe(vec![Surgery::DeleteVertex(u)], vec![u]),
                2 => {
                    let (a, b) = (g.neighbors(u)[0], g.neighbors(u)[1]);
                    let mut h = g.clone();
                    h.remove_vertex(u);
                    let shift = |x: usize| if x > u { x - 1 } else { x };
                    let far = h
                        .distance(shift(a), shift(b))
                        .map_or(true, |d| d >= 3);
                    if far {
                        recipe(vec![Surgery::ContractTwoVertex(u)], vec![u])
                    } else {
                        recipe(vec![Surgery::DeleteVertex(u)], vec![u])
                    }
                }
                d => return Err(Error::internal(format!("minimumDegree witness of degree {d}"))),
            }
        }
        "2dg4:config1:i" => recipe(vec![Surgery::DeleteEdge(v[0], v[1])], vec![v[0]]),
        "2dg4:config1:ii" | "2dg4:config1:iii" => {
            recipe(vec![Surgery::DeleteEdge(v[0], v[1])], vec![v[0], v[1]])
        }
        "2dg4:config2i" => recipe(
            vec![Surgery::DeleteVertex(v[3]), Surgery::DeleteVertex(v[4])],
            v.clone(),
        ),
        "2dg4:config2ii" => recipe(
            vec![Surgery::DeleteVertex(v[0]), Surgery::DeleteVertex(v[4])],
            v.clone(),
        ),

        // --- injective, any girth ---
        "injg3:minimumDegree" => {
            let u = v[0];
            match g.degree(u) {
                0 | 1 => recipe(vec![Surgery::DeleteVertex(u)], vec![u]),
                2 => recipe(vec![Surgery::DeleteVertex(u)], vec![u, v[1]]),
                d => return Err(Error::internal(format!("minimumDegree witness of degree {d}"))),
            }
        }
        "injg3:config1:i" | "injg3:config1:ii" | "injg3:config1:iii" => {
            recipe(vec![Surgery::DeleteEdge(v[0], v[1])], vec![v[0], v[1]])
        }
        "injg3:config1:iv" => {
            // third small cycle through u leaving {u,v,w,x}: delete the edge
            // toward its outside vertex; otherwise delete the shared edge
            let (u, vv, ww, xx) = (v[0], v[1], v[2], v[3]);
            let cycles = configs::simple_cycles_up_to(g, 4);
            let mut cut: Option<usize> = None;
            for c in cycles.iter().filter(|c| c.contains(&u)) {
                if c.len() == 3 && c.iter().any(|&z| ![u, vv, ww, xx].contains(&z)) {
                    let y = c
                        .iter()
                        .copied()
                        .find(|&z| ![u, vv, ww, xx].contains(&z) && g.has_edge(u, z));
                    if let Some(y) = y {
                        cut = Some(y);
                        break;
                    }
                }
            }
            match cut {
                Some(y) => recipe(vec![Surgery::DeleteEdge(u, y)], vec![u, y]),
                None => recipe(vec![Surgery::DeleteEdge(u, vv)], vec![u, vv]),
            }
        }
        "injg3:config2" => recipe(
            vec![Surgery::DeleteVertex(v[1]), Surgery::DeleteVertex(v[2])],
            v.clone(),
        ),
        "injg3:config3" => recipe(vec![Surgery::DeleteVertex(v[3])], v.clone()),
        "injg3:config9" | "injg3:config4" | "injg3:config5" => recipe(
            (0..5).map(|i| Surgery::DeleteVertex(v[i])).collect(),
            v.clone(),
        ),
        "injg3:config6" => {
            // bad 5-face adjacent to a 4-face: delete the four face vertices
            // away from the 4-face edge; uncolor the face, the 4-face pair,
            // and the apexes next to the 4-face edge
            let (tails, lab) = bad_face_labeling(pg, w.faces[0], w.faces[1])?;
            let [u1, u2, u3, u4, _u5] = lab;
            let mut unc = tails.clone();
            unc.extend(face_partners(pg, w.faces[1], u2, u3));
            unc.extend(apexes_of(pg, w.faces[0], w.faces[1]));
            recipe(
                vec![
                    Surgery::DeleteVertex(u1),
                    Surgery::DeleteVertex(u2),
                    Surgery::DeleteVertex(u3),
                    Surgery::DeleteVertex(u4),
                ],
                unc,
            )
        }
        "injg3:config7" => {
            let (tails, _) = bad_face_labeling(pg, w.faces[0], w.faces[1])?;
            let mut unc = tails.clone();
            unc.extend(apexes_of(pg, w.faces[0], w.faces[1]));
            let [u1, u2, u3, u4, u5] = [tails[0], tails[1], tails[2], tails[3], tails[4]];
            unc.extend(face_partners(pg, w.faces[1], u2, u3));
            recipe(
                vec![
                    Surgery::DeleteVertex(u1),
                    Surgery::DeleteVertex(u2),
                    Surgery::DeleteVertex(u3),
                    Surgery::DeleteVertex(u4),
                    Surgery::DeleteVertex(u5),
                ],
                unc,
            )
        }

        // --- injective, girth >= 4 ---
        "injg4:minimumDegree" => recipe(vec![Surgery::DeleteVertex(v[0])], vec![v[0]]),
        "injg4:counting" | "injg4:config1:ii" | "injg4:config1:iii" | "injg4:config1:vi" => {
            // delete the 2-neighbor, re-color it and the 4-vertex
            recipe(vec![Surgery::DeleteVertex(v[1])], vec![v[0], v[1]])
        }
        "injg4:config1:i" => recipe(vec![Surgery::DeleteEdge(v[0], v[1])], vec![v[0], v[1]]),
        "injg4:config1:iv" => recipe(vec![Surgery::DeleteVertex(v[0])], vec![v[0]]),
        "injg4:config1:v" => recipe(vec![Surgery::DeleteEdge(v[0], v[1])], vec![v[0]]),
        "injg4:config3" => {
            let mut unc: Vec<usize> = pg.face(w.faces[0]).vertices().collect();
            unc.extend(pg.face(w.faces[1]).vertices());
            recipe(vec![Surgery::DeleteVertex(v[2])], unc)
        }
        "injg4:config4" => {
            let (a, b) = (v[0], v[1]);
            if g.has_edge(a, b) {
                recipe(vec![Surgery::DeleteEdge(a, b)], vec![a, b])
            } else if g.degree(a) == 2 && g.degree(b) == 2 {
                let m = walk_middle(pg, w.faces[0], a, b)
                    .ok_or_else(|| Error::internal("config4 pair without a middle vertex"))?;
                recipe(vec![Surgery::DeleteVertex(a)], vec![m, a])
            } else {
                // a small 3-vertex: delete the 2-vertex of its bad face
                let s = if g.degree(a) == 3 { a } else { b };
                let bad = pg
                    .incident_faces(s)
                    .into_iter()
                    .find(|&f| bad_face_injg4(pg, f))
                    .ok_or_else(|| Error::internal("small 3-vertex without a bad face"))?;
                let two = pg
                    .face(bad)
                    .vertices()
                    .find(|&x| g.degree(x) == 2)
                    .ok_or_else(|| Error::internal("bad face without a 2-vertex"))?;
                let mut unc = vec![two, s, a, b];
                if let Some(m) = walk_middle(pg, w.faces[0], a, b) {
                    unc.push(m);
                }
                if let Some(m2) = walk_middle(pg, bad, two, s) {
                    unc.push(m2);
                }
                recipe(vec![Surgery::DeleteVertex(two)], unc)
            }
        }

        // --- exact square, any girth ---
        "exact:minimumDegree" => recipe(vec![Surgery::DeleteVertex(v[0])], vec![v[0]]),
        "exact:counting" => recipe(vec![Surgery::DeleteEdge(v[0], v[1])], v.clone()),
        "exact:config1:i" | "exact:config1:ii" | "exact:config1:iii" | "exact:config1:iv" => {
            recipe(vec![Surgery::DeleteEdge(v[0], v[1])], vec![v[0], v[1]])
        }
        "exact:config1:v" | "exact:config1:vii" => {
            recipe(vec![Surgery::DeleteEdge(v[0], v[1])], vec![v[0], v[1]])
        }
        "exact:config1:vi" => {
            let u = v[0];
            let a = g.neighbors(u)[0];
            recipe(vec![Surgery::DeleteEdge(a, u)], vec![a, u])
        }
        "exact:config2" => recipe(vec![Surgery::DeleteEdge(v[0], v[1])], vec![v[0], v[1]]),
        "exact:config3" => recipe(vec![Surgery::DeleteVertex(v[0])], v.clone()),
        "exact:config4" => {
            // delete the edge shared by the 5-cycle and the triangle
            let cyc = &v[0..5];
            let (a, b) = (v[6], v[7]);
            recipe(vec![Surgery::DeleteEdge(a, b)], cyc.to_vec())
        }
        other => return Err(Error::internal(format!("no recipe for lemma {other}"))),
    };
    Ok(r)
}

/// Labeling u1..u5 of a bad 5-face such that the companion face sits on
/// edge u2u3.
fn bad_face_labeling(
    pg: &PlaneGraph,
    f: usize,
    companion: usize,
) -> Result<(Vec<usize>, [usize; 5])> {
    let walk = &pg.face(f).walk;
    let d = walk.len();
    for i in 0..d {
        let (p, q) = walk[i];
        if pg.face_of_dart((q, p)) == companion {
            // label so that (p, q) = (u2, u3)
            let tails: Vec<usize> = pg.face(f).vertices().collect();
            let pos = tails.iter().position(|&x| x == p).unwrap();
            let lab = [
                tails[(pos + d - 1) % d],
                tails[pos],
                tails[(pos + 1) % d],
                tails[(pos + 2) % d],
                tails[(pos + 3) % d],
            ];
            return Ok((tails, lab));
        }
    }
    Err(Error::internal("companion face not adjacent"))
}

/// The neighbors of u and v on face `f` other than each other.
fn face_partners(pg: &PlaneGraph, f: usize, u: usize, v: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &(p, q) in &pg.face(f).walk {
        if p == u && q != v {
            out.push(q);
        }
        if q == u && p != v {
            out.push(p);
        }
        if p == v && q != u {
            out.push(q);
        }
        if q == v && p != u {
            out.push(p);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Apexes of the 3-faces adjacent to `f`, skipping `skip`.
fn apexes_of(pg: &PlaneGraph, f: usize, skip: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &(p, q) in &pg.face(f).walk {
        let og = pg.face_of_dart((q, p));
        if og != f && og != skip && pg.face(og).size() == 3 {
            if let Some(apex) = pg.face(og).vertices().find(|&x| x != p && x != q) {
                out.push(apex);
            }
        }
    }
    out
}

/// Middle vertex between two occurrences at facial distance 2.
fn walk_middle(pg: &PlaneGraph, f: usize, a: usize, b: usize) -> Option<usize> {
    let tails: Vec<usize> = pg.face(f).vertices().collect();
    let d = tails.len();
    for i in 0..d {
        if tails[i] == a && tails[(i + 2) % d] == b {
            return Some(tails[(i + 1) % d]);
        }
        if tails[i] == b && tails[(i + 2) % d] == a {
            return Some(tails[(i + 1) % d]);
        }
    }
    None
}

/// Colors `pg` constructively under theorem `t`: find the first witness,
/// apply its recipe, recurse, extend. Components are colored independently.
pub fn color_constructive(
    pg: &PlaneGraph,
    t: TheoremId,
    lists: &ListAssignment,
) -> Result<ConstructiveOutcome> {
    let g = pg.graph();
    let n = g.vertex_count();
    if lists.lists.len() != n {
        return Err(Error::input("lists must cover all vertices"));
    }
    for (v, l) in lists.lists.iter().enumerate() {
        if l.len() < t.list_size() {
            return Err(Error::input(format!(
                "vertex {v} has {} colors, theorem {} needs {}",
                l.len(),
                t.name(),
                t.list_size()
            )));
        }
    }
    if g.max_degree() > 4 {
        return Err(Error::hypothesis("maximum degree exceeds 4"));
    }
    if t.girth_min() == 4 {
        if let Some(girth) = g.girth() {
            if girth < 4 {
                return Err(Error::hypothesis("girth below 4"));
            }
        }
    }
    color_rec(g.clone(), pg.rotation().to_vec(), lists.clone(), t)
}

fn color_rec(
    g: Graph,
    rot: Vec<Vec<usize>>,
    lists: ListAssignment,
    t: TheoremId,
) -> Result<ConstructiveOutcome> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ConstructiveOutcome::Colored(Coloring::uncolored(0)));
    }
    if n == 1 {
        let c = *lists.lists[0]
            .first()
            .ok_or_else(|| Error::input("empty list"))?;
        return Ok(ConstructiveOutcome::Colored(Coloring::total(vec![c])));
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        let mut colors = vec![None; n];
        for comp in comps {
            let (sub, old_of_new) = g.induced(&comp);
            let mut new_of_old = vec![usize::MAX; n];
            for (i, &o) in old_of_new.iter().enumerate() {
                new_of_old[o] = i;
            }
            let sub_rot: Vec<Vec<usize>> = old_of_new
                .iter()
                .map(|&o| rot[o].iter().map(|&x| new_of_old[x]).collect())
                .collect();
            let sub_lists =
                ListAssignment::new(old_of_new.iter().map(|&o| lists.lists[o].clone()).collect());
            match color_rec(sub, sub_rot, sub_lists, t)? {
                ConstructiveOutcome::Colored(c) => {
                    for (i, &o) in old_of_new.iter().enumerate() {
                        colors[o] = c.colors[i];
                    }
                }
                gap @ ConstructiveOutcome::Gap(_) => return Ok(gap),
            }
        }
        return Ok(ConstructiveOutcome::Colored(Coloring { colors }));
    }

    let pg = PlaneGraph::build(g.clone(), rot.clone())?;
    let witnesses = configs::detect_all(&pg, t)?;
    let Some(witness) = witnesses.first() else {
        // contradicts unavoidability; report as a gap
        return Ok(ConstructiveOutcome::Gap(GapReport {
            lemma: "unavoidability".to_string(),
            graph: io::plane_graph_to_json(&pg),
            lists: io::lists_to_json(&lists),
            uncolored: Vec::new(),
        }));
    };
    let recipe = recipe_for(&pg, witness)?;

    // widen the uncolored set with the safety margin around deletions
    let mut uncolored = recipe.uncolored_after.clone();
    for s in &recipe.surgery {
        match *s {
            Surgery::DeleteVertex(v) => {
                uncolored.push(v);
                uncolored.extend_from_slice(g.neighbors(v));
            }
            Surgery::DeleteEdge(u, v) => {
                uncolored.push(u);
                uncolored.push(v);
            }
            Surgery::ContractTwoVertex(u) => uncolored.push(u),
        }
    }
    uncolored.sort_unstable();
    uncolored.dedup();

    // apply the surgery: edges first, then vertex deletions in descending
    // ID order so the shift bookkeeping stays simple
    let mut g2 = g.clone();
    let mut rot2 = rot.clone();
    let size_before = g2.vertex_count() + g2.edge_count();
    let mut deletions: Vec<usize> = Vec::new();
    let mut contraction: Option<usize> = None;
    for s in &recipe.surgery {
        match *s {
            Surgery::DeleteEdge(u, v) => surgery::delete_edge(&mut g2, &mut rot2, u, v),
            Surgery::DeleteVertex(v) => deletions.push(v),
            Surgery::ContractTwoVertex(u) => contraction = Some(u),
        }
    }
    deletions.sort_unstable_by(|a, b| b.cmp(a));
    for v in &deletions {
        surgery::delete_vertex(&mut g2, &mut rot2, *v);
    }
    if let Some(u) = contraction {
        debug_assert!(deletions.is_empty());
        surgery::contract_two_vertex(&mut g2, &mut rot2, u);
        deletions.push(u);
    }
    deletions.sort_unstable();
    if g2.vertex_count() + g2.edge_count() >= size_before {
        return Err(Error::internal(format!(
            "surgery for {} does not shrink the graph",
            recipe.lemma
        )));
    }
    // hypothesis preservation
    if g2.max_degree() > 4 {
        return Err(Error::internal(format!(
            "surgery for {} broke the degree bound",
            recipe.lemma
        )));
    }
    if t.girth_min() == 4 {
        if let Some(girth) = g2.girth() {
            if girth < 4 {
                return Err(Error::internal(format!(
                    "surgery for {} broke the girth bound",
                    recipe.lemma
                )));
            }
        }
    }

    // old id -> new id (deleted vertices drop out; the rest shift down)
    let mut new_of_old: Vec<Option<usize>> = Vec::with_capacity(n);
    let mut next = 0usize;
    for v in 0..n {
        if deletions.binary_search(&v).is_ok() {
            new_of_old.push(None);
        } else {
            new_of_old.push(Some(next));
            next += 1;
        }
    }
    let lists2 = ListAssignment::new(
        (0..n)
            .filter(|&v| new_of_old[v].is_some())
            .map(|v| lists.lists[v].clone())
            .collect(),
    );

    let sub = match color_rec(g2, rot2, lists2, t)? {
        ConstructiveOutcome::Colored(c) => c,
        gap @ ConstructiveOutcome::Gap(_) => return Ok(gap),
    };

    let mut partial = Coloring::uncolored(n);
    for v in 0..n {
        if let Some(nv) = new_of_old[v] {
            partial.colors[v] = sub.colors[nv];
        }
    }
    for &v in &uncolored {
        partial.colors[v] = None;
    }
    match extend_precoloring(&g, t.kind(), &partial, &lists)? {
        SolveResult::Colored(c) => Ok(ConstructiveOutcome::Colored(c)),
        SolveResult::Unsat(_) => Ok(ConstructiveOutcome::Gap(GapReport {
            lemma: recipe.lemma.clone(),
            graph: io::plane_graph_to_json(&pg),
            lists: io::lists_to_json(&lists),
            uncolored,
        })),
    }
}

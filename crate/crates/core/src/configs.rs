//! Detectors for the reducible configurations of the four discharging
//! arguments, plus the face and vertex classifications they rely on.
//!
//! Each detector reports every occurrence of its configuration, canonically
//! deduplicated (lexicographically minimal vertex tuple per occurrence).
//! Lemmas stated as "G does not contain X" yield witnesses of X; counting
//! lemmas yield witnesses of their violation.
//!
//! Patterns that reference a "4-cycle" match cycles; patterns that say
//! "face" match faces. Where a lemma glues a small cycle onto another small
//! cycle, the glued vertices outside the shared edge are distinct (the
//! degenerate identifications are covered by other configurations, and the
//! proofs instantiate these lemmas with distinct vertices throughout).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::conflict::ColoringKind;
use crate::embed::PlaneGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum TheoremId {
    /// 2-distance list coloring, girth >= 4, 11 colors.
    TwoDistG4,
    /// Injective list coloring, any girth, 11 colors.
    InjG3,
    /// Injective list coloring, girth >= 4, 9 colors.
    InjG4,
    /// Exact square list coloring, any girth, 10 colors.
    Exact,
}

pub const ALL_THEOREMS: [TheoremId; 4] =
    [TheoremId::TwoDistG4, TheoremId::InjG3, TheoremId::InjG4, TheoremId::Exact];

impl TheoremId {
    pub fn kind(self) -> ColoringKind {
        match self {
            TheoremId::TwoDistG4 => ColoringKind::TwoDistance,
            TheoremId::InjG3 | TheoremId::InjG4 => ColoringKind::Injective,
            TheoremId::Exact => ColoringKind::ExactSquare,
        }
    }

    /// Required list size (Delta = 4 throughout).
    pub fn list_size(self) -> usize {
        match self {
            TheoremId::TwoDistG4 => 11,
            TheoremId::InjG3 => 11,
            TheoremId::InjG4 => 9,
            TheoremId::Exact => 10,
        }
    }

    /// Minimum girth hypothesis.
    pub fn girth_min(self) -> usize {
        match self {
            TheoremId::TwoDistG4 | TheoremId::InjG4 => 4,
            TheoremId::InjG3 | TheoremId::Exact => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::TwoDistG4 => "2dg4",
            TheoremId::InjG3 => "injg3",
            TheoremId::InjG4 => "injg4",
            TheoremId::Exact => "exact",
        }
    }

    pub fn parse(s: &str) -> Result<TheoremId> {
        match s {
            "2dg4" => Ok(TheoremId::TwoDistG4),
            "injg3" => Ok(TheoremId::InjG3),
            "injg4" => Ok(TheoremId::InjG4),
            "exact" => Ok(TheoremId::Exact),
            _ => Err(Error::input(format!("unknown theorem {s:?}"))),
        }
    }

    /// Detection and reduction priority: minimum-degree lemmas first, then
    /// lemma order as stated.
    pub fn lemma_order(self) -> &'static [&'static str] {
        match self {
            TheoremId::TwoDistG4 => &[
                "2dg4:minimumDegree",
                "2dg4:config1:i",
                "2dg4:config1:ii",
                "2dg4:config1:iii",
                "2dg4:config2i",
                "2dg4:config2ii",
            ],
            TheoremId::InjG3 => &[
                "injg3:minimumDegree",
                "injg3:config1:i",
                "injg3:config1:ii",
                "injg3:config1:iii",
                "injg3:config1:iv",
                "injg3:config2",
                "injg3:config3",
                "injg3:config9",
                "injg3:config4",
                "injg3:config5",
                "injg3:config6",
                "injg3:config7",
            ],
            TheoremId::InjG4 => &[
                "injg4:minimumDegree",
                "injg4:counting",
                "injg4:config1:i",
                "injg4:config1:ii",
                "injg4:config1:iii",
                "injg4:config1:iv",
                "injg4:config1:v",
                "injg4:config1:vi",
                "injg4:config3",
                "injg4:config4",
            ],
            TheoremId::Exact => &[
                "exact:minimumDegree",
                "exact:counting",
                "exact:config1:i",
                "exact:config1:ii",
                "exact:config1:iii",
                "exact:config1:iv",
                "exact:config1:v",
                "exact:config1:vi",
                "exact:config1:vii",
                "exact:config2",
                "exact:config3",
                "exact:config4",
            ],
        }
    }

    pub fn lemma_rank(self, lemma: &str) -> usize {
        self.lemma_order()
            .iter()
            .position(|&l| l == lemma)
            .unwrap_or(usize::MAX)
    }
}

/// A detected reducible configuration. The vertex tuple layout is
/// lemma-specific; the reducer re-derives the surgery from it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConfigWitness {
    pub theorem: TheoremId,
    pub lemma: String,
    pub vertices: Vec<usize>,
    pub faces: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FaceClass {
    Bad,
    Good,
    NotApplicable,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexClass {
    Small,
    Medium,
    Large,
    NotThreeMinus,
}

/// Validates connectivity, the degree bound, and the girth hypothesis.
pub fn check_hypotheses(pg: &PlaneGraph, t: TheoremId) -> Result<()> {
    if pg.graph().vertex_count() == 0 {
        return Err(Error::hypothesis("empty graph"));
    }
    if !pg.graph().is_connected() {
        return Err(Error::hypothesis(format!(
            "{}: graph must be connected",
            t.name()
        )));
    }
    let delta = pg.graph().max_degree();
    if delta > 4 {
        return Err(Error::hypothesis(format!(
            "{}: maximum degree {delta} exceeds 4",
            t.name()
        )));
    }
    if t.girth_min() == 4 {
        if let Some(g) = pg.graph().girth() {
            if g < 4 {
                return Err(Error::hypothesis(format!(
                    "{}: girth {g} below required 4",
                    t.name()
                )));
            }
        }
    }
    Ok(())
}

/// Every occurrence of every configuration of theorem `t`, sorted by lemma
/// priority and then by vertex tuple.
pub fn detect_all(pg: &PlaneGraph, t: TheoremId) -> Result<Vec<ConfigWitness>> {
    check_hypotheses(pg, t)?;
    let ctx = Ctx::new(pg);
    let mut acc = WitnessSet::new(t);
    match t {
        TheoremId::TwoDistG4 => detect_2dg4(&ctx, &mut acc),
        TheoremId::InjG3 => detect_injg3(&ctx, &mut acc),
        TheoremId::InjG4 => detect_injg4(&ctx, &mut acc),
        TheoremId::Exact => detect_exact(&ctx, &mut acc),
    }
    Ok(acc.into_sorted())
}

/// Bad/good classification of a face under a theorem's definition.
/// InjG3: a 5-face is bad if adjacent (per shared edge) to four 3-faces.
/// InjG4: a 5-face is bad if incident to a 2-vertex and a 3-vertex; good
/// means a 5+-face that is not a bad 5-face.
pub fn classify_face(pg: &PlaneGraph, f: usize, t: TheoremId) -> FaceClass {
    match t {
        TheoremId::InjG3 => {
            if pg.face(f).size() != 5 {
                FaceClass::NotApplicable
            } else if bad_face_injg3(pg, f) {
                FaceClass::Bad
            } else {
                FaceClass::Good
            }
        }
        TheoremId::InjG4 => {
            if pg.face(f).size() < 5 {
                FaceClass::NotApplicable
            } else if bad_face_injg4(pg, f) {
                FaceClass::Bad
            } else {
                FaceClass::Good
            }
        }
        _ => FaceClass::NotApplicable,
    }
}

pub fn bad_face_injg3(pg: &PlaneGraph, f: usize) -> bool {
    pg.face(f).size() == 5 && three_face_neighbors(pg, f) >= 4
}

/// Number of edges of `f` whose other side is a 3-face.
pub fn three_face_neighbors(pg: &PlaneGraph, f: usize) -> usize {
    pg.face(f)
        .walk
        .iter()
        .filter(|&&(u, v)| {
            let g = pg.face_of_dart((v, u));
            g != f && pg.face(g).size() == 3
        })
        .count()
}

pub fn bad_face_injg4(pg: &PlaneGraph, f: usize) -> bool {
    if pg.face(f).size() != 5 {
        return false;
    }
    let g = pg.graph();
    let has2 = pg.face(f).vertices().any(|v| g.degree(v) == 2);
    let has3 = pg.face(f).vertices().any(|v| g.degree(v) == 3);
    has2 && has3
}

/// Small/medium/large classification of 3-minus vertices (InjG4 sense).
pub fn classify_vertex(pg: &PlaneGraph, v: usize) -> VertexClass {
    let d = pg.graph().degree(v);
    if d >= 4 {
        return VertexClass::NotThreeMinus;
    }
    if d <= 2 {
        return VertexClass::Small;
    }
    let on_bad5 = pg
        .incident_faces(v)
        .iter()
        .any(|&f| bad_face_injg4(pg, f));
    let on_4face = pg.vertex_on_face_of_size(v, 4);
    match (on_bad5, on_4face) {
        (true, true) => VertexClass::Small,
        (true, false) | (false, true) => VertexClass::Medium,
        (false, false) => VertexClass::Large,
    }
}

// ---------------------------------------------------------------------------
// shared structural context

pub(crate) struct Ctx<'a> {
    pub pg: &'a PlaneGraph,
    pub g: &'a Graph,
    pub n: usize,
    /// All simple cycles of length 3..=5, canonical (min vertex first,
    /// smaller second-vs-last direction).
    pub cycles: Vec<Vec<usize>>,
    /// Cycle indices through each vertex.
    pub cycles_at: Vec<Vec<usize>>,
}

impl<'a> Ctx<'a> {
    pub fn new(pg: &'a PlaneGraph) -> Ctx<'a> {
        let g = pg.graph();
        let n = g.vertex_count();
        let cycles = simple_cycles_up_to(g, 5);
        let mut cycles_at = vec![Vec::new(); n];
        for (i, c) in cycles.iter().enumerate() {
            for &v in c {
                cycles_at[v].push(i);
            }
        }
        Ctx { pg, g, n, cycles, cycles_at }
    }

    pub fn cycles_through(&self, v: usize, len: usize) -> Vec<&Vec<usize>> {
        self.cycles_at[v]
            .iter()
            .map(|&i| &self.cycles[i])
            .filter(|c| c.len() == len)
            .collect()
    }

    /// Is edge {u, v} on some cycle of exactly `len` vertices?
    pub fn edge_on_cycle(&self, u: usize, v: usize, len: usize) -> bool {
        self.cycles_at[u]
            .iter()
            .any(|&i| self.cycles[i].len() == len && cycle_has_edge(&self.cycles[i], u, v))
    }

    /// Does some face at edge {u, v} have the given size?
    pub fn edge_on_face_of_size(&self, u: usize, v: usize, size: usize) -> bool {
        let (a, b) = self.pg.edge_faces(u, v);
        self.pg.face(a).size() == size || self.pg.face(b).size() == size
    }

    /// The face on the other side of edge {u, v} from `f`, when distinct.
    pub fn other_face(&self, f: usize, u: usize, v: usize) -> Option<usize> {
        let (a, b) = self.pg.edge_faces(u, v);
        if a == f && b == f {
            None
        } else if a == f {
            Some(b)
        } else if b == f {
            Some(a)
        } else {
            None
        }
    }

    pub fn tails(&self, f: usize) -> Vec<usize> {
        self.pg.face(f).vertices().collect()
    }
}

pub(crate) fn cycle_has_edge(c: &[usize], u: usize, v: usize) -> bool {
    let k = c.len();
    (0..k).any(|i| {
        let (a, b) = (c[i], c[(i + 1) % k]);
        (a, b) == (u, v) || (a, b) == (v, u)
    })
}

/// All simple cycles with at most `maxlen` vertices, canonical form:
/// smallest vertex first, second element smaller than the last.
pub(crate) fn simple_cycles_up_to(g: &Graph, maxlen: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for root in 0..n {
        path.push(root);
        extend_cycles(g, root, maxlen, &mut path, &mut out);
        path.pop();
    }
    out
}

fn extend_cycles(
    g: &Graph,
    root: usize,
    maxlen: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == root {
            if path.len() >= 3 && path[1] < *path.last().unwrap() {
                out.push(path.clone());
            }
            continue;
        }
        if w <= root || path.contains(&w) || path.len() == maxlen {
            continue;
        }
        path.push(w);
        extend_cycles(g, root, maxlen, path, out);
        path.pop();
    }
}

// ---------------------------------------------------------------------------
// witness accumulation with canonical dedup

struct WitnessSet {
    theorem: TheoremId,
    // (lemma rank, occurrence key) -> minimal (vertices, faces)
    map: BTreeMap<(usize, Vec<usize>), (String, Vec<usize>, Vec<usize>)>,
}

impl WitnessSet {
    fn new(theorem: TheoremId) -> WitnessSet {
        WitnessSet { theorem, map: BTreeMap::new() }
    }

    fn insert(&mut self, lemma: &str, key: Vec<usize>, vertices: Vec<usize>, faces: Vec<usize>) {
        let rank = self.theorem.lemma_rank(lemma);
        debug_assert!(rank != usize::MAX, "unknown lemma {lemma}");
        match self.map.entry((rank, key)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert((lemma.to_string(), vertices, faces));
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let cur = e.get_mut();
                if (&vertices, &faces) < (&cur.1, &cur.2) {
                    cur.1 = vertices;
                    cur.2 = faces;
                }
            }
        }
    }

    fn into_sorted(self) -> Vec<ConfigWitness> {
        let theorem = self.theorem;
        self.map
            .into_iter()
            .map(|(_, (lemma, vertices, faces))| ConfigWitness {
                theorem,
                lemma,
                vertices,
                faces,
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// 2-distance, girth >= 4

fn detect_2dg4(ctx: &Ctx, acc: &mut WitnessSet) {
    min_degree_witnesses(ctx, acc, "2dg4:minimumDegree", 2);
    for u in 0..ctx.n {
        if ctx.g.degree(u) != 3 {
            continue;
        }
        let four_cycles = ctx.cycles_through(u, 4);
        // (i) a 3-vertex incident to two 4-cycles
        if four_cycles.len() >= 2 {
            let x = common_cycle_edge_at(u, four_cycles[0], four_cycles[1]);
            acc.insert("2dg4:config1:i", vec![u], vec![u, x], vec![]);
        }
        // (ii) a 3-vertex incident to a 4-cycle and adjacent to a 3-vertex
        if !four_cycles.is_empty() {
            for &v in ctx.g.neighbors(u) {
                if ctx.g.degree(v) == 3 {
                    acc.insert(
                        "2dg4:config1:ii",
                        vec![u.min(v), u.max(v)],
                        vec![u, v],
                        vec![],
                    );
                }
            }
        }
        // (iii) a 3-vertex adjacent to two 3-vertices
        let three_nbrs: Vec<usize> = ctx
            .g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| ctx.g.degree(v) == 3)
            .collect();
        if three_nbrs.len() >= 2 {
            acc.insert(
                "2dg4:config1:iii",
                vec![u],
                vec![u, three_nbrs[0], three_nbrs[1]],
                vec![],
            );
        }
    }
    // config2i / config2ii: glued pairs of 5-faces
    for f in 0..ctx.pg.faces().len() {
        if ctx.pg.face(f).size() != 5 {
            continue;
        }
        let tails_f = ctx.tails(f);
        for lab_f in five_labelings(&tails_f) {
            // f labeled v1..v5 with d(v1)=d(v3)=d(v5)=3 and a 4-face on v2v3
            let [v1, v2, v3, v4, v5] = lab_f;
            if ctx.g.degree(v1) != 3 || ctx.g.degree(v3) != 3 || ctx.g.degree(v5) != 3 {
                continue;
            }
            if !ctx.edge_on_face_of_size(v2, v3, 4) {
                continue;
            }
            // config2i: another 5-face across v4v5 labeled v'1,v'2,v'3,v4,v5
            if let Some(fp) = ctx.other_face(f, v4, v5) {
                if ctx.pg.face(fp).size() == 5 {
                    for lab_fp in five_labelings(&ctx.tails(fp)) {
                        let [w1, w2, w3, w4, w5] = lab_fp;
                        if (w4, w5) != (v4, v5) {
                            continue;
                        }
                        if ctx.g.degree(w2) == 3 && ctx.g.degree(w3) == 3 && ctx.g.degree(w5) == 3
                        {
                            acc.insert(
                                "2dg4:config2i",
                                vec![f, fp, v4.min(v5), v4.max(v5)],
                                vec![v1, v2, v3, v4, v5, w1, w2, w3],
                                vec![f, fp],
                            );
                        }
                    }
                }
            }
            // config2ii: another 5-face across v1v5 with the same pattern
            if let Some(fp) = ctx.other_face(f, v1, v5) {
                if ctx.pg.face(fp).size() == 5 {
                    for lab_fp in five_labelings(&ctx.tails(fp)) {
                        let [w1, w2, w3, _w4, w5] = lab_fp;
                        if (w1, w5) != (v1, v5) {
                            continue;
                        }
                        if ctx.g.degree(w3) == 3 && ctx.edge_on_face_of_size(w2, w3, 4) {
                            let key =
                                vec![f.min(fp), f.max(fp), v1.min(v5), v1.max(v5)];
                            acc.insert(
                                "2dg4:config2ii",
                                key,
                                vec![v1, v2, v3, v4, v5, w2, w3, _w4],
                                vec![f, fp],
                            );
                        }
                    }
                }
            }
        }
    }
}

/// The edge of `u` shared by two of its cycles (pigeonhole: each cycle uses
/// two of u's at most three edges).
fn common_cycle_edge_at(u: usize, c1: &[usize], c2: &[usize]) -> usize {
    let ends = |c: &[usize]| -> Vec<usize> {
        let k = c.len();
        let i = c.iter().position(|&x| x == u).unwrap();
        vec![c[(i + 1) % k], c[(i + k - 1) % k]]
    };
    let e1 = ends(c1);
    let e2 = ends(c2);
    let mut shared: Vec<usize> = e1.iter().copied().filter(|x| e2.contains(x)).collect();
    shared.sort_unstable();
    shared[0]
}

/// All ten labelings of a 5-face walk (rotations of both directions).
fn five_labelings(tails: &[usize]) -> Vec<[usize; 5]> {
    debug_assert_eq!(tails.len(), 5);
    let mut out = Vec::with_capacity(10);
    let rev: Vec<usize> = tails.iter().rev().copied().collect();
    for seq in [tails.to_vec(), rev] {
        for s in 0..5 {
            out.push([
                seq[s % 5],
                seq[(s + 1) % 5],
                seq[(s + 2) % 5],
                seq[(s + 3) % 5],
                seq[(s + 4) % 5],
            ]);
        }
    }
    out
}

fn min_degree_witnesses(ctx: &Ctx, acc: &mut WitnessSet, lemma: &str, max_deg: usize) {
    for v in 0..ctx.n {
        if ctx.g.degree(v) <= max_deg {
            let mut verts = vec![v];
            verts.extend_from_slice(ctx.g.neighbors(v));
            acc.insert(lemma, vec![v], verts, vec![]);
        }
    }
}

// ---------------------------------------------------------------------------
// injective, any girth

fn detect_injg3(ctx: &Ctx, acc: &mut WitnessSet) {
    min_degree_witnesses(ctx, acc, "injg3:minimumDegree", 2);
    for u in 0..ctx.n {
        if ctx.g.degree(u) != 3 {
            continue;
        }
        // (i) two adjacent 3-vertices
        for &v in ctx.g.neighbors(u) {
            if v > u && ctx.g.degree(v) == 3 {
                acc.insert("injg3:config1:i", vec![u, v], vec![u, v], vec![]);
            }
        }
        // (ii) a 3-vertex incident to a 4-minus cycle
        let mut on_cycle_nbrs: Vec<usize> = Vec::new();
        for &ci in &ctx.cycles_at[u] {
            let c = &ctx.cycles[ci];
            if c.len() <= 4 {
                for &v in ctx.g.neighbors(u) {
                    if cycle_has_edge(c, u, v) {
                        on_cycle_nbrs.push(v);
                    }
                }
            }
        }
        if !on_cycle_nbrs.is_empty() {
            on_cycle_nbrs.sort_unstable();
            acc.insert("injg3:config1:ii", vec![u], vec![u, on_cycle_nbrs[0]], vec![]);
        }
    }
    // adjacent 3-cycle pairs: (a, b, c, d) share edge {a,b}, apexes {c,d}
    let pairs = adjacent_triangle_pairs(ctx);
    for &(a, b, c, d) in &pairs {
        // (iii) a 3-vertex at distance 1 from the pair
        for &m in &[a, b, c, d] {
            for &y in ctx.g.neighbors(m) {
                if ctx.g.degree(y) == 3 && ![a, b, c, d].contains(&y) {
                    acc.insert(
                        "injg3:config1:iii",
                        vec![a, b, c, d, y],
                        vec![y, m, a, b, c, d],
                        vec![],
                    );
                }
            }
        }
        // (iv) shared-edge endpoint of degree 4 with another 4-minus cycle
        // through it, not contained in {a, b, c, d}
        for &u in &[a, b] {
            if ctx.g.degree(u) != 4 {
                continue;
            }
            let v = if u == a { b } else { a };
            let extra = ctx.cycles_at[u].iter().any(|&ci| {
                let cyc = &ctx.cycles[ci];
                cyc.len() <= 4 && cyc.iter().any(|&x| ![a, b, c, d].contains(&x))
            });
            if extra {
                acc.insert(
                    "injg3:config1:iv",
                    vec![u, v, c, d],
                    vec![u, v, c, d],
                    vec![],
                );
            }
        }
    }
    // config2: a 3-cycle sharing exactly one edge with a 4-cycle, five
    // distinct vertices in total
    for t in ctx.cycles.iter().filter(|c| c.len() == 3) {
        for q in ctx.cycles.iter().filter(|c| c.len() == 4) {
            if let Some((u1, u2)) = single_shared_edge(t, q) {
                if q.iter().filter(|x| t.contains(x)).count() == 2 {
                    let apex = t.iter().copied().find(|x| !q.contains(x)).unwrap();
                    let u3 = cycle_next(q, u2, u1);
                    let u4 = cycle_next(q, u1, u2);
                    let mut key = vec![u1, u2, apex];
                    let (s3, s4) = sorted2(u3, u4);
                    key.extend([s3, s4]);
                    acc.insert("injg3:config2", key, vec![u1, u2, u3, u4, apex], vec![]);
                }
            }
        }
    }
    // config3: adjacent triangle pair with an apex on a further triangle
    for &(a, b, c, d) in &pairs {
        for &(x, w) in &[(c, d), (d, c)] {
            for &ci in &ctx.cycles_at[x] {
                let t3 = &ctx.cycles[ci];
                if t3.len() != 3 {
                    continue;
                }
                let others: Vec<usize> = t3.iter().copied().filter(|&z| z != x).collect();
                if others.len() == 2 && others.iter().all(|z| ![a, b, w].contains(z)) {
                    let (y, z) = sorted2(others[0], others[1]);
                    acc.insert(
                        "injg3:config3",
                        vec![a, b, w, x, y, z],
                        vec![a, b, w, x, y, z],
                        vec![],
                    );
                }
            }
        }
    }
    // face lemmas around 5-faces
    let pg = ctx.pg;
    for f in 0..pg.faces().len() {
        if pg.face(f).size() != 5 {
            continue;
        }
        let tails = ctx.tails(f);
        // config9: 3-face on an edge, second 3-face glued to it, and two
        // more 3-faces adjacent to f
        for lab in five_labelings(&tails) {
            let [u1, u2, u3, u4, u5] = lab;
            let Some(t1) = ctx.other_face(f, u4, u5) else { continue };
            if pg.face(t1).size() != 3 {
                continue;
            }
            let Some(v4) = pg.face(t1).vertices().find(|&x| x != u4 && x != u5) else {
                continue;
            };
            let Some(t2) = ctx.other_face(t1, u5, v4) else { continue };
            if t2 == f || pg.face(t2).size() != 3 {
                continue;
            }
            let Some(w) = pg.face(t2).vertices().find(|&x| x != u5 && x != v4) else {
                continue;
            };
            // other 3-faces adjacent to f (edges besides u4u5, faces != t1)
            let mut extra: Vec<(usize, usize)> = Vec::new(); // (face, apex)
            for &(p, q) in &pg.face(f).walk {
                if (p, q) == (u4, u5) || (p, q) == (u5, u4) {
                    continue;
                }
                let og = pg.face_of_dart((q, p));
                if og != f && og != t1 && pg.face(og).size() == 3 {
                    if let Some(apex) = pg.face(og).vertices().find(|&x| x != p && x != q) {
                        extra.push((og, apex));
                    }
                }
            }
            if extra.len() >= 2 {
                let mut verts = vec![u1, u2, u3, u4, u5, v4, w];
                verts.push(extra[0].1);
                verts.push(extra[1].1);
                acc.insert(
                    "injg3:config9",
                    vec![f, t1, t2],
                    verts,
                    vec![f, t1, t2, extra[0].0, extra[1].0],
                );
            }
        }
        // config4: 5-face incident to a 3-vertex, adjacent to three 3-faces
        let three_faces = adjacent_three_faces(ctx, f);
        let three_vertex = tails.iter().copied().filter(|&v| ctx.g.degree(v) == 3).min();
        if let Some(tv) = three_vertex {
            if three_faces.len() >= 3 {
                let mut verts = tails.clone();
                verts.push(tv);
                verts.extend(three_faces.iter().take(3).map(|&(_, apex)| apex));
                let mut faces = vec![f];
                faces.extend(three_faces.iter().take(3).map(|&(g2, _)| g2));
                acc.insert("injg3:config4", vec![f], verts, faces);
            }
        }
        // config5: 5-face adjacent to five 3-faces
        if three_faces.len() >= 5 {
            let mut verts = tails.clone();
            verts.extend(three_faces.iter().take(5).map(|&(_, apex)| apex));
            let mut faces = vec![f];
            faces.extend(three_faces.iter().take(5).map(|&(g2, _)| g2));
            acc.insert("injg3:config5", vec![f], verts, faces);
        }
        // config6 / config7: bad 5-face adjacent to a 4-face / 5-face
        if bad_face_injg3(pg, f) {
            for &(p, q) in &pg.face(f).walk {
                let og = pg.face_of_dart((q, p));
                if og == f {
                    continue;
                }
                match pg.face(og).size() {
                    4 => acc.insert("injg3:config6", vec![f, og], tails.clone(), vec![f, og]),
                    5 => acc.insert("injg3:config7", vec![f, og], tails.clone(), vec![f, og]),
                    _ => {}
                }
            }
        }
    }
}

/// Pairs of 3-cycles sharing an edge: (a, b, c, d) with shared edge {a,b},
/// a < b, apexes c < d.
fn adjacent_triangle_pairs(ctx: &Ctx) -> Vec<(usize, usize, usize, usize)> {
    let tris: Vec<&Vec<usize>> = ctx.cycles.iter().filter(|c| c.len() == 3).collect();
    let mut out = Vec::new();
    for i in 0..tris.len() {
        for j in (i + 1)..tris.len() {
            if let Some((a, b)) = single_shared_edge(tris[i], tris[j]) {
                let c = tris[i].iter().copied().find(|&x| x != a && x != b).unwrap();
                let d = tris[j].iter().copied().find(|&x| x != a && x != b).unwrap();
                if c != d {
                    out.push((a, b, c.min(d), c.max(d)));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The one shared edge (sorted) of two cycles, when they share exactly one.
fn single_shared_edge(c1: &[usize], c2: &[usize]) -> Option<(usize, usize)> {
    let mut shared = Vec::new();
    let k = c1.len();
    for i in 0..k {
        let (a, b) = (c1[i], c1[(i + 1) % k]);
        if cycle_has_edge(c2, a, b) {
            shared.push(sorted2(a, b));
        }
    }
    shared.sort_unstable();
    shared.dedup();
    if shared.len() == 1 {
        Some(shared[0])
    } else {
        None
    }
}

fn sorted2(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Neighbor of `v` on cycle `c` other than `not`.
fn cycle_next(c: &[usize], v: usize, not: usize) -> usize {
    let k = c.len();
    let i = c.iter().position(|&x| x == v).unwrap();
    let (p, q) = (c[(i + 1) % k], c[(i + k - 1) % k]);
    if p == not {
        q
    } else {
        p
    }
}

/// 3-faces adjacent to `f`, one per shared edge: (face, apex).
fn adjacent_three_faces(ctx: &Ctx, f: usize) -> Vec<(usize, usize)> {
    let pg = ctx.pg;
    let mut out = Vec::new();
    for &(p, q) in &pg.face(f).walk {
        let og = pg.face_of_dart((q, p));
        if og != f && pg.face(og).size() == 3 {
            if let Some(apex) = pg.face(og).vertices().find(|&x| x != p && x != q) {
                out.push((og, apex));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// injective, girth >= 4

fn detect_injg4(ctx: &Ctx, acc: &mut WitnessSet) {
    min_degree_witnesses(ctx, acc, "injg4:minimumDegree", 1);
    for u in 0..ctx.n {
        let du = ctx.g.degree(u);
        if du == 4 {
            let two_nbrs: Vec<usize> = ctx
                .g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&v| ctx.g.degree(v) == 2)
                .collect();
            // counting: 4-vertex with a 2-neighbor must have d#2 >= 9
            if !two_nbrs.is_empty() && ctx.g.exact_two_degree(u) <= 8 {
                acc.insert("injg4:counting", vec![u], vec![u, two_nbrs[0]], vec![]);
            }
            // (ii) two 2-neighbors
            if two_nbrs.len() >= 2 {
                acc.insert(
                    "injg4:config1:ii",
                    vec![u],
                    vec![u, two_nbrs[0], two_nbrs[1]],
                    vec![],
                );
            }
            let three_nbrs: Vec<usize> = ctx
                .g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&v| ctx.g.degree(v) == 3)
                .collect();
            // (iii) a 2-neighbor and two 3-neighbors
            if !two_nbrs.is_empty() && three_nbrs.len() >= 2 {
                acc.insert(
                    "injg4:config1:iii",
                    vec![u],
                    vec![u, two_nbrs[0], three_nbrs[0], three_nbrs[1]],
                    vec![],
                );
            }
            // (vi) a 2-neighbor and a 3-neighbor v with uv on a 4-cycle
            if !two_nbrs.is_empty() {
                for &v in &three_nbrs {
                    if ctx.edge_on_cycle(u, v, 4) {
                        acc.insert(
                            "injg4:config1:vi",
                            vec![u, v],
                            vec![u, two_nbrs[0], v],
                            vec![],
                        );
                    }
                }
            }
        }
        // (i) adjacent 3-minus vertices
        if du <= 3 {
            for &v in ctx.g.neighbors(u) {
                if v > u && ctx.g.degree(v) <= 3 {
                    acc.insert("injg4:config1:i", vec![u, v], vec![u, v], vec![]);
                }
            }
        }
        // (iv) 2-vertex on a 4-cycle
        if du == 2 {
            if let Some(c) = ctx.cycles_through(u, 4).first() {
                let mut verts = vec![u];
                verts.extend(c.iter().copied().filter(|&x| x != u));
                acc.insert("injg4:config1:iv", vec![u], verts, vec![]);
            }
        }
        // (v) 3-vertex on two 4-cycles
        if du == 3 {
            let four_cycles = ctx.cycles_through(u, 4);
            if four_cycles.len() >= 2 {
                let x = common_cycle_edge_at(u, four_cycles[0], four_cycles[1]);
                acc.insert("injg4:config1:v", vec![u], vec![u, x], vec![]);
            }
        }
    }
    // config3: bad 5-face and a second 5-face through its 3-vertex
    let pg = ctx.pg;
    for f in 0..pg.faces().len() {
        if !bad_face_injg4(pg, f) {
            continue;
        }
        for lab in five_labelings(&ctx.tails(f)) {
            let [v1, v2, v3, _v4, v5] = lab;
            if ctx.g.degree(v1) != 3 || ctx.g.degree(v3) != 2 {
                continue;
            }
            // case 1: f' across v1v2 may not contain another 3-minus vertex
            if let Some(fp) = ctx.other_face(f, v1, v2) {
                if pg.face(fp).size() == 5 {
                    for s in pg.face(fp).vertices() {
                        if s != v1 && ctx.g.degree(s) <= 3 {
                            acc.insert(
                                "injg4:config3",
                                vec![f, fp, v1, s],
                                vec![v1, v2, v3, s],
                                vec![f, fp],
                            );
                        }
                    }
                }
            }
            // case 2: f' across v1v5 may not contain another small vertex
            if let Some(fp) = ctx.other_face(f, v1, v5) {
                if pg.face(fp).size() == 5 {
                    for s in pg.face(fp).vertices() {
                        if s != v1 && classify_vertex(pg, s) == VertexClass::Small {
                            acc.insert(
                                "injg4:config3",
                                vec![f, fp, v1, s],
                                vec![v1, v5, v3, s],
                                vec![f, fp],
                            );
                        }
                    }
                }
            }
        }
    }
    // config4: two small vertices at facial distance <= 2 on a 6+-face
    for f in 0..pg.faces().len() {
        let d = pg.face(f).size();
        if d < 6 {
            continue;
        }
        let tails = ctx.tails(f);
        for i in 0..d {
            for gap in 1..=2usize {
                let j = (i + gap) % d;
                let (a, b) = (tails[i], tails[j]);
                if a == b {
                    continue;
                }
                if classify_vertex(pg, a) == VertexClass::Small
                    && classify_vertex(pg, b) == VertexClass::Small
                {
                    let (x, y) = sorted2(a, b);
                    acc.insert("injg4:config4", vec![f, x, y], vec![x, y], vec![f]);
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// exact square, any girth

fn detect_exact(ctx: &Ctx, acc: &mut WitnessSet) {
    min_degree_witnesses(ctx, acc, "exact:minimumDegree", 1);
    // counting: adjacent (u, v) with d(v) <= 3 forces d#2(u) >= 10 and,
    // for a 2-vertex v, an all-4-vertex N#2(u)
    for (a, b) in ctx.g.edges() {
        let fwd = ctx.g.degree(b) <= 3 && ctx.g.exact_two_degree(a) <= 9;
        let bwd = ctx.g.degree(a) <= 3 && ctx.g.exact_two_degree(b) <= 9;
        let verts = match (fwd, bwd) {
            (true, true) => Some(vec![a.min(b), a.max(b)]),
            (true, false) => Some(vec![a, b]),
            (false, true) => Some(vec![b, a]),
            (false, false) => None,
        };
        if let Some(v) = verts {
            acc.insert("exact:counting", vec![a.min(b), a.max(b)], v, vec![]);
        }
        for (u, v) in [(a, b), (b, a)] {
            if ctx.g.degree(v) == 2 && ctx.g.exact_two_degree(u) > 9 {
                let bad_w = ctx
                    .g
                    .exact_two_neighborhood(u)
                    .into_iter()
                    .find(|&w| ctx.g.degree(w) <= 3);
                if let Some(w) = bad_w {
                    acc.insert(
                        "exact:counting",
                        vec![u.min(v), u.max(v)],
                        vec![u, v, w],
                        vec![],
                    );
                }
            }
        }
    }
    for u in 0..ctx.n {
        let du = ctx.g.degree(u);
        // (i) adjacent 3-minus vertices
        if du <= 3 {
            for &v in ctx.g.neighbors(u) {
                if v > u && ctx.g.degree(v) <= 3 {
                    acc.insert("exact:config1:i", vec![u, v], vec![u, v], vec![]);
                }
            }
        }
        if du == 4 {
            let two_nbrs: Vec<usize> = ctx
                .g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&v| ctx.g.degree(v) == 2)
                .collect();
            let small_nbrs: Vec<usize> = ctx
                .g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&v| ctx.g.degree(v) <= 3)
                .collect();
            // (ii) a 2-neighbor and another 3-minus neighbor
            if !two_nbrs.is_empty() && small_nbrs.len() >= 2 {
                let a = two_nbrs[0];
                let b = small_nbrs.iter().copied().find(|&x| x != a).unwrap();
                acc.insert("exact:config1:ii", vec![u], vec![u, a, b], vec![]);
            }
            // (iii) three 3-neighbors
            let three_nbrs: Vec<usize> = ctx
                .g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&v| ctx.g.degree(v) == 3)
                .collect();
            if three_nbrs.len() >= 3 {
                acc.insert(
                    "exact:config1:iii",
                    vec![u],
                    vec![u, three_nbrs[0], three_nbrs[1], three_nbrs[2]],
                    vec![],
                );
            }
        }
        if du <= 3 {
            // (iv) 3-minus vertex on a 3-cycle
            if let Some(t) = ctx.cycles_through(u, 3).first() {
                let others: Vec<usize> = t.iter().copied().filter(|&x| x != u).collect();
                let (a, b) = sorted2(others[0], others[1]);
                acc.insert("exact:config1:iv", vec![u], vec![u, a, b], vec![]);
            } else {
                // (v) 3-minus vertex at distance exactly 1 from a 3-cycle
                let mut found: Option<Vec<usize>> = None;
                for &v in ctx.g.neighbors(u) {
                    for t in ctx.cycles_through(v, 3) {
                        if !t.contains(&u) {
                            let mut others: Vec<usize> =
                                t.iter().copied().filter(|&x| x != v).collect();
                            others.sort_unstable();
                            let cand = vec![u, v, others[0], others[1]];
                            if found.as_ref().map_or(true, |f| cand < *f) {
                                found = Some(cand);
                            }
                        }
                    }
                }
                if let Some(verts) = found {
                    acc.insert("exact:config1:v", vec![u], verts, vec![]);
                }
            }
        }
        // (vi) 2-vertex on a 4-cycle
        if du == 2 {
            if let Some(c) = ctx.cycles_through(u, 4).first() {
                let mut verts = vec![u];
                verts.extend(c.iter().copied().filter(|&x| x != u));
                acc.insert("exact:config1:vi", vec![u], verts, vec![]);
            }
        }
        // (vii) 3-vertex on two (necessarily adjacent) 4-cycles
        if du == 3 {
            let four_cycles = ctx.cycles_through(u, 4);
            if four_cycles.len() >= 2 {
                let x = common_cycle_edge_at(u, four_cycles[0], four_cycles[1]);
                acc.insert("exact:config1:vii", vec![u], vec![u, x], vec![]);
            }
        }
    }
    // config2: 3-cycle sharing an edge with a 4-minus cycle, all other
    // vertices distinct
    let tris: Vec<&Vec<usize>> = ctx.cycles.iter().filter(|c| c.len() == 3).collect();
    for t in &tris {
        for c in ctx.cycles.iter().filter(|c| c.len() <= 4) {
            if t.as_slice() == c.as_slice() {
                continue;
            }
            if let Some((u, v)) = single_shared_edge(t, c) {
                let Some(w) = t.iter().copied().find(|&x| !c.contains(&x)) else {
                    continue;
                };
                let rest: Vec<usize> =
                    c.iter().copied().filter(|&x| x != u && x != v).collect();
                if rest.contains(&w) || rest.len() != c.len() - 2 {
                    continue;
                }
                let mut verts = vec![u, v, w];
                let mut rest_sorted = rest;
                rest_sorted.sort_unstable();
                verts.extend(&rest_sorted);
                let mut key = verts.clone();
                key.push(c.len());
                acc.insert("exact:config2", key, verts, vec![]);
            }
        }
    }
    // config3: two 3-cycles sharing exactly one vertex
    for i in 0..tris.len() {
        for j in (i + 1)..tris.len() {
            let shared: Vec<usize> = tris[i]
                .iter()
                .copied()
                .filter(|x| tris[j].contains(x))
                .collect();
            if shared.len() == 1 {
                let u = shared[0];
                let mut vw: Vec<usize> = tris[i].iter().copied().filter(|&x| x != u).collect();
                let mut xy: Vec<usize> = tris[j].iter().copied().filter(|&x| x != u).collect();
                vw.sort_unstable();
                xy.sort_unstable();
                if xy < vw {
                    std::mem::swap(&mut vw, &mut xy);
                }
                acc.insert(
                    "exact:config3",
                    vec![u, vw[0], vw[1], xy[0], xy[1]],
                    vec![u, vw[0], vw[1], xy[0], xy[1]],
                    vec![],
                );
            }
        }
    }
    // config4: 5-cycle with a 2-vertex, sharing an edge with a 3-cycle
    for c5 in ctx.cycles.iter().filter(|c| c.len() == 5) {
        let two_vs: Vec<usize> =
            c5.iter().copied().filter(|&v| ctx.g.degree(v) == 2).collect();
        if two_vs.is_empty() {
            continue;
        }
        for t in &tris {
            if let Some((a, b)) = single_shared_edge(t, c5) {
                let Some(apex) = t.iter().copied().find(|&x| !c5.contains(&x)) else {
                    continue;
                };
                let u1 = *two_vs.iter().min().unwrap();
                let verts = orient_cycle_from(c5, u1);
                // layout: oriented 5-cycle, apex, shared edge
                let mut all = verts.clone();
                all.extend([apex, a, b]);
                let mut key = vec![a, b, apex];
                key.extend(verts.iter());
                acc.insert("exact:config4", key, all, vec![]);
            }
        }
    }
}

/// Cycle as a sequence starting at `start`, in the lexicographically
/// smaller of the two directions.
fn orient_cycle_from(c: &[usize], start: usize) -> Vec<usize> {
    let k = c.len();
    let i = c.iter().position(|&x| x == start).unwrap();
    let fwd: Vec<usize> = (0..k).map(|s| c[(i + s) % k]).collect();
    let bwd: Vec<usize> = (0..k).map(|s| c[(i + k - s) % k]).collect();
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

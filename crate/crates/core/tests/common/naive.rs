//! Independent naive configuration enumerator.
//!
//! Re-derives every lemma's occurrences straight from the statements with
//! plain loops: cycles are found by checking all vertex subsets for
//! Hamiltonian cyclic arrangements, classifications are recomputed from
//! face walks. Occurrences are reported as (lemma, key) pairs matching the
//! canonical occurrence keys of the library's detectors.

use std::collections::BTreeSet;

use distcolor::configs::TheoremId;
use distcolor::embed::PlaneGraph;
use distcolor::graph::Graph;

pub type Occ = (String, Vec<usize>);

/// Occurrence keys a library witness corresponds to (from the documented
/// vertex/face tuple layouts).
pub fn witness_key(w: &distcolor::ConfigWitness) -> Occ {
    let v = &w.vertices;
    let f = &w.faces;
    let key: Vec<usize> = match w.lemma.as_str() {
        "2dg4:minimumDegree" | "injg3:minimumDegree" | "injg4:minimumDegree"
        | "exact:minimumDegree" => vec![v[0]],
        "2dg4:config1:i" | "2dg4:config1:iii" => vec![v[0]],
        "2dg4:config1:ii" => vec![v[0].min(v[1]), v[0].max(v[1])],
        "2dg4:config2i" => vec![f[0], f[1], v[3].min(v[4]), v[3].max(v[4])],
        "2dg4:config2ii" => {
            vec![f[0].min(f[1]), f[0].max(f[1]), v[0].min(v[4]), v[0].max(v[4])]
        }
        "injg3:config1:i" => vec![v[0], v[1]],
        "injg3:config1:ii" => vec![v[0]],
        "injg3:config1:iii" => vec![v[2], v[3], v[4], v[5], v[0]],
        "injg3:config1:iv" => v.clone(),
        "injg3:config2" => vec![v[0], v[1], v[4], v[2].min(v[3]), v[2].max(v[3])],
        "injg3:config3" => v.clone(),
        "injg3:config9" => vec![f[0], f[1], f[2]],
        "injg3:config4" | "injg3:config5" => vec![f[0]],
        "injg3:config6" | "injg3:config7" => vec![f[0], f[1]],
        "injg4:counting" | "injg4:config1:ii" | "injg4:config1:iii" | "injg4:config1:iv"
        | "injg4:config1:v" => vec![v[0]],
        "injg4:config1:i" => vec![v[0], v[1]],
        "injg4:config1:vi" => vec![v[0], v[2]],
        "injg4:config3" => vec![f[0], f[1], v[0], v[3]],
        "injg4:config4" => vec![f[0], v[0], v[1]],
        "exact:counting" => vec![v[0].min(v[1]), v[0].max(v[1])],
        "exact:config1:i" => vec![v[0], v[1]],
        "exact:config1:ii" | "exact:config1:iii" | "exact:config1:iv" | "exact:config1:v"
        | "exact:config1:vi" | "exact:config1:vii" => vec![v[0]],
        "exact:config2" => {
            let mut k = v.clone();
            k.push(v.len() - 1);
            k
        }
        "exact:config3" => v.clone(),
        "exact:config4" => {
            let mut k = vec![v[6], v[7], v[5]];
            k.extend_from_slice(&v[0..5]);
            k
        }
        other => panic!("unknown lemma {other}"),
    };
    (w.lemma.clone(), key)
}

/// All simple cycles with 3..=maxlen vertices, via subset + arrangement
/// checking. Each cycle is returned once, minimal-vertex-first with the
/// smaller second-vs-last direction.
fn subset_cycles(g: &Graph, maxlen: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut subset: Vec<usize> = Vec::new();
    fn rec(
        g: &Graph,
        start: usize,
        maxlen: usize,
        subset: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if subset.len() >= 3 {
            // try every cyclic arrangement fixing subset[0] first
            let k = subset.len();
            let rest: Vec<usize> = subset[1..].to_vec();
            let mut perm: Vec<usize> = rest.clone();
            permute_check(g, subset[0], &mut perm, 0, k, out);
        }
        if subset.len() == maxlen {
            return;
        }
        let last = *subset.last().unwrap();
        for w in (last + 1)..g.vertex_count() {
            subset.push(w);
            rec(g, start, maxlen, subset, out);
            subset.pop();
        }
    }
    fn permute_check(
        g: &Graph,
        first: usize,
        perm: &mut Vec<usize>,
        i: usize,
        k: usize,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if i == perm.len() {
            let mut cyc = vec![first];
            cyc.extend_from_slice(perm);
            let ok = (0..k).all(|t| g.has_edge(cyc[t], cyc[(t + 1) % k]));
            if ok && cyc[1] < cyc[k - 1] {
                out.insert(cyc);
            }
            return;
        }
        for j in i..perm.len() {
            perm.swap(i, j);
            permute_check(g, first, perm, i + 1, k, out);
            perm.swap(i, j);
        }
    }
    for v in 0..n {
        subset.push(v);
        rec(g, v, maxlen, &mut subset, &mut out);
        subset.pop();
    }
    out.into_iter().collect()
}

fn on_cycle(c: &[usize], u: usize, v: usize) -> bool {
    let k = c.len();
    (0..k).any(|i| {
        let (a, b) = (c[i], c[(i + 1) % k]);
        (a, b) == (u, v) || (b, a) == (u, v)
    })
}

fn shared_edges(c1: &[usize], c2: &[usize]) -> Vec<(usize, usize)> {
    let k = c1.len();
    let mut out = Vec::new();
    for i in 0..k {
        let (a, b) = (c1[i], c1[(i + 1) % k]);
        if on_cycle(c2, a, b) {
            out.push((a.min(b), a.max(b)));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn tails(pg: &PlaneGraph, f: usize) -> Vec<usize> {
    pg.face(f).vertices().collect()
}

fn other_face(pg: &PlaneGraph, f: usize, u: usize, v: usize) -> Option<usize> {
    let (a, b) = pg.edge_faces(u, v);
    if a == f && b != f {
        Some(b)
    } else if b == f && a != f {
        Some(a)
    } else {
        None
    }
}

fn edge_touches_face_size(pg: &PlaneGraph, u: usize, v: usize, s: usize) -> bool {
    let (a, b) = pg.edge_faces(u, v);
    pg.face(a).size() == s || pg.face(b).size() == s
}

fn vertex_on_face_size(pg: &PlaneGraph, v: usize, s: usize) -> bool {
    pg.incident_faces(v).iter().any(|&f| pg.face(f).size() == s)
}

fn bad5_injg3(pg: &PlaneGraph, f: usize) -> bool {
    if pg.face(f).size() != 5 {
        return false;
    }
    let cnt = pg
        .face(f)
        .walk
        .iter()
        .filter(|&&(p, q)| {
            let og = pg.face_of_dart((q, p));
            og != f && pg.face(og).size() == 3
        })
        .count();
    cnt >= 4
}

fn bad5_injg4(pg: &PlaneGraph, f: usize) -> bool {
    pg.face(f).size() == 5
        && tails(pg, f).iter().any(|&v| pg.graph().degree(v) == 2)
        && tails(pg, f).iter().any(|&v| pg.graph().degree(v) == 3)
}

fn small_injg4(pg: &PlaneGraph, v: usize) -> bool {
    let d = pg.graph().degree(v);
    d <= 2
        || (d == 3
            && pg.incident_faces(v).iter().any(|&f| bad5_injg4(pg, f))
            && vertex_on_face_size(pg, v, 4))
}

/// Every occurrence of every configuration, from the definitions.
pub fn naive_detect(pg: &PlaneGraph, t: TheoremId) -> BTreeSet<Occ> {
    let g = pg.graph();
    let n = g.vertex_count();
    let cycles = subset_cycles(g, 5);
    let cyc3: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 3).collect();
    let cyc4: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 4).collect();
    let cyc5: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() == 5).collect();
    let th = |v: usize| g.degree(v) == 3;
    let mut out: BTreeSet<Occ> = BTreeSet::new();
    let mut occ = |lemma: &str, key: Vec<usize>| {
        out.insert((lemma.to_string(), key));
    };
    let faces5: Vec<usize> = (0..pg.faces().len())
        .filter(|&f| pg.face(f).size() == 5)
        .collect();

    match t {
        TheoremId::TwoDistG4 => {
            for v in 0..n {
                if g.degree(v) <= 2 {
                    occ("2dg4:minimumDegree", vec![v]);
                }
                if th(v) {
                    let fours = cyc4.iter().filter(|c| c.contains(&v)).count();
                    if fours >= 2 {
                        occ("2dg4:config1:i", vec![v]);
                    }
                    if fours >= 1 {
                        for &w in g.neighbors(v) {
                            if th(w) {
                                occ("2dg4:config1:ii", vec![v.min(w), v.max(w)]);
                            }
                        }
                    }
                    if g.neighbors(v).iter().filter(|&&w| th(w)).count() >= 2 {
                        occ("2dg4:config1:iii", vec![v]);
                    }
                }
            }
            for &f in &faces5 {
                for &fp in &faces5 {
                    if f == fp {
                        continue;
                    }
                    for dir in labelings(&tails(pg, f)) {
                        let [v1, v2, v3, v4, v5] = dir;
                        if !(th(v1) && th(v3) && th(v5)) {
                            continue;
                        }
                        if !edge_touches_face_size(pg, v2, v3, 4) {
                            continue;
                        }
                        if other_face(pg, f, v4, v5) == Some(fp) {
                            for lab in labelings(&tails(pg, fp)) {
                                let [_, w2, w3, w4, w5] = lab;
                                if (w4, w5) == (v4, v5) && th(w2) && th(w3) && th(w5) {
                                    occ(
                                        "2dg4:config2i",
                                        vec![f, fp, v4.min(v5), v4.max(v5)],
                                    );
                                }
                            }
                        }
                        if other_face(pg, f, v1, v5) == Some(fp) {
                            for lab in labelings(&tails(pg, fp)) {
                                let [w1, w2, w3, _, w5] = lab;
                                if (w1, w5) == (v1, v5)
                                    && th(w3)
                                    && edge_touches_face_size(pg, w2, w3, 4)
                                {
                                    occ(
                                        "2dg4:config2ii",
                                        vec![f.min(fp), f.max(fp), v1.min(v5), v1.max(v5)],
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        TheoremId::InjG3 => {
            for v in 0..n {
                if g.degree(v) <= 2 {
                    occ("injg3:minimumDegree", vec![v]);
                }
                if th(v) {
                    for &w in g.neighbors(v) {
                        if w > v && th(w) {
                            occ("injg3:config1:i", vec![v, w]);
                        }
                    }
                    if cycles
                        .iter()
                        .any(|c| c.len() <= 4 && c.contains(&v))
                    {
                        occ("injg3:config1:ii", vec![v]);
                    }
                }
            }
            // adjacent triangle pairs
            let mut pairs: Vec<(usize, usize, usize, usize)> = Vec::new();
            for i in 0..cyc3.len() {
                for j in (i + 1)..cyc3.len() {
                    let se = shared_edges(cyc3[i], cyc3[j]);
                    if se.len() == 1 {
                        let (a, b) = se[0];
                        let c = cyc3[i].iter().copied().find(|&x| x != a && x != b).unwrap();
                        let d = cyc3[j].iter().copied().find(|&x| x != a && x != b).unwrap();
                        if c != d {
                            pairs.push((a, b, c.min(d), c.max(d)));
                        }
                    }
                }
            }
            pairs.sort_unstable();
            pairs.dedup();
            for &(a, b, c, d) in &pairs {
                for &m in &[a, b, c, d] {
                    for &y in g.neighbors(m) {
                        if th(y) && ![a, b, c, d].contains(&y) {
                            occ("injg3:config1:iii", vec![a, b, c, d, y]);
                        }
                    }
                }
                for &(u, v) in &[(a, b), (b, a)] {
                    if g.degree(u) == 4
                        && cycles.iter().any(|cy| {
                            cy.len() <= 4
                                && cy.contains(&u)
                                && cy.iter().any(|&x| ![a, b, c, d].contains(&x))
                        })
                    {
                        occ("injg3:config1:iv", vec![u, v, c, d]);
                    }
                }
                // config3 from both apex roles
                for &(x, w) in &[(c, d), (d, c)] {
                    for t3 in &cyc3 {
                        if t3.contains(&x)
                            && t3
                                .iter()
                                .all(|&z| z == x || ![a, b, w].contains(&z))
                            && t3.iter().filter(|&&z| z != x).count() == 2
                        {
                            occ("injg3:config3", vec![a, b, w, x]
                                .into_iter()
                                .chain(t3.iter().copied().filter(|&z| z != x).collect::<BTreeSet<_>>())
                                .collect());
                        }
                    }
                }
            }
            // config2: triangle + 4-cycle, one shared edge, five vertices
            for t3 in &cyc3 {
                for q in &cyc4 {
                    let se = shared_edges(t3, q);
                    if se.len() == 1 && q.iter().filter(|x| t3.contains(x)).count() == 2 {
                        let (u1, u2) = se[0];
                        let apex = t3.iter().copied().find(|x| !q.contains(x)).unwrap();
                        let mut others: Vec<usize> = q
                            .iter()
                            .copied()
                            .filter(|&x| x != u1 && x != u2)
                            .collect();
                        others.sort_unstable();
                        occ("injg3:config2", vec![u1, u2, apex, others[0], others[1]]);
                    }
                }
            }
            for &f in &faces5 {
                let ts = tails(pg, f);
                // config9
                for lab in labelings(&ts) {
                    let [_, _, _, u4, u5] = lab;
                    let Some(t1) = other_face(pg, f, u4, u5) else { continue };
                    if pg.face(t1).size() != 3 {
                        continue;
                    }
                    let Some(v4) = tails(pg, t1).into_iter().find(|&x| x != u4 && x != u5)
                    else {
                        continue;
                    };
                    let Some(t2) = other_face(pg, t1, u5, v4) else { continue };
                    if t2 == f || pg.face(t2).size() != 3 {
                        continue;
                    }
                    let extra = pg
                        .face(f)
                        .walk
                        .iter()
                        .filter(|&&(p, q)| {
                            if (p, q) == (u4, u5) || (p, q) == (u5, u4) {
                                return false;
                            }
                            let og = pg.face_of_dart((q, p));
                            og != f && og != t1 && pg.face(og).size() == 3
                        })
                        .count();
                    if extra >= 2 {
                        occ("injg3:config9", vec![f, t1, t2]);
                    }
                }
                let adj3 = pg
                    .face(f)
                    .walk
                    .iter()
                    .filter(|&&(p, q)| {
                        let og = pg.face_of_dart((q, p));
                        og != f && pg.face(og).size() == 3
                    })
                    .count();
                if ts.iter().any(|&v| th(v)) && adj3 >= 3 {
                    occ("injg3:config4", vec![f]);
                }
                if adj3 >= 5 {
                    occ("injg3:config5", vec![f]);
                }
                if bad5_injg3(pg, f) {
                    for &(p, q) in &pg.face(f).walk {
                        let og = pg.face_of_dart((q, p));
                        if og != f && pg.face(og).size() == 4 {
                            occ("injg3:config6", vec![f, og]);
                        }
                        if og != f && pg.face(og).size() == 5 {
                            occ("injg3:config7", vec![f, og]);
                        }
                    }
                }
            }
        }
        TheoremId::InjG4 => {
            for v in 0..n {
                let d = g.degree(v);
                if d <= 1 {
                    occ("injg4:minimumDegree", vec![v]);
                }
                if d <= 3 {
                    for &w in g.neighbors(v) {
                        if w > v && g.degree(w) <= 3 {
                            occ("injg4:config1:i", vec![v, w]);
                        }
                    }
                }
                if d == 4 {
                    let twos = g.neighbors(v).iter().filter(|&&w| g.degree(w) == 2).count();
                    let threes: Vec<usize> = g
                        .neighbors(v)
                        .iter()
                        .copied()
                        .filter(|&w| g.degree(w) == 3)
                        .collect();
                    if twos >= 1 && g.exact_two_degree(v) <= 8 {
                        occ("injg4:counting", vec![v]);
                    }
                    if twos >= 2 {
                        occ("injg4:config1:ii", vec![v]);
                    }
                    if twos >= 1 && threes.len() >= 2 {
                        occ("injg4:config1:iii", vec![v]);
                    }
                    if twos >= 1 {
                        for &w in &threes {
                            if cyc4.iter().any(|c| on_cycle(c, v, w)) {
                                occ("injg4:config1:vi", vec![v, w]);
                            }
                        }
                    }
                }
                if d == 2 && cyc4.iter().any(|c| c.contains(&v)) {
                    occ("injg4:config1:iv", vec![v]);
                }
                if d == 3 && cyc4.iter().filter(|c| c.contains(&v)).count() >= 2 {
                    occ("injg4:config1:v", vec![v]);
                }
            }
            for f in 0..pg.faces().len() {
                if bad5_injg4(pg, f) {
                    let ts = tails(pg, f);
                    for i in 0..5 {
                        let v1 = ts[i];
                        if g.degree(v1) != 3 {
                            continue;
                        }
                        for (delta, _) in [(2usize, ()), (3usize, ())] {
                            let v3 = ts[(i + delta) % 5];
                            if g.degree(v3) != 2 {
                                continue;
                            }
                            // neighbors of v1 on f: the edge toward v3's side
                            // is v1v2; the other is v1v5
                            let (v2, v5) = if delta == 2 {
                                (ts[(i + 1) % 5], ts[(i + 4) % 5])
                            } else {
                                (ts[(i + 4) % 5], ts[(i + 1) % 5])
                            };
                            if let Some(fp) = other_face(pg, f, v1, v2) {
                                if pg.face(fp).size() == 5 {
                                    for s in tails(pg, fp) {
                                        if s != v1 && g.degree(s) <= 3 {
                                            occ("injg4:config3", vec![f, fp, v1, s]);
                                        }
                                    }
                                }
                            }
                            if let Some(fp) = other_face(pg, f, v1, v5) {
                                if pg.face(fp).size() == 5 {
                                    for s in tails(pg, fp) {
                                        if s != v1 && small_injg4(pg, s) {
                                            occ("injg4:config3", vec![f, fp, v1, s]);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                let d = pg.face(f).size();
                if d >= 6 {
                    let ts = tails(pg, f);
                    for i in 0..d {
                        for gap in 1..=2 {
                            let j = (i + gap) % d;
                            if ts[i] != ts[j]
                                && small_injg4(pg, ts[i])
                                && small_injg4(pg, ts[j])
                            {
                                occ(
                                    "injg4:config4",
                                    vec![f, ts[i].min(ts[j]), ts[i].max(ts[j])],
                                );
                            }
                        }
                    }
                }
            }
        }
        TheoremId::Exact => {
            for v in 0..n {
                let d = g.degree(v);
                if d <= 1 {
                    occ("exact:minimumDegree", vec![v]);
                }
                if d <= 3 {
                    for &w in g.neighbors(v) {
                        if w > v && g.degree(w) <= 3 {
                            occ("exact:config1:i", vec![v, w]);
                        }
                    }
                    if cyc3.iter().any(|c| c.contains(&v)) {
                        occ("exact:config1:iv", vec![v]);
                    } else if g
                        .neighbors(v)
                        .iter()
                        .any(|&w| cyc3.iter().any(|c| c.contains(&w) && !c.contains(&v)))
                    {
                        occ("exact:config1:v", vec![v]);
                    }
                }
                if d == 4 {
                    let twos: Vec<usize> = g
                        .neighbors(v)
                        .iter()
                        .copied()
                        .filter(|&w| g.degree(w) == 2)
                        .collect();
                    let smalls = g.neighbors(v).iter().filter(|&&w| g.degree(w) <= 3).count();
                    let threes = g.neighbors(v).iter().filter(|&&w| g.degree(w) == 3).count();
                    if !twos.is_empty() && smalls >= 2 {
                        occ("exact:config1:ii", vec![v]);
                    }
                    if threes >= 3 {
                        occ("exact:config1:iii", vec![v]);
                    }
                }
                if d == 2 && cyc4.iter().any(|c| c.contains(&v)) {
                    occ("exact:config1:vi", vec![v]);
                }
                if d == 3 && cyc4.iter().filter(|c| c.contains(&v)).count() >= 2 {
                    occ("exact:config1:vii", vec![v]);
                }
            }
            for (u, v) in g.edges() {
                let fwd = g.degree(v) <= 3 && g.exact_two_degree(u) <= 9;
                let bwd = g.degree(u) <= 3 && g.exact_two_degree(v) <= 9;
                if fwd || bwd {
                    occ("exact:counting", vec![u.min(v), u.max(v)]);
                }
                for (a, b) in [(u, v), (v, u)] {
                    if g.degree(b) == 2
                        && g.exact_two_degree(a) > 9
                        && g
                            .exact_two_neighborhood(a)
                            .iter()
                            .any(|&w| g.degree(w) <= 3)
                    {
                        occ("exact:counting", vec![a.min(b), a.max(b)]);
                    }
                }
            }
            for t3 in &cyc3 {
                for c in cycles.iter().filter(|c| c.len() <= 4) {
                    if t3.as_slice() == c.as_slice() {
                        continue;
                    }
                    let se = shared_edges(t3, c);
                    if se.len() != 1 {
                        continue;
                    }
                    let (u, v) = se[0];
                    let Some(w) = t3.iter().copied().find(|&x| !c.contains(&x)) else {
                        continue;
                    };
                    let mut rest: Vec<usize> =
                        c.iter().copied().filter(|&x| x != u && x != v).collect();
                    if rest.contains(&w) || rest.len() != c.len() - 2 {
                        continue;
                    }
                    rest.sort_unstable();
                    let mut key = vec![u, v, w];
                    key.extend(&rest);
                    key.push(c.len());
                    occ("exact:config2", key);
                }
            }
            for i in 0..cyc3.len() {
                for j in (i + 1)..cyc3.len() {
                    let shared: Vec<usize> = cyc3[i]
                        .iter()
                        .copied()
                        .filter(|x| cyc3[j].contains(x))
                        .collect();
                    if shared.len() == 1 {
                        let u = shared[0];
                        let mut vw: Vec<usize> =
                            cyc3[i].iter().copied().filter(|&x| x != u).collect();
                        let mut xy: Vec<usize> =
                            cyc3[j].iter().copied().filter(|&x| x != u).collect();
                        vw.sort_unstable();
                        xy.sort_unstable();
                        if xy < vw {
                            std::mem::swap(&mut vw, &mut xy);
                        }
                        occ("exact:config3", vec![u, vw[0], vw[1], xy[0], xy[1]]);
                    }
                }
            }
            for c5 in &cyc5 {
                if !c5.iter().any(|&v| g.degree(v) == 2) {
                    continue;
                }
                for t3 in &cyc3 {
                    let se = shared_edges(t3, c5);
                    if se.len() == 1 {
                        let Some(apex) = t3.iter().copied().find(|&x| !c5.contains(&x))
                        else {
                            continue;
                        };
                        let (a, b) = se[0];
                        let u1 = c5
                            .iter()
                            .copied()
                            .filter(|&v| g.degree(v) == 2)
                            .min()
                            .unwrap();
                        let verts = orient_from(c5, u1);
                        let mut key = vec![a, b, apex];
                        key.extend(verts);
                        occ("exact:config4", key);
                    }
                }
            }
        }
    }
    out
}

fn labelings(ts: &[usize]) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    let rev: Vec<usize> = ts.iter().rev().copied().collect();
    for seq in [ts.to_vec(), rev] {
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

fn orient_from(c: &[usize], start: usize) -> Vec<usize> {
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

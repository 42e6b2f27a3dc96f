//! Plane graphs as rotation systems: face extraction, face adjacency and
//! incidence, facial distance.
//!
//! A dart is an ordered pair `(u, v)` for an edge `{u, v}`. The face
//! traversal rule is: from dart `(u, v)`, the next dart is `(v, w)` where
//! `w` is the cyclic successor of `u` in the rotation at `v`. The orbits of
//! this rule partition all `2|E|` darts into facial walks. A component with
//! no edges contributes one face with an empty walk.
//!
//! Incidence is counted with multiplicity along boundary walks: a vertex
//! occurring k times on a walk is incident k times, and a face pair sharing
//! two edges is adjacent twice.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Dart = (usize, usize);

#[derive(Clone, Debug)]
pub struct Face {
    pub id: usize,
    /// Boundary walk as darts; `walk[i].1 == walk[i+1].0` cyclically.
    /// Empty for the face of an isolated vertex.
    pub walk: Vec<Dart>,
}

impl Face {
    /// Face size d(f) = number of darts on the walk.
    pub fn size(&self) -> usize {
        self.walk.len()
    }

    /// Vertex occurrences along the walk (the tails of the darts).
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.walk.iter().map(|d| d.0)
    }
}

#[derive(Clone, Debug)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    dart_face: HashMap<Dart, usize>,
    /// Face of each isolated (degree-0) vertex.
    isolated_face: HashMap<usize, usize>,
}

impl PlaneGraph {
    /// Builds a plane graph, computing faces and validating Euler's formula
    /// on every connected component.
    pub fn build(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<PlaneGraph> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(Error::input(format!(
                "rotation has {} entries for {} vertices",
                rotation.len(),
                n
            )));
        }
        for v in 0..n {
            let mut rot = rotation[v].clone();
            rot.sort_unstable();
            if rot != graph.neighbors(v) {
                return Err(Error::input(format!(
                    "rotation of vertex {v} is not a permutation of its neighbors"
                )));
            }
        }

        // successor position lookup: pos[(v, u)] = index of u in rotation[v]
        let mut pos: HashMap<Dart, usize> = HashMap::new();
        for v in 0..n {
            for (i, &u) in rotation[v].iter().enumerate() {
                pos.insert((v, u), i);
            }
        }

        let mut dart_face: HashMap<Dart, usize> = HashMap::new();
        let mut faces: Vec<Face> = Vec::new();
        for v in 0..n {
            for &u in &rotation[v] {
                let start: Dart = (v, u);
                if dart_face.contains_key(&start) {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let mut d = start;
                loop {
                    dart_face.insert(d, id);
                    walk.push(d);
                    let (x, y) = d;
                    let i = pos[&(y, x)];
                    let w = rotation[y][(i + 1) % rotation[y].len()];
                    d = (y, w);
                    if d == start {
                        break;
                    }
                }
                faces.push(Face { id, walk });
            }
        }

        let mut isolated_face = HashMap::new();
        for v in 0..n {
            if graph.degree(v) == 0 {
                let id = faces.len();
                faces.push(Face { id, walk: Vec::new() });
                isolated_face.insert(v, id);
            }
        }

        let pg = PlaneGraph { graph, rotation, faces, dart_face, isolated_face };
        pg.check_euler()?;
        Ok(pg)
    }

    /// Per-component Euler check: |V| - |E| + |F| = 2 for a plane embedding.
    fn check_euler(&self) -> Result<()> {
        let comps = self.graph.connected_components();
        for verts in &comps {
            let vc = verts.len();
            let ec = verts
                .iter()
                .map(|&v| self.graph.degree(v))
                .sum::<usize>()
                / 2;
            let fc = self
                .faces
                .iter()
                .filter(|f| match f.walk.first() {
                    Some(&(u, _)) => verts.binary_search(&u).is_ok(),
                    None => {
                        let v = self
                            .isolated_face
                            .iter()
                            .find(|&(_, &id)| id == f.id)
                            .map(|(&v, _)| v)
                            .unwrap();
                        verts.binary_search(&v).is_ok()
                    }
                })
                .count();
            if vc + fc != ec + 2 {
                return Err(Error::embedding(format!(
                    "Euler violation on a component: V={vc}, E={ec}, F={fc} (rotation is not a plane embedding)"
                )));
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn face_of_dart(&self, d: Dart) -> usize {
        self.dart_face[&d]
    }

    /// Faces incident to `v`, one entry per occurrence of `v` on a walk.
    pub fn incident_faces(&self, v: usize) -> Vec<usize> {
        if self.graph.degree(v) == 0 {
            return vec![self.isolated_face[&v]];
        }
        self.rotation[v]
            .iter()
            .map(|&u| self.dart_face[&(v, u)])
            .collect()
    }

    /// The two faces containing edge `{u, v}` (equal IDs for a bridge,
    /// in which case the face contains the edge twice).
    pub fn edge_faces(&self, u: usize, v: usize) -> (usize, usize) {
        (self.dart_face[&(u, v)], self.dart_face[&(v, u)])
    }

    /// Faces adjacent to `f`, one entry per shared edge.
    pub fn adjacent_faces(&self, f: usize) -> Vec<usize> {
        self.faces[f]
            .walk
            .iter()
            .map(|&(u, v)| self.dart_face[&(v, u)])
            .collect()
    }

    /// Distance between `u` and `v` along the boundary cycle of `f`.
    /// Defined only when each occurs exactly once on the walk.
    pub fn facial_distance(&self, f: usize, u: usize, v: usize) -> Result<usize> {
        let tails: Vec<usize> = self.faces[f].vertices().collect();
        let find_unique = |x: usize| -> Result<usize> {
            let hits: Vec<usize> = tails
                .iter()
                .enumerate()
                .filter(|&(_, &t)| t == x)
                .map(|(i, _)| i)
                .collect();
            match hits.len() {
                1 => Ok(hits[0]),
                0 => Err(Error::input(format!("vertex {x} is not on face {f}"))),
                _ => Err(Error::input(format!(
                    "vertex {x} occurs {} times on face {f}; facial distance undefined",
                    hits.len()
                ))),
            }
        };
        let i = find_unique(u)?;
        let j = find_unique(v)?;
        let d = self.faces[f].size();
        let a = (i + d - j) % d;
        let b = (j + d - i) % d;
        Ok(a.min(b))
    }

    /// Number of occurrences of `v` on the walk of `f`.
    pub fn occurrences_on_face(&self, f: usize, v: usize) -> usize {
        self.faces[f].vertices().filter(|&t| t == v).count()
    }

    /// True if some face of size `size` is incident to `v`.
    pub fn vertex_on_face_of_size(&self, v: usize, size: usize) -> bool {
        self.incident_faces(v)
            .iter()
            .any(|&f| self.faces[f].size() == size)
    }
}

/// Rotation-system surgery used by the generators and the reducer. All
/// functions preserve planarity of the embedding.
pub mod surgery {
    use super::*;

    /// Removes edge `{u, v}` from both rotations.
    pub fn delete_edge(g: &mut Graph, rot: &mut [Vec<usize>], u: usize, v: usize) {
        g.remove_edge(u, v);
        rot[u].retain(|&x| x != v);
        rot[v].retain(|&x| x != u);
    }

    /// Removes vertex `v`; rotations of its neighbors drop `v` and IDs above
    /// `v` shift down by one.
    pub fn delete_vertex(g: &mut Graph, rot: &mut Vec<Vec<usize>>, v: usize) {
        for &u in g.neighbors(v).to_vec().iter() {
            rot[u].retain(|&x| x != v);
        }
        g.remove_vertex(v);
        rot.remove(v);
        for r in rot.iter_mut() {
            for x in r.iter_mut() {
                if *x > v {
                    *x -= 1;
                }
            }
        }
    }

    /// Deletes a 2-vertex `u` and joins its neighbors by a new edge placed at
    /// `u`'s former rotation slots (a planar contraction of the path v-u-w).
    /// The caller must ensure v and w are not already adjacent.
    pub fn contract_two_vertex(g: &mut Graph, rot: &mut Vec<Vec<usize>>, u: usize) -> (usize, usize) {
        let nbrs = g.neighbors(u).to_vec();
        assert_eq!(nbrs.len(), 2, "contract_two_vertex needs a 2-vertex");
        let (v, w) = (nbrs[0], nbrs[1]);
        assert!(!g.has_edge(v, w));
        g.remove_edge(u, v);
        g.remove_edge(u, w);
        g.add_edge(v, w).unwrap();
        for x in rot[v].iter_mut() {
            if *x == u {
                *x = w;
            }
        }
        for x in rot[w].iter_mut() {
            if *x == u {
                *x = v;
            }
        }
        rot[u].clear();
        delete_vertex(g, rot, u);
        let shift = |x: usize| if x > u { x - 1 } else { x };
        (shift(v), shift(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::graph::{complete, cycle, path};

    fn c5_plane() -> PlaneGraph {
        let g = cycle(5);
        let rot: Vec<Vec<usize>> = (0..5).map(|v| vec![(v + 4) % 5, (v + 1) % 5]).collect();
        PlaneGraph::build(g, rot).unwrap()
    }

    #[test]
    fn c5_two_faces_of_size_5() {
        let pg = c5_plane();
        assert_eq!(pg.faces().len(), 2);
        assert!(pg.faces().iter().all(|f| f.size() == 5));
        // any edge lies on both faces
        let (f1, f2) = pg.edge_faces(0, 1);
        assert_ne!(f1, f2);
        // inner face adjacent to outer with multiplicity 5
        assert_eq!(pg.adjacent_faces(f1), vec![f2; 5]);
    }

    #[test]
    fn cube_six_quadrilaterals() {
        let pg = constructions::cube().unwrap();
        assert_eq!(pg.faces().len(), 6);
        assert!(pg.faces().iter().all(|f| f.size() == 4));
        for v in 0..8 {
            let inc = pg.incident_faces(v);
            assert_eq!(inc.len(), 3);
            assert!(inc.iter().all(|&f| pg.face(f).size() == 4));
        }
        for f in 0..6 {
            let adj = pg.adjacent_faces(f);
            assert_eq!(adj.len(), 4);
            assert!(adj.iter().all(|&g2| pg.face(g2).size() == 4));
        }
    }

    #[test]
    fn k5_violates_euler() {
        let g = complete(5);
        let rot: Vec<Vec<usize>> = (0..5).map(|v| g.neighbors(v).to_vec()).collect();
        assert!(PlaneGraph::build(g, rot).is_err());
    }

    #[test]
    fn invalid_rotation_rejected() {
        let g = cycle(4);
        let mut rot: Vec<Vec<usize>> = (0..4).map(|v| g.neighbors(v).to_vec()).collect();
        rot[0] = vec![1, 1];
        assert!(PlaneGraph::build(cycle(4), rot).is_err());
    }

    #[test]
    fn tree_edge_on_one_face_twice() {
        let g = path(3);
        let rot: Vec<Vec<usize>> = (0..3).map(|v| g.neighbors(v).to_vec()).collect();
        let pg = PlaneGraph::build(g, rot).unwrap();
        assert_eq!(pg.faces().len(), 1);
        assert_eq!(pg.face(0).size(), 4);
        let (f1, f2) = pg.edge_faces(0, 1);
        assert_eq!(f1, f2);
    }

    #[test]
    fn facial_distance_cases() {
        let g = cycle(6);
        let rot: Vec<Vec<usize>> = (0..6).map(|v| vec![(v + 5) % 6, (v + 1) % 6]).collect();
        let pg = PlaneGraph::build(g, rot).unwrap();
        assert_eq!(pg.facial_distance(0, 0, 3).unwrap(), 3);
        assert_eq!(pg.facial_distance(0, 2, 2).unwrap(), 0);
        assert_eq!(pg.facial_distance(0, 4, 5).unwrap(), 1);
        assert!(pg.facial_distance(0, 0, 7).is_err());
        // repeated occurrence: the single face of a path visits the middle twice
        let g = path(3);
        let rot: Vec<Vec<usize>> = (0..3).map(|v| g.neighbors(v).to_vec()).collect();
        let pt = PlaneGraph::build(g, rot).unwrap();
        assert!(pt.facial_distance(0, 1, 0).is_err());
    }

    #[test]
    fn charge_identity_on_fixtures() {
        for pg in [c5_plane(), constructions::cube().unwrap(), constructions::grid(3, 3).unwrap()] {
            assert!(pg.graph().is_connected());
            let vs: i64 = (0..pg.graph().vertex_count())
                .map(|v| pg.graph().degree(v) as i64 - 4)
                .sum();
            let fs: i64 = pg.faces().iter().map(|f| f.size() as i64 - 4).sum();
            assert_eq!(vs + fs, -8);
        }
    }

    #[test]
    fn adjacent_faces_symmetric() {
        let pg = constructions::grid(3, 4).unwrap();
        for f in 0..pg.faces().len() {
            for &g2 in &pg.adjacent_faces(f) {
                let back = pg.adjacent_faces(g2).iter().filter(|&&x| x == f).count();
                let fwd = pg.adjacent_faces(f).iter().filter(|&&x| x == g2).count();
                assert_eq!(back, fwd);
            }
        }
    }

    #[test]
    fn isolated_vertex_face() {
        let pg = PlaneGraph::build(Graph::new(1), vec![Vec::new()]).unwrap();
        assert_eq!(pg.faces().len(), 1);
        assert_eq!(pg.face(0).size(), 0);
        assert_eq!(pg.incident_faces(0), vec![0]);
    }

    #[test]
    fn contract_two_vertex_keeps_embedding() {
        let g = cycle(8);
        let rot: Vec<Vec<usize>> = (0..8).map(|v| vec![(v + 7) % 8, (v + 1) % 8]).collect();
        let (mut g2, mut rot2) = (g, rot);
        surgery::contract_two_vertex(&mut g2, &mut rot2, 3);
        let pg = PlaneGraph::build(g2, rot2).unwrap();
        assert_eq!(pg.graph().vertex_count(), 7);
        assert_eq!(pg.graph().girth(), Some(7));
    }
}

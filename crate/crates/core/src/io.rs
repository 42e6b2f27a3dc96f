//! JSON and plain-text input/output.
//!
//! Graph JSON: `{"n": <int>, "edges": [[u,v], ...]}` with each edge listed
//! once, u < v. Plain text: one `u v` pair per line, `#` comments. Plane
//! graph JSON adds `"rotation": [[neighbors of v0 in cyclic order], ...]`.
//! Coloring JSON: `{"colors": [c0, ...]}` with -1 marking uncolored.
//! Lists JSON: `{"lists": [[colors of v0], ...]}`.
//!
//! All emitted JSON has sorted keys (serde_json's default map ordering), so
//! output is byte-stable for a fixed input.

use serde_json::{json, Value};

use crate::conflict::Coloring;
use crate::embed::PlaneGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::ListAssignment;

pub fn graph_to_json(g: &Graph) -> Value {
    json!({
        "n": g.vertex_count(),
        "edges": g.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
    })
}

pub fn plane_graph_to_json(pg: &PlaneGraph) -> Value {
    json!({
        "n": pg.graph().vertex_count(),
        "edges": pg.graph().edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
        "rotation": pg.rotation(),
    })
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::input(format!("{what}: expected a nonnegative integer, got {v}")))
}

pub fn graph_from_json(v: &Value) -> Result<Graph> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::input("graph JSON must be an object"))?;
    let n = as_usize(
        obj.get("n").ok_or_else(|| Error::input("graph JSON missing \"n\""))?,
        "n",
    )?;
    let edges_v = obj
        .get("edges")
        .and_then(|e| e.as_array())
        .ok_or_else(|| Error::input("graph JSON missing \"edges\" array"))?;
    let mut edges = Vec::with_capacity(edges_v.len());
    for e in edges_v {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::input(format!("edge {e} is not a pair")))?;
        edges.push((as_usize(&pair[0], "edge endpoint")?, as_usize(&pair[1], "edge endpoint")?));
    }
    Graph::from_edges(n, &edges)
}

/// Rotation from JSON when present.
pub fn rotation_from_json(v: &Value) -> Result<Option<Vec<Vec<usize>>>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::input("graph JSON must be an object"))?;
    let Some(rot_v) = obj.get("rotation") else {
        return Ok(None);
    };
    let rows = rot_v
        .as_array()
        .ok_or_else(|| Error::input("\"rotation\" must be an array of arrays"))?;
    let mut rot = Vec::with_capacity(rows.len());
    for row in rows {
        let arr = row
            .as_array()
            .ok_or_else(|| Error::input("rotation row must be an array"))?;
        let mut r = Vec::with_capacity(arr.len());
        for x in arr {
            r.push(as_usize(x, "rotation entry")?);
        }
        rot.push(r);
    }
    Ok(Some(rot))
}

/// Parses either the JSON schema or a plain-text edge list.
pub fn graph_from_str(s: &str) -> Result<Graph> {
    let trimmed = s.trim_start();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(s)
            .map_err(|e| Error::input(format!("invalid JSON: {e}")))?;
        graph_from_json(&v)
    } else {
        edge_list_from_text(s)
    }
}

fn edge_list_from_text(s: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_v = 0usize;
    for (lineno, line) in s.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (a, b) = (it.next(), it.next());
        if it.next().is_some() {
            return Err(Error::input(format!("line {}: expected `u v`", lineno + 1)));
        }
        match (a, b) {
            (Some(a), Some(b)) => {
                let u: usize = a
                    .parse()
                    .map_err(|_| Error::input(format!("line {}: bad vertex {a:?}", lineno + 1)))?;
                let v: usize = b
                    .parse()
                    .map_err(|_| Error::input(format!("line {}: bad vertex {b:?}", lineno + 1)))?;
                max_v = max_v.max(u).max(v);
                edges.push((u, v));
            }
            _ => return Err(Error::input(format!("line {}: expected `u v`", lineno + 1))),
        }
    }
    let n = if edges.is_empty() { 0 } else { max_v + 1 };
    Graph::from_edges(n, &edges)
}

pub fn coloring_to_json(c: &Coloring) -> Value {
    json!({
        "colors": c
            .colors
            .iter()
            .map(|x| match x {
                Some(c) => json!(c),
                None => json!(-1),
            })
            .collect::<Vec<_>>(),
    })
}

pub fn coloring_from_json(v: &Value) -> Result<Coloring> {
    let arr = v
        .get("colors")
        .and_then(|c| c.as_array())
        .ok_or_else(|| Error::input("coloring JSON missing \"colors\" array"))?;
    let mut colors = Vec::with_capacity(arr.len());
    for x in arr {
        let i = x
            .as_i64()
            .ok_or_else(|| Error::input(format!("color {x} is not an integer")))?;
        colors.push(if i < 0 { None } else { Some(i as usize) });
    }
    Ok(Coloring { colors })
}

pub fn lists_to_json(l: &ListAssignment) -> Value {
    json!({ "lists": l.lists })
}

pub fn lists_from_json(v: &Value) -> Result<ListAssignment> {
    let rows = v
        .get("lists")
        .and_then(|c| c.as_array())
        .ok_or_else(|| Error::input("list JSON missing \"lists\" array"))?;
    let mut lists = Vec::with_capacity(rows.len());
    for row in rows {
        let arr = row
            .as_array()
            .ok_or_else(|| Error::input("list row must be an array"))?;
        let mut l = Vec::with_capacity(arr.len());
        for x in arr {
            l.push(as_usize(x, "list color")?);
        }
        lists.push(l);
    }
    Ok(ListAssignment::new(lists))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn graph_roundtrip() {
        let g = cycle(5);
        let j = graph_to_json(&g);
        let back = graph_from_json(&j).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn text_edge_list() {
        let g = graph_from_str("# a triangle\n0 1\n1 2 # last\n0 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(graph_from_str("0 1 2\n").is_err());
    }

    #[test]
    fn coloring_partial_roundtrip() {
        let c = Coloring { colors: vec![Some(3), None, Some(0)] };
        let j = coloring_to_json(&c);
        assert_eq!(j["colors"], json!([3, -1, 0]));
        assert_eq!(coloring_from_json(&j).unwrap(), c);
    }
}

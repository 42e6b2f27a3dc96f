//! Exact-rational charge ledger and the four discharging rule engines.
//!
//! Initial charges are d(u) - 4 on vertices and d(f) - 4 on faces; for a
//! connected plane graph the total is exactly -8 by Euler's formula. Rules
//! fire per incidence: per boundary occurrence for face-to-vertex rules and
//! per shared edge for face-to-face rules. Elements are processed in
//! deterministic order, so transfer ledgers are byte-stable.
//!
//! The rule engines never consult the configuration detectors; discharging
//! and detection stay independent so the unavoidability check is a genuine
//! cross-check.

use serde_json::{json, Value};

use crate::charge::{format_rational, frac, rat, Rational};
use crate::configs::{
    self, bad_face_injg3, check_hypotheses, classify_vertex, ConfigWitness, TheoremId, VertexClass,
};
use crate::embed::PlaneGraph;
use crate::error::Result;

/// A charged element of the plane graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl Element {
    pub fn label(self) -> String {
        match self {
            Element::Vertex(v) => format!("v{v}"),
            Element::Face(f) => format!("f{f}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ChargeLedger {
    pub vertex_charge: Vec<Rational>,
    pub face_charge: Vec<Rational>,
}

impl ChargeLedger {
    pub fn total(&self) -> Rational {
        self.vertex_charge.iter().copied().sum::<Rational>()
            + self.face_charge.iter().copied().sum::<Rational>()
    }

    pub fn get(&self, e: Element) -> Rational {
        match e {
            Element::Vertex(v) => self.vertex_charge[v],
            Element::Face(f) => self.face_charge[f],
        }
    }
}

/// One rule firing: `rule` gives `amount` from `from` to `to`.
#[derive(Clone, Debug)]
pub struct Transfer {
    pub rule: &'static str,
    pub from: Element,
    pub to: Element,
    pub amount: Rational,
}

#[derive(Clone, Debug)]
pub struct DischargeReport {
    pub theorem: TheoremId,
    pub initial: ChargeLedger,
    pub transfers: Vec<Transfer>,
    pub final_: ChargeLedger,
    pub negative_elements: Vec<Element>,
}

impl DischargeReport {
    pub fn to_json(&self) -> Value {
        let ledger = |l: &ChargeLedger| {
            json!({
                "vertices": l.vertex_charge.iter().map(|&r| format_rational(r)).collect::<Vec<_>>(),
                "faces": l.face_charge.iter().map(|&r| format_rational(r)).collect::<Vec<_>>(),
            })
        };
        json!({
            "theorem": self.theorem.name(),
            "initial": ledger(&self.initial),
            "transfers": self
                .transfers
                .iter()
                .map(|t| json!([t.rule, t.from.label(), t.to.label(), format_rational(t.amount)]))
                .collect::<Vec<_>>(),
            "final": ledger(&self.final_),
            "negative_elements": self
                .negative_elements
                .iter()
                .map(|e| e.label())
                .collect::<Vec<_>>(),
        })
    }
}

/// Initial charges d(u) - 4 and d(f) - 4.
pub fn initial_charges(pg: &PlaneGraph) -> ChargeLedger {
    let g = pg.graph();
    ChargeLedger {
        vertex_charge: (0..g.vertex_count())
            .map(|v| rat(g.degree(v) as i64 - 4))
            .collect(),
        face_charge: pg
            .faces()
            .iter()
            .map(|f| rat(f.size() as i64 - 4))
            .collect(),
    }
}

/// Runs the discharging rules of theorem `t` and returns the full ledger.
pub fn run_rules(pg: &PlaneGraph, t: TheoremId) -> Result<DischargeReport> {
    check_hypotheses(pg, t)?;
    let initial = initial_charges(pg);
    let transfers = match t {
        TheoremId::TwoDistG4 => rules_2dg4(pg),
        TheoremId::InjG3 => rules_injg3(pg),
        TheoremId::InjG4 => rules_injg4(pg),
        TheoremId::Exact => rules_exact(pg),
    };
    let mut final_ = initial.clone();
    for tr in &transfers {
        debug_assert!(
            [rat(1), frac(1, 2), frac(1, 3), frac(1, 6)].contains(&tr.amount),
            "unexpected transfer amount"
        );
        match tr.from {
            Element::Vertex(v) => final_.vertex_charge[v] -= tr.amount,
            Element::Face(f) => final_.face_charge[f] -= tr.amount,
        }
        match tr.to {
            Element::Vertex(v) => final_.vertex_charge[v] += tr.amount,
            Element::Face(f) => final_.face_charge[f] += tr.amount,
        }
    }
    debug_assert_eq!(initial.total(), final_.total());
    let mut negative_elements = Vec::new();
    for v in 0..final_.vertex_charge.len() {
        if final_.vertex_charge[v] < rat(0) {
            negative_elements.push(Element::Vertex(v));
        }
    }
    for f in 0..final_.face_charge.len() {
        if final_.face_charge[f] < rat(0) {
            negative_elements.push(Element::Face(f));
        }
    }
    Ok(DischargeReport { theorem: t, initial, transfers, final_, negative_elements })
}

/// Outcome of the unavoidability check.
#[derive(Clone, Debug)]
pub enum VerificationOutcome {
    /// Some reducible configuration is present (the expected outcome on
    /// every input satisfying the hypotheses).
    ConfigFound(Vec<ConfigWitness>),
    /// No configuration found. Either every final charge is nonnegative
    /// (impossible: the total is -8) or some element stays negative (a gap
    /// in the case analysis). Must never happen.
    Anomaly(Box<DischargeReport>),
}

impl VerificationOutcome {
    pub fn is_anomaly(&self) -> bool {
        matches!(self, VerificationOutcome::Anomaly(_))
    }
}

/// Either finds a configuration or reports the discharging anomaly.
pub fn verify_unavoidability(pg: &PlaneGraph, t: TheoremId) -> Result<VerificationOutcome> {
    let witnesses = configs::detect_all(pg, t)?;
    if !witnesses.is_empty() {
        return Ok(VerificationOutcome::ConfigFound(witnesses));
    }
    let report = run_rules(pg, t)?;
    Ok(VerificationOutcome::Anomaly(Box::new(report)))
}

// ---------------------------------------------------------------------------
// rule engines

/// Occurrences of vertices on a face walk, in walk order.
fn occurrences(pg: &PlaneGraph, f: usize) -> Vec<usize> {
    pg.face(f).vertices().collect()
}

fn vertex_on_4face(pg: &PlaneGraph, v: usize) -> bool {
    pg.vertex_on_face_of_size(v, 4)
}

/// 2-distance rules (girth >= 4):
/// R0: every 5+-face gives 1/3 to each incident 3-vertex not incident to a
///     4-face; R1: 1/2 to each incident 3-vertex that is incident to one.
/// R2: a 5+-face across u4u5 of a 5-face u1..u5 with d(u1)=d(u3)=d(u4)=3
///     and a 4-face on u1u2 gives 1/6 to that 5-face.
fn rules_2dg4(pg: &PlaneGraph) -> Vec<Transfer> {
    let mut out = Vec::new();
    for f in 0..pg.faces().len() {
        if pg.face(f).size() < 5 {
            continue;
        }
        for v in occurrences(pg, f) {
            if pg.graph().degree(v) == 3 {
                if !vertex_on_4face(pg, v) {
                    out.push(Transfer {
                        rule: "R0",
                        from: Element::Face(f),
                        to: Element::Vertex(v),
                        amount: frac(1, 3),
                    });
                } else {
                    out.push(Transfer {
                        rule: "R1",
                        from: Element::Face(f),
                        to: Element::Vertex(v),
                        amount: frac(1, 2),
                    });
                }
            }
        }
    }
    // R2, deduplicated per (giver, receiver, shared edge)
    let mut r2: Vec<(usize, usize, (usize, usize))> = Vec::new();
    for fp in 0..pg.faces().len() {
        if pg.face(fp).size() != 5 {
            continue;
        }
        let tails: Vec<usize> = occurrences(pg, fp);
        for lab in labelings5(&tails) {
            let [u1, u2, u3, u4, u5] = lab;
            let g = pg.graph();
            if g.degree(u1) != 3 || g.degree(u3) != 3 || g.degree(u4) != 3 {
                continue;
            }
            if !edge_on_face_of_size(pg, u1, u2, 4) {
                continue;
            }
            let Some(giver) = other_face(pg, fp, u4, u5) else { continue };
            if pg.face(giver).size() >= 5 {
                r2.push((giver, fp, (u4.min(u5), u4.max(u5))));
            }
        }
    }
    r2.sort_unstable();
    r2.dedup();
    for (giver, fp, _) in r2 {
        out.push(Transfer {
            rule: "R2",
            from: Element::Face(giver),
            to: Element::Face(fp),
            amount: frac(1, 6),
        });
    }
    out
}

/// Injective rules, any girth:
/// R0: every 5+-face gives 1/3 to each incident 3-vertex.
/// R1: every 5+-face gives 1/3 to each adjacent 3-face with no 3-face
///     neighbor; R2: 1/2 when the 3-face has one.
/// R3: every 6+-face gives 1/3 to each adjacent bad 5-face.
fn rules_injg3(pg: &PlaneGraph) -> Vec<Transfer> {
    let mut out = Vec::new();
    let nfaces = pg.faces().len();
    let three_face_has_three_neighbor: Vec<bool> = (0..nfaces)
        .map(|f| {
            pg.face(f).size() == 3 && configs::three_face_neighbors(pg, f) >= 1
        })
        .collect();
    for f in 0..nfaces {
        let size = pg.face(f).size();
        if size < 5 {
            continue;
        }
        for v in occurrences(pg, f) {
            if pg.graph().degree(v) == 3 {
                out.push(Transfer {
                    rule: "R0",
                    from: Element::Face(f),
                    to: Element::Vertex(v),
                    amount: frac(1, 3),
                });
            }
        }
        for &(p, q) in &pg.face(f).walk {
            let og = pg.face_of_dart((q, p));
            if og == f {
                continue;
            }
            let osize = pg.face(og).size();
            if osize == 3 {
                if three_face_has_three_neighbor[og] {
                    out.push(Transfer {
                        rule: "R2",
                        from: Element::Face(f),
                        to: Element::Face(og),
                        amount: frac(1, 2),
                    });
                } else {
                    out.push(Transfer {
                        rule: "R1",
                        from: Element::Face(f),
                        to: Element::Face(og),
                        amount: frac(1, 3),
                    });
                }
            }
            if size >= 6 && osize == 5 && bad_face_injg3(pg, og) {
                out.push(Transfer {
                    rule: "R3",
                    from: Element::Face(f),
                    to: Element::Face(og),
                    amount: frac(1, 3),
                });
            }
        }
    }
    out
}

/// Injective rules, girth >= 4:
/// R0: every 5+-face gives 1 to each incident 2-vertex.
/// R1/R2: every good 5+-face gives 1 to each incident small 3-vertex and
///        1/2 to each incident medium 3-vertex.
/// R3: every 5+-face gives 1/3 to each incident large 3-vertex.
fn rules_injg4(pg: &PlaneGraph) -> Vec<Transfer> {
    let mut out = Vec::new();
    let n = pg.graph().vertex_count();
    let class: Vec<VertexClass> = (0..n).map(|v| classify_vertex(pg, v)).collect();
    for f in 0..pg.faces().len() {
        if pg.face(f).size() < 5 {
            continue;
        }
        let good = !configs::bad_face_injg4(pg, f);
        for v in occurrences(pg, f) {
            let d = pg.graph().degree(v);
            if d == 2 {
                out.push(Transfer {
                    rule: "R0",
                    from: Element::Face(f),
                    to: Element::Vertex(v),
                    amount: rat(1),
                });
            } else if d == 3 {
                match class[v] {
                    VertexClass::Small if good => out.push(Transfer {
                        rule: "R1",
                        from: Element::Face(f),
                        to: Element::Vertex(v),
                        amount: rat(1),
                    }),
                    VertexClass::Medium if good => out.push(Transfer {
                        rule: "R2",
                        from: Element::Face(f),
                        to: Element::Vertex(v),
                        amount: frac(1, 2),
                    }),
                    VertexClass::Large => out.push(Transfer {
                        rule: "R3",
                        from: Element::Face(f),
                        to: Element::Vertex(v),
                        amount: frac(1, 3),
                    }),
                    _ => {}
                }
            }
        }
    }
    out
}

/// Exact square rules, any girth:
/// R0: every 5+-face gives 1 to each incident 2-vertex.
/// R1/R2: every 5+-face gives 1/3 to each incident 3-vertex not on a
///        4-face, and 1/2 to each incident 3-vertex on one.
/// R3: every 5+-face gives 1/3 to each adjacent 3-face.
fn rules_exact(pg: &PlaneGraph) -> Vec<Transfer> {
    let mut out = Vec::new();
    for f in 0..pg.faces().len() {
        if pg.face(f).size() < 5 {
            continue;
        }
        for v in occurrences(pg, f) {
            match pg.graph().degree(v) {
                2 => out.push(Transfer {
                    rule: "R0",
                    from: Element::Face(f),
                    to: Element::Vertex(v),
                    amount: rat(1),
                }),
                3 => {
                    if !vertex_on_4face(pg, v) {
                        out.push(Transfer {
                            rule: "R1",
                            from: Element::Face(f),
                            to: Element::Vertex(v),
                            amount: frac(1, 3),
                        });
                    } else {
                        out.push(Transfer {
                            rule: "R2",
                            from: Element::Face(f),
                            to: Element::Vertex(v),
                            amount: frac(1, 2),
                        });
                    }
                }
                _ => {}
            }
        }
        for &(p, q) in &pg.face(f).walk {
            let og = pg.face_of_dart((q, p));
            if og != f && pg.face(og).size() == 3 {
                out.push(Transfer {
                    rule: "R3",
                    from: Element::Face(f),
                    to: Element::Face(og),
                    amount: frac(1, 3),
                });
            }
        }
    }
    out
}

fn labelings5(tails: &[usize]) -> Vec<[usize; 5]> {
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

fn edge_on_face_of_size(pg: &PlaneGraph, u: usize, v: usize, size: usize) -> bool {
    let (a, b) = pg.edge_faces(u, v);
    pg.face(a).size() == size || pg.face(b).size() == size
}

fn other_face(pg: &PlaneGraph, f: usize, u: usize, v: usize) -> Option<usize> {
    let (a, b) = pg.edge_faces(u, v);
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

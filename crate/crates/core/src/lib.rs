//! Distance-based colorings of bounded-degree planar graphs.
//!
//! The library covers the whole pipeline for 2-distance, injective, and
//! exact square colorings of subquartic planar graphs: conflict-graph
//! construction, an exact list-coloring solver, detectors for the reducible
//! configurations used by the four discharging arguments, exact-rational
//! discharging engines, a constructive coloring procedure driven by the
//! reduction recipes, and generators/verifiers for the extremal graphs.

pub mod charge;
pub mod configs;
pub mod conflict;
pub mod constructions;
pub mod discharge;
pub mod embed;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod planarity;
pub mod reducer;
pub mod solver;

pub use charge::Rational;
pub use configs::{ConfigWitness, FaceClass, TheoremId, VertexClass};
pub use conflict::{Coloring, ColoringKind};
pub use embed::{Face, PlaneGraph};
pub use error::Error;
pub use graph::Graph;
pub use solver::{ListAssignment, SolveResult};

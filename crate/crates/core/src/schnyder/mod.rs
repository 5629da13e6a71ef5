//! Schnyder woods of plane triangulations, the closed-form wood of the nested
//! triangulation, and the angle and area audits of α-Schnyder drawings.

mod alpha;
mod witness;

pub use alpha::{
    audit_area, audit_area_with, check_alpha, check_alpha_with_tolerance, k_epsilon, AlphaOffense,
    AlphaReport, AreaAudit, AuditOptions, LevelRatio, ALPHA_TOLERANCE, AUDIT_REL_TOL,
};
pub use witness::{default_witness_scale, witness_drawing, witness_drawing_with_scale, WitnessShape};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::planegraph::{NestedRole, NestedTriangulation, PlaneGraph, VertexId};
use crate::verify::{VerifierReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::One, Color::Two, Color::Three];

    pub fn from_index(i: u8) -> Option<Color> {
        match i {
            1 => Some(Color::One),
            2 => Some(Color::Two),
            3 => Some(Color::Three),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    /// `i + 1` cyclically.
    pub fn next(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::Three,
            Color::Three => Color::One,
        }
    }

    /// `i - 1` cyclically.
    pub fn prev(self) -> Color {
        self.next().next()
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// One colored, oriented edge of a wood.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WoodEdge {
    pub tail: VertexId,
    pub head: VertexId,
    pub color: Color,
}

/// Color and orientation of the internal edges of a triangulation. The roots
/// of colors 1, 2, 3 are the outer vertices in clockwise order, starting at
/// the first vertex of the (normalized) outer walk.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchnyderWood {
    edges: BTreeMap<(VertexId, VertexId), WoodEdge>,
}

impl SchnyderWood {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets the color and direction of edge `tail -> head`, replacing any
    /// previous entry for the same undirected edge.
    pub fn insert(&mut self, tail: VertexId, head: VertexId, color: Color) {
        self.edges.insert(
            (tail.min(head), tail.max(head)),
            WoodEdge { tail, head, color },
        );
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Option<WoodEdge> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn remove(&mut self, u: VertexId, v: VertexId) -> Option<WoodEdge> {
        self.edges.remove(&(u.min(v), u.max(v)))
    }

    /// Edges sorted by their endpoints.
    pub fn edges(&self) -> impl Iterator<Item = WoodEdge> + '_ {
        self.edges.values().copied()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Head of the outgoing edge of color `c` at `v`, if any.
    pub fn outgoing(&self, v: VertexId, c: Color) -> Option<VertexId> {
        self.edges
            .values()
            .find(|e| e.tail == v && e.color == c)
            .map(|e| e.head)
    }
}

/// The outer vertices `[a_1, a_2, a_3]`, roots of colors 1, 2 and 3.
pub fn roots(g: &PlaneGraph) -> Option<[VertexId; 3]> {
    match g.outer_face() {
        &[a, b, c] => Some([a, b, c]),
        _ => None,
    }
}

/// Validates a wood against the rotation system. At an inner vertex the
/// clockwise order must read: outgoing 1, incoming 3, outgoing 2, incoming 1,
/// outgoing 3, incoming 2, with exactly one outgoing edge per color. At the
/// root of color `i` every internal edge is incoming with color `i`.
pub fn check_wood(g: &PlaneGraph, w: &SchnyderWood) -> Result<VerifierReport> {
    if !g.is_triangulation() {
        return Err(Error::InvalidParameter(
            "Schnyder woods need a triangulation".into(),
        ));
    }
    Ok(match wood_violation(g, w) {
        Some((vertex, reason)) => VerifierReport::fail(Witness::WoodViolation { vertex, reason }),
        None => VerifierReport::pass(),
    })
}

fn wood_violation(g: &PlaneGraph, w: &SchnyderWood) -> Option<(VertexId, String)> {
    let roots = roots(g).expect("triangulation has a triangular outer face");
    let outer_edge = |u: VertexId, v: VertexId| roots.contains(&u) && roots.contains(&v);
    for e in w.edges() {
        if !g.has_edge(e.tail, e.head) {
            return Some((e.tail, format!("{} -> {} is not an edge", e.tail, e.head)));
        }
        if outer_edge(e.tail, e.head) {
            return Some((e.tail, format!("outer edge {}-{} is colored", e.tail, e.head)));
        }
    }
    for (u, v) in g.edges() {
        if !outer_edge(u, v) && w.get(u, v).is_none() {
            return Some((u, format!("internal edge {u}-{v} is uncolored")));
        }
    }
    for (i, &r) in roots.iter().enumerate() {
        let color = Color::ALL[i];
        for &x in g.neighbors(r) {
            if roots.contains(&x) {
                continue;
            }
            let e = w.get(r, x).expect("checked above");
            if e.head != r || e.color != color {
                return Some((r, format!("edge {r}-{x} must enter the root with color {color}")));
            }
        }
    }
    for v in g.vertices().filter(|v| !roots.contains(v)) {
        if let Err(reason) = check_vertex_pattern(g, w, v) {
            return Some((v, reason));
        }
    }
    None
}

/// Position of an edge end in the clockwise pattern around an inner vertex.
fn zone(e: &WoodEdge, at: VertexId) -> u8 {
    let outgoing = e.tail == at;
    match (e.color, outgoing) {
        (Color::One, true) => 0,
        (Color::Three, false) => 1,
        (Color::Two, true) => 2,
        (Color::One, false) => 3,
        (Color::Three, true) => 4,
        (Color::Two, false) => 5,
    }
}

fn check_vertex_pattern(
    g: &PlaneGraph,
    w: &SchnyderWood,
    v: VertexId,
) -> std::result::Result<(), String> {
    let zones: Vec<u8> = g
        .neighbors(v)
        .iter()
        .map(|&x| zone(&w.get(v, x).expect("internal edges are colored"), v))
        .collect();
    for (c, z) in [(1, 0), (2, 2), (3, 4)] {
        let k = zones.iter().filter(|&&x| x == z).count();
        if k != 1 {
            return Err(format!("{k} outgoing edges of color {c}"));
        }
    }
    let start = zones.iter().position(|&z| z == 0).unwrap();
    let ordered = (0..zones.len()).map(|i| zones[(start + i) % zones.len()]);
    let mut last = 0;
    for z in ordered {
        if z < last {
            return Err("edges out of clockwise order".into());
        }
        last = z;
    }
    Ok(())
}

/// The Schnyder wood of the nested triangulation (unique for this family).
/// On each level `b_k, c_k -> a_k` have color 1 and `c_k -> b_k` color 2;
/// between levels `a_k` sends one edge of each color up to
/// `a_{k+1}, b_{k+1}, c_{k+1}`, `b_k -> b_{k+1}` has color 2, and
/// `b_k, c_k -> c_{k+1}` have color 3.
pub fn wood_of_nested(g: &NestedTriangulation) -> Result<SchnyderWood> {
    use NestedRole::*;
    let m = g.m();
    if m < 2 {
        return Err(Error::InvalidParameter(
            "the nested wood needs m >= 2".into(),
        ));
    }
    let id = NestedTriangulation::id;
    let mut w = SchnyderWood::new();
    for k in 1..m {
        w.insert(id(B, k), id(A, k), Color::One);
        w.insert(id(C, k), id(A, k), Color::One);
        w.insert(id(C, k), id(B, k), Color::Two);
        w.insert(id(A, k), id(A, k + 1), Color::One);
        w.insert(id(A, k), id(B, k + 1), Color::Two);
        w.insert(id(B, k), id(B, k + 1), Color::Two);
        w.insert(id(A, k), id(C, k + 1), Color::Three);
        w.insert(id(B, k), id(C, k + 1), Color::Three);
        w.insert(id(C, k), id(C, k + 1), Color::Three);
    }
    Ok(w)
}

//! Exact checks of drawing properties. Every verdict is computed over an
//! integer rescaling of the drawing, with `i128` arithmetic when the
//! coordinates are small enough and `BigInt` otherwise.

mod monotone;

pub use monotone::{check_angle_monotone, oracle_angle_monotone, ORACLE_MAX_VERTICES};

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::constructors::Drawing;
use crate::error::{Error, Result};
use crate::geometry::exact::{self, Coord};
use crate::geometry::{integer_frame, narrow_frame, Point, Sign};
use crate::planegraph::VertexId;

/// Counterexample attached to a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Two vertices drawn at the same point.
    CoincidentVertices(VertexId, VertexId),
    /// Two edges sharing a point other than a common endpoint.
    Crossing((VertexId, VertexId), (VertexId, VertexId)),
    /// A face polygon turns the wrong way (or reverses) at `vertex`.
    NonConvexFace { face: Vec<VertexId>, vertex: VertexId },
    /// No monotone path inside any quarter-turn wedge.
    NoMonotonePath { from: VertexId, to: VertexId },
    /// `from` has no neighbor strictly closer to `to`.
    NoCloserNeighbor { from: VertexId, to: VertexId },
    /// A coordinate is not an integer.
    OffGrid(VertexId),
    /// The drawing meets more grid columns or rows than allowed.
    GridTooLarge { width: BigInt, height: BigInt },
    /// The angular order of the edges around `vertex` differs from the rotation.
    RotationMismatch(VertexId),
    /// The designated outer face is not drawn as the unbounded face.
    OuterFaceMismatch,
    /// The edge coloring around `vertex` breaks the Schnyder wood rules.
    WoodViolation { vertex: VertexId, reason: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::CoincidentVertices(u, v) => write!(f, "vertices {u} and {v} coincide"),
            Witness::Crossing((a, b), (c, d)) => write!(f, "edges {a}-{b} and {c}-{d} cross"),
            Witness::NonConvexFace { face, vertex } => {
                write!(f, "face {face:?} is not convex at vertex {vertex}")
            }
            Witness::NoMonotonePath { from, to } => {
                write!(f, "no angle-monotone path from {from} to {to}")
            }
            Witness::NoCloserNeighbor { from, to } => {
                write!(f, "no neighbor of {from} is closer to {to}")
            }
            Witness::OffGrid(v) => write!(f, "vertex {v} has a non-integer coordinate"),
            Witness::GridTooLarge { width, height } => {
                write!(f, "drawing needs a {width} x {height} grid")
            }
            Witness::RotationMismatch(v) => {
                write!(f, "edge order around vertex {v} differs from the rotation system")
            }
            Witness::OuterFaceMismatch => write!(f, "outer face is not the unbounded face"),
            Witness::WoodViolation { vertex, reason } => write!(f, "at vertex {vertex}: {reason}"),
        }
    }
}

/// Outcome of a check: a verdict and, on failure, a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifierReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl VerifierReport {
    pub fn pass() -> Self {
        VerifierReport {
            verdict: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        VerifierReport {
            verdict: false,
            witness: Some(witness),
        }
    }

    fn from_witness(w: Option<Witness>) -> Self {
        match w {
            Some(w) => Self::fail(w),
            None => Self::pass(),
        }
    }
}

impl fmt::Display for VerifierReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "pass"),
            Some(w) => write!(f, "FAIL: {w}"),
        }
    }
}

/// Integer coordinates of a drawing, narrow when they fit.
pub(crate) enum Frame {
    Narrow(Vec<[i128; 2]>),
    Wide(Vec<[BigInt; 2]>),
}

impl Frame {
    pub(crate) fn of(points: &[Point]) -> Frame {
        let wide = integer_frame(points);
        match narrow_frame(&wide) {
            Some(n) => Frame::Narrow(n),
            None => Frame::Wide(wide),
        }
    }
}

/// Runs `$body` with `$pts` bound to the integer coordinates of `$points`.
macro_rules! with_frame {
    ($points:expr, $pts:ident => $body:expr) => {
        match $crate::verify::Frame::of($points) {
            $crate::verify::Frame::Narrow($pts) => $body,
            $crate::verify::Frame::Wide($pts) => $body,
        }
    };
}
pub(crate) use with_frame;

/// Planarity: no two vertices coincide and no two edges share a point other
/// than a common endpoint (this includes overlaps and a vertex on an edge).
pub fn check_planar(d: &Drawing) -> VerifierReport {
    with_frame!(d.points(), pts => VerifierReport::from_witness(planar_witness(d, &pts)))
}

fn planar_witness<T: Coord>(d: &Drawing, pts: &[[T; 2]]) -> Option<Witness> {
    let mut order: Vec<VertexId> = d.graph().vertices().collect();
    order.sort_by(|&a, &b| pts[a].cmp(&pts[b]).then(a.cmp(&b)));
    let mut best: Option<(VertexId, VertexId)> = None;
    for w in order.windows(2) {
        if pts[w[0]] == pts[w[1]] {
            let pair = (w[0].min(w[1]), w[0].max(w[1]));
            best = Some(best.map_or(pair, |b| b.min(pair)));
        }
    }
    if let Some((u, v)) = best {
        return Some(Witness::CoincidentVertices(u, v));
    }

    let edges = d.graph().edges();
    let min_x = |e: &(VertexId, VertexId)| pts[e.0][0].clone().min(pts[e.1][0].clone());
    let max_x = |e: &(VertexId, VertexId)| pts[e.0][0].clone().max(pts[e.1][0].clone());
    let mut sweep: Vec<usize> = (0..edges.len()).collect();
    sweep.sort_by_key(|&i| min_x(&edges[i]));
    let mut best: Option<(usize, usize)> = None;
    for (k, &i) in sweep.iter().enumerate() {
        let e = edges[i];
        let right = max_x(&e);
        for &j in &sweep[k + 1..] {
            let f = edges[j];
            if min_x(&f) > right {
                break;
            }
            if exact::segments_cross(&pts[e.0], &pts[e.1], &pts[f.0], &pts[f.1]) {
                let pair = (i.min(j), i.max(j));
                best = Some(best.map_or(pair, |b| b.min(pair)));
            }
        }
    }
    best.map(|(i, j)| Witness::Crossing(edges[i], edges[j]))
}

/// Convexity with straight angles allowed: every bounded face is a convex
/// polygon and the outer face is bounded by one.
pub fn check_convex(d: &Drawing) -> Result<VerifierReport> {
    convex(d, false)
}

/// Like [`check_convex`] but straight angles are rejected too.
pub fn check_convex_strict(d: &Drawing) -> Result<VerifierReport> {
    convex(d, true)
}

fn convex(d: &Drawing, strict: bool) -> Result<VerifierReport> {
    let planar = check_planar(d);
    if let Some(w) = planar.witness {
        return Err(Error::NonPlanar(w.to_string()));
    }
    Ok(with_frame!(d.points(), pts => VerifierReport::from_witness(convex_witness(d, &pts, strict))))
}

fn convex_witness<T: Coord>(d: &Drawing, pts: &[[T; 2]], strict: bool) -> Option<Witness> {
    let g = d.graph();
    if g.vertex_count() < 3 {
        return None;
    }
    let outer = g.outer_face().to_vec();
    for face in g.faces() {
        // Bounded faces turn left, the outer face turns right.
        let want = if face == outer { Sign::Negative } else { Sign::Positive };
        let k = face.len();
        for i in 0..k {
            let (a, b, c) = (face[(i + k - 1) % k], face[i], face[(i + 1) % k]);
            let e1 = exact::sub(&pts[b], &pts[a]);
            let e2 = exact::sub(&pts[c], &pts[b]);
            let turn = Sign::of(&exact::cross(&e1, &e2));
            let ok = if turn == Sign::Zero {
                !strict && exact::dot(&e1, &e2).is_positive()
            } else {
                turn == want
            };
            if !ok {
                return Some(Witness::NonConvexFace { face, vertex: b });
            }
        }
    }
    None
}

/// Greediness: for every ordered pair `(u, v)` with `u != v`, some neighbor of
/// `u` is strictly closer to `v` than `u` is. This is equivalent to the
/// existence of a distance-decreasing path from `u` to `v`.
pub fn check_greedy(d: &Drawing) -> VerifierReport {
    with_frame!(d.points(), pts => VerifierReport::from_witness(greedy_witness(d, &pts)))
}

fn greedy_witness<T: Coord>(d: &Drawing, pts: &[[T; 2]]) -> Option<Witness> {
    let g = d.graph();
    for u in g.vertices() {
        for v in g.vertices() {
            if u == v {
                continue;
            }
            let here = exact::norm2(&exact::sub(&pts[u], &pts[v]));
            let closer = g
                .neighbors(u)
                .iter()
                .any(|&w| exact::norm2(&exact::sub(&pts[w], &pts[v])) < here);
            if !closer {
                return Some(Witness::NoCloserNeighbor { from: u, to: v });
            }
        }
    }
    None
}

/// All coordinates are integers and the drawing meets at most `width` grid
/// columns and `height` grid rows.
pub fn check_grid(d: &Drawing, width: u64, height: u64) -> VerifierReport {
    if let Some(v) = d.graph().vertices().find(|&v| !d.point(v).is_integral()) {
        return VerifierReport::fail(Witness::OffGrid(v));
    }
    let (w, h) = (d.width_exact(), d.height_exact());
    if w > BigInt::from(width) || h > BigInt::from(height) {
        return VerifierReport::fail(Witness::GridTooLarge {
            width: w,
            height: h,
        });
    }
    VerifierReport::pass()
}

/// The drawing realizes its rotation system: around every vertex the edges
/// appear clockwise in rotation order, and the designated outer face is the
/// one drawn clockwise.
pub fn check_embedding(d: &Drawing) -> VerifierReport {
    with_frame!(d.points(), pts => VerifierReport::from_witness(embedding_witness(d, &pts)))
}

fn embedding_witness<T: Coord>(d: &Drawing, pts: &[[T; 2]]) -> Option<Witness> {
    let g = d.graph();
    for v in g.vertices() {
        let rot = g.neighbors(v);
        if rot.len() < 2 {
            continue;
        }
        let dir = |w: VertexId| exact::sub(&pts[w], &pts[v]);
        if rot.iter().any(|&w| dir(w).iter().all(Zero::is_zero)) {
            return Some(Witness::RotationMismatch(v));
        }
        let mut ccw = rot.to_vec();
        ccw.sort_by(|&a, &b| exact::angle_cmp(&dir(a), &dir(b)));
        if ccw
            .windows(2)
            .any(|p| exact::angle_cmp(&dir(p[0]), &dir(p[1])).is_eq())
        {
            return Some(Witness::RotationMismatch(v));
        }
        ccw.reverse();
        let start = ccw.iter().position(|&w| w == rot[0]).expect("same neighbors");
        let cw: Vec<VertexId> = (0..ccw.len()).map(|i| ccw[(start + i) % ccw.len()]).collect();
        if cw != rot {
            return Some(Witness::RotationMismatch(v));
        }
    }
    if g.vertex_count() >= 3 {
        let area2 = |face: &[VertexId]| {
            let mut acc = T::zero();
            for i in 0..face.len() {
                acc = acc + exact::cross(&pts[face[i]], &pts[face[(i + 1) % face.len()]]);
            }
            acc
        };
        if area2(g.outer_face()).is_positive() {
            return Some(Witness::OuterFaceMismatch);
        }
        if g.inner_faces().iter().any(|f| !area2(f).is_positive()) {
            return Some(Witness::OuterFaceMismatch);
        }
    }
    None
}

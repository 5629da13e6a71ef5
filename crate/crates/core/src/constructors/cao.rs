use super::Drawing;
use crate::error::Result;
use crate::geometry::Point;
use crate::planegraph::{CaoGraph, CaoRole, VertexId};

/// Unit steps of the three spanning paths: up, lower-left, lower-right.
const STEPS: [(i64, i64); 3] = [(0, 1), (-1, -1), (1, -1)];

/// The vertex following `(role, level)` on its spanning path.
fn successor(role: CaoRole, level: usize) -> (CaoRole, usize) {
    let next = match role {
        CaoRole::X => CaoRole::Y,
        CaoRole::Y => CaoRole::Z,
        CaoRole::Z => CaoRole::X,
    };
    (next, level + 1)
}

/// The three straight paths from `x_0` that together cover every vertex:
/// vertical up, toward the lower left and toward the lower right, in that
/// order. Each path gains one vertex per layer; the role of its end cycles
/// `x -> y -> z -> x`.
pub fn cao_spanning_paths(g: &CaoGraph) -> [Vec<VertexId>; 3] {
    let starts = [(CaoRole::X, 1), (CaoRole::Z, 1), (CaoRole::Y, 1)];
    starts.map(|mut at| {
        let mut path = vec![CaoGraph::id(CaoRole::X, 0)];
        for _ in 0..=g.index() {
            path.push(CaoGraph::id(at.0, at.1));
            at = successor(at.0, at.1);
        }
        path
    })
}

fn layout(g: &CaoGraph) -> (Vec<(i64, i64)>, [Vec<VertexId>; 3]) {
    let paths = cao_spanning_paths(g);
    let mut pos = vec![(0, 0); g.graph().vertex_count()];
    for (path, (dx, dy)) in paths.iter().zip(STEPS) {
        for (k, &v) in path.iter().enumerate() {
            pos[v] = (dx * k as i64, dy * k as i64);
        }
    }
    (pos, paths)
}

fn to_drawing(g: &CaoGraph, pos: Vec<(i64, i64)>) -> Result<Drawing> {
    let coords = pos.into_iter().map(|(x, y)| Point::int(x, y)).collect();
    Drawing::new(g.graph().clone(), coords)
}

/// Planar angle-monotone drawing with `x_0` at the origin on a
/// `(2i+3) x (2i+3)` grid. Each spanning path is a straight ray from the
/// origin. For the plus variant the outer triangle is drawn straight.
pub fn draw_cao(g: &CaoGraph) -> Result<Drawing> {
    to_drawing(g, layout(g).0)
}

/// Convex variant of [`draw_cao`] on the same grid: the lower-right path's
/// second to last vertex moves by `(1,-1)`, the ends of the lower-right and
/// lower-left paths move right by one and the end of the vertical path
/// moves left by one.
pub fn draw_cao_convex(g: &CaoGraph) -> Result<Drawing> {
    let (mut pos, [up, lower_left, lower_right]) = layout(g);
    let shift = |pos: &mut Vec<(i64, i64)>, v: VertexId, dx: i64, dy: i64| {
        pos[v].0 += dx;
        pos[v].1 += dy;
    };
    let k = lower_right.len();
    shift(&mut pos, lower_right[k - 2], 1, -1);
    shift(&mut pos, lower_right[k - 1], 1, 0);
    shift(&mut pos, *lower_left.last().unwrap(), 1, 0);
    shift(&mut pos, *up.last().unwrap(), -1, 0);
    to_drawing(g, pos)
}

//! Straight-line drawings and the grid constructions for the graph families.

mod cao;
mod halin;

pub use cao::{cao_spanning_paths, draw_cao, draw_cao_convex};
pub use halin::{draw_halin, draw_halin_tree, draw_wheel, tree_layout};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};
use crate::geometry::{Point, Rational};
use crate::planegraph::{PlaneGraph, VertexId};

/// A plane graph together with one point per vertex; edges are straight
/// segments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    graph: PlaneGraph,
    coords: Vec<Point>,
}

impl Drawing {
    pub fn new(graph: PlaneGraph, coords: Vec<Point>) -> Result<Self> {
        if coords.len() != graph.vertex_count() {
            return Err(invalid(format!(
                "{} points for {} vertices",
                coords.len(),
                graph.vertex_count()
            )));
        }
        Ok(Drawing { graph, coords })
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn point(&self, v: VertexId) -> &Point {
        &self.coords[v]
    }

    pub fn points(&self) -> &[Point] {
        &self.coords
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(Point::is_integral)
    }

    /// Number of grid columns `x = c` (c integer) meeting the drawing.
    pub fn width_exact(&self) -> BigInt {
        lines_met(self.coords.iter().map(|p| &p.x))
    }

    /// Number of grid rows `y = c` (c integer) meeting the drawing.
    pub fn height_exact(&self) -> BigInt {
        lines_met(self.coords.iter().map(|p| &p.y))
    }

    /// [`Drawing::width_exact`], saturated to `usize::MAX`.
    pub fn width(&self) -> usize {
        self.width_exact().to_usize().unwrap_or(usize::MAX)
    }

    pub fn height(&self) -> usize {
        self.height_exact().to_usize().unwrap_or(usize::MAX)
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Drawing {
        Drawing {
            graph: self.graph.clone(),
            coords: self.coords.iter().map(|p| p.translate(dx, dy)).collect(),
        }
    }

    /// Shifts the drawing by an integer vector so the smallest coordinates
    /// are in `[0, 1)`; integer drawings end up touching both axes.
    pub fn normalized(&self) -> Drawing {
        let min_x = self.coords.iter().map(|p| p.x.floor()).min().unwrap_or_else(Rational::zero);
        let min_y = self.coords.iter().map(|p| p.y.floor()).min().unwrap_or_else(Rational::zero);
        self.translate(&-min_x, &-min_y)
    }

    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Drawing {
        Drawing {
            graph: self.graph.clone(),
            coords: self.coords.iter().map(f).collect(),
        }
    }
}

fn lines_met<'a>(vals: impl Iterator<Item = &'a Rational>) -> BigInt {
    let vals: Vec<&Rational> = vals.collect();
    let (Some(lo), Some(hi)) = (vals.iter().min(), vals.iter().max()) else {
        return BigInt::zero();
    };
    let n: BigInt = hi.floor().to_integer() - lo.ceil().to_integer() + 1;
    if n.is_negative() {
        BigInt::zero()
    } else {
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path2(a: Point, b: Point) -> Drawing {
        let g = PlaneGraph::new(vec![vec![1], vec![0]], vec![0, 1]).unwrap();
        Drawing::new(g, vec![a, b]).unwrap()
    }

    #[test]
    fn width_counts_grid_lines() {
        let d = path2(Point::int(-2, 0), Point::int(2, 3));
        assert_eq!(d.width(), 5);
        assert_eq!(d.height(), 4);
        let half = Rational::new(1.into(), 2.into());
        let d = path2(Point::new(half.clone(), half.clone()), Point::new(half.clone(), half));
        assert_eq!(d.width(), 0);
    }

    #[test]
    fn normalization_moves_to_origin() {
        let d = path2(Point::int(-2, -1), Point::int(2, 3)).normalized();
        assert_eq!(d.point(0), &Point::int(0, 0));
        assert_eq!(d.point(1), &Point::int(4, 4));
    }

    #[test]
    fn point_count_checked() {
        let g = PlaneGraph::new(vec![vec![1], vec![0]], vec![0, 1]).unwrap();
        assert!(Drawing::new(g, vec![Point::int(0, 0)]).is_err());
    }
}

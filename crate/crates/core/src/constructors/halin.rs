use std::collections::BTreeMap;

use super::Drawing;
use crate::error::{invalid, Error, Result};
use crate::geometry::Point;
use crate::planegraph::{HalinGraph, OrderedTree, PlaneGraph, VertexId};

/// Closed-form layout of an ordered tree whose internal vertices all have at
/// least two children: the `j`-th leaf (from 0, left to right) sits at
/// `(2j, 0)` and an internal vertex with `l` leaves below it sits at
/// `(x + l - 1, l - 1)`, where `x` is the abscissa of its leftmost leaf. The
/// leftmost and rightmost paths of every subtree are then diagonal.
pub fn tree_layout(t: &OrderedTree) -> Result<BTreeMap<VertexId, (i64, i64)>> {
    for v in t.vertices() {
        if t.children(v).len() == 1 {
            return Err(invalid(format!("internal vertex {v} has a single child")));
        }
    }
    let counts = t.subtree_leaf_counts();
    let mut leaf_x = BTreeMap::new();
    for (j, l) in t.leaves().into_iter().enumerate() {
        leaf_x.insert(l, 2 * j as i64);
    }
    Ok(t.vertices()
        .map(|v| {
            let l = counts[&v] as i64;
            let first = *t.leftmost_path(v).last().unwrap();
            (v, (leaf_x[&first] + l - 1, l - 1))
        })
        .collect())
}

/// Draws `G[T]`, the subgraph of `host` induced by the vertices of `t`: the
/// tree plus the host edges between consecutive leaves. The result is
/// renumbered densely; the second component maps new ids to host ids.
pub fn draw_halin_tree(t: &OrderedTree, host: &PlaneGraph) -> Result<(Drawing, Vec<VertexId>)> {
    let pos = tree_layout(t)?;
    let root = t.root();
    let leaves = t.leaves();
    // Clockwise: down the rightmost path, right to left along the leaves,
    // back up the leftmost path.
    let mut outer = t.rightmost_path(root);
    outer.extend(leaves.iter().rev().skip(1));
    let left = t.leftmost_path(root);
    outer.extend(left.iter().rev().skip(1).take(left.len().saturating_sub(2)));
    let keep: Vec<VertexId> = t.vertices().collect();
    let (graph, ids) = host.induced(&keep, &outer)?;
    let coords = ids
        .iter()
        .map(|v| {
            let (x, y) = pos[v];
            Point::int(x, y)
        })
        .collect();
    Ok((Drawing::new(graph, coords)?, ids))
}

/// Convex angle-monotone drawing of a Halin graph. The tree part keeps its
/// closed-form layout, the star at the split vertex is rotated by a half turn
/// and placed with its center one unit above the attachment vertex. Wheels
/// are handed to [`draw_wheel`].
pub fn draw_halin(h: &HalinGraph) -> Result<Drawing> {
    let split = match h.split() {
        Err(Error::IsWheel) => return draw_wheel(h),
        other => other?,
    };
    let t_pos = tree_layout(&split.t)?;
    let s_pos = tree_layout(&split.s)?;
    let (rx, ry) = t_pos[&split.rho];
    let (sx, sy) = s_pos[&split.xi];
    // Negate, then translate so xi lands at rho + (0, 1).
    let (ox, oy) = (rx + sx, ry + 1 + sy);
    let mut coords = vec![None; h.graph().vertex_count()];
    for (&v, &(x, y)) in &t_pos {
        coords[v] = Some(Point::int(x, y));
    }
    for (&v, &(x, y)) in &s_pos {
        coords[v] = Some(Point::int(ox - x, oy - y));
    }
    let coords = coords
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::NotHalin(format!("vertex {v} is in neither tree"))))
        .collect::<Result<Vec<_>>>()?;
    Drawing::new(h.graph().clone(), coords)
}

/// Wheel layout on a `3 x k` grid for rim size `k`: the rim runs
/// counterclockwise from `(0,2)` down to `(1,0)..(k-2,0)` and up to
/// `(k-1,2)`; the hub sits at `(floor((k-1)/2), 1)`.
pub fn draw_wheel(h: &HalinGraph) -> Result<Drawing> {
    let hub = h
        .wheel_hub()
        .ok_or_else(|| invalid("Halin graph is not a wheel"))?;
    let rim: Vec<VertexId> = h.leaf_cycle().iter().rev().copied().collect();
    let k = rim.len() as i64;
    let mut coords = vec![Point::int(0, 0); h.graph().vertex_count()];
    coords[hub] = Point::int((k - 1) / 2, 1);
    for (j, &v) in rim.iter().enumerate() {
        let j = j as i64;
        coords[v] = if j == 0 {
            Point::int(0, 2)
        } else if j == k - 1 {
            Point::int(k - 1, 2)
        } else {
            Point::int(j, 0)
        };
    }
    Drawing::new(h.graph().clone(), coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> HalinGraph {
        let tree = OrderedTree::new(0, BTreeMap::from([(0, vec![1, 2, 3]), (3, vec![4, 5])])).unwrap();
        HalinGraph::from_tree(&tree).unwrap()
    }

    #[test]
    fn star_layout() {
        let t = OrderedTree::new(0, BTreeMap::from([(0, vec![1, 2, 3])])).unwrap();
        let pos = tree_layout(&t).unwrap();
        assert_eq!(pos[&1], (0, 0));
        assert_eq!(pos[&2], (2, 0));
        assert_eq!(pos[&3], (4, 0));
        assert_eq!(pos[&0], (2, 2));
    }

    #[test]
    fn two_level_layout() {
        let t = OrderedTree::new(0, BTreeMap::from([(0, vec![1, 2]), (2, vec![3, 4])])).unwrap();
        let pos = tree_layout(&t).unwrap();
        assert_eq!(pos[&1], (0, 0));
        assert_eq!(pos[&3], (2, 0));
        assert_eq!(pos[&4], (4, 0));
        assert_eq!(pos[&0], (2, 2));
        assert_eq!(pos[&2], (3, 1));
    }

    #[test]
    fn single_child_rejected() {
        let t = OrderedTree::new(0, BTreeMap::from([(0, vec![1]), (1, vec![2, 3])])).unwrap();
        assert!(tree_layout(&t).is_err());
    }

    #[test]
    fn prism_assembly() {
        let h = prism();
        let sp = h.split().unwrap();
        let d = draw_halin(&h).unwrap();
        let t_leaves = sp.t.leaves();
        let s_leaves = sp.s.leaves();
        assert_eq!(d.point(t_leaves[0]), &Point::int(0, 0));
        assert_eq!(d.point(t_leaves[1]), &Point::int(2, 0));
        assert_eq!(d.point(sp.rho), &Point::int(1, 1));
        assert_eq!(d.point(sp.xi), &Point::int(1, 2));
        assert_eq!(d.point(s_leaves[0]), &Point::int(2, 3));
        assert_eq!(d.point(s_leaves[1]), &Point::int(0, 3));
        assert_eq!((d.width(), d.height()), (3, 4));
    }

    #[test]
    fn tree_drawing_of_prism_part() {
        let h = prism();
        let sp = h.split().unwrap();
        let (d, ids) = draw_halin_tree(&sp.t, h.graph()).unwrap();
        assert_eq!(ids.len(), 3);
        assert_eq!(d.graph().edge_count(), 3);
        assert_eq!((d.width(), d.height()), (3, 2));
    }

    #[test]
    fn wheel_layout() {
        let h = HalinGraph::wheel(4).unwrap();
        let d = draw_wheel(&h).unwrap();
        let mut pts: Vec<Point> = d.points().to_vec();
        pts.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
        let expected: Vec<Point> = [(0, 2), (1, 0), (1, 1), (2, 0), (3, 2)]
            .into_iter()
            .map(|(x, y)| Point::int(x, y))
            .collect();
        assert_eq!(pts, expected);
        for k in 3..12 {
            let d = draw_wheel(&HalinGraph::wheel(k).unwrap()).unwrap();
            assert_eq!((d.width(), d.height()), (k, 3));
        }
        assert!(draw_wheel(&prism()).is_err());
    }
}

//! Helpers shared by the integration tests: random plane drawings, drawing
//! perturbation and an exhaustive Schnyder wood enumerator.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use greedy_grid::constructors::Drawing;
use greedy_grid::geometry::{Point, Rational};
use greedy_grid::planegraph::{PlaneGraph, VertexId};
use greedy_grid::schnyder::{Color, SchnyderWood};
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rcross(a: &[Rational; 2], b: &[Rational; 2]) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn rdot(a: &[Rational; 2], b: &[Rational; 2]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1]
}

fn minus(a: &Point, b: &Point) -> [Rational; 2] {
    [&a.x - &b.x, &a.y - &b.y]
}

/// Intersects the segments through their parametric forms and reports a
/// crossing unless the only common point is an endpoint of both.
pub fn parametric_cross(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> bool {
    let r = minus(p2, p1);
    let s = minus(q2, q1);
    let qp = minus(q1, p1);
    let denom = rcross(&r, &s);
    let at = |t: &Rational| Point::new(&p1.x + &r[0] * t, &p1.y + &r[1] * t);
    let shared = |pt: &Point| (pt == p1 || pt == p2) && (pt == q1 || pt == q2);
    let unit = |t: &Rational| !t.is_negative() && *t <= rat(1);
    if !denom.is_zero() {
        let t = rcross(&qp, &s) / &denom;
        let u = rcross(&qp, &r) / &denom;
        return unit(&t) && unit(&u) && !shared(&at(&t));
    }
    if !rcross(&qp, &r).is_zero() {
        return false;
    }
    let rr = rdot(&r, &r);
    let t0 = rdot(&qp, &r) / &rr;
    let t1 = rdot(&minus(q2, p1), &r) / &rr;
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let lo = lo.max(rat(0));
    let hi = hi.min(rat(1));
    match lo.cmp(&hi) {
        Ordering::Greater => false,
        Ordering::Less => true,
        Ordering::Equal => !shared(&at(&lo)),
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn on_segment(p: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    cross(a, b, p) == 0
        && a.0.min(b.0) <= p.0
        && p.0 <= a.0.max(b.0)
        && a.1.min(b.1) <= p.1
        && p.1 <= a.1.max(b.1)
}

/// Whether segments `ab` and `cd` meet anywhere except a shared endpoint.
fn conflict(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> bool {
    let shared = [a, b].iter().filter(|p| **p == c || **p == d).count();
    if shared == 2 {
        return true;
    }
    if shared == 1 {
        // Touching at the endpoint only, unless they overlap along a line.
        let (o, x, y) = if a == c || a == d {
            (a, b, if a == c { d } else { c })
        } else {
            (b, a, if b == c { d } else { c })
        };
        return cross(o, x, y) == 0 && (x.0 - o.0) * (y.0 - o.0) + (x.1 - o.1) * (y.1 - o.1) > 0;
    }
    let (d1, d2) = (cross(a, b, c).signum(), cross(a, b, d).signum());
    let (d3, d4) = (cross(c, d, a).signum(), cross(c, d, b).signum());
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// Traces every face of a rotation system (clockwise rotations, face on the
/// left of each directed edge).
pub fn trace_faces(rot: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    let mut seen = BTreeSet::new();
    let mut faces = Vec::new();
    for u in 0..rot.len() {
        for &v in &rot[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                walk.push(a);
                let i = rot[b].iter().position(|&x| x == a).unwrap();
                let c = rot[b][(i + 1) % rot[b].len()];
                a = b;
                b = c;
            }
            faces.push(walk);
        }
    }
    faces
}

/// Builds a drawing whose rotations follow the geometry, with the outer face
/// chosen as the face of smallest signed area.
pub fn geometric_drawing(pts: &[(i64, i64)], edges: &[(VertexId, VertexId)]) -> Drawing {
    let n = pts.len();
    let mut rot = vec![Vec::new(); n];
    for &(u, v) in edges {
        rot[u].push(v);
        rot[v].push(u);
    }
    for (u, r) in rot.iter_mut().enumerate() {
        let ang = |w: &VertexId| ((pts[*w].1 - pts[u].1) as f64).atan2((pts[*w].0 - pts[u].0) as f64);
        r.sort_by(|a, b| ang(b).partial_cmp(&ang(a)).unwrap());
    }
    let outer = if edges.is_empty() {
        vec![0]
    } else {
        trace_faces(&rot)
            .into_iter()
            .min_by_key(|f| {
                (0..f.len())
                    .map(|i| {
                        let (p, q) = (pts[f[i]], pts[f[(i + 1) % f.len()]]);
                        p.0 * q.1 - q.0 * p.1
                    })
                    .sum::<i64>()
            })
            .unwrap()
    };
    let g = PlaneGraph::new(rot, outer).expect("geometric rotation system is planar");
    Drawing::new(g, pts.iter().map(|&(x, y)| Point::int(x, y)).collect()).unwrap()
}

/// A random connected plane straight-line drawing on `n` distinct points of
/// a `grid x grid` square: a maximal non-crossing edge set thinned at random
/// while staying connected.
pub fn random_plane_drawing(r: &mut ChaCha8Rng, n: usize, grid: i64) -> Drawing {
    let mut pts: Vec<(i64, i64)> = Vec::new();
    while pts.len() < n {
        let p = (r.gen_range(0..grid), r.gen_range(0..grid));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(r);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (u, v) in pairs {
        let through_vertex = (0..n).any(|w| w != u && w != v && on_segment(pts[w], pts[u], pts[v]));
        if through_vertex {
            continue;
        }
        if edges.iter().all(|&(a, b)| !conflict(pts[u], pts[v], pts[a], pts[b])) {
            edges.push((u, v));
        }
    }
    let keep = r.gen_range(0.3..1.0);
    edges.shuffle(r);
    let mut i = 0;
    while i < edges.len() {
        if r.gen_bool(1.0 - keep) {
            let e = edges.remove(i);
            if !connected(n, &edges) {
                edges.insert(i, e);
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    geometric_drawing(&pts, &edges)
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Moves one random vertex by a random offset of at most `reach` in each
/// coordinate, avoiding coincidences with other vertices.
pub fn perturb(d: &Drawing, r: &mut ChaCha8Rng, reach: i64) -> Drawing {
    loop {
        let v = r.gen_range(0..d.vertex_count());
        let dx = Rational::from_integer(r.gen_range(-reach..=reach).into()) / Rational::from_integer(2.into());
        let dy = Rational::from_integer(r.gen_range(-reach..=reach).into()) / Rational::from_integer(2.into());
        let p = d.point(v).translate(&dx, &dy);
        if d.points().contains(&p) {
            continue;
        }
        let mut pts = d.points().to_vec();
        pts[v] = p;
        return Drawing::new(d.graph().clone(), pts).unwrap();
    }
}

/// Every Schnyder wood of a triangulation, found by choosing the three
/// outgoing edges of each inner vertex in turn and propagating the colors
/// that the local pattern forces on its incoming edges.
pub fn enumerate_woods(g: &PlaneGraph) -> Vec<SchnyderWood> {
    let roots: Vec<VertexId> = g.outer_face().to_vec();
    assert_eq!(roots.len(), 3);
    let key = |u: VertexId, v: VertexId| (u.min(v), u.max(v));
    let mut fixed: BTreeMap<(VertexId, VertexId), (VertexId, u8)> = BTreeMap::new();
    for (i, &r) in roots.iter().enumerate() {
        for &x in g.neighbors(r) {
            if !roots.contains(&x) {
                fixed.insert(key(x, r), (x, i as u8 + 1));
            }
        }
    }
    let inner: Vec<VertexId> = g.vertices().filter(|v| !roots.contains(v)).collect();
    let mut found = Vec::new();
    search(g, &inner, 0, &mut fixed, &mut found);
    found
}

fn search(
    g: &PlaneGraph,
    inner: &[VertexId],
    at: usize,
    assigned: &mut BTreeMap<(VertexId, VertexId), (VertexId, u8)>,
    found: &mut Vec<SchnyderWood>,
) {
    let Some(&v) = inner.get(at) else {
        let mut w = SchnyderWood::new();
        for (&(a, b), &(tail, c)) in assigned.iter() {
            let head = if tail == a { b } else { a };
            w.insert(tail, head, Color::from_index(c).unwrap());
        }
        found.push(w);
        return;
    };
    let rot = g.neighbors(v);
    let d = rot.len();
    for i1 in 0..d {
        for i2 in 0..d {
            for i3 in 0..d {
                let (o2, o3) = ((i2 + d - i1) % d, (i3 + d - i1) % d);
                if i1 == i2 || i1 == i3 || i2 == i3 || o2 >= o3 {
                    continue;
                }
                // Clockwise from out-1: in-3, out-2, in-1, out-3, in-2.
                let want: Vec<(VertexId, u8)> = (0..d)
                    .map(|j| {
                        let o = (j + d - i1) % d;
                        match o {
                            0 => (v, 1),
                            _ if o == o2 => (v, 2),
                            _ if o == o3 => (v, 3),
                            _ if o < o2 => (rot[j], 3),
                            _ if o < o3 => (rot[j], 1),
                            _ => (rot[j], 2),
                        }
                    })
                    .collect();
                let mut added = Vec::new();
                let mut ok = true;
                for (j, &(tail, c)) in want.iter().enumerate() {
                    let k = (v.min(rot[j]), v.max(rot[j]));
                    match assigned.get(&k) {
                        Some(&prev) if prev != (tail, c) => {
                            ok = false;
                            break;
                        }
                        Some(_) => {}
                        None => {
                            assigned.insert(k, (tail, c));
                            added.push(k);
                        }
                    }
                }
                if ok {
                    search(g, inner, at + 1, assigned, found);
                }
                for k in added {
                    assigned.remove(&k);
                }
            }
        }
    }
}

use super::{with_frame, VerifierReport, Witness};
use crate::constructors::Drawing;
use crate::error::{invalid, Result};
use crate::geometry::exact::{self, Coord};
use crate::planegraph::VertexId;

/// Largest graph accepted by [`oracle_angle_monotone`].
pub const ORACLE_MAX_VERTICES: usize = 12;

/// Angle-monotonicity: every ordered pair is joined by a path whose edge
/// directions all fit in one closed quarter-turn wedge.
///
/// A wedge containing such a path can be turned clockwise until its
/// clockwise boundary meets a path direction, so it suffices to try the
/// wedges whose clockwise boundary is an edge direction. Within a wedge
/// every edge advances along the bisector, so the admissible edges form a
/// DAG ordered by that projection and reachability is one backward pass
/// with bitsets per wedge.
pub fn check_angle_monotone(d: &Drawing) -> VerifierReport {
    with_frame!(d.points(), pts => match monotone_witness(d, &pts) {
        Some((from, to)) => VerifierReport::fail(Witness::NoMonotonePath { from, to }),
        None => VerifierReport::pass(),
    })
}

struct BitSet {
    words: usize,
    bits: Vec<u64>,
}

impl BitSet {
    fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitSet {
            words,
            bits: vec![0; rows * words],
        }
    }

    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    fn or_row_from(&mut self, dst: usize, src: &[u64]) {
        let row = &mut self.bits[dst * self.words..(dst + 1) * self.words];
        for (a, b) in row.iter_mut().zip(src) {
            *a |= b;
        }
    }

    fn or_rows(&mut self, dst: usize, src: usize) {
        let src: Vec<u64> = self.row(src).to_vec();
        self.or_row_from(dst, &src);
    }
}

fn monotone_witness<T: Coord>(d: &Drawing, pts: &[[T; 2]]) -> Option<(VertexId, VertexId)> {
    let g = d.graph();
    let n = g.vertex_count();
    let arcs: Vec<(VertexId, VertexId, [T; 2])> = g
        .vertices()
        .flat_map(|u| {
            g.neighbors(u)
                .iter()
                .map(move |&v| (u, v, exact::sub(&pts[v], &pts[u])))
        })
        .collect();
    let mut dirs: Vec<[T; 2]> = arcs.iter().map(|a| a.2.clone()).collect();
    dirs.sort_by(exact::angle_cmp);
    dirs.dedup_by(|a, b| exact::angle_cmp(a, b).is_eq());

    let mut covered = BitSet::new(n, n);
    for v in 0..n {
        covered.set(v, v);
    }
    let mut out: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for low in &dirs {
        let bisector = [low[0].clone() - low[1].clone(), low[1].clone() + low[0].clone()];
        for o in out.iter_mut() {
            o.clear();
        }
        for (u, v, e) in &arcs {
            if exact::in_quarter_wedge(e, low) {
                out[*u].push(*v);
            }
        }
        let mut order: Vec<VertexId> = (0..n).collect();
        let proj: Vec<T> = pts.iter().map(|p| exact::dot(p, &bisector)).collect();
        order.sort_by(|&a, &b| proj[a].cmp(&proj[b]));
        let mut reach = BitSet::new(n, n);
        for &u in order.iter().rev() {
            reach.set(u, u);
            for &v in &out[u] {
                reach.or_rows(u, v);
            }
        }
        for u in 0..n {
            covered.or_row_from(u, reach.row(u));
        }
    }
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .find(|&(u, v)| !covered.get(u, v))
}

/// Exhaustive reference: searches all simple paths from `u` to `v` for one
/// whose edge directions pairwise make an angle of at most a quarter turn,
/// which is the same as fitting in a closed quarter-turn wedge.
pub fn oracle_angle_monotone(d: &Drawing, u: VertexId, v: VertexId) -> Result<bool> {
    let n = d.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(invalid(format!(
            "oracle is limited to {ORACLE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if u >= n || v >= n {
        return Err(invalid("vertex out of range"));
    }
    Ok(with_frame!(d.points(), pts => {
        let mut on_path = vec![false; n];
        on_path[u] = true;
        search(d, &pts, u, v, &mut on_path, &mut Vec::new())
    }))
}

fn search<T: Coord>(
    d: &Drawing,
    pts: &[[T; 2]],
    at: VertexId,
    target: VertexId,
    on_path: &mut [bool],
    used: &mut Vec<[T; 2]>,
) -> bool {
    if at == target {
        return true;
    }
    for &w in d.graph().neighbors(at) {
        if on_path[w] {
            continue;
        }
        let e = exact::sub(&pts[w], &pts[at]);
        if used.iter().any(|f| exact::dot(f, &e).is_negative()) {
            continue;
        }
        on_path[w] = true;
        used.push(e);
        let found = search(d, pts, w, target, on_path, used);
        used.pop();
        on_path[w] = false;
        if found {
            return true;
        }
    }
    false
}

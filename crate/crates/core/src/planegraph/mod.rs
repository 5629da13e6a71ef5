//! Combinatorial plane graphs (rotation systems with a designated outer face)
//! and generators for the graph families drawn by this crate.
//!
//! Conventions used throughout the crate:
//!
//! * `rotation[v]` lists the neighbors of `v` in **clockwise** order.
//! * Facial walks are traced with the face on the left: from the directed edge
//!   `u -> v` the walk continues to the clockwise successor of `u` around `v`.
//!   Bounded faces therefore come out counterclockwise and the outer face
//!   clockwise.

mod cao;
mod halin;
mod nested;

pub use cao::{CaoGraph, CaoLabel, CaoRole};
pub use halin::{halin_split, HalinGraph, HalinSplit, OrderedTree};
pub use nested::{gen_glued, NestedLabel, NestedRole, NestedTriangulation};

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// A connected plane graph given by its rotation system and outer face.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    rotation: Vec<Vec<VertexId>>,
    outer: Vec<VertexId>,
}

impl PlaneGraph {
    /// Validates and normalizes a rotation system. Each rotation list is
    /// rotated to start at its smallest neighbor and the outer walk to start at
    /// its smallest directed edge, so equal embeddings compare equal.
    pub fn new(rotation: Vec<Vec<VertexId>>, outer: Vec<VertexId>) -> Result<Self> {
        let n = rotation.len();
        if n == 0 {
            return Err(Error::MalformedRotation("graph has no vertices".into()));
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &w in nbrs {
                if w >= n {
                    return Err(Error::MalformedRotation(format!(
                        "vertex {v} lists unknown neighbor {w}"
                    )));
                }
                if w == v {
                    return Err(Error::MalformedRotation(format!("self-loop at {v}")));
                }
                if !seen.insert(w) {
                    return Err(Error::MalformedRotation(format!(
                        "vertex {v} lists {w} twice"
                    )));
                }
                if !rotation[w].contains(&v) {
                    return Err(Error::MalformedRotation(format!(
                        "{v} lists {w} but {w} does not list {v}"
                    )));
                }
            }
        }
        let rotation: Vec<Vec<VertexId>> = rotation.into_iter().map(normalize_cycle).collect();
        let mut g = PlaneGraph {
            rotation,
            outer: Vec::new(),
        };
        if !g.is_connected() {
            return Err(Error::MalformedRotation("graph is disconnected".into()));
        }
        let faces = g.faces();
        let expected = g.edge_count() as i64 - n as i64 + 2;
        if faces.len() as i64 != expected {
            return Err(Error::MalformedRotation(format!(
                "rotation system traces {} faces, Euler's formula requires {expected}",
                faces.len()
            )));
        }
        let outer = normalize_walk(outer);
        if !faces.contains(&outer) {
            return Err(Error::MalformedRotation(format!(
                "outer walk {outer:?} is not a facial walk"
            )));
        }
        g.outer = outer;
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.rotation.len()
    }

    /// Neighbors of `v` in clockwise order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    pub fn rotation(&self) -> &[Vec<VertexId>] {
        &self.rotation
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.rotation.len() && self.rotation[u].contains(&v)
    }

    /// The outer face as a clockwise facial walk.
    pub fn outer_face(&self) -> &[VertexId] {
        &self.outer
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.rotation.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Clockwise successor of `u` in the rotation at `v`.
    pub fn next_clockwise(&self, v: VertexId, u: VertexId) -> VertexId {
        let rot = &self.rotation[v];
        let i = rot
            .iter()
            .position(|&w| w == u)
            .expect("next_clockwise on a non-edge");
        rot[(i + 1) % rot.len()]
    }

    /// Counterclockwise successor of `u` in the rotation at `v`.
    pub fn next_counterclockwise(&self, v: VertexId, u: VertexId) -> VertexId {
        let rot = &self.rotation[v];
        let i = rot
            .iter()
            .position(|&w| w == u)
            .expect("next_counterclockwise on a non-edge");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// All facial walks, each normalized to start at its smallest directed
    /// edge, in order of that edge. Every directed edge lies on exactly one walk.
    pub fn faces(&self) -> Vec<Vec<VertexId>> {
        if self.edge_count() == 0 {
            return vec![vec![0]];
        }
        let mut visited: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        let mut faces = Vec::new();
        for u in self.vertices() {
            let mut starts: Vec<VertexId> = self.rotation[u].clone();
            starts.sort_unstable();
            for v in starts {
                if visited.contains(&(u, v)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                loop {
                    visited.insert((a, b));
                    walk.push(a);
                    let c = self.next_clockwise(b, a);
                    a = b;
                    b = c;
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                faces.push(normalize_walk(walk));
            }
        }
        faces.sort();
        faces
    }

    /// Facial walks other than the outer face.
    pub fn inner_faces(&self) -> Vec<Vec<VertexId>> {
        self.faces()
            .into_iter()
            .filter(|f| *f != self.outer)
            .collect()
    }

    /// Every face, including the outer one, is bounded by a 3-cycle.
    pub fn is_triangulation(&self) -> bool {
        self.vertex_count() >= 3 && self.faces().iter().all(|f| f.len() == 3)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.rotation[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The plane subgraph induced by `keep`, with vertices renumbered densely
    /// in the order given. The outer face cannot be recovered combinatorially
    /// in general, so the caller supplies it (in original ids). Returns the
    /// subgraph together with the new-to-old id map.
    pub fn induced(
        &self,
        keep: &[VertexId],
        outer: &[VertexId],
    ) -> Result<(PlaneGraph, Vec<VertexId>)> {
        let index: BTreeMap<VertexId, VertexId> =
            keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        if index.len() != keep.len() {
            return Err(Error::InvalidParameter("duplicate vertex in subgraph".into()));
        }
        let rotation = keep
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter_map(|w| index.get(w).copied())
                    .collect()
            })
            .collect();
        let outer = outer
            .iter()
            .map(|v| {
                index.get(v).copied().ok_or_else(|| {
                    Error::InvalidParameter(format!("outer vertex {v} not in subgraph"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((PlaneGraph::new(rotation, outer)?, keep.to_vec()))
    }

    /// Image of the graph under a vertex bijection `map[old] = new`.
    pub fn relabel(&self, map: &[VertexId]) -> Result<PlaneGraph> {
        let n = self.vertex_count();
        if map.len() != n || map.iter().collect::<BTreeSet<_>>().len() != n || map.iter().any(|&v| v >= n) {
            return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
        }
        let mut rotation = vec![Vec::new(); n];
        for v in self.vertices() {
            rotation[map[v]] = self.rotation[v].iter().map(|&w| map[w]).collect();
        }
        let outer = self.outer.iter().map(|&v| map[v]).collect();
        PlaneGraph::new(rotation, outer)
    }
}

fn normalize_cycle(list: Vec<VertexId>) -> Vec<VertexId> {
    match list.iter().enumerate().min_by_key(|&(_, v)| *v) {
        Some((i, _)) => {
            let mut out = list[i..].to_vec();
            out.extend_from_slice(&list[..i]);
            out
        }
        None => list,
    }
}

/// Rotates a closed walk so it starts at its lexicographically smallest
/// directed edge; walks may revisit vertices, so the smallest vertex alone is
/// not enough.
fn normalize_walk(walk: Vec<VertexId>) -> Vec<VertexId> {
    let k = walk.len();
    if k <= 1 {
        return walk;
    }
    let best = (0..k)
        .min_by_key(|&i| (walk[i], walk[(i + 1) % k]))
        .expect("non-empty walk");
    let mut out = walk[best..].to_vec();
    out.extend_from_slice(&walk[..best]);
    out
}

/// Mutable rotation-system builder used by the generators.
#[derive(Debug, Clone, Default)]
pub(crate) struct RotationBuilder {
    pub rotation: Vec<Vec<VertexId>>,
}

impl RotationBuilder {
    pub fn with_vertices(n: usize) -> Self {
        RotationBuilder {
            rotation: vec![Vec::new(); n],
        }
    }

    pub fn ensure(&mut self, n: usize) {
        if self.rotation.len() < n {
            self.rotation.resize(n, Vec::new());
        }
    }

    /// Inserts `new` into the rotation of `v` immediately clockwise after `after`.
    pub fn insert_after(&mut self, v: VertexId, after: VertexId, new: &[VertexId]) {
        let rot = &mut self.rotation[v];
        let i = rot
            .iter()
            .position(|&w| w == after)
            .expect("anchor neighbor present");
        for (k, &w) in new.iter().enumerate() {
            rot.insert(i + 1 + k, w);
        }
    }

    /// Grows the graph in its outer face. `old_walk` is the current clockwise
    /// outer walk and `new_walk` the clockwise outer walk afterwards; every
    /// edge between consecutive vertices of `new_walk` that does not exist yet
    /// is created. An old vertex receives its new neighbors inside its old
    /// outer corner; a vertex absent from `old_walk` must be new and gets
    /// exactly its two walk neighbors.
    pub fn extend_outer(&mut self, old_walk: &[VertexId], new_walk: &[VertexId]) {
        let k = new_walk.len();
        let max = new_walk.iter().copied().max().unwrap_or(0);
        self.ensure(max + 1);
        for (i, &o) in new_walk.iter().enumerate() {
            let prev = new_walk[(i + k - 1) % k];
            let next = new_walk[(i + 1) % k];
            match old_walk.iter().position(|&w| w == o) {
                Some(j) => {
                    let old_prev = old_walk[(j + old_walk.len() - 1) % old_walk.len()];
                    let fresh: Vec<VertexId> = [prev, next]
                        .into_iter()
                        .filter(|w| !self.rotation[o].contains(w))
                        .collect();
                    self.insert_after(o, old_prev, &fresh);
                }
                None => {
                    self.rotation[o] = vec![prev, next];
                }
            }
        }
    }

    pub fn build(self, outer: Vec<VertexId>) -> Result<PlaneGraph> {
        PlaneGraph::new(self.rotation, outer)
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{PlaneGraph, RotationBuilder, VertexId};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NestedRole {
    A,
    B,
    C,
}

/// `a_k`, `b_k` or `c_k` of the nested triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NestedLabel {
    pub role: NestedRole,
    pub level: usize,
}

impl fmt::Display for NestedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.role {
            NestedRole::A => 'a',
            NestedRole::B => 'b',
            NestedRole::C => 'c',
        };
        write!(f, "{r}{}", self.level)
    }
}

impl FromStr for NestedLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let role = match chars.next() {
            Some('a') => NestedRole::A,
            Some('b') => NestedRole::B,
            Some('c') => NestedRole::C,
            _ => return Err(invalid(format!("bad vertex label {s:?}"))),
        };
        let level: usize = chars
            .as_str()
            .parse()
            .map_err(|_| invalid(format!("bad vertex label {s:?}")))?;
        if level == 0 {
            return Err(invalid(format!("bad vertex label {s:?}")));
        }
        Ok(NestedLabel { role, level })
    }
}

/// The plane 3-tree on `3m` vertices: `m` nested triangles `(a_k, b_k, c_k)`,
/// where level `k` is attached to level `k-1` by the edges
/// `a_k a_{k-1}`, `b_k a_{k-1}`, `b_k b_{k-1}`, `c_k a_{k-1}`, `c_k b_{k-1}`, `c_k c_{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedTriangulation {
    m: usize,
    graph: PlaneGraph,
}

impl NestedTriangulation {
    pub fn id(role: NestedRole, level: usize) -> VertexId {
        let base = 3 * (level - 1);
        match role {
            NestedRole::A => base,
            NestedRole::B => base + 1,
            NestedRole::C => base + 2,
        }
    }

    pub fn generate(m: usize) -> Result<Self> {
        use NestedRole::*;
        if m < 1 {
            return Err(invalid("the nested family starts at m = 1"));
        }
        let id = Self::id;
        let mut b = RotationBuilder::with_vertices(3 * m);
        // Clockwise: a on top, b lower right, c lower left.
        b.rotation[id(A, 1)] = vec![id(B, 1), id(C, 1)];
        b.rotation[id(B, 1)] = vec![id(C, 1), id(A, 1)];
        b.rotation[id(C, 1)] = vec![id(A, 1), id(B, 1)];
        for k in 2..=m {
            let (a, bb, c) = (id(A, k), id(B, k), id(C, k));
            let (pa, pb, pc) = (id(A, k - 1), id(B, k - 1), id(C, k - 1));
            b.rotation[a] = vec![bb, pa, c];
            b.rotation[bb] = vec![c, pb, pa, a];
            b.rotation[c] = vec![a, pa, pc, pb, bb];
            b.insert_after(pa, pc, &[c, a, bb]);
            b.insert_after(pb, pa, &[bb, c]);
            b.insert_after(pc, pb, &[c]);
        }
        let graph = b.build(vec![id(A, m), id(B, m), id(C, m)])?;
        Ok(NestedTriangulation { m, graph })
    }

    /// Recognizes a relabeled copy from `a_k`/`b_k`/`c_k` vertex labels.
    pub fn from_labeled(graph: &PlaneGraph, labels: &BTreeMap<VertexId, String>) -> Result<Self> {
        let n = graph.vertex_count();
        if !n.is_multiple_of(3) || labels.len() != n {
            return Err(Error::FamilyMismatch("nested triangulation"));
        }
        let m = n / 3;
        let mut map = vec![usize::MAX; n];
        for (&v, s) in labels {
            let l: NestedLabel = s.parse()?;
            if v >= n || l.level > m {
                return Err(Error::FamilyMismatch("nested triangulation"));
            }
            map[v] = Self::id(l.role, l.level);
        }
        let canonical = Self::generate(m)?;
        match graph.relabel(&map) {
            Ok(g) if g == canonical.graph => Ok(canonical),
            _ => Err(Error::FamilyMismatch("nested triangulation")),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn label(&self, v: VertexId) -> NestedLabel {
        let role = match v % 3 {
            0 => NestedRole::A,
            1 => NestedRole::B,
            _ => NestedRole::C,
        };
        NestedLabel {
            role,
            level: v / 3 + 1,
        }
    }

    pub fn vertex(&self, role: NestedRole, level: usize) -> VertexId {
        Self::id(role, level)
    }

    /// The triangle `(a_k, b_k, c_k)`.
    pub fn level(&self, k: usize) -> [VertexId; 3] {
        [
            Self::id(NestedRole::A, k),
            Self::id(NestedRole::B, k),
            Self::id(NestedRole::C, k),
        ]
    }
}

/// Glues two copies of `G_m` into two bounded faces of `K_4`, identifying the
/// outer triangle of each copy with the face boundary. The result has
/// `6m - 2` vertices; for `m = 1` the copies coincide with the faces and the
/// result is `K_4` itself.
pub fn gen_glued(m: usize) -> Result<PlaneGraph> {
    let guest = NestedTriangulation::generate(m)?;
    let mut b = RotationBuilder {
        rotation: vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
    };
    let host = b.clone().build(vec![0, 1, 2])?;
    let faces = host.inner_faces();
    for face in faces.iter().take(2) {
        glue_into_face(&mut b, face, guest.graph());
    }
    b.build(vec![0, 1, 2])
}

/// Embeds `guest` (a graph with a triangular clockwise outer walk) into the
/// bounded triangular face `face` (counterclockwise) of the graph under
/// construction. Inner guest vertices receive fresh ids.
fn glue_into_face(b: &mut RotationBuilder, face: &[VertexId], guest: &PlaneGraph) {
    let outer = guest.outer_face();
    // The guest's clockwise outer walk runs against the face's counterclockwise walk.
    let mut map = vec![usize::MAX; guest.vertex_count()];
    map[outer[0]] = face[0];
    map[outer[1]] = face[2];
    map[outer[2]] = face[1];
    let mut next = b.rotation.len();
    for v in guest.vertices() {
        if map[v] == usize::MAX {
            map[v] = next;
            next += 1;
        }
    }
    b.ensure(next);
    for (i, &x) in outer.iter().enumerate() {
        let prev = outer[(i + 2) % 3];
        let nxt = outer[(i + 1) % 3];
        let rot = guest.neighbors(x);
        let start = rot.iter().position(|&w| w == nxt).expect("outer edge");
        let inner: Vec<VertexId> = (1..rot.len())
            .map(|k| rot[(start + k) % rot.len()])
            .take_while(|&w| w != prev)
            .map(|w| map[w])
            .collect();
        b.insert_after(map[x], map[nxt], &inner);
    }
    for v in guest.vertices() {
        if !outer.contains(&v) {
            b.rotation[map[v]] = guest.neighbors(v).iter().map(|&w| map[w]).collect();
        }
    }
}

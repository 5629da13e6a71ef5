use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{PlaneGraph, RotationBuilder, VertexId};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaoRole {
    X,
    Y,
    Z,
}

/// Role and level of a vertex of the nested hexagon family: `x_0`, and
/// `x_j, y_j, z_j` for `j = 1..=i+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaoLabel {
    pub role: CaoRole,
    pub level: usize,
}

impl fmt::Display for CaoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.role {
            CaoRole::X => 'x',
            CaoRole::Y => 'y',
            CaoRole::Z => 'z',
        };
        write!(f, "{r}{}", self.level)
    }
}

impl FromStr for CaoLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let role = match chars.next() {
            Some('x') => CaoRole::X,
            Some('y') => CaoRole::Y,
            Some('z') => CaoRole::Z,
            _ => return Err(invalid(format!("bad vertex label {s:?}"))),
        };
        let level = chars
            .as_str()
            .parse()
            .map_err(|_| invalid(format!("bad vertex label {s:?}")))?;
        if level == 0 && role != CaoRole::X {
            return Err(invalid(format!("bad vertex label {s:?}")));
        }
        Ok(CaoLabel { role, level })
    }
}

/// The plane graph on `3i + 4` vertices built from `x_0` by wrapping `i`
/// hexagonal layers around it, optionally closed by the outer triangle
/// `(x_{i+1}, y_{i+1}, z_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaoGraph {
    index: usize,
    plus: bool,
    graph: PlaneGraph,
    labels: Vec<CaoLabel>,
}

impl CaoGraph {
    /// Vertex ids: `x_0 = 0`, then `x_j, y_j, z_j = 3j-2, 3j-1, 3j`.
    pub fn id(role: CaoRole, level: usize) -> VertexId {
        if level == 0 {
            return 0;
        }
        let base = 3 * level - 2;
        match role {
            CaoRole::X => base,
            CaoRole::Y => base + 1,
            CaoRole::Z => base + 2,
        }
    }

    /// Clockwise outer hexagon of the graph with `i` layers:
    /// `(x_{i+1}, z_i, y_{i+1}, x_i, z_{i+1}, y_i)`.
    fn hexagon(i: usize) -> Vec<VertexId> {
        use CaoRole::*;
        vec![
            Self::id(X, i + 1),
            Self::id(Z, i),
            Self::id(Y, i + 1),
            Self::id(X, i),
            Self::id(Z, i + 1),
            Self::id(Y, i),
        ]
    }

    pub fn generate(i: usize, plus: bool) -> Result<Self> {
        use CaoRole::*;
        if i < 1 {
            return Err(invalid("the hexagon family starts at i = 1"));
        }
        let n = 3 * i + 4;
        let id = Self::id;
        let mut b = RotationBuilder::with_vertices(n);
        b.rotation[0] = vec![id(X, 1), id(Y, 1), id(Z, 1)];
        b.rotation[id(X, 1)] = vec![id(Y, 2), id(Z, 2), 0];
        b.rotation[id(Y, 1)] = vec![0, id(Z, 2), id(X, 2)];
        b.rotation[id(Z, 1)] = vec![id(Y, 2), 0, id(X, 2)];
        b.rotation[id(X, 2)] = vec![id(Z, 1), id(Y, 1)];
        b.rotation[id(Y, 2)] = vec![id(X, 1), id(Z, 1)];
        b.rotation[id(Z, 2)] = vec![id(Y, 1), id(X, 1)];
        for level in 2..=i {
            b.extend_outer(&Self::hexagon(level - 1), &Self::hexagon(level));
        }
        let mut outer = Self::hexagon(i);
        if plus {
            let tips = vec![id(X, i + 1), id(Y, i + 1), id(Z, i + 1)];
            b.extend_outer(&outer, &tips);
            outer = tips;
        }
        let graph = b.build(outer)?;
        let mut labels = vec![CaoLabel { role: X, level: 0 }; n];
        for level in 1..=i + 1 {
            for role in [X, Y, Z] {
                labels[id(role, level)] = CaoLabel { role, level };
            }
        }
        Ok(CaoGraph {
            index: i,
            plus,
            graph,
            labels,
        })
    }

    /// Recognizes an arbitrarily numbered copy of the family from its vertex
    /// labels. The copy is renumbered to the canonical ids.
    pub fn from_labeled(graph: &PlaneGraph, labels: &BTreeMap<VertexId, String>) -> Result<Self> {
        let n = graph.vertex_count();
        if n < 7 || !(n - 4).is_multiple_of(3) || labels.len() != n {
            return Err(Error::FamilyMismatch("hexagon"));
        }
        let i = (n - 4) / 3;
        let plus = match graph.edge_count() {
            e if e == 6 * i + 3 => false,
            e if e == 6 * i + 6 => true,
            _ => return Err(Error::FamilyMismatch("hexagon")),
        };
        let mut map = vec![usize::MAX; n];
        for (&v, s) in labels {
            let l: CaoLabel = s.parse()?;
            if v >= n || l.level > i + 1 {
                return Err(Error::FamilyMismatch("hexagon"));
            }
            map[v] = Self::id(l.role, l.level);
        }
        let canonical = Self::generate(i, plus)?;
        match graph.relabel(&map) {
            Ok(g) if g == canonical.graph => Ok(canonical),
            _ => Err(Error::FamilyMismatch("hexagon")),
        }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn is_plus(&self) -> bool {
        self.plus
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn label(&self, v: VertexId) -> CaoLabel {
        self.labels[v]
    }

    pub fn labels(&self) -> &[CaoLabel] {
        &self.labels
    }

    pub fn vertex(&self, role: CaoRole, level: usize) -> VertexId {
        Self::id(role, level)
    }

    pub fn into_graph(self) -> PlaneGraph {
        self.graph
    }
}

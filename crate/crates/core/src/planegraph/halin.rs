use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{PlaneGraph, VertexId};
use crate::error::{invalid, Error, Result};

/// Rooted tree whose children carry a left-to-right order. Vertex ids are
/// those of the host graph and need not be dense.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedTree {
    root: VertexId,
    children: BTreeMap<VertexId, Vec<VertexId>>,
    parent: BTreeMap<VertexId, VertexId>,
}

impl OrderedTree {
    /// Builds a tree from per-vertex child lists (left to right). Vertices
    /// missing from `children` are leaves.
    pub fn new(root: VertexId, mut children: BTreeMap<VertexId, Vec<VertexId>>) -> Result<Self> {
        let mut parent = BTreeMap::new();
        let mut seen = BTreeSet::from([root]);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let kids = children.get(&v).cloned().unwrap_or_default();
            for c in kids {
                if !seen.insert(c) {
                    return Err(invalid(format!("vertex {c} appears twice in the tree")));
                }
                parent.insert(c, v);
                stack.push(c);
            }
        }
        if let Some(v) = children.keys().find(|v| !seen.contains(v)) {
            return Err(invalid(format!("vertex {v} is not reachable from the root")));
        }
        for v in &seen {
            children.entry(*v).or_default();
        }
        Ok(OrderedTree {
            root,
            children,
            parent,
        })
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[&v]
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent.get(&v).copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.children.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.children.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.children[&v].is_empty()
    }

    /// Vertices in preorder, children visited left to right.
    pub fn preorder_from(&self, v: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[&u].iter().rev());
        }
        out
    }

    pub fn preorder(&self) -> Vec<VertexId> {
        self.preorder_from(self.root)
    }

    /// Leaves of the subtree rooted at `v`, left to right.
    pub fn leaves_of(&self, v: VertexId) -> Vec<VertexId> {
        self.preorder_from(v)
            .into_iter()
            .filter(|&u| self.is_leaf(u))
            .collect()
    }

    pub fn leaves(&self) -> Vec<VertexId> {
        self.leaves_of(self.root)
    }

    /// Number of leaves, ℓ(T).
    pub fn leaf_count(&self) -> usize {
        self.children.values().filter(|c| c.is_empty()).count()
    }

    /// Leaf count of every subtree.
    pub fn subtree_leaf_counts(&self) -> BTreeMap<VertexId, usize> {
        let mut counts = BTreeMap::new();
        for v in self.preorder().into_iter().rev() {
            let kids = &self.children[&v];
            let c = if kids.is_empty() {
                1
            } else {
                kids.iter().map(|k| counts[k]).sum()
            };
            counts.insert(v, c);
        }
        counts
    }

    /// `v`, its first child, that child's first child, and so on down to a leaf.
    pub fn leftmost_path(&self, v: VertexId) -> Vec<VertexId> {
        let mut path = vec![v];
        while let Some(&c) = self.children[path.last().unwrap()].first() {
            path.push(c);
        }
        path
    }

    pub fn rightmost_path(&self, v: VertexId) -> Vec<VertexId> {
        let mut path = vec![v];
        while let Some(&c) = self.children[path.last().unwrap()].last() {
            path.push(c);
        }
        path
    }

    /// Tree edges as `(parent, child)` pairs.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.parent.iter().map(|(&c, &p)| (p, c)).collect()
    }

    /// Reads the child order of the tree off a plane embedding. The children
    /// of `v` are its tree neighbors taken counterclockwise starting after
    /// the parent, or after `anchor` at the root. Neighbors in `excluded` and
    /// edges rejected by `is_tree_edge` are skipped.
    fn from_embedding(
        g: &PlaneGraph,
        root: VertexId,
        anchor: VertexId,
        excluded: &BTreeSet<VertexId>,
        is_tree_edge: &dyn Fn(VertexId, VertexId) -> bool,
    ) -> Result<Self> {
        let mut children = BTreeMap::new();
        let mut stack = vec![(root, anchor)];
        while let Some((v, from)) = stack.pop() {
            let rot = g.neighbors(v);
            let start = rot
                .iter()
                .position(|&w| w == from)
                .ok_or_else(|| Error::NotHalin(format!("{from} is not adjacent to {v}")))?;
            let kids: Vec<VertexId> = (1..=rot.len())
                .map(|k| rot[(start + rot.len() * 2 - k) % rot.len()])
                .filter(|&w| w != from && !excluded.contains(&w) && is_tree_edge(v, w))
                .collect();
            for &c in &kids {
                stack.push((c, v));
            }
            children.insert(v, kids);
        }
        OrderedTree::new(root, children)
    }
}

/// A plane Halin graph: a tree without degree-2 vertices, embedded with
/// its leaves on the outer face, plus the cycle through the leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalinGraph {
    graph: PlaneGraph,
    tree_edges: BTreeSet<(VertexId, VertexId)>,
    leaf_cycle: Vec<VertexId>,
}

/// The decomposition used by the Halin drawing: `t` is the characteristic
/// tree without `xi` and its leaves, rooted at `rho`; `s` is the star of `xi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalinSplit {
    pub t: OrderedTree,
    pub s: OrderedTree,
    pub xi: VertexId,
    pub rho: VertexId,
}

impl HalinGraph {
    /// Checks that `graph` is a Halin graph whose outer face is the leaf
    /// cycle.
    pub fn from_plane_graph(graph: PlaneGraph) -> Result<Self> {
        let n = graph.vertex_count();
        let cycle = graph.outer_face().to_vec();
        if cycle.len() < 3 || cycle.iter().collect::<BTreeSet<_>>().len() != cycle.len() {
            return Err(Error::NotHalin("outer face is not a simple cycle".into()));
        }
        let cycle_edges: BTreeSet<(VertexId, VertexId)> = (0..cycle.len())
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                (a.min(b), a.max(b))
            })
            .collect();
        let tree_edges: BTreeSet<(VertexId, VertexId)> = graph
            .edges()
            .into_iter()
            .filter(|e| !cycle_edges.contains(e))
            .collect();
        if tree_edges.len() + 1 != n {
            return Err(Error::NotHalin(format!(
                "{} edges off the outer cycle, a spanning tree needs {}",
                tree_edges.len(),
                n - 1
            )));
        }
        let mut tree_deg = vec![0usize; n];
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for &(u, v) in &tree_edges {
            tree_deg[u] += 1;
            tree_deg[v] += 1;
            let (ru, rv) = (find(&mut uf, u), find(&mut uf, v));
            if ru == rv {
                return Err(Error::NotHalin("edges off the outer cycle contain a cycle".into()));
            }
            uf[ru] = rv;
        }
        let on_cycle: BTreeSet<VertexId> = cycle.iter().copied().collect();
        for v in graph.vertices() {
            let ok = if on_cycle.contains(&v) {
                tree_deg[v] == 1
            } else {
                tree_deg[v] >= 3
            };
            if !ok {
                return Err(Error::NotHalin(format!(
                    "vertex {v} has tree degree {}",
                    tree_deg[v]
                )));
            }
        }
        Ok(HalinGraph {
            graph,
            tree_edges,
            leaf_cycle: cycle,
        })
    }

    /// Embeds an ordered tree (dense ids) with its leaves joined by a cycle.
    /// The root needs at least three children and every other internal
    /// vertex at least two.
    pub fn from_tree(tree: &OrderedTree) -> Result<Self> {
        let n = tree.len();
        if tree.vertices().any(|v| v >= n) {
            return Err(invalid("tree ids must be 0..n"));
        }
        for v in tree.vertices() {
            let need = if v == tree.root() { 3 } else { 2 };
            let k = tree.children(v).len();
            if k > 0 && k < need {
                return Err(invalid(format!("internal vertex {v} has only {k} children")));
            }
        }
        if tree.is_leaf(tree.root()) {
            return Err(invalid("tree has no internal vertex"));
        }
        let leaves = tree.leaves();
        let l = leaves.len();
        let mut rotation = vec![Vec::new(); n];
        for v in tree.vertices() {
            let rot = &mut rotation[v];
            if let Some(p) = tree.parent(v) {
                rot.push(p);
            }
            rot.extend(tree.children(v).iter().rev());
        }
        for (j, &leaf) in leaves.iter().enumerate() {
            rotation[leaf].push(leaves[(j + 1) % l]);
            rotation[leaf].push(leaves[(j + l - 1) % l]);
        }
        let outer: Vec<VertexId> = leaves.iter().rev().copied().collect();
        HalinGraph::from_plane_graph(PlaneGraph::new(rotation, outer)?)
    }

    /// Random Halin graph on exactly `n >= 4` vertices, deterministic in `seed`.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        if n < 4 {
            return Err(invalid("a Halin graph has at least 4 vertices"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut children: Vec<Vec<VertexId>> = vec![vec![1, 2, 3], vec![], vec![], vec![]];
        while children.len() < n {
            let remaining = n - children.len();
            let v = rng.gen_range(0..children.len());
            if children[v].is_empty() {
                if remaining < 2 {
                    continue;
                }
                let a = children.len();
                children.push(Vec::new());
                children.push(Vec::new());
                children[v] = vec![a, a + 1];
            } else {
                let pos = rng.gen_range(0..=children[v].len());
                let a = children.len();
                children.push(Vec::new());
                children[v].insert(pos, a);
            }
        }
        let tree = OrderedTree::new(0, children.into_iter().enumerate().collect())?;
        HalinGraph::from_tree(&tree)
    }

    /// The wheel with hub `0` and rim `1..=k`.
    pub fn wheel(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(invalid("a wheel needs at least 3 rim vertices"));
        }
        let tree = OrderedTree::new(0, BTreeMap::from([(0, (1..=k).collect())]))?;
        HalinGraph::from_tree(&tree)
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn tree_edges(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.tree_edges
    }

    /// The leaves in clockwise order (the outer face).
    pub fn leaf_cycle(&self) -> &[VertexId] {
        &self.leaf_cycle
    }

    pub fn is_tree_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.tree_edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn internal_vertices(&self) -> Vec<VertexId> {
        let leaves: BTreeSet<_> = self.leaf_cycle.iter().collect();
        self.graph
            .vertices()
            .filter(|v| !leaves.contains(v))
            .collect()
    }

    /// The hub, if the characteristic tree has a single internal vertex.
    pub fn wheel_hub(&self) -> Option<VertexId> {
        match self.internal_vertices()[..] {
            [h] => Some(h),
            _ => None,
        }
    }

    pub fn split(&self) -> Result<HalinSplit> {
        halin_split(self)
    }
}

/// Splits off an internal vertex `xi` all of whose neighbors but one (`rho`)
/// are leaves. Among several candidates the one whose leaf block starts
/// earliest in the outer walk is chosen.
pub fn halin_split(h: &HalinGraph) -> Result<HalinSplit> {
    let internal: BTreeSet<VertexId> = h.internal_vertices().into_iter().collect();
    if internal.len() == 1 {
        return Err(Error::IsWheel);
    }
    let g = h.graph();
    let cycle = h.leaf_cycle();
    let k = cycle.len();
    let pos: BTreeMap<VertexId, usize> = cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut best: Option<(usize, VertexId, VertexId)> = None;
    for &v in &internal {
        let inner: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|w| internal.contains(w))
            .collect();
        if inner.len() != 1 {
            continue;
        }
        let block: BTreeSet<VertexId> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|w| !internal.contains(w))
            .collect();
        let start = block
            .iter()
            .map(|w| pos[w])
            .find(|&p| !block.contains(&cycle[(p + k - 1) % k]))
            .ok_or_else(|| Error::NotHalin("leaf block covers the whole cycle".into()))?;
        if best.is_none_or(|(s, _, _)| start < s) {
            best = Some((start, v, inner[0]));
        }
    }
    let (_, xi, rho) = best.ok_or_else(|| Error::NotHalin("no splittable internal vertex".into()))?;
    let tree_edge = |u: VertexId, v: VertexId| h.is_tree_edge(u, v);
    let t = OrderedTree::from_embedding(g, rho, xi, &BTreeSet::from([xi]), &tree_edge)?;
    let s = OrderedTree::from_embedding(g, xi, rho, &BTreeSet::from([rho]), &tree_edge)?;
    Ok(HalinSplit { t, s, xi, rho })
}

impl HalinSplit {
    /// Reassembles the edge set of the Halin graph from the two trees: both
    /// trees, the edge `rho xi`, and the cycle through the leaves of `t` and
    /// then of `s`, each left to right.
    pub fn reglued_edges(&self) -> BTreeSet<(VertexId, VertexId)> {
        let norm = |(a, b): (VertexId, VertexId)| (a.min(b), a.max(b));
        let mut edges: BTreeSet<_> = self
            .t
            .edges()
            .into_iter()
            .chain(self.s.edges())
            .map(norm)
            .collect();
        edges.insert(norm((self.rho, self.xi)));
        let cycle: Vec<VertexId> = self.t.leaves().into_iter().chain(self.s.leaves()).collect();
        for i in 0..cycle.len() {
            edges.insert(norm((cycle[i], cycle[(i + 1) % cycle.len()])));
        }
        edges
    }
}

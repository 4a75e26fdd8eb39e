//! Finite trees with labelled leaf half-edges.
//!
//! Leaves are half-edges: they have an attachment vertex but no far vertex.
//! The valence of a vertex counts incident bounded edges plus attached
//! leaves. Trees here are series-reduced (valence >= 3) except for the
//! single-vertex two-leaf type and two-valent vertices inserted explicitly
//! by the limit machinery.

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A tree with `vertex_count` vertices, bounded edges between vertices, and
/// labelled leaf half-edges. Leaf labels form `0..leaves.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialTree {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    /// leaf_vertex[label] = attachment vertex
    leaf_vertex: Vec<usize>,
}

impl CombinatorialTree {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        leaf_vertex: Vec<usize>,
    ) -> Result<Self> {
        let t = CombinatorialTree {
            vertex_count,
            edges,
            leaf_vertex,
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        if self.vertex_count == 0 {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        for &(a, b) in &self.edges {
            if a >= self.vertex_count || b >= self.vertex_count {
                return Err(Error::InvalidTree(format!(
                    "edge ({a},{b}) out of range"
                )));
            }
            if a == b {
                return Err(Error::InvalidTree("self loop".into()));
            }
        }
        for &v in &self.leaf_vertex {
            if v >= self.vertex_count {
                return Err(Error::InvalidTree("leaf vertex out of range".into()));
            }
        }
        // connected and acyclic
        if self.edges.len() + 1 != self.vertex_count {
            return Err(Error::InvalidTree(format!(
                "{} edges on {} vertices is not a tree",
                self.edges.len(),
                self.vertex_count
            )));
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let adj = self.adjacency();
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidTree("disconnected".into()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_vertex.len()
    }

    pub fn leaf_vertex(&self, label: usize) -> usize {
        self.leaf_vertex[label]
    }

    pub fn leaf_vertices(&self) -> &[usize] {
        &self.leaf_vertex
    }

    /// adjacency[v] = list of (neighbor, edge index)
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        adj
    }

    pub fn leaves_at(&self, v: usize) -> Vec<usize> {
        self.leaf_vertex
            .iter()
            .enumerate()
            .filter(|&(_, &w)| w == v)
            .map(|(l, _)| l)
            .collect()
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
            + self.leaves_at(v).len()
    }

    /// Unique simple path between two vertices, as a list of
    /// (edge index, oriented from -> to) steps.
    pub fn path(&self, from: usize, to: usize) -> Vec<(usize, usize, usize)> {
        if from == to {
            return Vec::new();
        }
        let adj = self.adjacency();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.vertex_count];
        let mut seen = vec![false; self.vertex_count];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        let mut steps = Vec::new();
        let mut cur = to;
        while let Some((v, e)) = prev[cur] {
            steps.push((e, v, cur));
            cur = v;
        }
        steps.reverse();
        steps
    }

    /// Vertices reachable from `start` without crossing vertex `blocked`.
    pub fn component_avoiding(&self, start: usize, blocked: usize) -> BTreeSet<usize> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        if start == blocked {
            return seen;
        }
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &adj[v] {
                if w != blocked && !seen.contains(&w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Leaf labels on the far side of edge `edge`, i.e. in the component of
    /// `to` once the edge is removed.
    pub fn leaves_beyond(&self, edge: usize, to: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        seen[to] = true;
        let mut queue = VecDeque::from([to]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in &adj[v] {
                if e == edge {
                    continue;
                }
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        self.leaf_vertex
            .iter()
            .enumerate()
            .filter(|&(_, &v)| seen[v])
            .map(|(l, _)| l)
            .collect()
    }

    /// Canonical string encoding; equal for two trees iff they are identical
    /// up to renumbering of the internal vertices. Rooted at the attachment
    /// vertex of leaf 0.
    pub fn canonical_encoding(&self) -> String {
        assert!(!self.leaf_vertex.is_empty());
        let root = self.leaf_vertex[0];
        self.encode_from(root, None)
    }

    fn encode_from(&self, v: usize, parent_edge: Option<usize>) -> String {
        let adj = self.adjacency();
        let mut parts: Vec<String> = self
            .leaves_at(v)
            .into_iter()
            .map(|l| format!("L{l}"))
            .collect();
        for &(w, e) in &adj[v] {
            if Some(e) == parent_edge {
                continue;
            }
            parts.push(format!("({})", self.encode_from(w, Some(e))));
        }
        parts.sort();
        parts.join(",")
    }
}

/// Enumerate all series-reduced trees with `m >= 2` labelled leaves
/// (labels `0..m`), with at most `max_internal_edges` bounded edges.
/// Trees are deduplicated by canonical encoding; output order is
/// deterministic.
pub fn enumerate_leaf_trees(m: usize, max_internal_edges: usize) -> Vec<CombinatorialTree> {
    assert!(m >= 2);
    let base = if m == 2 {
        CombinatorialTree::new(1, vec![], vec![0, 0]).unwrap()
    } else {
        CombinatorialTree::new(1, vec![], vec![0, 0, 0]).unwrap()
    };
    let mut current = vec![base];
    let start = if m == 2 { 2 } else { 3 };
    for label in start..m {
        let mut next: BTreeMap<String, CombinatorialTree> = BTreeMap::new();
        for t in &current {
            for grown in grow_tree(t, label) {
                next.entry(grown.canonical_encoding()).or_insert(grown);
            }
        }
        current = next.into_values().collect();
    }
    current
        .into_iter()
        .filter(|t| t.edges.len() <= max_internal_edges)
        .collect()
}

/// All ways of attaching a new labelled leaf to a tree: onto an existing
/// vertex, onto a bounded edge (subdividing it), or onto a leaf half-edge
/// (creating a cherry).
fn grow_tree(t: &CombinatorialTree, label: usize) -> Vec<CombinatorialTree> {
    assert_eq!(label, t.leaf_count());
    let mut out = Vec::new();
    // onto a vertex
    for v in 0..t.vertex_count {
        let mut leaf_vertex = t.leaf_vertex.clone();
        leaf_vertex.push(v);
        out.push(CombinatorialTree {
            vertex_count: t.vertex_count,
            edges: t.edges.clone(),
            leaf_vertex,
        });
    }
    // onto a bounded edge
    for (i, &(a, b)) in t.edges.iter().enumerate() {
        let new_v = t.vertex_count;
        let mut edges = t.edges.clone();
        edges[i] = (a, new_v);
        edges.push((new_v, b));
        let mut leaf_vertex = t.leaf_vertex.clone();
        leaf_vertex.push(new_v);
        out.push(CombinatorialTree {
            vertex_count: t.vertex_count + 1,
            edges,
            leaf_vertex,
        });
    }
    // onto a leaf half-edge
    for l in 0..t.leaf_count() {
        let v = t.leaf_vertex[l];
        let new_v = t.vertex_count;
        let mut edges = t.edges.clone();
        edges.push((v, new_v));
        let mut leaf_vertex = t.leaf_vertex.clone();
        leaf_vertex[l] = new_v;
        leaf_vertex.push(new_v);
        out.push(CombinatorialTree {
            vertex_count: t.vertex_count + 1,
            edges,
            leaf_vertex,
        });
    }
    out
}

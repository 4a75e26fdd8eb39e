//! Tropical rational curves: metric trees with affine morphism data.
//!
//! A curve stores a combinatorial tree, one length per bounded edge, one
//! integer direction vector per oriented bounded edge, and the position of a
//! base vertex. Leaf directions are prescribed by the toric degree (leaf
//! label i carries the i-th degree vector, oriented outward). Edge
//! displacement follows the unit-speed convention: travelling the full edge
//! moves by `length * direction`.
//!
//! Tropical lines (degree `Delta_n`) additionally support the calculus used
//! by the spine construction: local coordinates, linear modification and
//! contraction.

use crate::degree::{PsiMap, ToricDegree};
use crate::error::{Error, Result};
use crate::geometry::{dist_inf, Segment};
use crate::tree::CombinatorialTree;
use std::collections::BTreeSet;

/// Point in a moduli chart: combinatorial type, marked-vertex position and
/// non-negative edge lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuliPoint {
    pub degree: ToricDegree,
    pub tree: CombinatorialTree,
    pub base_vertex: usize,
    pub position: Vec<f64>,
    pub lengths: Vec<f64>,
}

impl ModuliPoint {
    /// Dimension of the chart: n plus the number of non-leaf edges.
    pub fn chart_dim(&self) -> usize {
        self.degree.dim() + self.tree.edges().len()
    }
}

/// A tropical rational curve in R^n.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalCurve {
    degree: ToricDegree,
    tree: CombinatorialTree,
    lengths: Vec<f64>,
    /// direction of edges[i] oriented edges[i].0 -> edges[i].1
    directions: Vec<Vec<i64>>,
    base_vertex: usize,
    base_position: Vec<f64>,
    positions: Vec<Vec<f64>>,
}

/// Location of a point on the image of a curve.
#[derive(Debug, Clone, PartialEq)]
pub enum TreePoint {
    Vertex(usize),
    /// interior of a bounded edge, parameter from the first endpoint
    Edge { edge: usize, t: f64 },
    /// interior of a leaf ray, parameter from the attachment vertex
    Leaf { leaf: usize, t: f64 },
}

impl TropicalCurve {
    pub fn new(
        degree: ToricDegree,
        tree: CombinatorialTree,
        lengths: Vec<f64>,
        directions: Vec<Vec<i64>>,
        base_vertex: usize,
        base_position: Vec<f64>,
    ) -> Result<Self> {
        let n = degree.dim();
        if tree.leaf_count() != degree.k() + 1 {
            return Err(Error::InconsistentDegree {
                leaves: tree.leaf_count(),
                expected: degree.k() + 1,
            });
        }
        if lengths.len() != tree.edges().len() || directions.len() != tree.edges().len() {
            return Err(Error::InvalidCurve(
                "lengths/directions must match edge count".into(),
            ));
        }
        for (i, l) in lengths.iter().enumerate() {
            if !(*l >= 0.0) {
                return Err(Error::InvalidCurve(format!("edge {i} has length {l}")));
            }
        }
        for d in &directions {
            if d.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: d.len(),
                });
            }
        }
        if base_vertex >= tree.vertex_count() {
            return Err(Error::InvalidCurve("base vertex out of range".into()));
        }
        if base_position.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: base_position.len(),
            });
        }
        let mut curve = TropicalCurve {
            degree,
            tree,
            lengths,
            directions,
            base_vertex,
            base_position,
            positions: Vec::new(),
        };
        if !curve.check_balancing() {
            return Err(Error::InvalidCurve("balancing condition violated".into()));
        }
        curve.positions = curve.derive_positions();
        Ok(curve)
    }

    /// Build a curve from a moduli point: leaf directions come from the
    /// degree and the balancing condition recursively prescribes all
    /// interior direction vectors.
    pub fn from_moduli(m: &ModuliPoint) -> Result<Self> {
        let n = m.degree.dim();
        if m.tree.leaf_count() != m.degree.k() + 1 {
            return Err(Error::InconsistentDegree {
                leaves: m.tree.leaf_count(),
                expected: m.degree.k() + 1,
            });
        }
        if m.lengths.len() != m.tree.edges().len() {
            return Err(Error::InvalidCurve(
                "one length per non-leaf edge required".into(),
            ));
        }
        let edges = m.tree.edges();
        let mut directions: Vec<Option<Vec<i64>>> = vec![None; edges.len()];
        // outgoing sum of known directions per vertex, and number of unknown
        // incident edges
        let mut unknown: Vec<usize> = vec![0; m.tree.vertex_count()];
        let mut known_sum: Vec<Vec<i64>> = vec![vec![0; n]; m.tree.vertex_count()];
        for &(a, b) in edges {
            unknown[a] += 1;
            unknown[b] += 1;
        }
        for (label, &v) in m.tree.leaf_vertices().iter().enumerate() {
            for (s, &x) in known_sum[v].iter_mut().zip(m.degree.vector(label)) {
                *s += x;
            }
        }
        let mut remaining = edges.len();
        while remaining > 0 {
            let mut progressed = false;
            for (i, &(a, b)) in edges.iter().enumerate() {
                if directions[i].is_some() {
                    continue;
                }
                let (v, flip) = if unknown[a] == 1 {
                    (a, false)
                } else if unknown[b] == 1 {
                    (b, true)
                } else {
                    continue;
                };
                // balancing at v: outgoing direction of this edge from v
                let out: Vec<i64> = known_sum[v].iter().map(|&s| -s).collect();
                let dir = if flip { out.iter().map(|&x| -x).collect() } else { out.clone() };
                // update both endpoints
                for (s, &x) in known_sum[a].iter_mut().zip(&dir) {
                    *s += x;
                }
                for (s, &x) in known_sum[b].iter_mut().zip(&dir) {
                    *s -= x;
                }
                unknown[a] -= 1;
                unknown[b] -= 1;
                directions[i] = Some(dir);
                remaining -= 1;
                progressed = true;
            }
            if !progressed {
                return Err(Error::InvalidCurve(
                    "could not resolve directions by balancing".into(),
                ));
            }
        }
        TropicalCurve::new(
            m.degree.clone(),
            m.tree.clone(),
            m.lengths.clone(),
            directions.into_iter().map(Option::unwrap).collect(),
            m.base_vertex,
            m.position.clone(),
        )
    }

    /// Read off the moduli chart coordinates.
    pub fn to_moduli(&self) -> ModuliPoint {
        ModuliPoint {
            degree: self.degree.clone(),
            tree: self.tree.clone(),
            base_vertex: self.base_vertex,
            position: self.base_position.clone(),
            lengths: self.lengths.clone(),
        }
    }

    pub fn degree(&self) -> &ToricDegree {
        &self.degree
    }

    pub fn dim(&self) -> usize {
        self.degree.dim()
    }

    pub fn tree(&self) -> &CombinatorialTree {
        &self.tree
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    pub fn edge_length(&self, e: usize) -> f64 {
        self.lengths[e]
    }

    /// Direction of edge `e` oriented from `from`.
    pub fn direction_from(&self, e: usize, from: usize) -> Vec<i64> {
        let (a, _) = self.tree.edges()[e];
        if from == a {
            self.directions[e].clone()
        } else {
            self.directions[e].iter().map(|&x| -x).collect()
        }
    }

    pub fn leaf_direction(&self, label: usize) -> &[i64] {
        self.degree.vector(label)
    }

    pub fn base_vertex(&self) -> usize {
        self.base_vertex
    }

    pub fn base_position(&self) -> &[f64] {
        &self.base_position
    }

    pub fn position(&self, v: usize) -> &[f64] {
        &self.positions[v]
    }

    pub fn positions(&self) -> &[Vec<f64>] {
        &self.positions
    }

    fn derive_positions(&self) -> Vec<Vec<f64>> {
        let mut pos = vec![Vec::new(); self.tree.vertex_count()];
        pos[self.base_vertex] = self.base_position.clone();
        let adj = self.tree.adjacency();
        let mut seen = vec![false; self.tree.vertex_count()];
        seen[self.base_vertex] = true;
        let mut stack = vec![self.base_vertex];
        while let Some(v) = stack.pop() {
            for &(w, e) in &adj[v] {
                if seen[w] {
                    continue;
                }
                seen[w] = true;
                let dir = self.direction_from(e, v);
                let l = self.lengths[e];
                pos[w] = pos[v]
                    .iter()
                    .zip(&dir)
                    .map(|(p, &d)| p + l * d as f64)
                    .collect();
                stack.push(w);
            }
        }
        pos
    }

    /// Exact integer check of the balancing condition at every vertex.
    pub fn check_balancing(&self) -> bool {
        let n = self.degree.dim();
        let mut sums: Vec<Vec<i64>> = vec![vec![0; n]; self.tree.vertex_count()];
        for (i, &(a, b)) in self.tree.edges().iter().enumerate() {
            for (j, &d) in self.directions[i].iter().enumerate() {
                sums[a][j] += d;
                sums[b][j] -= d;
            }
        }
        for (label, &v) in self.tree.leaf_vertices().iter().enumerate() {
            for (j, &d) in self.degree.vector(label).iter().enumerate() {
                sums[v][j] += d;
            }
        }
        sums.iter().all(|s| s.iter().all(|&x| x == 0))
    }

    /// The image as segments and rays.
    pub fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::new();
        for (i, &(a, _)) in self.tree.edges().iter().enumerate() {
            out.push(Segment {
                start: self.positions[a].clone(),
                dir: self.directions[i].iter().map(|&d| d as f64).collect(),
                t_max: self.lengths[i],
            });
        }
        for (label, &v) in self.tree.leaf_vertices().iter().enumerate() {
            out.push(Segment::ray(
                &self.positions[v],
                &self
                    .degree
                    .vector(label)
                    .iter()
                    .map(|&d| d as f64)
                    .collect::<Vec<_>>(),
            ));
        }
        out
    }

    /// Exact sup-norm distance from a point to the image.
    pub fn distance_to_image(&self, x: &[f64]) -> f64 {
        self.segments()
            .iter()
            .map(|s| s.distance_inf(x).0)
            .fold(f64::INFINITY, f64::min)
    }

    /// Locate a point on the image; `Err(PointNotOnLine)` if farther than
    /// `tol` from every edge and ray.
    pub fn locate(&self, x: &[f64], tol: f64) -> Result<TreePoint> {
        let mut best: (f64, TreePoint) = (f64::INFINITY, TreePoint::Vertex(0));
        let edge_count = self.tree.edges().len();
        for (idx, seg) in self.segments().iter().enumerate() {
            let (d, t) = seg.distance_inf(x);
            if d < best.0 {
                best = (
                    d,
                    if idx < edge_count {
                        TreePoint::Edge { edge: idx, t }
                    } else {
                        TreePoint::Leaf {
                            leaf: idx - edge_count,
                            t,
                        }
                    },
                );
            }
        }
        if best.0 > tol {
            return Err(Error::PointNotOnLine { distance: best.0 });
        }
        // snap parameters at segment ends to the vertex
        Ok(match best.1 {
            TreePoint::Edge { edge, t } => {
                let (a, b) = self.tree.edges()[edge];
                if t <= tol {
                    TreePoint::Vertex(a)
                } else if t >= self.lengths[edge] - tol {
                    TreePoint::Vertex(b)
                } else {
                    TreePoint::Edge { edge, t }
                }
            }
            TreePoint::Leaf { leaf, t } => {
                if t <= tol {
                    TreePoint::Vertex(self.tree.leaf_vertex(leaf))
                } else {
                    TreePoint::Leaf { leaf, t }
                }
            }
            v => v,
        })
    }

    /// Coordinates of a tree point.
    pub fn point_coords(&self, tp: &TreePoint) -> Vec<f64> {
        match tp {
            TreePoint::Vertex(v) => self.positions[*v].clone(),
            TreePoint::Edge { edge, t } => {
                let (a, _) = self.tree.edges()[*edge];
                self.positions[a]
                    .iter()
                    .zip(&self.directions[*edge])
                    .map(|(p, &d)| p + t * d as f64)
                    .collect()
            }
            TreePoint::Leaf { leaf, t } => {
                let v = self.tree.leaf_vertex(*leaf);
                self.positions[v]
                    .iter()
                    .zip(self.degree.vector(*leaf))
                    .map(|(p, &d)| p + t * d as f64)
                    .collect()
            }
        }
    }

    /// Split the curve at an interior point, producing an equal-image curve
    /// with a (two-valent) vertex there. Returns the vertex index.
    fn split_at(&self, tp: &TreePoint) -> (TropicalCurve, usize) {
        match *tp {
            TreePoint::Vertex(v) => (self.clone(), v),
            TreePoint::Edge { edge, t } => {
                let (a, b) = self.tree.edges()[edge];
                let vp = self.tree.vertex_count();
                let mut edges = self.tree.edges().to_vec();
                edges[edge] = (a, vp);
                edges.push((vp, b));
                let mut lengths = self.lengths.clone();
                let full = lengths[edge];
                lengths[edge] = t;
                lengths.push(full - t);
                let mut directions = self.directions.clone();
                directions.push(directions[edge].clone());
                let tree = CombinatorialTree::new(
                    self.tree.vertex_count() + 1,
                    edges,
                    self.tree.leaf_vertices().to_vec(),
                )
                .expect("split tree");
                let curve = TropicalCurve::new(
                    self.degree.clone(),
                    tree,
                    lengths,
                    directions,
                    self.base_vertex,
                    self.base_position.clone(),
                )
                .expect("split curve");
                (curve, vp)
            }
            TreePoint::Leaf { leaf, t } => {
                let v = self.tree.leaf_vertex(leaf);
                let vp = self.tree.vertex_count();
                let mut edges = self.tree.edges().to_vec();
                edges.push((v, vp));
                let mut lengths = self.lengths.clone();
                lengths.push(t);
                let mut directions = self.directions.clone();
                directions.push(self.degree.vector(leaf).to_vec());
                let mut leaf_vertex = self.tree.leaf_vertices().to_vec();
                leaf_vertex[leaf] = vp;
                let tree =
                    CombinatorialTree::new(self.tree.vertex_count() + 1, edges, leaf_vertex)
                        .expect("split tree");
                let curve = TropicalCurve::new(
                    self.degree.clone(),
                    tree,
                    lengths,
                    directions,
                    self.base_vertex,
                    self.base_position.clone(),
                )
                .expect("split curve");
                (curve, vp)
            }
        }
    }

    /// Remove two-valent vertices whose incident directions cancel (always
    /// true under balancing). Keeps the single-vertex two-leaf type.
    fn smoothed(&self) -> TropicalCurve {
        let mut curve = self.clone();
        'outer: loop {
            if curve.tree.vertex_count() == 1 {
                return curve;
            }
            for v in 0..curve.tree.vertex_count() {
                if curve.tree.valence(v) != 2 {
                    continue;
                }
                let incident: Vec<usize> = curve
                    .tree
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(a, b))| a == v || b == v)
                    .map(|(i, _)| i)
                    .collect();
                let leaves = curve.tree.leaves_at(v);
                match (incident.len(), leaves.len()) {
                    (2, 0) => {
                        curve = curve.merge_edges_at(v, incident[0], incident[1]);
                        continue 'outer;
                    }
                    (1, 1) => {
                        curve = curve.absorb_leaf_at(v, incident[0], leaves[0]);
                        continue 'outer;
                    }
                    _ => continue,
                }
            }
            return curve;
        }
    }

    /// Replace a two-valent vertex `v` between bounded edges `e1`, `e2` by a
    /// single edge (lengths add; directions agree by balancing).
    fn merge_edges_at(&self, v: usize, e1: usize, e2: usize) -> TropicalCurve {
        let other = |e: usize| {
            let (a, b) = self.tree.edges()[e];
            if a == v {
                b
            } else {
                a
            }
        };
        let (u1, u2) = (other(e1), other(e2));
        debug_assert_eq!(
            self.direction_from(e1, u1),
            self.direction_from(e2, v),
            "two-valent vertex must be a straight point"
        );
        let merged_dir = self.direction_from(e1, u1);
        let merged_len = self.lengths[e1] + self.lengths[e2];
        self.rebuild_without_vertex(v, &[], |edges, lengths, directions| {
            edges.push((u1, u2));
            lengths.push(merged_len);
            directions.push(merged_dir.clone());
        })
    }

    /// Remove a two-valent vertex `v` carrying bounded edge `e` and leaf
    /// `leaf`: the leaf ray extends through the edge to the far vertex.
    fn absorb_leaf_at(&self, v: usize, e: usize, leaf: usize) -> TropicalCurve {
        let (a, b) = self.tree.edges()[e];
        let u = if a == v { b } else { a };
        debug_assert_eq!(
            self.direction_from(e, u),
            self.degree.vector(leaf).to_vec(),
            "leaf must continue the edge direction"
        );
        self.rebuild_without_vertex(v, &[(leaf, u)], |_, _, _| {})
    }

    /// Rebuild the curve with vertex `v` (and its incident edges) removed;
    /// `extend` may append replacement edges and `leaf_moves` reattaches
    /// leaves, both in the OLD vertex numbering.
    fn rebuild_without_vertex<F>(
        &self,
        v: usize,
        leaf_moves: &[(usize, usize)],
        extend: F,
    ) -> TropicalCurve
    where
        F: FnOnce(&mut Vec<(usize, usize)>, &mut Vec<f64>, &mut Vec<Vec<i64>>),
    {
        let mut edges = Vec::new();
        let mut lengths = Vec::new();
        let mut directions = Vec::new();
        for (i, &(a, b)) in self.tree.edges().iter().enumerate() {
            if a == v || b == v {
                continue;
            }
            edges.push((a, b));
            lengths.push(self.lengths[i]);
            directions.push(self.directions[i].clone());
        }
        extend(&mut edges, &mut lengths, &mut directions);
        let renum = |w: usize| if w > v { w - 1 } else { w };
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (renum(a), renum(b))).collect();
        let mut leaf_vertex = self.tree.leaf_vertices().to_vec();
        for &(leaf, target) in leaf_moves {
            leaf_vertex[leaf] = target;
        }
        let leaf_vertex: Vec<usize> = leaf_vertex
            .iter()
            .map(|&w| {
                debug_assert_ne!(w, v, "cannot remove a vertex carrying leaves");
                renum(w)
            })
            .collect();
        let tree = CombinatorialTree::new(self.tree.vertex_count() - 1, edges, leaf_vertex)
            .expect("rebuilt tree");
        let (base_vertex, base_position) = if self.base_vertex == v {
            let keep = if v == 0 { 1 } else { 0 };
            (renum(keep), self.positions[keep].clone())
        } else {
            (renum(self.base_vertex), self.base_position.clone())
        };
        TropicalCurve::new(
            self.degree.clone(),
            tree,
            lengths,
            directions,
            base_vertex,
            base_position,
        )
        .expect("rebuilt curve")
    }

    /// Push the curve forward along the linear map of a toric degree: same
    /// tree and lengths, directions mapped through the matrix.
    pub fn pushforward(&self, psi: &PsiMap) -> Result<TropicalCurve> {
        let k = psi.degree().k();
        if self.degree.k() != k || self.degree.dim() != k {
            return Err(Error::InconsistentDegree {
                leaves: self.tree.leaf_count(),
                expected: k + 1,
            });
        }
        let directions = self
            .directions
            .iter()
            .map(|d| psi.apply_int(d))
            .collect::<Vec<_>>();
        let base_position = psi.apply(&self.base_position)?;
        TropicalCurve::new(
            psi.degree().clone(),
            self.tree.clone(),
            self.lengths.clone(),
            directions,
            self.base_vertex,
            base_position,
        )
    }

    /// Scale all lengths and positions by `s` (directions unchanged).
    pub fn rescaled(&self, s: f64) -> TropicalCurve {
        TropicalCurve::new(
            self.degree.clone(),
            self.tree.clone(),
            self.lengths.iter().map(|l| l * s).collect(),
            self.directions.clone(),
            self.base_vertex,
            self.base_position.iter().map(|x| x * s).collect(),
        )
        .expect("rescaled curve")
    }

    /// Translate the image by `shift`.
    pub fn translated(&self, shift: &[f64]) -> TropicalCurve {
        TropicalCurve::new(
            self.degree.clone(),
            self.tree.clone(),
            self.lengths.clone(),
            self.directions.clone(),
            self.base_vertex,
            self.base_position
                .iter()
                .zip(shift)
                .map(|(x, s)| x + s)
                .collect(),
        )
        .expect("translated curve")
    }

    /// Scale of the vertex coordinates, for relative tolerances.
    pub fn coordinate_scale(&self) -> f64 {
        self.positions
            .iter()
            .flat_map(|p| p.iter())
            .fold(1.0f64, |acc, &x| acc.max(x.abs()))
    }
}

/// A tropical line: a curve of degree `Delta_n` with leaves `0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalLine {
    curve: TropicalCurve,
}

impl TropicalLine {
    pub fn from_curve(curve: TropicalCurve) -> Result<Self> {
        if !curve.degree().is_line_degree() {
            return Err(Error::InvalidCurve(
                "tropical line must have degree Delta_n".into(),
            ));
        }
        // injectivity: distinct vertices map to distinct points
        let tol = 1e-12 * curve.coordinate_scale();
        for v in 0..curve.tree().vertex_count() {
            for w in v + 1..curve.tree().vertex_count() {
                if dist_inf(curve.position(v), curve.position(w)) <= tol {
                    return Err(Error::InvalidCurve(format!(
                        "vertices {v} and {w} map to the same point"
                    )));
                }
            }
        }
        Ok(TropicalLine { curve })
    }

    /// The real line as a tropical line in R^1 (vertex at `origin`).
    pub fn real_line(origin: f64) -> Self {
        let tree = CombinatorialTree::new(1, vec![], vec![0, 0]).unwrap();
        let curve = TropicalCurve::new(
            ToricDegree::line(1),
            tree,
            vec![],
            vec![],
            0,
            vec![origin],
        )
        .unwrap();
        TropicalLine { curve }
    }

    pub fn curve(&self) -> &TropicalCurve {
        &self.curve
    }

    pub fn into_curve(self) -> TropicalCurve {
        self.curve
    }

    pub fn dim(&self) -> usize {
        self.curve.dim()
    }

    /// Leaf `l_0` lies on the diagonal line through the origin iff its
    /// attachment vertex has all coordinates equal.
    pub fn is_calibrated(&self) -> bool {
        let v = self.curve.tree().leaf_vertex(0);
        let p = self.curve.position(v);
        let tol = 1e-9 * self.curve.coordinate_scale().max(1.0);
        p.iter().all(|&x| (x - p[0]).abs() <= tol)
    }

    fn on_image_tol(&self) -> f64 {
        1e-9 * self.curve.coordinate_scale().max(1.0)
    }

    /// Direction vector from a point on the image towards the end `a_0`.
    fn direction_to_a0(&self, tp: &TreePoint) -> Vec<i64> {
        let curve = &self.curve;
        let w0 = curve.tree().leaf_vertex(0);
        match *tp {
            TreePoint::Vertex(v) => {
                if v == w0 {
                    // check whether a bounded edge towards a_0 exists; from
                    // the attachment vertex the way to a_0 is the leaf itself
                    curve.leaf_direction(0).to_vec()
                } else {
                    let steps = curve.tree().path(v, w0);
                    let (e, from, _) = steps[0];
                    curve.direction_from(e, from)
                }
            }
            TreePoint::Edge { edge, t: _ } => {
                let (a, b) = curve.tree().edges()[edge];
                // a_0 side of the edge
                if curve.tree().leaves_beyond(edge, b).contains(&0) {
                    curve.direction_from(edge, a)
                } else {
                    curve.direction_from(edge, b)
                }
            }
            TreePoint::Leaf { leaf, t: _ } => {
                if leaf == 0 {
                    curve.leaf_direction(0).to_vec()
                } else {
                    // back towards the attachment vertex
                    curve.leaf_direction(leaf).iter().map(|&d| -d).collect()
                }
            }
        }
    }

    /// Indices (0-based) of the local coordinates at a point `p` on the
    /// image: entries equal to 1 of the direction towards `a_0`.
    pub fn local_coordinates(&self, p: &[f64]) -> Result<BTreeSet<usize>> {
        let tp = self.curve.locate(p, self.on_image_tol())?;
        let dir = self.direction_to_a0(&tp);
        debug_assert!(dir.iter().all(|&d| d == 0 || d == 1));
        Ok(dir
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 1)
            .map(|(i, _)| i)
            .collect())
    }

    /// Linear modification along `p` (a point on the image) of the given
    /// height: the unique line in R^{n+1} containing the graph of
    /// `x -> height + max(x_i - p_i, 0)` for a local coordinate `x_i`, with
    /// the new end `l_{n+1}` attached at `(p, height)` pointing downward.
    pub fn modify(&self, p: &[f64], height: f64) -> Result<TropicalLine> {
        let tp = self.curve.locate(p, self.on_image_tol())?;
        let (split, vp) = self.curve.split_at(&tp);
        let p_exact = split.position(vp);
        let n = split.dim();

        // local coordinate: smallest index
        let w0 = split.tree().leaf_vertex(0);
        let dir0 = if vp == w0 {
            split.leaf_direction(0).to_vec()
        } else {
            let steps = split.tree().path(vp, w0);
            let (e, from, _) = steps[0];
            split.direction_from(e, from)
        };
        let i = dir0
            .iter()
            .position(|&d| d == 1)
            .ok_or_else(|| Error::InvalidCurve("no local coordinate at p".into()))?;
        let p_i = p_exact[i];

        // vertices on the a_0 side of p
        let a_side = split.tree().component_avoiding(w0, vp);

        let mu = |v: usize| -> f64 {
            if a_side.contains(&v) {
                height + (split.position(v)[i] - p_i)
            } else {
                height
            }
        };

        let lifted_degree = ToricDegree::line(n + 1);
        let mut directions = Vec::with_capacity(split.tree().edges().len());
        for (e, &(a, b)) in split.tree().edges().iter().enumerate() {
            let endpoint = if a == vp { b } else { a };
            let in_a_side = a_side.contains(&endpoint);
            let mut d = split.directions[e].clone();
            d.push(if in_a_side { d[i] } else { 0 });
            directions.push(d);
        }

        // attach the new downward leaf at vp
        let mut leaf_vertex = split.tree().leaf_vertices().to_vec();
        leaf_vertex.push(vp);
        let tree = CombinatorialTree::new(
            split.tree().vertex_count(),
            split.tree().edges().to_vec(),
            leaf_vertex,
        )?;

        let mut base_position: Vec<f64> = split.position(split.base_vertex()).to_vec();
        base_position.push(mu(split.base_vertex()));

        let lifted = TropicalCurve::new(
            lifted_degree,
            tree,
            split.lengths.clone(),
            directions,
            split.base_vertex(),
            base_position,
        )?;
        TropicalLine::from_curve(lifted.smoothed())
    }

    /// Contraction: the image under the projection forgetting the last
    /// coordinate, together with the image point of the contracted leaf
    /// `l_n`. Inverse to modification.
    pub fn contract(&self) -> Result<(TropicalLine, Vec<f64>)> {
        let n = self.dim();
        if n < 2 {
            return Err(Error::InvalidCurve(
                "contraction needs ambient dimension >= 2".into(),
            ));
        }
        let curve = &self.curve;
        let v_n = curve.tree().leaf_vertex(n);
        let p: Vec<f64> = curve.position(v_n)[..n - 1].to_vec();

        let mut leaf_vertex = curve.tree().leaf_vertices().to_vec();
        leaf_vertex.pop();
        let tree = CombinatorialTree::new(
            curve.tree().vertex_count(),
            curve.tree().edges().to_vec(),
            leaf_vertex,
        )?;
        let directions: Vec<Vec<i64>> = curve
            .directions
            .iter()
            .map(|d| d[..n - 1].to_vec())
            .collect();
        let base_position = curve.base_position()[..n - 1].to_vec();
        let projected = TropicalCurve::new(
            ToricDegree::line(n - 1),
            tree,
            curve.lengths.clone(),
            directions,
            curve.base_vertex(),
            base_position,
        )?;
        let line = TropicalLine::from_curve(projected.smoothed())?;
        Ok((line, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn standard_line_2d() -> TropicalLine {
        let tree = CombinatorialTree::new(1, vec![], vec![0, 0, 0]).unwrap();
        let m = ModuliPoint {
            degree: ToricDegree::line(2),
            tree,
            base_vertex: 0,
            position: vec![0.0, 0.0],
            lengths: vec![],
        };
        TropicalLine::from_curve(TropicalCurve::from_moduli(&m).unwrap()).unwrap()
    }

    #[test]
    fn from_moduli_standard_line() {
        let line = standard_line_2d();
        assert!(line.curve().check_balancing());
        assert!(line.is_calibrated());
        assert_eq!(line.curve().leaf_direction(0), &[1, 1]);
        assert_eq!(line.curve().leaf_direction(1), &[-1, 0]);
        assert_eq!(line.curve().leaf_direction(2), &[0, -1]);
    }

    #[test]
    fn from_moduli_two_leaf_type() {
        // degree ((1,0),(-1,0)), single vertex: image is a horizontal line,
        // position only matters modulo R*(1,0)
        let degree = ToricDegree::new(vec![vec![1, 0], vec![-1, 0]]).unwrap();
        let tree = CombinatorialTree::new(1, vec![], vec![0, 0]).unwrap();
        let m = ModuliPoint {
            degree,
            tree,
            base_vertex: 0,
            position: vec![3.0, 2.0],
            lengths: vec![],
        };
        let a = TropicalCurve::from_moduli(&m).unwrap();
        let mut m2 = m.clone();
        m2.position = vec![-5.0, 2.0];
        let b = TropicalCurve::from_moduli(&m2).unwrap();
        for x in [[-7.0, 2.0], [100.0, 2.0], [0.0, 2.0]] {
            assert!(a.distance_to_image(&x) < 1e-12);
            assert!(b.distance_to_image(&x) < 1e-12);
        }
    }

    #[test]
    fn from_moduli_caterpillar_matches_figure() {
        let log2 = std::f64::consts::LN_2;
        let tree = CombinatorialTree::new(2, vec![(0, 1)], vec![1, 0, 0, 1]).unwrap();
        let m = ModuliPoint {
            degree: ToricDegree::line(3),
            tree,
            base_vertex: 0,
            position: vec![0.0, 0.0, 0.0],
            lengths: vec![log2],
        };
        let curve = TropicalCurve::from_moduli(&m).unwrap();
        assert_eq!(curve.position(0), &[0.0, 0.0, 0.0]);
        assert!(dist_inf(curve.position(1), &[log2, log2, 0.0]) < 1e-15);
        let line = TropicalLine::from_curve(curve).unwrap();
        assert!(!line.is_calibrated());
    }

    #[test]
    fn moduli_round_trip_is_identity() {
        let log2 = std::f64::consts::LN_2;
        let tree = CombinatorialTree::new(2, vec![(0, 1)], vec![1, 0, 0, 1]).unwrap();
        let m = ModuliPoint {
            degree: ToricDegree::line(3),
            tree,
            base_vertex: 1,
            position: vec![0.25, -1.5, 3.0],
            lengths: vec![log2],
        };
        let curve = TropicalCurve::from_moduli(&m).unwrap();
        let back = curve.to_moduli();
        assert_eq!(back.position, m.position);
        assert_eq!(back.lengths, m.lengths);
        assert_eq!(back.base_vertex, m.base_vertex);
    }

    #[test]
    fn balancing_rejects_perturbed_direction() {
        let tree = CombinatorialTree::new(2, vec![(0, 1)], vec![1, 0, 0, 1]).unwrap();
        // caterpillar with a wrong internal direction
        let bad = TropicalCurve::new(
            ToricDegree::line(3),
            tree,
            vec![1.0],
            vec![vec![1, 2, 0]],
            0,
            vec![0.0; 3],
        );
        assert!(matches!(bad, Err(Error::InvalidCurve(_))));
    }

    #[test]
    fn distance_examples() {
        let line = standard_line_2d();
        // vertex
        assert_eq!(line.curve().distance_to_image(&[0.0, 0.0]), 0.0);
        // (1,0): nearest point on the diagonal ray
        assert!((line.curve().distance_to_image(&[1.0, 0.0]) - 0.5).abs() < 1e-15);
        // (-5,3): nearest point (-5,0) on the -e_1 ray
        assert!((line.curve().distance_to_image(&[-5.0, 3.0]) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn distance_matches_grid_oracle() {
        let line = standard_line_2d();
        for x in [[0.7, -0.4], [2.0, 1.0], [-1.0, -3.5], [4.0, 4.7]] {
            let exact = line.curve().distance_to_image(&x);
            let mut oracle = f64::INFINITY;
            for seg in line.curve().segments() {
                let tmax = if seg.t_max.is_finite() { seg.t_max } else { 50.0 };
                for i in 0..=200_000 {
                    let t = tmax * i as f64 / 200_000.0;
                    oracle = oracle.min(dist_inf(&seg.at(t), &x));
                }
            }
            assert!((exact - oracle).abs() < 1e-4);
            assert!(exact <= oracle + 1e-12);
        }
    }

    #[test]
    fn local_coordinates_examples() {
        let line = standard_line_2d();
        let lc = line.local_coordinates(&[-1.0, 0.0]).unwrap();
        assert_eq!(lc, BTreeSet::from([0]));
        let lc = line.local_coordinates(&[1.0, 1.0]).unwrap();
        assert_eq!(lc, BTreeSet::from([0, 1]));
        assert!(line.local_coordinates(&[5.0, -3.0]).is_err());
    }

    #[test]
    fn modify_real_line_gives_standard_line() {
        let line = TropicalLine::real_line(0.0);
        let modified = line.modify(&[0.0], 0.0).unwrap();
        assert_eq!(modified.dim(), 2);
        assert_eq!(modified.curve().tree().vertex_count(), 1);
        assert!(dist_inf(modified.curve().position(0), &[0.0, 0.0]) < 1e-15);
        assert!(modified.is_calibrated());
        // same result if the base vertex sits elsewhere
        let line = TropicalLine::real_line(5.0);
        let modified2 = line.modify(&[0.0], 0.0).unwrap();
        assert_eq!(modified2.curve().tree().vertex_count(), 1);
        assert!(dist_inf(modified2.curve().position(0), &[0.0, 0.0]) < 1e-15);
    }

    #[test]
    fn modify_standard_line_along_diagonal() {
        let log2 = std::f64::consts::LN_2;
        let line = standard_line_2d();
        let modified = line.modify(&[log2, log2], log2).unwrap();
        assert_eq!(modified.dim(), 3);
        let mut positions: Vec<Vec<f64>> = (0..modified.curve().tree().vertex_count())
            .map(|v| modified.curve().position(v).to_vec())
            .collect();
        positions.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(dist_inf(&positions[0], &[0.0, 0.0, log2]) < 1e-15);
        assert!(dist_inf(&positions[1], &[log2, log2, log2]) < 1e-15);
        assert!(modified.is_calibrated());
    }

    #[test]
    fn modify_at_vertex_grows_valence() {
        let line = standard_line_2d();
        let modified = line.modify(&[0.0, 0.0], 0.0).unwrap();
        assert_eq!(modified.curve().tree().vertex_count(), 1);
        assert_eq!(modified.curve().tree().valence(0), 4);
        assert!(modified.is_calibrated());
    }

    #[test]
    fn calibration_preserved_iff_height_matches() {
        let log2 = std::f64::consts::LN_2;
        let line = standard_line_2d();
        assert!(line.is_calibrated());
        let good = line.modify(&[log2, log2], log2).unwrap();
        assert!(good.is_calibrated());
        let bad = line.modify(&[log2, log2], 7.0).unwrap();
        assert!(!bad.is_calibrated());
    }

    #[test]
    fn contract_inverts_modify() {
        let log2 = std::f64::consts::LN_2;
        let line = standard_line_2d();
        let p = [log2, log2];
        let modified = line.modify(&p, log2).unwrap();
        let (back, q) = modified.contract().unwrap();
        assert!(dist_inf(&q, &p) < 1e-15);
        assert_eq!(back.curve().tree().vertex_count(), 1);
        assert!(dist_inf(back.curve().position(0), &[0.0, 0.0]) < 1e-15);
    }

    #[test]
    fn contract_standard_line_to_real_line() {
        let line = standard_line_2d();
        let (contracted, p) = line.contract().unwrap();
        assert_eq!(contracted.dim(), 1);
        assert_eq!(p, vec![0.0]);
        // image is all of R
        assert!(contracted.curve().distance_to_image(&[17.0]) < 1e-12);
        assert!(contracted.curve().distance_to_image(&[-42.0]) < 1e-12);
    }

    #[test]
    fn pushforward_maps_directions() {
        let degree = ToricDegree::new(vec![
            vec![2, 2],
            vec![-2, 0],
            vec![0, -2],
        ])
        .unwrap();
        let psi = degree.psi();
        let line = standard_line_2d();
        let pushed = line.curve().pushforward(&psi).unwrap();
        assert!(pushed.check_balancing());
        assert_eq!(pushed.leaf_direction(1), &[-2, 0]);
        assert_eq!(pushed.leaf_direction(0), &[2, 2]);
    }
}

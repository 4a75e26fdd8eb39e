//! Hausdorff distance between point clouds, segment arrangements and
//! tropical curve images, restricted to a compact window.
//!
//! Point-to-set distances are exact; the supremum over a segment is computed
//! by certified Lipschitz refinement (the distance-to-a-set function is
//! 1-Lipschitz in the same norm), so results carry an explicit tolerance.

use crate::geometry::{dist_inf, sup_on_segment, Segment};
use crate::tropical::TropicalCurve;

const SUP_TOL: f64 = 1e-12;

/// Axis-aligned compact box in R^n.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Window {
    pub min: Vec<f64>,
    pub max: Vec<f64>,
}

impl Window {
    pub fn new(min: Vec<f64>, max: Vec<f64>) -> Self {
        assert_eq!(min.len(), max.len());
        assert!(!min.is_empty());
        assert!(min.iter().zip(&max).all(|(a, b)| a <= b));
        Window { min, max }
    }

    pub fn dim(&self) -> usize {
        self.min.len()
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.iter()
            .zip(self.min.iter().zip(&self.max))
            .all(|(x, (lo, hi))| *x >= *lo && *x <= *hi)
    }

    pub fn center(&self) -> Vec<f64> {
        self.min
            .iter()
            .zip(&self.max)
            .map(|(a, b)| 0.5 * (a + b))
            .collect()
    }
}

/// A set to measure: a finite point cloud or a union of segments/rays.
#[derive(Debug, Clone)]
pub enum GeometricSet {
    Points(Vec<Vec<f64>>),
    Segments(Vec<Segment>),
}

impl GeometricSet {
    pub fn from_curve(curve: &TropicalCurve) -> Self {
        GeometricSet::Segments(curve.segments())
    }

    /// Intersection with the window; clouds are filtered, segments clipped.
    fn restrict(&self, w: &Window) -> GeometricSet {
        match self {
            GeometricSet::Points(pts) => GeometricSet::Points(
                pts.iter().filter(|p| w.contains(p)).cloned().collect(),
            ),
            GeometricSet::Segments(segs) => GeometricSet::Segments(
                segs.iter()
                    .filter_map(|s| s.clip_to_box(&w.min, &w.max))
                    .collect(),
            ),
        }
    }

    fn is_empty(&self) -> bool {
        match self {
            GeometricSet::Points(p) => p.is_empty(),
            GeometricSet::Segments(s) => s.is_empty(),
        }
    }

    /// Exact distance from a point to the set.
    fn distance_from(&self, x: &[f64]) -> f64 {
        match self {
            GeometricSet::Points(pts) => pts
                .iter()
                .map(|p| dist_inf(x, p))
                .fold(f64::INFINITY, f64::min),
            GeometricSet::Segments(segs) => segs
                .iter()
                .map(|s| s.distance_inf(x).0)
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// Directed Hausdorff distance `sup_{x in self} d(x, other)`.
    fn directed_to(&self, other: &GeometricSet) -> f64 {
        match self {
            GeometricSet::Points(pts) => pts
                .iter()
                .map(|p| other.distance_from(p))
                .fold(0.0, f64::max),
            GeometricSet::Segments(segs) => segs
                .iter()
                .map(|s| {
                    let f = |p: &[f64]| other.distance_from(p);
                    sup_on_segment(s, &f, s.speed_inf(), SUP_TOL)
                })
                .fold(0.0, f64::max),
        }
    }
}

/// Hausdorff distance of two sets restricted to the window. Empty versus
/// non-empty intersection gives infinity; empty versus empty gives zero.
pub fn hausdorff_distance(a: &GeometricSet, b: &GeometricSet, w: &Window) -> f64 {
    let ra = a.restrict(w);
    let rb = b.restrict(w);
    match (ra.is_empty(), rb.is_empty()) {
        (true, true) => 0.0,
        (true, false) | (false, true) => f64::INFINITY,
        (false, false) => ra.directed_to(&rb).max(rb.directed_to(&ra)),
    }
}

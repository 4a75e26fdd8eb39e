//! Piecewise linear geometry under the supremum norm.
//!
//! Distances from points to segments and rays are minimized exactly: the
//! objective `t -> max_j |c_j + t*u_j|` is convex piecewise linear, so the
//! minimum over an interval is attained at an endpoint, a kink of one
//! coordinate, or a crossing of two coordinates. All candidates are
//! enumerated.

/// `max_j |a_j - b_j|`.
pub fn dist_inf(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn norm_inf(a: &[f64]) -> f64 {
    a.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

/// A segment `start + t * dir` for `t` in `[0, t_max]`; `t_max` may be
/// infinite (a ray). `dir` need not be normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub start: Vec<f64>,
    pub dir: Vec<f64>,
    pub t_max: f64,
}

impl Segment {
    pub fn between(a: &[f64], b: &[f64]) -> Self {
        Segment {
            start: a.to_vec(),
            dir: a.iter().zip(b).map(|(x, y)| y - x).collect(),
            t_max: 1.0,
        }
    }

    pub fn ray(start: &[f64], dir: &[f64]) -> Self {
        Segment {
            start: start.to_vec(),
            dir: dir.to_vec(),
            t_max: f64::INFINITY,
        }
    }

    pub fn at(&self, t: f64) -> Vec<f64> {
        self.start
            .iter()
            .zip(&self.dir)
            .map(|(s, d)| s + t * d)
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.start.len()
    }

    pub fn is_point(&self) -> bool {
        self.dir.iter().all(|&d| d == 0.0) || self.t_max == 0.0
    }

    /// Sup-norm distance from `x` to the segment, with the minimizing
    /// parameter.
    pub fn distance_inf(&self, x: &[f64]) -> (f64, f64) {
        debug_assert_eq!(x.len(), self.dim());
        let c: Vec<f64> = self.start.iter().zip(x).map(|(s, xi)| s - xi).collect();
        if self.is_point() {
            return (norm_inf(&c), 0.0);
        }
        let u = &self.dir;
        let mut candidates: Vec<f64> = vec![0.0];
        if self.t_max.is_finite() {
            candidates.push(self.t_max);
        }
        let n = c.len();
        for j in 0..n {
            if u[j] != 0.0 {
                candidates.push(-c[j] / u[j]);
            }
            for l in j + 1..n {
                // |c_j + t u_j| = |c_l + t u_l| at crossings of the two lines.
                let d1 = u[j] - u[l];
                if d1 != 0.0 {
                    candidates.push((c[l] - c[j]) / d1);
                }
                let d2 = u[j] + u[l];
                if d2 != 0.0 {
                    candidates.push(-(c[j] + c[l]) / d2);
                }
            }
        }
        let mut best = (f64::INFINITY, 0.0);
        for t in candidates {
            if !t.is_finite() {
                continue;
            }
            let t = t.clamp(0.0, self.t_max);
            let val = (0..n)
                .map(|j| (c[j] + t * u[j]).abs())
                .fold(0.0, f64::max);
            if val < best.0 {
                best = (val, t);
            }
        }
        best
    }

    /// Clip the segment to an axis-aligned box; `None` when disjoint.
    pub fn clip_to_box(&self, min: &[f64], max: &[f64]) -> Option<Segment> {
        let mut lo = 0.0f64;
        let mut hi = self.t_max;
        for j in 0..self.dim() {
            let s = self.start[j];
            let d = self.dir[j];
            if d == 0.0 {
                if s < min[j] || s > max[j] {
                    return None;
                }
            } else {
                let (mut t0, mut t1) = ((min[j] - s) / d, (max[j] - s) / d);
                if t0 > t1 {
                    std::mem::swap(&mut t0, &mut t1);
                }
                lo = lo.max(t0);
                hi = hi.min(t1);
            }
        }
        if lo > hi {
            return None;
        }
        let start = self.at(lo);
        Some(Segment {
            start,
            dir: self.dir.clone(),
            t_max: hi - lo,
        })
    }

    /// Sup-norm displacement covered per unit of parameter.
    pub fn speed_inf(&self) -> f64 {
        norm_inf(&self.dir)
    }

    /// Parameter-space length of the segment (finite segments only).
    pub fn extent(&self) -> f64 {
        self.t_max
    }
}

/// Minimum sup-norm distance from `x` to a collection of segments.
pub fn distance_to_segments(x: &[f64], segments: &[Segment]) -> f64 {
    segments
        .iter()
        .map(|s| s.distance_inf(x).0)
        .fold(f64::INFINITY, f64::min)
}

/// Supremum over a finite segment of `f`, certified via the Lipschitz bound
/// `lip` (per unit of the segment parameter): any interval whose endpoint
/// values plus `lip * len / 2` stay below the current best cannot contain the
/// supremum. Refines until the certified gap is below `tol`.
pub fn sup_on_segment<F: Fn(&[f64]) -> f64>(seg: &Segment, f: &F, lip: f64, tol: f64) -> f64 {
    assert!(seg.t_max.is_finite());
    let f0 = f(&seg.at(0.0));
    let f1 = f(&seg.at(seg.t_max));
    let mut best = f0.max(f1);
    if seg.t_max == 0.0 || lip == 0.0 {
        return best;
    }
    let mut stack = vec![(0.0f64, seg.t_max, f0, f1)];
    while let Some((a, b, fa, fb)) = stack.pop() {
        let potential = fa.max(fb) + lip * (b - a) / 2.0;
        if potential <= best + tol {
            continue;
        }
        let m = 0.5 * (a + b);
        let fm = f(&seg.at(m));
        best = best.max(fm);
        stack.push((a, m, fa, fm));
        stack.push((m, b, fm, fb));
    }
    best
}

/// Evenly spaced points along a finite segment with sup-norm spacing at most
/// `step` (endpoints included).
pub fn mesh_segment(seg: &Segment, step: f64) -> Vec<Vec<f64>> {
    if seg.is_point() || !seg.t_max.is_finite() {
        return vec![seg.start.clone()];
    }
    let total = seg.speed_inf() * seg.t_max;
    let pieces = (total / step).ceil().max(1.0) as usize;
    (0..=pieces)
        .map(|i| seg.at(seg.t_max * i as f64 / pieces as f64))
        .collect()
}

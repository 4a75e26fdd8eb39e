//! Spines for amoebas: the recursive construction for complex lines, the
//! general-degree construction through the torus factorization, and the
//! certified two-sided distance checks.
//!
//! The line construction is an induction over the coordinates. At each level
//! the line is projected, the spine of the projection is built, the closure
//! point `w` of the dropped puncture is mapped to `p = phi'(w)` on the
//! smaller spine, and the spine is modified along `p` at height `p_i`. The
//! approximation map evaluates per level: close to `p` it drops onto the new
//! downward end, otherwise it follows the graph of the modification.

use crate::complex::{ComplexLine, ComplexRationalCurve, SampleCloud};
use crate::degree::PsiMap;
use crate::epsilon::{epsilon, EpsilonConstant};
use crate::error::{Error, Result};
use crate::geometry::{dist_inf, mesh_segment};
use crate::tropical::{TropicalCurve, TropicalLine};
use num_complex::Complex64;
use rayon::prelude::*;

/// Relative slack for detecting evaluations that sit exactly on the case
/// threshold (realizable boundary hits are logged, not errors).
const BOUNDARY_TOL: f64 = 1e-12;

/// One induction level of the construction (levels 2..=n).
#[derive(Debug, Clone)]
pub struct SpineLevel {
    /// closure point of the dropped puncture, in the smaller torus
    pub w: Vec<Complex64>,
    /// p = phi'(w) on the previous level's line
    pub p: Vec<f64>,
    /// chosen local coordinate at p (smallest index)
    pub local_index: usize,
    /// case threshold 2*eps_{level-1} + log 2
    pub threshold: f64,
    /// the construction itself evaluated phi'(w) on the threshold boundary
    pub boundary_hit: bool,
}

/// Spine of a complex line: the tropical line, the evaluable approximation
/// map (through the stored levels) and the certified bound.
#[derive(Debug, Clone)]
pub struct Spine {
    line: ComplexLine,
    /// coordinatewise log-magnitudes of the original coefficients;
    /// the construction runs on the unit-coefficient line and translates back
    translation: Vec<f64>,
    levels: Vec<SpineLevel>,
    gamma: TropicalLine,
    calibrated: bool,
    eps: EpsilonConstant,
}

impl Spine {
    pub fn line(&self) -> &ComplexLine {
        &self.line
    }

    pub fn gamma(&self) -> &TropicalLine {
        &self.gamma
    }

    pub fn levels(&self) -> &[SpineLevel] {
        &self.levels
    }

    pub fn translation(&self) -> &[f64] {
        &self.translation
    }

    pub fn is_calibrated(&self) -> bool {
        self.calibrated
    }

    /// The bound `eps_n` certified by the construction.
    pub fn eps(&self) -> EpsilonConstant {
        self.eps
    }

    /// Construction-time boundary hits across levels.
    pub fn construction_boundary_hits(&self) -> usize {
        self.levels.iter().filter(|l| l.boundary_hit).count()
    }

    /// Evaluate the approximation map at a parameter; the result lies on the
    /// image of the spine and satisfies `|Log f(z) - phi(z)|_inf <= eps_n`.
    pub fn phi(&self, z: Complex64) -> Result<Vec<f64>> {
        Ok(self.phi_detailed(z)?.0)
    }

    /// Evaluate phi and report whether any level landed on the case
    /// threshold boundary.
    pub fn phi_detailed(&self, z: Complex64) -> Result<(Vec<f64>, bool)> {
        let unit = self.line.rescaled_to_unit();
        let logs = unit.log_magnitudes(z)?;
        let (mut phi, boundary) = phi_from_logs(&logs, &self.levels);
        for (v, t) in phi.iter_mut().zip(&self.translation) {
            *v += t;
        }
        Ok((phi, boundary))
    }
}

/// phi on the unit-coefficient line, from the log-magnitudes of the
/// coordinates. `logs[j] = log |q_{j+1}|`.
fn phi_from_logs(logs: &[f64], levels: &[SpineLevel]) -> (Vec<f64>, bool) {
    let mut phi = vec![logs[0]];
    let mut boundary = false;
    for level in levels {
        let lq = logs[phi.len()];
        let gap = phi
            .iter()
            .zip(&level.p)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let scale = 1.0f64.max(level.threshold);
        if (gap - level.threshold).abs() <= BOUNDARY_TOL * scale {
            boundary = true;
        }
        if gap <= level.threshold {
            // drop onto the downward end over p
            let p_i = level.p[level.local_index];
            phi = level.p.clone();
            phi.push(lq.min(p_i));
        } else {
            // follow the graph of mu(x) = max(x_i, p_i)
            let p_i = level.p[level.local_index];
            let mu = phi[level.local_index].max(p_i);
            phi.push(mu);
        }
    }
    (phi, boundary)
}

/// Build the spine of a complex line. Non-calibrated lines are handled by
/// rescaling the coefficients to one and translating the result back.
pub fn spine_line(line: &ComplexLine) -> Result<Spine> {
    let n = line.dim();
    let translation: Vec<f64> = line.coefficients().iter().map(|k| k.norm().ln()).collect();
    let unit = line.rescaled_to_unit();

    // punctures of every level: level m uses the first m coordinates
    let mut levels: Vec<SpineLevel> = Vec::with_capacity(n.saturating_sub(1));
    let mut gamma = TropicalLine::real_line(0.0);
    for m in 2..=n {
        let level_line = ComplexLine::new(
            unit.punctures()[..m].to_vec(),
            unit.coefficients()[..m].to_vec(),
        )?;
        let (_, w) = level_line.project()?;
        // w is the image of the parameter z = alpha_m on the level-(m-1) line
        let w_logs: Vec<f64> = w.iter().map(|v| v.norm().ln()).collect();
        let (p, boundary_hit) = phi_from_logs(&w_logs, &levels);
        let local = gamma.local_coordinates(&p)?;
        let local_index = *local.iter().next().ok_or_else(|| {
            Error::InvalidCurve("no local coordinate at the modification point".into())
        })?;
        let height = p[local_index];
        gamma = gamma.modify(&p, height)?;
        levels.push(SpineLevel {
            w,
            p,
            local_index,
            threshold: 2.0 * epsilon(m - 1).value() + std::f64::consts::LN_2,
            boundary_hit,
        });
    }

    let calibrated = line.is_calibrated();
    let gamma = if translation.iter().all(|&t| t == 0.0) {
        gamma
    } else {
        TropicalLine::from_curve(gamma.curve().translated(&translation))?
    };
    Ok(Spine {
        line: line.clone(),
        translation,
        levels,
        gamma,
        calibrated,
        eps: epsilon(n),
    })
}

/// Spine of a rational curve of non-degenerate toric degree: factor through
/// a line in the k-torus, build its spine, and push the tropical line
/// forward along the linear map. The certified bounds are
/// `eps' = eps_k * N` for the amoeba-in-neighbourhood direction and
/// `eps = k * eps'` for the reverse containment.
#[derive(Debug, Clone)]
pub struct GeneralSpine {
    curve: ComplexRationalCurve,
    psi: PsiMap,
    spine: Spine,
    image: TropicalCurve,
    eps_prime: EpsilonConstant,
    eps: EpsilonConstant,
}

impl GeneralSpine {
    pub fn curve(&self) -> &ComplexRationalCurve {
        &self.curve
    }

    pub fn psi(&self) -> &PsiMap {
        &self.psi
    }

    /// The upstream line spine in the k-torus.
    pub fn line_spine(&self) -> &Spine {
        &self.spine
    }

    /// The pushed-forward tropical curve in R^n.
    pub fn image(&self) -> &TropicalCurve {
        &self.image
    }

    pub fn eps_prime(&self) -> EpsilonConstant {
        self.eps_prime
    }

    pub fn eps(&self) -> EpsilonConstant {
        self.eps
    }

    /// phi on the upstream line followed by the linear map.
    pub fn phi(&self, z: Complex64) -> Result<Vec<f64>> {
        let up = self.spine.phi(z)?;
        self.psi.apply(&up)
    }
}

pub fn spine_general(curve: &ComplexRationalCurve) -> Result<GeneralSpine> {
    let psi = curve.degree().psi();
    if !psi.is_non_degenerate() {
        return Err(Error::DegenerateDegree {
            rank: psi.rank(),
            n: curve.degree().dim(),
        });
    }
    let line = curve.factor_through_line(&psi)?;
    let spine = spine_line(&line)?;
    let image = spine.gamma().curve().pushforward(&psi)?;
    let k = curve.degree().k() as u128;
    let eps_prime = epsilon(curve.degree().k()).scaled(psi.norm_inf_exact() as u128);
    let eps = eps_prime.scaled(k);
    Ok(GeneralSpine {
        curve: curve.clone(),
        psi,
        spine,
        image,
        eps_prime,
        eps,
    })
}

/// What a certification run checks against a sample cloud.
pub enum CertifyTarget<'a> {
    Line(&'a Spine),
    General(&'a GeneralSpine),
    /// A bare tropical curve with explicit bounds: (curve, cloud-to-curve
    /// bound, curve-to-cloud bound, vertex ball radius). No phi checks.
    Curve {
        curve: &'a TropicalCurve,
        bound_in: f64,
        bound_out: f64,
        ball_radius: f64,
    },
}

/// Options for the certification run.
#[derive(Debug, Clone)]
pub struct CertifyOptions {
    /// sup-norm spacing of the mesh on the tropical curve
    pub mesh_step: f64,
    /// slack added to the curve-to-cloud bound; `None` derives it as twice
    /// the empirical nearest-neighbour spacing of the cloud
    pub mesh_slack: Option<f64>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            mesh_step: 0.25,
            mesh_slack: None,
        }
    }
}

/// Report of the two-sided certification.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CertificationReport {
    /// bound for cloud-in-neighbourhood-of-curve (check i)
    pub bound_in: f64,
    /// bound for curve-in-neighbourhood-of-cloud (check ii)
    pub bound_out: f64,
    pub max_cloud_to_curve: f64,
    pub containment_ok: bool,
    pub mesh_step: f64,
    pub mesh_slack: f64,
    pub mesh_points: usize,
    /// no mesh points survived the window/ball filters
    pub mesh_vacuous: bool,
    pub max_mesh_to_cloud: f64,
    pub coverage_ok: bool,
    /// max |Log f(z) - phi(z)| over the cloud parameters (line level)
    pub max_phi_residual: Option<f64>,
    pub phi_bound: Option<f64>,
    pub phi_ok: Option<bool>,
    /// max distance of phi outputs to the spine image
    pub max_phi_off_image: Option<f64>,
    /// max |Log f(z) - h(phi(z))| for general spines
    pub max_pushforward_residual: Option<f64>,
    pub pushforward_bound: Option<f64>,
    pub pushforward_ok: Option<bool>,
    pub boundary_hits: usize,
    pub passed: bool,
}

/// Run the two-sided certification of a spine (or bare curve) against a
/// sample cloud.
///
/// (i)  every cloud point is within `bound_in` of the curve;
/// (ii) every mesh point of the curve inside the cloud's bounding window and
///      outside the vertex balls is within `bound_out + slack` of the cloud;
/// (iii) for spines, phi residuals stay within the construction bound.
pub fn certify(
    target: CertifyTarget<'_>,
    cloud: &SampleCloud,
    opts: &CertifyOptions,
) -> Result<CertificationReport> {
    if cloud.is_empty() {
        return Err(Error::EmptyCloud);
    }
    let (curve, bound_in, bound_out, ball_radius) = match &target {
        CertifyTarget::Line(spine) => {
            let eps = spine.eps().value();
            (spine.gamma().curve(), eps, eps, eps)
        }
        CertifyTarget::General(gs) => (
            gs.image(),
            gs.eps_prime().value(),
            gs.eps().value(),
            gs.eps().value(),
        ),
        CertifyTarget::Curve {
            curve,
            bound_in,
            bound_out,
            ball_radius,
        } => (*curve, *bound_in, *bound_out, *ball_radius),
    };

    // (i) cloud -> curve
    let segments = curve.segments();
    let max_cloud_to_curve = cloud
        .points
        .par_iter()
        .map(|p| {
            segments
                .iter()
                .map(|s| s.distance_inf(p).0)
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| 0.0, f64::max);
    let containment_ok = max_cloud_to_curve <= bound_in;

    // (ii) curve mesh -> cloud
    let (win_min, win_max) = cloud.bounding_box();
    let mesh_slack = opts
        .mesh_slack
        .unwrap_or_else(|| 2.0 * nearest_neighbour_spacing(&cloud.points));
    let vertices: Vec<&[f64]> = (0..curve.tree().vertex_count())
        .map(|v| curve.position(v))
        .collect();
    let mut mesh: Vec<Vec<f64>> = Vec::new();
    for seg in &segments {
        if let Some(clipped) = seg.clip_to_box(&win_min, &win_max) {
            for pt in mesh_segment(&clipped, opts.mesh_step) {
                if vertices.iter().all(|v| dist_inf(&pt, v) >= ball_radius) {
                    mesh.push(pt);
                }
            }
        }
    }
    let max_mesh_to_cloud = mesh
        .par_iter()
        .map(|m| {
            cloud
                .points
                .iter()
                .map(|p| dist_inf(m, p))
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| 0.0, f64::max);
    let mesh_vacuous = mesh.is_empty();
    let coverage_ok = mesh_vacuous || max_mesh_to_cloud <= bound_out + mesh_slack;

    // (iii) phi residuals over the cloud parameters
    let mut max_phi_residual = None;
    let mut phi_bound = None;
    let mut phi_ok = None;
    let mut max_phi_off_image = None;
    let mut max_pushforward_residual = None;
    let mut pushforward_bound = None;
    let mut pushforward_ok = None;
    let mut boundary_hits = 0usize;

    match &target {
        CertifyTarget::Line(spine) => {
            let strict = spine.line().dim() >= 2;
            let line_curve = spine.line().as_curve();
            let stats: Vec<(f64, f64, bool)> = cloud
                .parameters
                .par_iter()
                .map(|&z| {
                    let (phi, boundary) = spine.phi_detailed(z).expect("cloud parameter");
                    let logf = line_curve.log_image(z).expect("cloud parameter");
                    let resid = dist_inf(&phi, &logf);
                    let off = spine.gamma().curve().distance_to_image(&phi);
                    (resid, off, boundary)
                })
                .collect();
            let max_resid = stats.iter().map(|s| s.0).fold(0.0, f64::max);
            let max_off = stats.iter().map(|s| s.1).fold(0.0, f64::max);
            boundary_hits = stats.iter().filter(|s| s.2).count()
                + spine.construction_boundary_hits();
            let bound = spine.eps().value();
            max_phi_residual = Some(max_resid);
            phi_bound = Some(bound);
            phi_ok = Some(if strict {
                max_resid < bound
            } else {
                max_resid <= bound
            });
            max_phi_off_image = Some(max_off);
        }
        CertifyTarget::General(gs) => {
            let spine = gs.line_spine();
            let line_curve = spine.line().as_curve();
            let stats: Vec<(f64, f64, f64, bool)> = cloud
                .parameters
                .par_iter()
                .map(|&z| {
                    let (phi, boundary) = spine.phi_detailed(z).expect("cloud parameter");
                    let log_l = line_curve.log_image(z).expect("cloud parameter");
                    let resid = dist_inf(&phi, &log_l);
                    let off = spine.gamma().curve().distance_to_image(&phi);
                    let h_phi = gs.psi().apply(&phi).expect("matching dims");
                    let log_f = gs.curve().log_image(z).expect("cloud parameter");
                    let push_resid = dist_inf(&h_phi, &log_f);
                    (resid, off, push_resid, boundary)
                })
                .collect();
            let max_resid = stats.iter().map(|s| s.0).fold(0.0, f64::max);
            let max_off = stats.iter().map(|s| s.1).fold(0.0, f64::max);
            let max_push = stats.iter().map(|s| s.2).fold(0.0, f64::max);
            boundary_hits = stats.iter().filter(|s| s.3).count()
                + spine.construction_boundary_hits();
            let bound = spine.eps().value();
            max_phi_residual = Some(max_resid);
            phi_bound = Some(bound);
            phi_ok = Some(max_resid < bound || spine.line().dim() < 2);
            max_phi_off_image = Some(max_off);
            max_pushforward_residual = Some(max_push);
            pushforward_bound = Some(gs.eps_prime().value());
            pushforward_ok = Some(max_push <= gs.eps_prime().value());
        }
        CertifyTarget::Curve { .. } => {}
    }

    let passed = containment_ok
        && coverage_ok
        && phi_ok.unwrap_or(true)
        && pushforward_ok.unwrap_or(true);

    Ok(CertificationReport {
        bound_in,
        bound_out,
        max_cloud_to_curve,
        containment_ok,
        mesh_step: opts.mesh_step,
        mesh_slack,
        mesh_points: mesh.len(),
        mesh_vacuous,
        max_mesh_to_cloud: if mesh_vacuous { 0.0 } else { max_mesh_to_cloud },
        coverage_ok,
        max_phi_residual,
        phi_bound,
        phi_ok,
        max_phi_off_image,
        max_pushforward_residual,
        pushforward_bound,
        pushforward_ok,
        boundary_hits,
        passed,
    })
}

/// Empirical nearest-neighbour spacing: the maximum over a deterministic
/// subsample of the distance to the nearest other cloud point.
fn nearest_neighbour_spacing(points: &[Vec<f64>]) -> f64 {
    if points.len() < 2 {
        return 0.0;
    }
    let stride = (points.len() / 512).max(1);
    points
        .par_iter()
        .step_by(stride)
        .enumerate()
        .map(|(chunk_idx, p)| {
            let i = chunk_idx * stride;
            points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| dist_inf(p, q))
                .fold(f64::INFINITY, f64::min)
        })
        .reduce(|| 0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{sample_amoeba, SamplingScheme};
    use crate::geometry::dist_inf;

    fn line_z_zp1() -> ComplexLine {
        ComplexLine::new(
            vec![Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)],
            vec![Complex64::new(1.0, 0.0); 2],
        )
        .unwrap()
    }

    fn figure_line() -> ComplexLine {
        ComplexLine::new(
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, 2.0),
            ],
            vec![Complex64::new(1.0, 0.0); 3],
        )
        .unwrap()
    }

    #[test]
    fn base_case_phi_is_log() {
        let line = ComplexLine::new(
            vec![Complex64::new(0.0, 0.0)],
            vec![Complex64::new(1.0, 0.0)],
        )
        .unwrap();
        let spine = spine_line(&line).unwrap();
        assert_eq!(spine.eps().multiplier(), 0);
        for z in [
            Complex64::new(2.0, 1.0),
            Complex64::new(-0.01, 0.003),
            Complex64::new(1e6, 0.0),
        ] {
            let phi = spine.phi(z).unwrap();
            assert!((phi[0] - z.norm().ln()).abs() < 1e-15);
        }
    }

    #[test]
    fn spine_of_z_zp1_is_standard_line() {
        let spine = spine_line(&line_z_zp1()).unwrap();
        assert!(spine.is_calibrated());
        assert_eq!(spine.gamma().curve().tree().vertex_count(), 1);
        assert!(dist_inf(spine.gamma().curve().position(0), &[0.0, 0.0]) < 1e-15);
        assert_eq!(spine.eps().multiplier(), 2);
    }

    #[test]
    fn phi_large_parameter_lands_on_diagonal() {
        let spine = spine_line(&line_z_zp1()).unwrap();
        let z = Complex64::new(1e6, 0.0);
        let phi = spine.phi(z).unwrap();
        let logf = spine.line().as_curve().log_image(z).unwrap();
        assert!(dist_inf(&phi, &logf) < spine.eps().value());
        assert!((phi[0] - phi[1]).abs() < 1e-9, "on the diagonal ray");
        assert!((phi[0] - (1e6f64).ln()).abs() < 1e-3);
    }

    #[test]
    fn phi_small_parameter_lands_on_first_ray() {
        let spine = spine_line(&line_z_zp1()).unwrap();
        let z = Complex64::new(1e-7, 0.0);
        let phi = spine.phi(z).unwrap();
        // on the -e_1 ray: second coordinate 0
        assert!(phi[1].abs() < 1e-12);
        assert!(phi[0] < -10.0);
    }

    #[test]
    fn figure_line_boundary_resolves_to_four_valent_vertex() {
        // phi'(w) at level 3 sits exactly on the case threshold; the
        // non-strict comparison takes the first case, so p = (0,0) and the
        // modification happens at the vertex.
        let spine = spine_line(&figure_line()).unwrap();
        assert!(spine.is_calibrated());
        assert_eq!(spine.gamma().curve().tree().vertex_count(), 1);
        assert_eq!(spine.gamma().curve().tree().valence(0), 4);
        assert!(dist_inf(spine.gamma().curve().position(0), &[0.0, 0.0, 0.0]) < 1e-12);
        assert!(spine.construction_boundary_hits() >= 1);
        assert_eq!(spine.eps().multiplier(), 8);
    }

    #[test]
    fn noncalibrated_line_translates() {
        let line = ComplexLine::new(
            vec![Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)],
            vec![Complex64::new(std::f64::consts::E, 0.0), Complex64::new(1.0, 0.0)],
        )
        .unwrap();
        let spine = spine_line(&line).unwrap();
        assert!(!spine.is_calibrated());
        // vertex translated by (1, 0)
        assert!(dist_inf(spine.gamma().curve().position(0), &[1.0, 0.0]) < 1e-15);
        // residual bound still holds
        let z = Complex64::new(3.0, 0.5);
        let phi = spine.phi(z).unwrap();
        let logf = line.as_curve().log_image(z).unwrap();
        assert!(dist_inf(&phi, &logf) <= spine.eps().value());
    }

    #[test]
    fn certify_z_zp1_passes() {
        let line = line_z_zp1();
        let spine = spine_line(&line).unwrap();
        let scheme = SamplingScheme {
            radii: 32,
            angles: 16,
            ..SamplingScheme::default()
        };
        let cloud = sample_amoeba(&line.as_curve(), &scheme).unwrap();
        let report = certify(
            CertifyTarget::Line(&spine),
            &cloud,
            &CertifyOptions::default(),
        )
        .unwrap();
        assert!(report.containment_ok, "{report:?}");
        assert!(report.coverage_ok, "{report:?}");
        assert_eq!(report.phi_ok, Some(true));
        assert!(report.max_phi_residual.unwrap() < 2.0 * std::f64::consts::LN_2);
        assert!(report.max_phi_off_image.unwrap() < 1e-10);
        assert!(report.passed);
    }

    #[test]
    fn certify_flags_translated_curve() {
        let line = line_z_zp1();
        let spine = spine_line(&line).unwrap();
        let scheme = SamplingScheme {
            radii: 16,
            angles: 8,
            ..SamplingScheme::default()
        };
        let cloud = sample_amoeba(&line.as_curve(), &scheme).unwrap();
        let shifted = spine.gamma().curve().translated(&[10.0, 10.0]);
        let eps = spine.eps().value();
        let report = certify(
            CertifyTarget::Curve {
                curve: &shifted,
                bound_in: eps,
                bound_out: eps,
                ball_radius: eps,
            },
            &cloud,
            &CertifyOptions::default(),
        )
        .unwrap();
        assert!(!report.containment_ok);
        assert!(!report.passed);
    }

    #[test]
    fn general_spine_line_degree_reduces_to_line() {
        let line = line_z_zp1();
        let gs = spine_general(&line.as_curve()).unwrap();
        assert_eq!(gs.eps_prime().multiplier(), 2);
        assert_eq!(gs.eps().multiplier(), 4);
        assert!(dist_inf(gs.image().position(0), &[0.0, 0.0]) < 1e-15);
    }

    #[test]
    fn general_spine_constant_arithmetic() {
        // N = 2, k = 3: eps' = 2 * eps_3 = 16 log2, eps = 48 log2
        let degree = crate::degree::ToricDegree::new(vec![
            vec![2, 2],
            vec![0, -2],
            vec![-1, 0],
            vec![-1, 0],
        ])
        .unwrap();
        let psi = degree.psi();
        assert_eq!(psi.norm_inf_exact(), 2);
        let curve = ComplexRationalCurve::new(
            degree,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 1.0),
            ],
            vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
        )
        .unwrap();
        let gs = spine_general(&curve).unwrap();
        assert_eq!(gs.eps_prime().multiplier(), 16);
        assert_eq!(gs.eps().multiplier(), 48);
        assert_eq!(gs.eps_prime().exact_string(), "16*log2");
    }
}

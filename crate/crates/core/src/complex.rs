//! Parametrized rational complex curves in the torus, evaluation in
//! log-polar form, amoeba sampling and the projection machinery used by the
//! spine induction.

use crate::degree::{PsiMap, ToricDegree};
use crate::error::{Error, Result};
use num_complex::Complex64;

const MIN_PUNCTURE_SEPARATION: f64 = 1e-9;

/// A complex line `z -> (kappa_1 (z - a_1), ..., kappa_n (z - a_n))` with the
/// puncture `a_0` fixed at infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexLine {
    punctures: Vec<Complex64>,
    coefficients: Vec<Complex64>,
}

impl ComplexLine {
    pub fn new(punctures: Vec<Complex64>, coefficients: Vec<Complex64>) -> Result<Self> {
        if punctures.len() != coefficients.len() || punctures.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: punctures.len().max(1),
                got: coefficients.len(),
            });
        }
        check_punctures(&punctures)?;
        for (j, k) in coefficients.iter().enumerate() {
            if k.norm_sqr() == 0.0 {
                return Err(Error::ZeroCoefficient { index: j });
            }
        }
        Ok(ComplexLine {
            punctures,
            coefficients,
        })
    }

    pub fn dim(&self) -> usize {
        self.punctures.len()
    }

    pub fn punctures(&self) -> &[Complex64] {
        &self.punctures
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// Exact equality of all coefficients.
    pub fn is_calibrated(&self) -> bool {
        self.coefficients.iter().all(|k| *k == self.coefficients[0])
    }

    /// The same line with all coefficients set to one; the image differs by
    /// the torus translation with the original coefficients.
    pub fn rescaled_to_unit(&self) -> ComplexLine {
        ComplexLine {
            punctures: self.punctures.clone(),
            coefficients: vec![Complex64::new(1.0, 0.0); self.dim()],
        }
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Vec<Complex64>> {
        self.check_parameter(z)?;
        Ok(self
            .punctures
            .iter()
            .zip(&self.coefficients)
            .map(|(a, k)| k * (z - a))
            .collect())
    }

    /// `log |f_j(z)|` for all coordinates.
    pub fn log_magnitudes(&self, z: Complex64) -> Result<Vec<f64>> {
        self.check_parameter(z)?;
        Ok(self
            .punctures
            .iter()
            .zip(&self.coefficients)
            .map(|(a, k)| k.norm().ln() + (z - a).norm().ln())
            .collect())
    }

    fn check_parameter(&self, z: Complex64) -> Result<()> {
        for (i, a) in self.punctures.iter().enumerate() {
            if z == *a {
                return Err(Error::AtPuncture { index: i });
            }
        }
        Ok(())
    }

    /// Drop the last coordinate; returns the projected line and the closure
    /// point `w` corresponding to the puncture `a_n`, i.e. the image of
    /// `z = a_n` under the first n-1 coordinates.
    pub fn project(&self) -> Result<(ComplexLine, Vec<Complex64>)> {
        let n = self.dim();
        if n < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: n,
            });
        }
        let a_n = self.punctures[n - 1];
        let w: Vec<Complex64> = (0..n - 1)
            .map(|i| self.coefficients[i] * (a_n - self.punctures[i]))
            .collect();
        let projected = ComplexLine {
            punctures: self.punctures[..n - 1].to_vec(),
            coefficients: self.coefficients[..n - 1].to_vec(),
        };
        Ok((projected, w))
    }

    /// View as a rational curve of degree `Delta_n`.
    pub fn as_curve(&self) -> ComplexRationalCurve {
        ComplexRationalCurve {
            degree: ToricDegree::line(self.dim()),
            punctures: self.punctures.clone(),
            coefficients: self.coefficients.clone(),
        }
    }
}

/// A rational curve `z_j o f = kappa_j * prod_i (z - a_i)^{-d_i^j}` of a
/// given toric degree, punctures `a_1..a_k` finite and `a_0` at infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexRationalCurve {
    degree: ToricDegree,
    punctures: Vec<Complex64>,
    coefficients: Vec<Complex64>,
}

impl ComplexRationalCurve {
    pub fn new(
        degree: ToricDegree,
        punctures: Vec<Complex64>,
        coefficients: Vec<Complex64>,
    ) -> Result<Self> {
        if punctures.len() != degree.k() {
            return Err(Error::DimensionMismatch {
                expected: degree.k(),
                got: punctures.len(),
            });
        }
        if coefficients.len() != degree.dim() {
            return Err(Error::DimensionMismatch {
                expected: degree.dim(),
                got: coefficients.len(),
            });
        }
        check_punctures(&punctures)?;
        for (j, k) in coefficients.iter().enumerate() {
            if k.norm_sqr() == 0.0 {
                return Err(Error::ZeroCoefficient { index: j });
            }
        }
        Ok(ComplexRationalCurve {
            degree,
            punctures,
            coefficients,
        })
    }

    pub fn degree(&self) -> &ToricDegree {
        &self.degree
    }

    pub fn dim(&self) -> usize {
        self.degree.dim()
    }

    pub fn punctures(&self) -> &[Complex64] {
        &self.punctures
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    fn check_parameter(&self, z: Complex64) -> Result<()> {
        for (i, a) in self.punctures.iter().enumerate() {
            if z == *a {
                return Err(Error::AtPuncture { index: i });
            }
        }
        Ok(())
    }

    /// Evaluate in log-polar form: `(log |f_j|, arg f_j)` per coordinate.
    /// Keeps large exponents stable near the punctures.
    pub fn evaluate_log_polar(&self, z: Complex64) -> Result<Vec<(f64, f64)>> {
        self.check_parameter(z)?;
        let n = self.dim();
        let k = self.degree.k();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let mut log_mag = self.coefficients[j].norm().ln();
            let mut arg = self.coefficients[j].arg();
            for i in 0..k {
                let exp = -self.degree.vector(i + 1)[j] as f64;
                let w = z - self.punctures[i];
                log_mag += exp * w.norm().ln();
                arg += exp * w.arg();
            }
            out.push((log_mag, arg));
        }
        Ok(out)
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Vec<Complex64>> {
        Ok(self
            .evaluate_log_polar(z)?
            .into_iter()
            .map(|(m, a)| Complex64::from_polar(m.exp(), a))
            .collect())
    }

    /// `Log f(z)`, coordinatewise log of the magnitudes.
    pub fn log_image(&self, z: Complex64) -> Result<Vec<f64>> {
        Ok(self
            .evaluate_log_polar(z)?
            .into_iter()
            .map(|(m, _)| m)
            .collect())
    }

    /// Recover the toric degree numerically from vanishing orders (slope of
    /// `log |f_j|` against the log-distance to each puncture, and against
    /// `log |z|` at infinity) and verify it against the stored degree.
    pub fn recover_degree(&self) -> Result<ToricDegree> {
        let n = self.dim();
        let k = self.degree.k();
        let tol = 1e-3;
        for i in 0..k {
            let gap = self.puncture_gap(i);
            let (r1, r2) = (1e-7 * gap, 1e-8 * gap);
            let theta = 0.37;
            let dir = Complex64::from_polar(1.0, theta);
            let f1 = self.evaluate_log_polar(self.punctures[i] + r1 * dir)?;
            let f2 = self.evaluate_log_polar(self.punctures[i] + r2 * dir)?;
            for j in 0..n {
                let slope = (f1[j].0 - f2[j].0) / (r1.ln() - r2.ln());
                let expected = -self.degree.vector(i + 1)[j];
                if (slope - expected as f64).abs() > tol {
                    return Err(Error::DegreeMismatch {
                        puncture: i + 1,
                        coordinate: j,
                        expected,
                        got: slope,
                    });
                }
            }
        }
        // behaviour at infinity gives the 0-th vector
        let scale = self
            .punctures
            .iter()
            .map(|a| a.norm())
            .fold(1.0, f64::max);
        let (r1, r2) = (1e7 * scale, 1e8 * scale);
        let dir = Complex64::from_polar(1.0, 0.41);
        let f1 = self.evaluate_log_polar(r1 * dir)?;
        let f2 = self.evaluate_log_polar(r2 * dir)?;
        for j in 0..n {
            let slope = (f1[j].0 - f2[j].0) / (r1.ln() - r2.ln());
            let expected = self.degree.vector(0)[j];
            if (slope - expected as f64).abs() > tol {
                return Err(Error::DegreeMismatch {
                    puncture: 0,
                    coordinate: j,
                    expected,
                    got: slope,
                });
            }
        }
        Ok(self.degree.clone())
    }

    /// Half the minimal distance from puncture `i` (0-based among the finite
    /// punctures) to the other punctures; 1/2 when there are none.
    pub fn puncture_gap(&self, i: usize) -> f64 {
        let mut gap = f64::INFINITY;
        for (j, a) in self.punctures.iter().enumerate() {
            if j != i {
                gap = gap.min((a - self.punctures[i]).norm());
            }
        }
        if gap.is_finite() {
            gap / 2.0
        } else {
            0.5
        }
    }

    /// Factor the curve through a complex line in the k-torus: a line with
    /// the same punctures whose coefficients are a torus preimage of ours.
    pub fn factor_through_line(&self, psi: &PsiMap) -> Result<ComplexLine> {
        let lambda = psi.torus_preimage(&self.coefficients)?;
        ComplexLine::new(self.punctures.clone(), lambda)
    }
}

fn check_punctures(punctures: &[Complex64]) -> Result<()> {
    for i in 0..punctures.len() {
        for j in i + 1..punctures.len() {
            let sep = (punctures[i] - punctures[j]).norm();
            if sep <= MIN_PUNCTURE_SEPARATION {
                return Err(Error::PuncturesTooClose {
                    i: i + 1,
                    j: j + 1,
                    separation: sep,
                });
            }
        }
    }
    Ok(())
}

/// Coordinatewise `log |.|`, divided by `log t` when `t` is given.
pub fn log_map(p: &[Complex64], t: Option<f64>) -> Result<Vec<f64>> {
    let scale = match t {
        Some(t) => {
            assert!(t > 1.0, "Log_t requires t > 1");
            t.ln()
        }
        None => 1.0,
    };
    p.iter()
        .enumerate()
        .map(|(i, z)| {
            if z.norm_sqr() == 0.0 {
                Err(Error::ZeroCoordinate { index: i })
            } else {
                Ok(z.norm().ln() / scale)
            }
        })
        .collect()
}

/// Deterministic per-puncture log-radial sampling scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingScheme {
    pub radii: usize,
    pub angles: usize,
    /// radius range relative to the local puncture gap
    pub r_min: f64,
    pub r_max: f64,
}

impl Default for SamplingScheme {
    fn default() -> Self {
        SamplingScheme {
            radii: 64,
            angles: 64,
            r_min: 1e-6,
            r_max: 1e6,
        }
    }
}

impl SamplingScheme {
    fn validate(&self) -> Result<()> {
        if self.radii < 1 || self.angles < 1 {
            return Err(Error::BadScheme("counts must be at least 1".into()));
        }
        if !(self.r_min > 0.0) || !(self.r_max >= self.r_min) {
            return Err(Error::BadScheme(format!(
                "invalid radius range [{}, {}]",
                self.r_min, self.r_max
            )));
        }
        Ok(())
    }
}

/// A deterministic sample of the amoeba: parameters z with their log-images.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleCloud {
    pub scheme: SamplingScheme,
    pub parameters: Vec<Complex64>,
    pub points: Vec<Vec<f64>>,
}

impl SampleCloud {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Axis-aligned bounding box of the cloud.
    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let n = self.points[0].len();
        let mut min = vec![f64::INFINITY; n];
        let mut max = vec![f64::NEG_INFINITY; n];
        for p in &self.points {
            for j in 0..n {
                min[j] = min[j].min(p[j]);
                max[j] = max[j].max(p[j]);
            }
        }
        (min, max)
    }
}

/// Sample the amoeba of a curve: log-spaced circles around every finite
/// puncture (radius range scaled by the local puncture gap) plus large
/// circles for the puncture at infinity. Deterministic for a fixed scheme.
pub fn sample_amoeba(
    curve: &ComplexRationalCurve,
    scheme: &SamplingScheme,
) -> Result<SampleCloud> {
    scheme.validate()?;
    let mut parameters = Vec::new();
    let mut points = Vec::new();
    let mut push = |z: Complex64, curve: &ComplexRationalCurve| {
        if let Ok(img) = curve.log_image(z) {
            if img.iter().all(|x| x.is_finite()) {
                parameters.push(z);
                points.push(img);
            }
        }
    };
    for (i, alpha) in curve.punctures().iter().enumerate() {
        let gap = curve.puncture_gap(i);
        sample_circles(*alpha, scheme.r_min * gap, scheme.r_max * gap, scheme, |z| {
            push(z, curve)
        });
    }
    // circles |z| = R for the puncture at infinity
    let outer = curve
        .punctures()
        .iter()
        .map(|a| a.norm())
        .fold(0.0, f64::max)
        .max(0.5)
        * 2.0;
    sample_circles(
        Complex64::new(0.0, 0.0),
        outer,
        outer * scheme.r_max,
        scheme,
        |z| push(z, curve),
    );
    if points.is_empty() {
        return Err(Error::EmptyCloud);
    }
    Ok(SampleCloud {
        scheme: scheme.clone(),
        parameters,
        points,
    })
}

fn sample_circles<F: FnMut(Complex64)>(
    center: Complex64,
    r_lo: f64,
    r_hi: f64,
    scheme: &SamplingScheme,
    mut emit: F,
) {
    let (log_lo, log_hi) = (r_lo.ln(), r_hi.ln());
    for ri in 0..scheme.radii {
        let frac = if scheme.radii == 1 {
            0.5
        } else {
            ri as f64 / (scheme.radii - 1) as f64
        };
        let r = (log_lo + frac * (log_hi - log_lo)).exp();
        for ai in 0..scheme.angles {
            let theta = 2.0 * std::f64::consts::PI * ai as f64 / scheme.angles as f64;
            emit(center + Complex64::from_polar(r, theta));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn figure_line() -> ComplexLine {
        // z -> (z, z+1, z-2i)
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
    fn evaluate_figure_line() {
        let line = figure_line();
        let v = line.evaluate(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((v[1] - Complex64::new(2.0, 0.0)).norm() < 1e-15);
        assert!((v[2] - Complex64::new(1.0, -2.0)).norm() < 1e-15);
        assert!(line.is_calibrated());
    }

    #[test]
    fn evaluate_rejects_puncture() {
        let line = figure_line();
        assert!(matches!(
            line.evaluate(Complex64::new(-1.0, 0.0)),
            Err(Error::AtPuncture { index: 1 })
        ));
    }

    #[test]
    fn unit_magnitudes_on_unit_circles() {
        // kappa = 1 and |z - a_i| = 1 for all i forces |f_j| = 1; the unit
        // circles around 1 and -1 meet at z = 0.
        let degree = ToricDegree::new(vec![vec![2, 0], vec![-1, 1], vec![-1, -1]]).unwrap();
        let curve = ComplexRationalCurve::new(
            degree,
            vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
            vec![Complex64::new(1.0, 0.0); 2],
        )
        .unwrap();
        let img = curve.log_image(Complex64::new(0.0, 0.0)).unwrap();
        for x in img {
            assert!(x.abs() < 1e-12);
        }
    }

    #[test]
    fn vanishing_order_slope() {
        // d_1 = (-2, 1): |f_1| ~ |z - a_1|^2 near a_1
        let degree = ToricDegree::new(vec![vec![2, -1], vec![-2, 1]]).unwrap();
        let curve = ComplexRationalCurve::new(
            degree,
            vec![Complex64::new(0.5, 0.5)],
            vec![Complex64::new(3.0, 0.0), Complex64::new(0.0, 1.0)],
        )
        .unwrap();
        let a = curve.punctures()[0];
        let f1 = curve
            .evaluate_log_polar(a + Complex64::new(1e-6, 0.0))
            .unwrap();
        let f2 = curve
            .evaluate_log_polar(a + Complex64::new(1e-7, 0.0))
            .unwrap();
        let slope = (f1[0].0 - f2[0].0) / ((1e-6f64).ln() - (1e-7f64).ln());
        assert!((slope - 2.0).abs() < 1e-3);
        assert!(curve.recover_degree().is_ok());
    }

    #[test]
    fn recover_degree_random_curves() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut tested = 0;
        while tested < 100 {
            let n = rng.gen_range(1..4usize);
            let k = rng.gen_range(1..6usize);
            let mut vectors = vec![vec![0i64; n]];
            let mut sum = vec![0i64; n];
            for _ in 0..k {
                let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3i64)).collect();
                for (s, &x) in sum.iter_mut().zip(&v) {
                    *s += x;
                }
                vectors.push(v);
            }
            vectors[0] = sum.iter().map(|&s| -s).collect();
            let degree = ToricDegree::new(vectors).unwrap();
            let punctures: Vec<Complex64> = (0..k)
                .map(|i| Complex64::new(i as f64 * 2.0 - 3.0, rng.gen_range(-2.0..2.0)))
                .collect();
            let coefficients: Vec<Complex64> = (0..n)
                .map(|_| Complex64::from_polar(rng.gen_range(0.2..5.0), rng.gen_range(-3.0..3.0)))
                .collect();
            let curve = match ComplexRationalCurve::new(degree, punctures, coefficients) {
                Ok(c) => c,
                Err(_) => continue,
            };
            tested += 1;
            assert!(curve.recover_degree().is_ok());
        }
    }

    #[test]
    fn project_figure_line() {
        let line = figure_line();
        let (proj, w) = line.project().unwrap();
        assert_eq!(proj.dim(), 2);
        // w = (2i, 2i + 1)
        assert!((w[0] - Complex64::new(0.0, 2.0)).norm() < 1e-15);
        assert!((w[1] - Complex64::new(1.0, 2.0)).norm() < 1e-15);
        assert!((w[0].norm() - 2.0).abs() < 1e-15);
        assert!((w[1].norm() - 5.0f64.sqrt()).abs() < 1e-15);
        assert!(proj.is_calibrated());
    }

    #[test]
    fn project_two_coordinate_line() {
        // (z, z+1): w = (-1)
        let line = ComplexLine::new(
            vec![Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)],
            vec![Complex64::new(1.0, 0.0); 2],
        )
        .unwrap();
        let (_, w) = line.project().unwrap();
        assert!((w[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn calibrated_projection_relation() {
        // z_n = z_i - w_i identically for calibrated lines
        let line = figure_line();
        let (_, w) = line.project().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let z = Complex64::new(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
            let v = match line.evaluate(z) {
                Ok(v) => v,
                Err(_) => continue,
            };
            for i in 0..2 {
                assert!((v[2] - (v[i] - w[i])).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn log_map_examples() {
        let ones = vec![Complex64::new(1.0, 0.0); 3];
        assert_eq!(log_map(&ones, None).unwrap(), vec![0.0; 3]);
        let p = vec![
            Complex64::new(std::f64::consts::E, 0.0),
            Complex64::new(0.0, (2.0f64 * 1.0).exp()),
        ];
        let lm = log_map(&p, None).unwrap();
        assert!((lm[0] - 1.0).abs() < 1e-15);
        assert!((lm[1] - 2.0).abs() < 1e-15);
        let scaled = log_map(&p, Some(std::f64::consts::E.powi(2))).unwrap();
        assert!((scaled[0] - 0.5).abs() < 1e-15);
        assert!((scaled[1] - 1.0).abs() < 1e-15);
        assert!(matches!(
            log_map(&[Complex64::new(0.0, 0.0)], None),
            Err(Error::ZeroCoordinate { index: 0 })
        ));
    }

    #[test]
    fn sampling_is_deterministic_and_member_of_amoeba() {
        // line (z, z+1): amoeba of 1 + z_1 - z_2 = 0 is characterized by the
        // triangle inequalities on (|z_1|, |z_2|, 1).
        let line = ComplexLine::new(
            vec![Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)],
            vec![Complex64::new(1.0, 0.0); 2],
        )
        .unwrap()
        .as_curve();
        let scheme = SamplingScheme {
            radii: 16,
            angles: 16,
            ..SamplingScheme::default()
        };
        let cloud = sample_amoeba(&line, &scheme).unwrap();
        let cloud2 = sample_amoeba(&line, &scheme).unwrap();
        assert_eq!(cloud, cloud2);
        for p in &cloud.points {
            let (m1, m2) = (p[0].exp(), p[1].exp());
            assert!(m2 <= m1 + 1.0 + 1e-9);
            assert!(m1 <= m2 + 1.0 + 1e-9);
            assert!(1.0 <= m1 + m2 + 1e-9);
        }
    }

    #[test]
    fn sampling_covers_log_range_in_dim_one() {
        // n = 1, image C^*: log-values cover a symmetric range with bounded gaps
        let curve = ComplexLine::new(
            vec![Complex64::new(0.0, 0.0)],
            vec![Complex64::new(1.0, 0.0)],
        )
        .unwrap()
        .as_curve();
        let scheme = SamplingScheme {
            radii: 33,
            angles: 4,
            ..SamplingScheme::default()
        };
        let cloud = sample_amoeba(&curve, &scheme).unwrap();
        let mut values: Vec<f64> = cloud.points.iter().map(|p| p[0]).collect();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let a = (1e-6f64 * 0.5).ln();
        let b = (1e6f64 * 0.5).ln();
        assert!(values[0] <= a + 1e-9);
        assert!(values[values.len() - 1] >= b - 1e-9);
        let max_gap = 2.0 * (b - a) / 32.0;
        for w in values.windows(2) {
            assert!(w[1] - w[0] <= max_gap + 1e-9);
        }
    }

    #[test]
    fn bad_scheme_rejected() {
        let line = figure_line().as_curve();
        let scheme = SamplingScheme {
            r_min: -1.0,
            ..SamplingScheme::default()
        };
        assert!(matches!(
            sample_amoeba(&line, &scheme),
            Err(Error::BadScheme(_))
        ));
    }

    #[test]
    fn factor_line_degree_is_identity() {
        let line = figure_line();
        let curve = line.as_curve();
        let psi = curve.degree().psi();
        let factored = curve.factor_through_line(&psi).unwrap();
        for (a, b) in factored.coefficients().iter().zip(line.coefficients()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn factor_composition_residual() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut tested = 0;
        while tested < 40 {
            let n = rng.gen_range(1..4usize);
            let k = rng.gen_range(n..6usize);
            let mut vectors = vec![vec![0i64; n]];
            let mut sum = vec![0i64; n];
            for _ in 0..k {
                let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3i64)).collect();
                for (s, &x) in sum.iter_mut().zip(&v) {
                    *s += x;
                }
                vectors.push(v);
            }
            vectors[0] = sum.iter().map(|&s| -s).collect();
            let degree = ToricDegree::new(vectors).unwrap();
            let psi = degree.psi();
            if !psi.is_non_degenerate() {
                continue;
            }
            let punctures: Vec<Complex64> = (0..k)
                .map(|i| Complex64::new(1.7 * i as f64 - 2.0, rng.gen_range(-2.0..2.0)))
                .collect();
            let coefficients: Vec<Complex64> = (0..n)
                .map(|_| Complex64::from_polar(rng.gen_range(0.2..5.0), rng.gen_range(-3.0..3.0)))
                .collect();
            let curve = match ComplexRationalCurve::new(degree, punctures, coefficients) {
                Ok(c) => c,
                Err(_) => continue,
            };
            tested += 1;
            let factored = curve.factor_through_line(&psi).unwrap();
            for _ in 0..10 {
                let z = Complex64::new(rng.gen_range(-6.0..6.0), rng.gen_range(-6.0..6.0));
                let via_line = match factored.evaluate(z) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                let composed = psi.torus_apply(&via_line).unwrap();
                let direct = curve.evaluate(z).unwrap();
                for (c, d) in composed.iter().zip(&direct) {
                    assert!(
                        (c - d).norm() / d.norm() < 1e-9,
                        "composition residual too large"
                    );
                }
            }
        }
    }
}

//! Toric degrees and the associated linear map and torus homomorphism.
//!
//! A toric degree is an ordered list of integer vectors `(d_0, ..., d_k)` in
//! Z^n summing to zero. The linear map sends the i-th standard basis vector
//! of R^k to `-d_i` for i = 1..k; its exponential is a homomorphism of
//! complex tori. Preimages under the torus homomorphism are computed through
//! the Smith normal form, taking principal roots in diagonal coordinates.

use crate::error::{Error, Result};
use crate::snf::{bigint_to_f64, smith_normal_form, IntMat, Smith};
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

/// Ordered list of integer vectors in Z^n summing to zero, one per
/// puncture/end. Index 0 corresponds to the puncture at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricDegree {
    vectors: Vec<Vec<i64>>,
    n: usize,
}

impl ToricDegree {
    /// Validate a list of integer vectors as a toric degree.
    pub fn new(vectors: Vec<Vec<i64>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::EmptyDegree);
        }
        let n = vectors[0].len();
        if n == 0 {
            return Err(Error::EmptyDegree);
        }
        for v in &vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        if vectors.len() < 2 {
            return Err(Error::InconsistentDegree {
                leaves: vectors.len(),
                expected: 2,
            });
        }
        let mut sum = vec![0i64; n];
        for v in &vectors {
            for (s, &x) in sum.iter_mut().zip(v) {
                *s += x;
            }
        }
        if sum.iter().any(|&s| s != 0) {
            return Err(Error::SumNotZero(sum));
        }
        Ok(ToricDegree { vectors, n })
    }

    /// The standard line degree `Delta_n = (-e_0, -e_1, ..., -e_n)` where
    /// `-e_0 = (1, ..., 1)`.
    pub fn line(n: usize) -> Self {
        assert!(n >= 1);
        let mut vectors = vec![vec![1i64; n]];
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = -1;
            vectors.push(v);
        }
        ToricDegree { vectors, n }
    }

    /// Ambient dimension n.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Index of the last vector; the degree has `k() + 1` vectors.
    pub fn k(&self) -> usize {
        self.vectors.len() - 1
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &[i64] {
        &self.vectors[i]
    }

    /// True when this is `Delta_n` for some n.
    pub fn is_line_degree(&self) -> bool {
        if self.vectors.len() != self.n + 1 {
            return false;
        }
        if self.vectors[0].iter().any(|&x| x != 1) {
            return false;
        }
        for i in 1..=self.n {
            for (j, &x) in self.vectors[i].iter().enumerate() {
                let want = if j + 1 == i { -1 } else { 0 };
                if x != want {
                    return false;
                }
            }
        }
        true
    }

    /// Multiset equality (reordering of the vectors).
    pub fn same_up_to_reorder(&self, other: &ToricDegree) -> bool {
        if self.n != other.n || self.vectors.len() != other.vectors.len() {
            return false;
        }
        let mut a = self.vectors.clone();
        let mut b = other.vectors.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// The linear map associated to this degree.
    pub fn psi(&self) -> PsiMap {
        PsiMap::new(self.clone())
    }
}

/// The linear map of a toric degree: the n x k integer matrix whose i-th
/// column is `-d_i` (i = 1..k), together with its Smith decomposition.
#[derive(Debug, Clone)]
pub struct PsiMap {
    degree: ToricDegree,
    matrix: IntMat,
    smith: Smith,
}

impl PsiMap {
    pub fn new(degree: ToricDegree) -> Self {
        let n = degree.dim();
        let k = degree.k();
        let mut entries = vec![0i64; n * k];
        for i in 1..=k {
            for j in 0..n {
                entries[j * k + (i - 1)] = -degree.vector(i)[j];
            }
        }
        let matrix = IntMat::from_i64(n, k, &entries);
        let smith = smith_normal_form(&matrix);
        PsiMap {
            degree,
            matrix,
            smith,
        }
    }

    pub fn degree(&self) -> &ToricDegree {
        &self.degree
    }

    pub fn rank(&self) -> usize {
        self.smith.rank
    }

    /// Surjectivity of the linear map onto R^n.
    pub fn is_non_degenerate(&self) -> bool {
        self.smith.rank == self.degree.dim()
    }

    pub fn matrix_entry(&self, row: usize, col: usize) -> i64 {
        self.matrix[(row, col)].to_i64().expect("psi entry")
    }

    fn ensure_non_degenerate(&self) -> Result<()> {
        if self.is_non_degenerate() {
            Ok(())
        } else {
            Err(Error::DegenerateDegree {
                rank: self.smith.rank,
                n: self.degree.dim(),
            })
        }
    }

    /// Apply the map to a real vector of length k.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.degree.k() {
            return Err(Error::DimensionMismatch {
                expected: self.degree.k(),
                got: x.len(),
            });
        }
        Ok(self.matrix.apply_f64(x))
    }

    /// Apply the map to an integer vector (exact).
    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.degree.k());
        (0..self.degree.dim())
            .map(|j| {
                (0..self.degree.k())
                    .map(|i| self.matrix_entry(j, i) * x[i])
                    .sum()
            })
            .collect()
    }

    /// Infinity-operator norm as an exact integer: the maximum over rows of
    /// the sum of absolute entries.
    pub fn norm_inf_exact(&self) -> u64 {
        (0..self.matrix.rows)
            .map(|i| {
                (0..self.matrix.cols)
                    .map(|j| self.matrix[(i, j)].abs().to_u64().expect("norm entry"))
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn norm_inf(&self) -> f64 {
        self.norm_inf_exact() as f64
    }

    /// Solve `matrix * x = target` exactly through the Smith decomposition;
    /// any solution is acceptable (solutions differ by the kernel).
    pub fn preimage(&self, target: &[f64]) -> Result<Vec<f64>> {
        self.ensure_non_degenerate()?;
        let n = self.degree.dim();
        let k = self.degree.k();
        if target.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: target.len(),
            });
        }
        // P*M*Q = D, so M x = y  <=>  D (Q^-1 x) = P y.
        let py = self.smith.p.apply_f64(target);
        let mut w = vec![0.0; k];
        for i in 0..n {
            let d = bigint_to_f64(&self.smith.d[(i, i)]);
            w[i] = py[i] / d;
        }
        Ok(self.smith.q.apply_f64(&w))
    }

    /// Evaluate the torus homomorphism: `z'_j = prod_i z_i^{M_{j,i}}`.
    pub fn torus_apply(&self, z: &[Complex64]) -> Result<Vec<Complex64>> {
        if z.len() != self.degree.k() {
            return Err(Error::DimensionMismatch {
                expected: self.degree.k(),
                got: z.len(),
            });
        }
        for (i, v) in z.iter().enumerate() {
            if v.norm_sqr() == 0.0 {
                return Err(Error::ZeroCoordinate { index: i });
            }
        }
        Ok((0..self.degree.dim())
            .map(|j| {
                let mut log_mag = 0.0;
                let mut arg = 0.0;
                for (i, v) in z.iter().enumerate() {
                    let m = self.matrix_entry(j, i) as f64;
                    log_mag += m * v.norm().ln();
                    arg += m * v.arg();
                }
                Complex64::from_polar(log_mag.exp(), arg)
            })
            .collect())
    }

    /// A preimage of `kappa` under the torus homomorphism, computed in the
    /// Smith diagonal coordinates with principal d-th roots. The output is
    /// one representative modulo the kernel (a finite torsion group times a
    /// subtorus); any representative factors the same curve.
    pub fn torus_preimage(&self, kappa: &[Complex64]) -> Result<Vec<Complex64>> {
        self.ensure_non_degenerate()?;
        let n = self.degree.dim();
        let k = self.degree.k();
        if kappa.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: kappa.len(),
            });
        }
        for (j, v) in kappa.iter().enumerate() {
            if v.norm_sqr() == 0.0 {
                return Err(Error::ZeroCoefficient { index: j });
            }
        }
        // With P M Q = D: lambda = Psi_Q(w) where w_i^{d_i} = Psi_P(kappa)_i.
        let pk = monomial_apply(&self.smith.p, kappa);
        let mut w = vec![Complex64::new(1.0, 0.0); k];
        for i in 0..n {
            let d = self.smith.d[(i, i)].to_i64().expect("diag entry");
            debug_assert!(d > 0);
            let mag = pk[i].norm().ln() / d as f64;
            let arg = pk[i].arg() / d as f64;
            w[i] = Complex64::from_polar(mag.exp(), arg);
        }
        Ok(monomial_apply(&self.smith.q, &w))
    }
}

/// `out_j = prod_i z_i^{A_{j,i}}` for an integer matrix A, in log-polar form.
fn monomial_apply(a: &IntMat, z: &[Complex64]) -> Vec<Complex64> {
    assert_eq!(a.cols, z.len());
    (0..a.rows)
        .map(|j| {
            let mut log_mag = 0.0;
            let mut arg = 0.0;
            for (i, v) in z.iter().enumerate() {
                let m = a[(j, i)].to_i64().expect("monomial exponent") as f64;
                log_mag += m * v.norm().ln();
                arg += m * v.arg();
            }
            Complex64::from_polar(log_mag.exp(), arg)
        })
        .collect()
}

//! Smith normal form over the integers with exact arbitrary-precision
//! arithmetic.
//!
//! Computes unimodular `P` (rows) and `Q` (columns) with `P * A * Q = D`
//! diagonal, `d_1 | d_2 | ...`, all entries non-negative. `P` and `Q` are
//! returned explicitly so that linear and monomial systems can be solved in
//! the diagonal coordinates and mapped back.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(1);
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntMat {
            rows,
            cols,
            data: entries.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Apply the matrix to a real vector.
    pub fn apply_f64(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| bigint_to_f64(&self[(i, j)]) * x[j])
                    .sum()
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[to] += c * row[from]
    fn add_row(&mut self, to: usize, from: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(from, j)] * c;
            self[(to, j)] += v;
        }
    }

    /// col[to] += c * col[from]
    fn add_col(&mut self, to: usize, from: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, from)] * c;
            self[(i, to)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self[(r, j)].clone();
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

pub fn bigint_to_f64(v: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().expect("BigInt to f64")
}

/// Result of a Smith decomposition `p * a * q = d`.
#[derive(Debug, Clone)]
pub struct Smith {
    pub p: IntMat,
    pub q: IntMat,
    pub d: IntMat,
    pub rank: usize,
}

/// Compute the Smith normal form of `a`.
pub fn smith_normal_form(a: &IntMat) -> Smith {
    let mut d = a.clone();
    let mut p = IntMat::identity(a.rows);
    let mut q = IntMat::identity(a.cols);
    let lim = a.rows.min(a.cols);

    for k in 0..lim {
        if !position_pivot(&mut d, &mut p, &mut q, k) {
            break;
        }
        // Clear row and column k; pivot selection keeps the loop finite
        // because the pivot's absolute value strictly decreases whenever a
        // remainder is produced.
        loop {
            let mut dirty = false;
            for i in k + 1..d.rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let c = -(&d[(i, k)] / &d[(k, k)]);
                d.add_row(i, k, &c);
                p.add_row(i, k, &c);
                if !d[(i, k)].is_zero() {
                    // remainder became the smaller new pivot
                    d.swap_rows(i, k);
                    p.swap_rows(i, k);
                    dirty = true;
                }
            }
            for j in k + 1..d.cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let c = -(&d[(k, j)] / &d[(k, k)]);
                d.add_col(j, k, &c);
                q.add_col(j, k, &c);
                if !d[(k, j)].is_zero() {
                    d.swap_cols(j, k);
                    q.swap_cols(j, k);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            p.negate_row(k);
        }
    }

    // Enforce the divisibility chain d_k | d_{k+1}.
    let mut k = 0;
    while k + 1 < lim {
        if d[(k, k)].is_zero() || d[(k + 1, k + 1)].is_zero() {
            k += 1;
            continue;
        }
        if (&d[(k + 1, k + 1)] % &d[(k, k)]).is_zero() {
            k += 1;
            continue;
        }
        // Fold row k+1 into row k and re-reduce the trailing 2x2 block.
        let one = BigInt::from(1);
        d.add_col(k, k + 1, &one);
        q.add_col(k, k + 1, &one);
        let sub = reduce_two(&mut d, &mut p, &mut q, k);
        debug_assert!(sub);
        k = k.saturating_sub(1);
    }

    let rank = (0..lim).filter(|&i| !d[(i, i)].is_zero()).count();
    Smith { p, q, d, rank }
}

/// Bring the smallest nonzero entry of the trailing block to `(k,k)`.
/// Returns false when the trailing block is zero.
fn position_pivot(d: &mut IntMat, p: &mut IntMat, q: &mut IntMat, k: usize) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for i in k..d.rows {
        for j in k..d.cols {
            if d[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some(b) => {
                    if d[(i, j)].abs() < d[b].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    match best {
        None => false,
        Some((i, j)) => {
            d.swap_rows(k, i);
            p.swap_rows(k, i);
            d.swap_cols(k, j);
            q.swap_cols(k, j);
            true
        }
    }
}

fn reduce_two(d: &mut IntMat, p: &mut IntMat, q: &mut IntMat, k: usize) -> bool {
    if !position_pivot(d, p, q, k) {
        return false;
    }
    loop {
        let mut dirty = false;
        for i in k + 1..d.rows {
            if d[(i, k)].is_zero() {
                continue;
            }
            let c = -(&d[(i, k)] / &d[(k, k)]);
            d.add_row(i, k, &c);
            p.add_row(i, k, &c);
            if !d[(i, k)].is_zero() {
                d.swap_rows(i, k);
                p.swap_rows(i, k);
                dirty = true;
            }
        }
        for j in k + 1..d.cols {
            if d[(k, j)].is_zero() {
                continue;
            }
            let c = -(&d[(k, j)] / &d[(k, k)]);
            d.add_col(j, k, &c);
            q.add_col(j, k, &c);
            if !d[(k, j)].is_zero() {
                d.swap_cols(j, k);
                q.swap_cols(j, k);
                dirty = true;
            }
        }
        if !dirty {
            break;
        }
    }
    if d[(k, k)].is_negative() {
        d.negate_row(k);
        p.negate_row(k);
    }
    true
}

//! Exact linear feasibility over the rationals.
//!
//! Solves `A x = b, x >= 0` with a Phase-I simplex using Bland's rule, so the
//! run always terminates. Feasible systems return a witness; infeasible ones
//! return a Farkas certificate `y` with `y^T A <= 0` and `y^T b > 0`, both
//! verified exactly before returning.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// Outcome of an exact feasibility run.
#[derive(Debug, Clone, PartialEq)]
pub enum Feasibility {
    /// A point with `A x = b`, `x >= 0`.
    Feasible(Vec<Rat>),
    /// Farkas certificate: `y^T A <= 0` componentwise and `y^T b > 0`.
    Infeasible(Vec<Rat>),
}

/// Decide feasibility of `A x = b, x >= 0` exactly. `a` is row major with
/// `rows * cols` entries.
pub fn solve_feasibility(rows: usize, cols: usize, a: &[Rat], b: &[Rat]) -> Feasibility {
    assert_eq!(a.len(), rows * cols);
    assert_eq!(b.len(), rows);

    // normalize to b >= 0 by negating rows; remember the signs for the
    // certificate
    let mut signs = vec![false; rows];
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    let mut rhs: Vec<Rat> = Vec::with_capacity(rows);
    for i in 0..rows {
        let neg = b[i].is_negative();
        signs[i] = neg;
        let row: Vec<Rat> = (0..cols)
            .map(|j| {
                let v = a[i * cols + j].clone();
                if neg {
                    -v
                } else {
                    v
                }
            })
            .collect();
        tab.push(row);
        rhs.push(if neg { -b[i].clone() } else { b[i].clone() });
    }

    // Phase I: minimize the sum of artificial variables. Columns
    // 0..cols are the originals, cols..cols+rows the artificials.
    let total = cols + rows;
    for (i, row) in tab.iter_mut().enumerate() {
        for j in 0..rows {
            row.push(if i == j { Rat::one() } else { Rat::zero() });
        }
    }
    let mut basis: Vec<usize> = (cols..total).collect();

    // objective row: cost 1 on artificials; reduced costs after pricing out
    // the initial basis: z_j - c_j = sum of column entries for originals,
    // objective value = sum of rhs
    let mut obj: Vec<Rat> = (0..total)
        .map(|j| {
            if j < cols {
                let mut s = Rat::zero();
                for row in tab.iter() {
                    s += row[j].clone();
                }
                s
            } else {
                Rat::zero()
            }
        })
        .collect();
    let mut obj_val: Rat = rhs.iter().cloned().sum();

    loop {
        // Bland: entering = smallest index with positive reduced cost
        let entering = (0..total).find(|&j| obj[j].is_positive());
        let Some(enter) = entering else { break };
        // ratio test, Bland tie-break on smallest basis variable
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..rows {
            if tab[i][enter].is_positive() {
                let ratio = &rhs[i] / &tab[i][enter];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((lv, _)) = leave else {
            // Phase-I objective is bounded below by zero, so an unbounded
            // direction cannot occur.
            unreachable!("phase-I simplex cannot be unbounded");
        };
        // pivot on (lv, enter)
        let piv = tab[lv][enter].clone();
        for v in tab[lv].iter_mut() {
            *v /= piv.clone();
        }
        rhs[lv] /= piv.clone();
        for i in 0..rows {
            if i != lv && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..total {
                    let delta = &f * &tab[lv][j];
                    tab[i][j] -= delta;
                }
                let delta = &f * &rhs[lv];
                rhs[i] -= delta;
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..total {
                let delta = &f * &tab[lv][j];
                obj[j] -= delta;
            }
            let delta = &f * &rhs[lv];
            obj_val -= delta;
        }
        basis[lv] = enter;
    }

    if obj_val.is_zero() {
        let mut x = vec![Rat::zero(); cols];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < cols {
                x[bv] = rhs[i].clone();
            }
        }
        // exact verification of the witness
        for i in 0..rows {
            let mut s = Rat::zero();
            for j in 0..cols {
                s += &a[i * cols + j] * &x[j];
            }
            assert_eq!(s, b[i], "witness must satisfy the system exactly");
        }
        assert!(x.iter().all(|v| !v.is_negative()));
        Feasibility::Feasible(x)
    } else {
        // Recover the multipliers from the final objective row: the
        // artificial column i carries the reduced cost y_i - 1 for the
        // sign-adjusted system.
        let mut y: Vec<Rat> = (0..rows)
            .map(|i| {
                let v = obj[cols + i].clone() + Rat::one();
                if signs[i] {
                    -v
                } else {
                    v
                }
            })
            .collect();
        // exact verification of the Farkas certificate
        let mut ytb = Rat::zero();
        for i in 0..rows {
            ytb += &y[i] * &b[i];
        }
        if ytb.is_negative() {
            for v in y.iter_mut() {
                *v = -v.clone();
            }
            ytb = -ytb;
        }
        assert!(ytb.is_positive(), "certificate must separate");
        for j in 0..cols {
            let mut s = Rat::zero();
            for i in 0..rows {
                s += &y[i] * &a[i * cols + j];
            }
            assert!(
                !s.is_positive(),
                "certificate must satisfy y^T A <= 0 (column {j})"
            );
        }
        Feasibility::Infeasible(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasible_simple_system() {
        // x1 + x2 = 1, x1 - x2 = 0 -> x = (1/2, 1/2)
        let a = vec![rat_int(1), rat_int(1), rat_int(1), rat_int(-1)];
        let b = vec![rat_int(1), rat_int(0)];
        match solve_feasibility(2, 2, &a, &b) {
            Feasibility::Feasible(x) => {
                assert_eq!(x, vec![rat(1, 2), rat(1, 2)]);
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_same_sign() {
        // x1 + x2 = 0 and x1 + x2 = 1 cannot both hold
        let a = vec![rat_int(1), rat_int(1), rat_int(1), rat_int(1)];
        let b = vec![rat_int(0), rat_int(1)];
        assert!(matches!(
            solve_feasibility(2, 2, &a, &b),
            Feasibility::Infeasible(_)
        ));
    }

    #[test]
    fn infeasible_nonnegativity() {
        // x = -1 with x >= 0
        let a = vec![rat_int(1)];
        let b = vec![rat_int(-1)];
        assert!(matches!(
            solve_feasibility(1, 1, &a, &b),
            Feasibility::Infeasible(_)
        ));
    }

    #[test]
    fn feasible_with_free_slack() {
        // x1 - x2 = 0, x1 + x2 + x3 = 1: e.g. (1/2, 1/2, 0) or (0,0,1)
        let a = vec![
            rat_int(1),
            rat_int(-1),
            rat_int(0),
            rat_int(1),
            rat_int(1),
            rat_int(1),
        ];
        let b = vec![rat_int(0), rat_int(1)];
        match solve_feasibility(2, 3, &a, &b) {
            Feasibility::Feasible(x) => {
                assert_eq!(&x[0] - &x[1], rat_int(0));
                assert_eq!(&x[0] + &x[1] + &x[2], rat_int(1));
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_rows_handled() {
        // duplicated constraint rows
        let a = vec![rat_int(2), rat_int(4), rat_int(1), rat_int(2)];
        let b = vec![rat_int(2), rat_int(1)];
        match solve_feasibility(2, 2, &a, &b) {
            Feasibility::Feasible(x) => {
                assert_eq!(&x[0] * rat_int(2) + &x[1] * rat_int(4), rat_int(2));
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }
}

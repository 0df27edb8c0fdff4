//! Exact rational linear programming (feasibility only).
//!
//! Systems mix equalities and weak inequalities over free rational
//! variables. Feasibility runs a phase-I simplex with Bland's anti-cycling
//! pivot rule, entirely over `BigRational`, so every answer is exact and the
//! run is deterministic. Strict constraints never appear here: callers
//! encode conic strictness as `… ≥ 1` (legitimate by scale invariance).

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::rational_dot;
use crate::error::Error;

/// `A·x = b` and `C·x ≥ d` over free rational variables.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    vars: usize,
    eqs: Vec<(Vec<BigRational>, BigRational)>,
    ineqs: Vec<(Vec<BigRational>, BigRational)>,
}

impl LinearSystem {
    pub fn new(vars: usize) -> Self {
        LinearSystem { vars, eqs: Vec::new(), ineqs: Vec::new() }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn eqs(&self) -> &[(Vec<BigRational>, BigRational)] {
        &self.eqs
    }

    pub fn ineqs(&self) -> &[(Vec<BigRational>, BigRational)] {
        &self.ineqs
    }

    /// Adds `coeffs · x = rhs`.
    pub fn push_eq(&mut self, coeffs: Vec<BigRational>, rhs: BigRational) -> Result<(), Error> {
        if coeffs.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: coeffs.len() });
        }
        self.eqs.push((coeffs, rhs));
        Ok(())
    }

    /// Adds `coeffs · x ≥ rhs`.
    pub fn push_geq(&mut self, coeffs: Vec<BigRational>, rhs: BigRational) -> Result<(), Error> {
        if coeffs.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: coeffs.len() });
        }
        self.ineqs.push((coeffs, rhs));
        Ok(())
    }

    /// Exact check that a point satisfies every constraint.
    pub fn satisfies(&self, x: &[BigRational]) -> bool {
        x.len() == self.vars
            && self.eqs.iter().all(|(a, b)| rational_dot(a, x) == *b)
            && self.ineqs.iter().all(|(a, b)| rational_dot(a, x) >= *b)
    }
}

/// Decides feasibility; returns a satisfying point if one exists.
///
/// Free variables are split `x = p − q` with `p, q ≥ 0`, inequalities get a
/// surplus variable, and a phase-I simplex minimizes the sum of one
/// artificial variable per row. Bland's rule (smallest eligible column;
/// leaving row with the smallest basic column among ratio ties) guarantees
/// termination.
pub fn lp_feasible(sys: &LinearSystem) -> Option<Vec<BigRational>> {
    let v = sys.vars;
    let k = sys.ineqs.len();
    let r = sys.eqs.len() + k;
    if r == 0 {
        return Some(vec![BigRational::zero(); v]);
    }
    let structural = 2 * v + k;
    let total = structural + r;

    // Row-major tableau, last column is the right-hand side.
    let mut t = vec![vec![BigRational::zero(); total + 1]; r];
    for (row, (a, b)) in sys.eqs.iter().chain(sys.ineqs.iter()).enumerate() {
        for (j, c) in a.iter().enumerate() {
            t[row][j] = c.clone();
            t[row][v + j] = -c.clone();
        }
        if row >= sys.eqs.len() {
            // surplus for `a·x ≥ b`: a·x − s = b
            t[row][2 * v + (row - sys.eqs.len())] = -BigRational::one();
        }
        t[row][total] = b.clone();
        if t[row][total].is_negative() {
            for x in t[row].iter_mut() {
                *x = -&*x;
            }
        }
        t[row][structural + row] = BigRational::one();
    }
    let mut basis: Vec<usize> = (0..r).map(|i| structural + i).collect();

    // Reduced costs for minimizing the artificial sum: d_j = c_j − Σ rows.
    let mut obj = vec![BigRational::zero(); total];
    for j in 0..total {
        let mut s = BigRational::zero();
        for row in t.iter() {
            s += &row[j];
        }
        if j >= structural {
            obj[j] = BigRational::one() - s;
        } else {
            obj[j] = -s;
        }
    }

    loop {
        let Some(enter) = (0..total).find(|&j| obj[j].is_negative()) else { break };
        let mut leave: Option<usize> = None;
        for i in 0..r {
            if t[i][enter].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cur = &t[i][total] / &t[i][enter];
                        let best = &t[l][total] / &t[l][enter];
                        cur < best || (cur == best && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        // Phase I is bounded below by zero; an unbounded column cannot occur.
        let leave = leave?;
        let pivot = t[leave][enter].clone();
        for x in t[leave].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..r {
            if i != leave && !t[i][enter].is_zero() {
                let factor = t[i][enter].clone();
                let src = t[leave].clone();
                for (x, y) in t[i].iter_mut().zip(&src) {
                    *x -= &factor * y;
                }
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for (j, y) in t[leave][..total].iter().enumerate() {
                obj[j] -= &factor * y;
            }
        }
        basis[leave] = enter;
    }

    // Optimal: feasible iff every artificial sits at zero.
    let residual: BigRational =
        (0..r).filter(|&i| basis[i] >= structural).map(|i| t[i][total].clone()).sum();
    if !residual.is_zero() {
        return None;
    }

    let mut x = vec![BigRational::zero(); v];
    for i in 0..r {
        let j = basis[i];
        if j < v {
            x[j] += &t[i][total];
        } else if j < 2 * v {
            x[j - v] -= &t[i][total];
        }
    }
    debug_assert!(sys.satisfies(&x), "simplex witness must satisfy the system");
    Some(x)
}

/// Any exact solution of the consistent linear system `rows · x = rhs`
/// (free variables pinned to zero), or `None` if inconsistent.
pub fn solve_exact(rows: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = rows.len();
    debug_assert_eq!(m, rhs.len());
    let n = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(p) = (row..m).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(row, p);
        let piv = a[row][col].clone();
        for x in a[row].iter_mut() {
            *x /= &piv;
        }
        for i in 0..m {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let src = a[row].clone();
                for (x, y) in a[i].iter_mut().zip(&src) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    for i in row..m {
        if !a[i][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, col) in pivots {
        x[col] = a[i][n].clone();
    }
    Some(x)
}

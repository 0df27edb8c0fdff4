//! Dense matrices over arbitrary-precision integers, with the two integer
//! normal forms everything else is built on.
//!
//! `hnf` returns the canonical row Hermite normal form (positive pivots,
//! entries above a pivot reduced into `[0, pivot)`, zero rows removed), so
//! two row spans are equal iff their `hnf`s are identical. `snf` returns a
//! full Smith decomposition `U * M * Q = D` with recorded unimodular
//! transforms.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Row-major dense integer matrix. The shape is fixed at construction;
/// `rows == 0` or `cols == 0` are legal and show up naturally (kernels of
/// injective maps, configurations of finite-index lattices).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; the column count is explicit so that
    /// zero-row matrices keep their width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
        }
        let n = rows.len();
        let data = rows.into_iter().flatten().collect();
        Ok(IntMatrix { rows: n, cols, data })
    }

    /// Builds a matrix from columns (width = number of vectors).
    pub fn from_cols(rows: usize, cols: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        for c in &cols {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, got: c.len() });
            }
        }
        let n = cols.len();
        let mut m = IntMatrix::zero(rows, n);
        for (j, c) in cols.into_iter().enumerate() {
            for (i, x) in c.into_iter().enumerate() {
                m.data[i * n + j] = x;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let idx = i * other.cols + j;
                    out.data[idx] += add;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows).map(|i| crate::arith::dot(self.row(i), v)).collect())
    }

    /// Vertical concatenation; both matrices must have the same width.
    pub fn stack(&self, other: &IntMatrix) -> Result<IntMatrix, Error> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        let mut rows = self.row_vecs();
        rows.extend(other.row_vecs());
        IntMatrix::from_rows(self.cols, rows)
    }

    /// Canonical row Hermite normal form of the row span, zero rows removed.
    ///
    /// Pivots are positive, entries above a pivot lie in `[0, pivot)`, and
    /// rows are ordered by pivot column, so `a.hnf() == b.hnf()` iff the two
    /// row spans are the same sublattice of `Z^cols`.
    pub fn hnf(&self) -> IntMatrix {
        let mut m = self.row_vecs();
        let rows = self.rows;
        let cols = self.cols;
        let mut pr = 0usize;
        for col in 0..cols {
            if pr == rows {
                break;
            }
            // Euclidean elimination below the working row in this column.
            loop {
                let mut best: Option<usize> = None;
                for r in pr..rows {
                    if !m[r][col].is_zero()
                        && best.is_none_or(|b| m[r][col].abs() < m[b][col].abs())
                    {
                        best = Some(r);
                    }
                }
                let Some(b) = best else { break };
                m.swap(pr, b);
                let pivot = m[pr][col].clone();
                let mut remaining = false;
                for r in pr + 1..rows {
                    if !m[r][col].is_zero() {
                        let q = m[r][col].div_floor(&pivot);
                        if !q.is_zero() {
                            row_sub_mul(&mut m, r, pr, &q, col);
                        }
                        remaining |= !m[r][col].is_zero();
                    }
                }
                if !remaining {
                    break;
                }
            }
            if !m[pr][col].is_zero() {
                if m[pr][col].is_negative() {
                    for x in &mut m[pr] {
                        *x = -&*x;
                    }
                }
                let pivot = m[pr][col].clone();
                for r in 0..pr {
                    if !m[r][col].is_zero() {
                        let q = m[r][col].div_floor(&pivot);
                        if !q.is_zero() {
                            row_sub_mul(&mut m, r, pr, &q, col);
                        }
                    }
                }
                pr += 1;
            }
        }
        m.truncate(pr);
        IntMatrix::from_rows(cols, m).expect("hnf preserves width")
    }

    /// Rank over Q (equivalently over Z).
    pub fn rank(&self) -> usize {
        self.hnf().rows
    }

    /// Smith normal form with recorded transforms: `U * M * Q = D`.
    pub fn snf(&self) -> SmithNormalForm {
        let r = self.rows;
        let c = self.cols;
        let mut a = self.row_vecs();
        let mut u = IntMatrix::identity(r).row_vecs();
        let mut q = IntMatrix::identity(c).row_vecs();
        let mut t = 0usize;
        while t < r.min(c) {
            // Smallest nonzero |entry| of the trailing block, row-major ties.
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut q, t, pj);
            loop {
                // Clear column t below the pivot.
                let mut col_ok = true;
                let pivot = a[t][t].clone();
                for i in t + 1..r {
                    if !a[i][t].is_zero() {
                        let k = a[i][t].div_floor(&pivot);
                        if !k.is_zero() {
                            row_sub_mul(&mut a, i, t, &k, 0);
                            row_sub_mul(&mut u, i, t, &k, 0);
                        }
                        col_ok &= a[i][t].is_zero();
                    }
                }
                if !col_ok {
                    // A remainder strictly smaller than the pivot appeared.
                    let i = (t..r)
                        .filter(|&i| !a[i][t].is_zero())
                        .min_by_key(|&i| a[i][t].abs())
                        .expect("nonzero remainder exists");
                    a.swap(t, i);
                    u.swap(t, i);
                    continue;
                }
                // Clear row t to the right of the pivot.
                let mut row_ok = true;
                let pivot = a[t][t].clone();
                for j in t + 1..c {
                    if !a[t][j].is_zero() {
                        let k = a[t][j].div_floor(&pivot);
                        if !k.is_zero() {
                            col_sub_mul(&mut a, j, t, &k);
                            col_sub_mul(&mut q, j, t, &k);
                        }
                        row_ok &= a[t][j].is_zero();
                    }
                }
                if !row_ok {
                    let j = (t..c)
                        .filter(|&j| !a[t][j].is_zero())
                        .min_by_key(|&j| a[t][j].abs())
                        .expect("nonzero remainder exists");
                    swap_cols(&mut a, t, j);
                    swap_cols(&mut q, t, j);
                    continue;
                }
                // Enforce the divisibility chain before moving on.
                let pivot = a[t][t].clone();
                let mut fixed = true;
                'chain: for i in t + 1..r {
                    for j in t + 1..c {
                        if !a[i][j].mod_floor(&pivot).is_zero() {
                            row_add(&mut a, t, i);
                            row_add(&mut u, t, i);
                            fixed = false;
                            break 'chain;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
            if a[t][t].is_negative() {
                for x in &mut a[t] {
                    *x = -&*x;
                }
                for x in &mut u[t] {
                    *x = -&*x;
                }
            }
            t += 1;
        }
        let n = r.min(c);
        let diag: Vec<BigInt> = (0..n).map(|i| a[i][i].clone()).collect();
        let rank = diag.iter().take_while(|d| !d.is_zero()).count();
        SmithNormalForm {
            left: IntMatrix::from_rows(r, u).expect("square transform"),
            right: IntMatrix::from_rows(c, q).expect("square transform"),
            diag,
            rank,
            rows: r,
            cols: c,
        }
    }

    /// Determinant of a square matrix (Bareiss fraction-free elimination).
    pub fn det(&self) -> Result<BigInt, Error> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.row_vecs();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `m[r] -= q * m[p]`, starting at column `start` (earlier entries of row `p`
/// are known to be zero in every call site).
fn row_sub_mul(m: &mut [Vec<BigInt>], r: usize, p: usize, q: &BigInt, start: usize) {
    let prow: Vec<BigInt> = m[p][start..].to_vec();
    for (x, y) in m[r][start..].iter_mut().zip(&prow) {
        *x -= q * y;
    }
}

/// `col j -= q * col t` for every row.
fn col_sub_mul(m: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let sub = q * &row[t];
        row[j] -= sub;
    }
}

fn row_add(m: &mut [Vec<BigInt>], t: usize, i: usize) {
    let irow: Vec<BigInt> = m[i].clone();
    for (x, y) in m[t].iter_mut().zip(&irow) {
        *x += y;
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Result of `IntMatrix::snf`: `left * M * right` is diagonal with the
/// invariant factors on the diagonal (nonnegative, each dividing the next,
/// zeros trailing). The transforms are one valid unimodular pair, chosen
/// deterministically; only `diag` is canonical.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub diag: Vec<BigInt>,
    pub rank: usize,
    rows: usize,
    cols: usize,
}

impl SmithNormalForm {
    /// The diagonal matrix `D = left * M * right`, in the original shape.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zero(self.rows, self.cols);
        for (i, v) in self.diag.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }

    /// Invariant factors larger than 1 (the torsion part of the cokernel).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect()
    }
}

//! Sublattices of `Z^n` in canonical Hermite form.
//!
//! A `Lattice` stores the canonical row HNF of any generating set, so
//! structural equality decides lattice equality. Kernels, saturations, sums
//! and intersections all reduce to `hnf`/`snf` on suitable block matrices.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::configuration::VectorConfiguration;
use crate::error::Error;
use crate::mat::IntMatrix;

/// A sublattice `L ⊆ Z^ambient`, kept as a canonical HNF basis with full row
/// rank (zero rows removed). Two values compare equal iff the lattices are
/// equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
}

impl Lattice {
    /// Lattice generated by the given vectors.
    pub fn from_rows(ambient: usize, rows: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        let m = IntMatrix::from_rows(ambient, rows)?;
        Ok(Lattice { ambient, basis: m.hnf() })
    }

    /// Lattice generated by the rows of a matrix.
    pub fn from_matrix(m: &IntMatrix) -> Self {
        Lattice { ambient: m.cols(), basis: m.hnf() }
    }

    pub fn zero(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMatrix::zero(0, ambient) }
    }

    /// The full lattice `Z^ambient`.
    pub fn full(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMatrix::identity(ambient) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.rows() == 0
    }

    /// Canonical HNF basis, one generator per row.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    fn pivot_cols(&self) -> Vec<usize> {
        (0..self.basis.rows())
            .map(|i| (0..self.ambient).find(|&j| !self.basis.get(i, j).is_zero()).expect("basis rows are nonzero"))
            .collect()
    }

    /// Expresses `v` as an integer combination of the basis rows, if possible.
    pub fn member(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>, Error> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        let mut residual = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.basis.rows());
        for (i, &p) in self.pivot_cols().iter().enumerate() {
            let pivot = self.basis.get(i, p);
            let (q, r) = residual[p].div_rem(pivot);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for (x, y) in residual.iter_mut().zip(self.basis.row(i)) {
                    *x -= &q * y;
                }
            }
            coeffs.push(q);
        }
        if residual.iter().all(Zero::is_zero) {
            Ok(Some(coeffs))
        } else {
            Ok(None)
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool, Error> {
        Ok(self.member(v)?.is_some())
    }

    /// Does this lattice contain every vector of `other`?
    pub fn contains_lattice(&self, other: &Lattice) -> Result<bool, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        for i in 0..other.basis.rows() {
            if !self.contains(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical representative of the coset `v + L` (unique per coset):
    /// entries at pivot columns land in `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Result<Vec<BigInt>, Error> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        let mut residual = v.to_vec();
        for (i, &p) in self.pivot_cols().iter().enumerate() {
            let pivot = self.basis.get(i, p);
            let q = residual[p].div_floor(pivot);
            if !q.is_zero() {
                for (x, y) in residual.iter_mut().zip(self.basis.row(i)) {
                    *x -= &q * y;
                }
            }
        }
        Ok(residual)
    }

    /// `L1 + L2`, the lattice generated by both.
    pub fn sum(&self, other: &Lattice) -> Result<Lattice, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(Lattice::from_matrix(&self.basis.stack(&other.basis)?))
    }

    /// `L1 ∩ L2` via the kernel of the stacked block `[B1; -B2]`: a kernel
    /// vector `(α, β)` of its transpose satisfies `α·B1 = β·B2`, and the
    /// vectors `α·B1` generate the intersection.
    pub fn intersection(&self, other: &Lattice) -> Result<Lattice, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        let k1 = self.basis.rows();
        let neg = IntMatrix::from_rows(
            self.ambient,
            other.basis.row_vecs().into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect(),
        )?;
        let stacked = self.basis.stack(&neg)?;
        let ker = kernel_basis(&stacked.transpose());
        let mut rows = Vec::new();
        for w in ker.basis().row_vecs() {
            let alpha = &w[..k1];
            let mut v = alloc::vec![BigInt::zero(); self.ambient];
            for (c, row_idx) in alpha.iter().zip(0..k1) {
                if !c.is_zero() {
                    for (x, y) in v.iter_mut().zip(self.basis.row(row_idx)) {
                        *x += c * y;
                    }
                }
            }
            rows.push(v);
        }
        Lattice::from_rows(self.ambient, rows)
    }

    /// `Sat(L) = {u : d·u ∈ L for some d ≥ 1}`, computed as the integer
    /// kernel of a matrix whose rows span the rational orthogonal complement.
    pub fn saturation(&self) -> Lattice {
        let complement = kernel_basis(&self.basis);
        kernel_basis(complement.basis())
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }

    /// Isomorphism type of the quotient `Z^ambient / L`.
    pub fn group_structure(&self) -> GroupStructure {
        let s = self.basis.snf();
        GroupStructure { free_rank: self.ambient - self.basis.rows(), torsion: s.torsion() }
    }

    /// A configuration `A` (columns `a_1..a_n` in `Z^(n-rank)`) whose integer
    /// kernel is `Sat(L)`: the last `n - rank` rows of the left Smith
    /// transform of the column matrix of the basis. For a finite-index
    /// lattice the ambient dimension is 0 and the columns are empty vectors.
    pub fn configuration(&self) -> VectorConfiguration {
        let n = self.ambient;
        let k = self.basis.rows();
        let col_matrix = self.basis.transpose(); // n x k, columns = basis vectors
        let s = col_matrix.snf();
        let m = n - k;
        let mut rows = Vec::with_capacity(m);
        for i in k..n {
            rows.push(s.left.row(i).to_vec());
        }
        let a = IntMatrix::from_rows(n, rows).expect("left transform rows have width n");
        VectorConfiguration::from_matrix(&a)
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice in Z^{} with basis {:?}", self.ambient, self.basis)
    }
}

/// `{u ∈ Z^cols : M·u = 0}`: the trailing columns of the right Smith
/// transform. Always saturated.
pub fn kernel_basis(m: &IntMatrix) -> Lattice {
    let s = m.snf();
    let rows: Vec<Vec<BigInt>> = (s.rank..m.cols()).map(|j| s.right.col(j)).collect();
    Lattice::from_rows(m.cols(), rows).expect("kernel vectors have ambient width")
}

/// Isomorphism type of a finitely generated abelian group
/// `Z^free_rank ⊕ Z_{t_1} ⊕ … ⊕ Z_{t_k}` with `t_i | t_{i+1}`, `t_i > 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.free_rank > 0 {
            write!(f, "Z^{}", self.free_rank)?;
            first = false;
        }
        for t in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{t}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl GroupStructure {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group if finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for t in &self.torsion {
            o *= t;
        }
        Some(o)
    }
}

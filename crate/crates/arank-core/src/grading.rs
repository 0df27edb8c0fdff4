//! Gradings of `K[x_1..x_n]` by finitely generated abelian groups,
//! identified with their relation lattices `L_F = ker(deg_F) ⊆ Z^n`.
//!
//! The specialization order is pure lattice containment: `F ≤ G` iff
//! `L_G ⊆ L_F`. Meets and joins are lattice sums and intersections,
//! degrees are canonical cosets modulo `L_F`, and positivity is an exact LP
//! on the cached configuration with a certificate either way.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{primitive_from_rational, to_rational_vec};
use crate::configuration::VectorConfiguration;
use crate::error::Error;
use crate::lattice::{GroupStructure, Lattice};
use crate::lp::{lp_feasible, solve_exact, LinearSystem};
use crate::poly::Polynomial;

/// A grading, carried by its relation lattice with a cached group
/// structure and a cached configuration `A` whose kernel is `Sat(L_F)`.
#[derive(Clone, Debug)]
pub struct Grading {
    lattice: Lattice,
    configuration: VectorConfiguration,
    structure: GroupStructure,
}

/// Outcome of the positivity test with a substitution-checkable witness:
/// a covector strictly positive on the configuration, or a nonzero
/// nonnegative lattice vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityWitness {
    Positive { covector: Vec<BigRational> },
    NotPositive { vector: Vec<BigInt> },
}

/// The degree of a monomial: the canonical coset representative of its
/// exponent vector modulo the relation lattice. Equal classes ⟺ exponent
/// difference in `L_F`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeClass {
    ambient: usize,
    representative: Vec<BigInt>,
}

impl DegreeClass {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn representative(&self) -> &[BigInt] {
        &self.representative
    }
}

impl Grading {
    /// The grading with relation lattice `l` (any sublattice of `Z^n`).
    pub fn from_lattice(lattice: Lattice) -> Self {
        let configuration = lattice.configuration();
        let structure = lattice.group_structure();
        Grading { lattice, configuration, structure }
    }

    /// The grading `deg(x_i) = a_i` defined by a configuration; its
    /// relation lattice is the (saturated) kernel of the column matrix.
    pub fn from_configuration(cfg: &VectorConfiguration) -> Self {
        let lattice = cfg.kernel();
        let structure = lattice.group_structure();
        Grading { lattice, configuration: cfg.clone(), structure }
    }

    /// The trivial grading `O` (every monomial has degree 0): `L = Z^n`.
    /// It is a specialization of every grading of the same rank.
    pub fn coarsest(n: usize) -> Self {
        Grading::from_lattice(Lattice::full(n))
    }

    /// The `Z^n`-grading (`L = 0`); every grading specializes to it.
    pub fn finest(n: usize) -> Self {
        Grading::from_lattice(Lattice::zero(n))
    }

    pub fn ambient(&self) -> usize {
        self.lattice.ambient()
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn configuration(&self) -> &VectorConfiguration {
        &self.configuration
    }

    pub fn group_structure(&self) -> &GroupStructure {
        &self.structure
    }

    /// Height of the associated lattice ideal: `rank(L_F)`.
    pub fn height(&self) -> usize {
        self.lattice.rank()
    }

    /// The grading of the saturated lattice (the `Z B` grading when `self`
    /// is `F`); shares this grading's configuration.
    pub fn saturation(&self) -> Grading {
        Grading::from_configuration(&self.configuration)
    }

    fn check_ambient(&self, other: &Grading) -> Result<(), Error> {
        if self.ambient() != other.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient(),
                got: other.ambient(),
            });
        }
        Ok(())
    }

    /// `self ≤ other` in the specialization order: `L_other ⊆ L_self`.
    pub fn is_specialization_of(&self, other: &Grading) -> Result<bool, Error> {
        self.check_ambient(other)?;
        self.lattice.contains_lattice(other.lattice())
    }

    /// Equivalent gradings (isomorphic degree groups compatible with the
    /// variables): equal relation lattices.
    pub fn is_equivalent_to(&self, other: &Grading) -> Result<bool, Error> {
        self.check_ambient(other)?;
        Ok(self.lattice == *other.lattice())
    }

    /// Greatest lower bound: relation lattice `L_F + L_G`.
    pub fn meet(&self, other: &Grading) -> Result<Grading, Error> {
        self.check_ambient(other)?;
        Ok(Grading::from_lattice(self.lattice.sum(other.lattice())?))
    }

    /// Least upper bound: relation lattice `L_F ∩ L_G`.
    pub fn join(&self, other: &Grading) -> Result<Grading, Error> {
        self.check_ambient(other)?;
        Ok(Grading::from_lattice(self.lattice.intersection(other.lattice())?))
    }

    /// Degree of `x^u` as a canonical coset.
    pub fn degree(&self, u: &[BigInt]) -> Result<DegreeClass, Error> {
        let representative = self.lattice.reduce(u)?;
        Ok(DegreeClass { ambient: self.ambient(), representative })
    }

    /// Degree of `x^u` as an explicit vector `A·u` in the coordinates of
    /// the cached configuration.
    pub fn degree_vector(&self, u: &[BigInt]) -> Result<Vec<BigInt>, Error> {
        self.configuration.degree(u)
    }

    pub fn is_homogeneous(&self, p: &Polynomial) -> Result<bool, Error> {
        Ok(self.homogeneous_components(p)?.len() == 1)
    }

    /// Partition of the terms of `p` by degree class, in order of first
    /// occurrence; the concatenation of the parts carries exactly the
    /// terms of `p`.
    pub fn homogeneous_components(&self, p: &Polynomial) -> Result<Vec<Polynomial>, Error> {
        if p.vars() != self.ambient() {
            return Err(Error::DimensionMismatch { expected: self.ambient(), got: p.vars() });
        }
        let mut index: BTreeMap<DegreeClass, usize> = BTreeMap::new();
        let mut parts: Vec<Vec<(Vec<BigInt>, BigRational)>> = Vec::new();
        for (exp, coeff) in p.terms() {
            let class = self.degree(exp)?;
            let slot = *index.entry(class).or_insert_with(|| {
                parts.push(Vec::new());
                parts.len() - 1
            });
            parts[slot].push((exp.clone(), coeff.clone()));
        }
        parts
            .into_iter()
            .map(|terms| Polynomial::new(p.vars(), terms))
            .collect::<Result<Vec<_>, _>>()
    }

    /// Decides positivity (`L ∩ N^n = {0}`) by LP feasibility of
    /// `{c·a_i ≥ 1}` over the configuration columns, returning a
    /// certificate either way.
    pub fn positivity(&self) -> PositivityWitness {
        let cfg = &self.configuration;
        let m = cfg.ambient();
        let n = cfg.len();
        let mut sys = LinearSystem::new(m);
        for j in 0..n {
            sys.push_geq(to_rational_vec(&cfg.column(j)), BigRational::from_integer(BigInt::from(1)))
                .expect("column length matches ambient");
        }
        if let Some(covector) = lp_feasible(&sys) {
            return PositivityWitness::Positive { covector };
        }
        // Farkas alternative: nonzero λ ≥ 0 with A·λ = 0, i.e. a nonzero
        // nonnegative vector of Sat(L); scale it into L itself.
        let mut dual = LinearSystem::new(n);
        for d in 0..m {
            let row = (0..n).map(|j| BigRational::from_integer(cfg.column(j)[d].clone())).collect();
            dual.push_eq(row, BigRational::zero()).expect("n coefficients");
        }
        let mut total = Vec::with_capacity(n);
        for j in 0..n {
            let mut row = alloc::vec![BigRational::zero(); n];
            row[j] = BigRational::from_integer(BigInt::from(1));
            dual.push_geq(row, BigRational::zero()).expect("n coefficients");
            total.push(BigRational::from_integer(BigInt::from(1)));
        }
        dual.push_geq(total, BigRational::from_integer(BigInt::from(1))).expect("n coefficients");
        let lambda = lp_feasible(&dual).expect("Gordan: the dual system is feasible");
        let sat_vector = primitive_from_rational(&lambda);
        // sat_vector ∈ Sat(L) ∩ N^n; express it rationally over the basis
        // of L and clear denominators to land in L ∩ N^n.
        let basis = self.lattice.basis();
        let k = basis.rows();
        debug_assert!(k > 0, "a nonzero saturation vector requires a nonzero lattice");
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|j| (0..k).map(|i| BigRational::from_integer(basis.get(i, j).clone())).collect())
            .collect();
        let x = solve_exact(&rows, &to_rational_vec(&sat_vector))
            .expect("saturation vectors lie in the rational row span of the basis");
        let mut scale = BigInt::from(1);
        for xi in &x {
            scale = num_integer::lcm(scale, xi.denom().clone());
        }
        let vector: Vec<BigInt> = sat_vector.iter().map(|v| v * &scale).collect();
        debug_assert!(self.lattice.member(&vector).expect("dimensions agree").is_some());
        debug_assert!(vector.iter().all(|v| !v.is_negative()));
        PositivityWitness::NotPositive { vector }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self.positivity(), PositivityWitness::Positive { .. })
    }

    /// A vector `M` of positive integers with `deg_M(x_i) = m_i` defining
    /// a rank-1 positive specialization of this grading (Theorem-2.7-style
    /// construction: `m_i = c_0·a_i`, denominators cleared).
    pub fn positive_integer_specialization(&self) -> Result<Vec<BigInt>, Error> {
        let covector = match self.positivity() {
            PositivityWitness::Positive { covector } => covector,
            PositivityWitness::NotPositive { .. } => return Err(Error::NotPositive),
        };
        let cfg = &self.configuration;
        let values: Vec<BigRational> = (0..cfg.len())
            .map(|j| crate::arith::rational_dot(&covector, &to_rational_vec(&cfg.column(j))))
            .collect();
        let mut scale = BigInt::from(1);
        for v in &values {
            scale = num_integer::lcm(scale, v.denom().clone());
        }
        let m: Vec<BigInt> = values.iter().map(|v| (v * &scale).to_integer()).collect();
        debug_assert!(m.iter().all(|x| x.is_positive()));
        Ok(m)
    }
}

/// The finest grading making every polynomial homogeneous (Theorem 3.1):
/// relation lattice spanned by all within-polynomial exponent differences.
/// An empty list yields the `Z^n`-grading.
pub fn finest_grading(n: usize, polys: &[Polynomial]) -> Result<Grading, Error> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for p in polys {
        if p.vars() != n {
            return Err(Error::DimensionMismatch { expected: n, got: p.vars() });
        }
        let exps = p.exponents();
        let first = exps[0];
        for other in &exps[1..] {
            rows.push(other.iter().zip(first).map(|(a, b)| a - b).collect());
        }
    }
    Ok(Grading::from_lattice(Lattice::from_rows(n, rows)?))
}

/// The finest grading below `g` making every polynomial homogeneous
/// (Corollary 3.2): the meet of [`finest_grading`] with `g`.
pub fn finest_grading_below(polys: &[Polynomial], g: &Grading) -> Result<Grading, Error> {
    finest_grading(g.ambient(), polys)?.meet(g)
}

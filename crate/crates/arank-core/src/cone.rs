//! Rational polyhedral cones: membership, strong convexity, extreme rays,
//! faces, minimal non-faces, relative interiors, and linear projections.
//!
//! Every generator is kept as a primitive integer vector (zero inputs are
//! dropped), so two generators span the same ray exactly when they are
//! equal. All geometric questions reduce to exact LP feasibility via
//! [`crate::lp`]; strictness is encoded as `… ≥ 1`, which is equivalent by
//! scale invariance of cones.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_zero_vec, primitive_from_rational, primitive_signed, to_rational_vec};
use crate::configuration::VectorConfiguration;
use crate::error::Error;
use crate::lattice::kernel_basis;
use crate::lp::{lp_feasible, solve_exact, LinearSystem};
use crate::mat::IntMatrix;

/// Candidate-set ceiling for the levelwise non-face sweep.
const NONFACE_CANDIDATE_LIMIT: usize = 100_000;

/// A finitely generated cone `cone(g_1, …, g_t) ⊆ Q^ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    ambient: usize,
    generators: Vec<Vec<BigInt>>,
}

/// Outcome of the strong-convexity test, either way with a checkable
/// certificate: a covector strictly positive on all generators, or a
/// nonzero vector `v` with both `v` and `−v` in the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Convexity {
    StronglyConvex { covector: Vec<BigRational> },
    NotStronglyConvex { line: Vec<BigInt> },
}

impl RationalCone {
    /// Builds a cone from integer generators; each is reduced to its
    /// primitive representative and zero vectors are discarded.
    pub fn from_int_vectors(ambient: usize, vecs: &[Vec<BigInt>]) -> Result<Self, Error> {
        let mut generators = Vec::new();
        for v in vecs {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: v.len() });
            }
            if !is_zero_vec(v) {
                generators.push(crate::arith::primitive(v));
            }
        }
        Ok(RationalCone { ambient, generators })
    }

    pub fn from_rational_vectors(ambient: usize, vecs: &[Vec<BigRational>]) -> Result<Self, Error> {
        let mut ints = Vec::with_capacity(vecs.len());
        for v in vecs {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: v.len() });
            }
            ints.push(primitive_from_rational(v));
        }
        RationalCone::from_int_vectors(ambient, &ints)
    }

    /// The cone spanned by the columns of a configuration.
    pub fn from_configuration(cfg: &VectorConfiguration) -> Self {
        RationalCone::from_int_vectors(cfg.ambient(), &cfg.columns())
            .expect("configuration columns share the ambient dimension")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Primitive nonzero generators, in input order.
    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    fn check_dim(&self, v: &[BigRational]) -> Result<(), Error> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        Ok(())
    }

    /// Is `v` a nonnegative combination of the generators?
    pub fn contains(&self, v: &[BigRational]) -> Result<bool, Error> {
        self.check_dim(v)?;
        Ok(membership_witness(&self.generators, v).is_some())
    }

    pub fn contains_int(&self, v: &[BigInt]) -> Result<bool, Error> {
        self.contains(&to_rational_vec(v))
    }

    /// Is `v` in the relative interior, i.e. a strictly positive
    /// combination of *all* generators (after a harmless rescaling)?
    pub fn in_relative_interior(&self, v: &[BigRational]) -> Result<bool, Error> {
        self.check_dim(v)?;
        // ∃ μ ≥ 1, λ ≥ 1 with Σ λ_j g_j = μ·v  ⟺  v ∈ relint(cone).
        let t = self.generators.len();
        let mut sys = LinearSystem::new(t + 1);
        for d in 0..self.ambient {
            let mut row: Vec<BigRational> =
                self.generators.iter().map(|g| BigRational::from_integer(g[d].clone())).collect();
            row.push(-v[d].clone());
            sys.push_eq(row, BigRational::zero())?;
        }
        for j in 0..=t {
            let mut row = vec![BigRational::zero(); t + 1];
            row[j] = BigRational::one();
            sys.push_geq(row, BigRational::one())?;
        }
        Ok(lp_feasible(&sys).is_some())
    }

    pub fn in_relative_interior_int(&self, v: &[BigInt]) -> Result<bool, Error> {
        self.in_relative_interior(&to_rational_vec(v))
    }

    /// Decides pointedness (`C ∩ −C = {0}`) with a certificate either way.
    pub fn strong_convexity(&self) -> Convexity {
        let t = self.generators.len();
        let mut sys = LinearSystem::new(self.ambient);
        for g in &self.generators {
            sys.push_geq(to_rational_vec(g), BigRational::one())
                .expect("generator length matches ambient");
        }
        if let Some(c) = lp_feasible(&sys) {
            return Convexity::StronglyConvex { covector: c };
        }
        // Farkas: infeasibility yields λ ≥ 0, Σ λ_j g_j = 0, Σ λ_j ≥ 1; any
        // generator with positive coefficient spans a line inside the cone.
        let mut dual = LinearSystem::new(t);
        for d in 0..self.ambient {
            let row = self
                .generators
                .iter()
                .map(|g| BigRational::from_integer(g[d].clone()))
                .collect();
            dual.push_eq(row, BigRational::zero()).expect("t coefficients");
        }
        let mut pos = vec![BigRational::zero(); t];
        for (j, slot) in pos.iter_mut().enumerate() {
            let mut row = vec![BigRational::zero(); t];
            row[j] = BigRational::one();
            dual.push_geq(row, BigRational::zero()).expect("t coefficients");
            *slot = BigRational::one();
        }
        dual.push_geq(pos, BigRational::one()).expect("t coefficients");
        let lambda = lp_feasible(&dual)
            .expect("Gordan duality: one of the two alternative systems is feasible");
        let j = lambda.iter().position(|l| l.is_positive()).expect("λ has positive total");
        Convexity::NotStronglyConvex { line: self.generators[j].clone() }
    }

    pub fn is_strongly_convex(&self) -> bool {
        matches!(self.strong_convexity(), Convexity::StronglyConvex { .. })
    }

    /// Indices of the generators spanning extreme rays, ascending. Among
    /// generators spanning the same ray only the first is reported.
    ///
    /// Requires strong convexity (otherwise extreme rays are not
    /// well-defined) and fails with [`Error::NotStronglyConvex`].
    pub fn extreme_ray_indices(&self) -> Result<Vec<usize>, Error> {
        if !self.is_strongly_convex() {
            return Err(Error::NotStronglyConvex);
        }
        let mut seen: BTreeSet<&[BigInt]> = BTreeSet::new();
        let mut distinct: Vec<usize> = Vec::new();
        for (j, g) in self.generators.iter().enumerate() {
            if seen.insert(g.as_slice()) {
                distinct.push(j);
            }
        }
        let mut extreme = Vec::new();
        for &j in &distinct {
            let others: Vec<Vec<BigInt>> = distinct
                .iter()
                .filter(|&&i| i != j)
                .map(|&i| self.generators[i].clone())
                .collect();
            let target = to_rational_vec(&self.generators[j]);
            if membership_witness(&others, &target).is_none() {
                extreme.push(j);
            }
        }
        Ok(extreme)
    }
}

/// LP witness for `v ∈ cone(gens)`: nonnegative λ with `Σ λ_j g_j = v`.
fn membership_witness(gens: &[Vec<BigInt>], v: &[BigRational]) -> Option<Vec<BigRational>> {
    let t = gens.len();
    let ambient = v.len();
    let mut sys = LinearSystem::new(t);
    for d in 0..ambient {
        let row = gens.iter().map(|g| BigRational::from_integer(g[d].clone())).collect();
        sys.push_eq(row, v[d].clone()).ok()?;
    }
    for j in 0..t {
        let mut row = vec![BigRational::zero(); t];
        row[j] = BigRational::one();
        sys.push_geq(row, BigRational::zero()).ok()?;
    }
    lp_feasible(&sys)
}

/// A covector `c` with `c·r_i = 0` for `i ∈ e` and `c·r_j ≥ 1` otherwise,
/// witnessing that `cone(r_i : i ∈ e)` is a face of `cone(all rays)` whose
/// ray set is exactly `e`. `None` when no such covector exists.
pub fn face_certificate(
    ambient: usize,
    rays: &[Vec<BigInt>],
    e: &BTreeSet<usize>,
) -> Result<Option<Vec<BigRational>>, Error> {
    if let Some(&bad) = e.iter().find(|&&i| i >= rays.len()) {
        return Err(Error::IndexOutOfRange { index: bad, len: rays.len() });
    }
    let mut sys = LinearSystem::new(ambient);
    for (j, r) in rays.iter().enumerate() {
        if e.contains(&j) {
            sys.push_eq(to_rational_vec(r), BigRational::zero())?;
        } else {
            sys.push_geq(to_rational_vec(r), BigRational::one())?;
        }
    }
    Ok(lp_feasible(&sys))
}

pub fn is_face(ambient: usize, rays: &[Vec<BigInt>], e: &BTreeSet<usize>) -> Result<bool, Error> {
    Ok(face_certificate(ambient, rays, e)?.is_some())
}

/// The extreme rays of a configuration's cone together with the family of
/// minimal non-faces, the combinatorial core of the lower-bound machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonfaceFamily {
    ambient: usize,
    ray_columns: Vec<usize>,
    rays: Vec<Vec<BigInt>>,
    ray_labels: Vec<String>,
    nonfaces: Vec<BTreeSet<usize>>,
    duplicates: Vec<(BTreeSet<usize>, BTreeSet<usize>)>,
}

impl NonfaceFamily {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// 0-based configuration columns carrying the extreme rays, ascending.
    pub fn ray_columns(&self) -> &[usize] {
        &self.ray_columns
    }

    /// Primitive extreme-ray vectors, parallel to `ray_columns`.
    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn ray_labels(&self) -> &[String] {
        &self.ray_labels
    }

    /// Minimal non-faces as sets of ray indices, sorted by (size, lex).
    pub fn nonfaces(&self) -> &[BTreeSet<usize>] {
        &self.nonfaces
    }

    pub fn count(&self) -> usize {
        self.nonfaces.len()
    }

    /// Pairs `(kept, discarded)` of index sets spanning the same cone; the
    /// lexicographically smallest representative is the one reported.
    pub fn duplicates(&self) -> &[(BTreeSet<usize>, BTreeSet<usize>)] {
        &self.duplicates
    }

    /// The cone spanned by the rays indexed by `e`.
    pub fn sigma(&self, e: &BTreeSet<usize>) -> Result<RationalCone, Error> {
        if let Some(&bad) = e.iter().find(|&&i| i >= self.rays.len()) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.rays.len() });
        }
        let vecs: Vec<Vec<BigInt>> = e.iter().map(|&i| self.rays[i].clone()).collect();
        RationalCone::from_int_vectors(self.ambient, &vecs)
    }

    /// Display form of a non-face, e.g. `{14,23}` for ray labels 14 and 23.
    pub fn label(&self, nonface: &BTreeSet<usize>) -> String {
        let mut out = String::from("{");
        for (k, &i) in nonface.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.ray_labels[i]);
        }
        out.push('}');
        out
    }
}

/// Computes extreme rays and all minimal non-faces of `σ(cfg)`.
///
/// A set `E` of extreme rays is a *face* when some covector vanishes on `E`
/// and is strictly positive on the remaining rays; minimal non-faces are
/// found by a levelwise sweep (a set is examined only when all its proper
/// subsets are faces) followed by an LP-verified reduction to the minimal
/// cones, recording index sets whose cones coincide.
pub fn minimal_nonfaces(cfg: &VectorConfiguration) -> Result<NonfaceFamily, Error> {
    let ambient = cfg.ambient();
    let cone = RationalCone::from_configuration(cfg);
    if let Convexity::NotStronglyConvex { .. } = cone.strong_convexity() {
        return Err(Error::NotStronglyConvex);
    }

    // Map extreme generators back to configuration columns: generator order
    // follows column order with zero columns dropped.
    let nonzero_cols: Vec<usize> =
        (0..cfg.len()).filter(|&j| !is_zero_vec(&cfg.column(j))).collect();
    let extreme = cone.extreme_ray_indices()?;
    let ray_columns: Vec<usize> = extreme.iter().map(|&g| nonzero_cols[g]).collect();
    let rays: Vec<Vec<BigInt>> = extreme.iter().map(|&g| cone.generators()[g].clone()).collect();
    let ray_labels: Vec<String> = ray_columns.iter().map(|&c| cfg.label(c)).collect();
    let t = rays.len();

    // Levelwise sweep: `frontier` holds the faces of the current size.
    let mut candidates: Vec<BTreeSet<usize>> = Vec::new();
    let mut frontier: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for i in 0..t {
        let single = BTreeSet::from([i]);
        if is_face(ambient, &rays, &single)? {
            frontier.insert(single);
        } else {
            candidates.push(single);
        }
    }
    while !frontier.is_empty() {
        let mut next: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut level_candidates: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for s in &frontier {
            let max = *s.iter().next_back().expect("frontier sets are nonempty");
            for j in max + 1..t {
                let mut ext = s.clone();
                ext.insert(j);
                if level_candidates.len() + next.len() > NONFACE_CANDIDATE_LIMIT {
                    return Err(Error::BudgetExceeded {
                        budget: NONFACE_CANDIDATE_LIMIT,
                        required: level_candidates.len() + next.len(),
                    });
                }
                let closed = ext.iter().all(|&i| {
                    let mut sub = ext.clone();
                    sub.remove(&i);
                    frontier.contains(&sub)
                });
                if closed {
                    level_candidates.insert(ext);
                }
            }
        }
        for ext in level_candidates {
            if is_face(ambient, &rays, &ext)? {
                next.insert(ext);
            } else {
                candidates.push(ext);
            }
        }
        frontier = next;
    }
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    // Reduce to the minimal cones. Cone inclusion σ(a) ⊆ σ(b) holds exactly
    // when every ray of `a` lies in σ(b); memberships are memoized.
    let mut member_cache: BTreeMap<(usize, Vec<usize>), bool> = BTreeMap::new();
    let mut member = |i: usize, e: &BTreeSet<usize>| -> bool {
        if e.contains(&i) {
            return true;
        }
        let key = (i, e.iter().copied().collect::<Vec<usize>>());
        if let Some(&hit) = member_cache.get(&key) {
            return hit;
        }
        let gens: Vec<Vec<BigInt>> = e.iter().map(|&j| rays[j].clone()).collect();
        let ans = membership_witness(&gens, &to_rational_vec(&rays[i])).is_some();
        member_cache.insert(key, ans);
        ans
    };
    let mut included = |a: &BTreeSet<usize>, b: &BTreeSet<usize>| -> bool {
        a.iter().all(|&i| member(i, b))
    };

    let m = candidates.len();
    let mut below = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            if a != b {
                below[a][b] = included(&candidates[a], &candidates[b]);
            }
        }
    }
    let mut nonfaces: Vec<BTreeSet<usize>> = Vec::new();
    let mut duplicates: Vec<(BTreeSet<usize>, BTreeSet<usize>)> = Vec::new();
    for b in 0..m {
        // Strictly smaller cone elsewhere ⇒ not minimal.
        let dominated = (0..m).any(|a| a != b && below[a][b] && !below[b][a]);
        if dominated {
            continue;
        }
        // Equal cone seen earlier (candidates are (size, lex)-sorted) ⇒ duplicate.
        if let Some(a) = (0..b).find(|&a| below[a][b] && below[b][a]) {
            duplicates.push((candidates[a].clone(), candidates[b].clone()));
            continue;
        }
        nonfaces.push(candidates[b].clone());
    }

    Ok(NonfaceFamily { ambient, ray_columns, rays, ray_labels, nonfaces, duplicates })
}

/// A point in the intersection of the relative interiors of `cones`, or
/// `None` when that intersection is empty. All cones must share an ambient.
pub fn relint_intersection_witness(
    cones: &[RationalCone],
) -> Result<Option<Vec<BigRational>>, Error> {
    let first = cones.first().ok_or(Error::EmptyInput("relint intersection of no cones"))?;
    let ambient = first.ambient();
    if let Some(bad) = cones.iter().find(|c| c.ambient() != ambient) {
        return Err(Error::DimensionMismatch { expected: ambient, got: bad.ambient() });
    }
    // Shared point x plus one λ-block per cone; λ ≥ 1 encodes strict
    // positivity, valid because a common point can be rescaled.
    let total: usize = ambient + cones.iter().map(|c| c.generators().len()).sum::<usize>();
    let mut sys = LinearSystem::new(total);
    let mut offset = ambient;
    for c in cones {
        let t = c.generators().len();
        for d in 0..ambient {
            let mut row = vec![BigRational::zero(); total];
            row[d] = -BigRational::one();
            for (j, g) in c.generators().iter().enumerate() {
                row[offset + j] = BigRational::from_integer(g[d].clone());
            }
            sys.push_eq(row, BigRational::zero())?;
        }
        for j in 0..t {
            let mut row = vec![BigRational::zero(); total];
            row[offset + j] = BigRational::one();
            sys.push_geq(row, BigRational::one())?;
        }
        offset += t;
    }
    Ok(lp_feasible(&sys).map(|x| x[..ambient].to_vec()))
}

pub fn relint_intersection_nonempty(cones: &[RationalCone]) -> Result<bool, Error> {
    Ok(relint_intersection_witness(cones)?.is_some())
}

/// The linear map `deg_A(x) ↦ deg_B(x)` between degree groups, defined on
/// the rational column span of `source` whenever `ker(source) ⊆ ker(target)`.
#[derive(Clone, Debug)]
pub struct Projection {
    source: IntMatrix,
    target: IntMatrix,
}

/// Builds the projection from `source`-degrees to `target`-degrees.
///
/// Fails with [`Error::NotASpecialization`] unless every integer relation
/// among the source columns is also one among the target columns, the exact
/// condition making the map well-defined.
pub fn projection(
    source: &VectorConfiguration,
    target: &VectorConfiguration,
) -> Result<Projection, Error> {
    if source.len() != target.len() {
        return Err(Error::DimensionMismatch { expected: source.len(), got: target.len() });
    }
    let ker_source = kernel_basis(source.matrix());
    let ker_target = kernel_basis(target.matrix());
    if !ker_target.contains_lattice(&ker_source)? {
        return Err(Error::NotASpecialization);
    }
    Ok(Projection { source: source.matrix().clone(), target: target.matrix().clone() })
}

impl Projection {
    /// Identity projection of a configuration onto itself.
    pub fn identity(cfg: &VectorConfiguration) -> Self {
        Projection { source: cfg.matrix().clone(), target: cfg.matrix().clone() }
    }

    /// Applies the map to `v`, which must lie in the rational column span
    /// of the source matrix ([`Error::NotInSpan`] otherwise).
    pub fn apply_rational(&self, v: &[BigRational]) -> Result<Vec<BigRational>, Error> {
        if v.len() != self.source.rows() {
            return Err(Error::DimensionMismatch { expected: self.source.rows(), got: v.len() });
        }
        let rows: Vec<Vec<BigRational>> =
            (0..self.source.rows()).map(|i| to_rational_vec(&self.source.row(i))).collect();
        let d = solve_exact(&rows, v).ok_or(Error::NotInSpan)?;
        let out = (0..self.target.rows())
            .map(|i| crate::arith::rational_dot(&to_rational_vec(&self.target.row(i)), &d))
            .collect();
        Ok(out)
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigRational>, Error> {
        self.apply_rational(&to_rational_vec(v))
    }

    /// Image cone `π(cone(vecs))`, generated by the images of `vecs`.
    pub fn image_cone(&self, vecs: &[Vec<BigInt>]) -> Result<RationalCone, Error> {
        let mut images = Vec::with_capacity(vecs.len());
        for v in vecs {
            images.push(self.apply(v)?);
        }
        RationalCone::from_rational_vectors(self.target.rows(), &images)
    }
}

/// Primitive integer direction of a rational vector (zero stays zero).
pub fn primitive_direction(v: &[BigRational]) -> Vec<BigInt> {
    primitive_from_rational(v)
}

/// Canonical sign-normalized primitive vector, first nonzero entry positive.
pub fn primitive_line(v: &[BigInt]) -> Vec<BigInt> {
    primitive_signed(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int_vec;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qv(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn square_cone_rays() -> Vec<Vec<BigInt>> {
        // Cone over a square: four extreme rays, opposite pairs non-faces.
        alloc::vec![int_vec(&[1, 0, 1]), int_vec(&[0, 1, 1]), int_vec(&[-1, 0, 1]), int_vec(&[0, -1, 1])]
    }

    #[test]
    fn generators_are_primitive_and_nonzero() {
        let c = RationalCone::from_int_vectors(
            2,
            &[int_vec(&[2, 4]), int_vec(&[0, 0]), int_vec(&[-3, 0])],
        )
        .unwrap();
        assert_eq!(c.generators(), &[int_vec(&[1, 2]), int_vec(&[-1, 0])]);
    }

    #[test]
    fn membership_and_relative_interior_in_the_plane() {
        let c = RationalCone::from_int_vectors(2, &[int_vec(&[1, 0]), int_vec(&[1, 2])]).unwrap();
        assert!(c.contains(&qv(&[1, 1])).unwrap());
        assert!(c.contains(&qv(&[2, 1])).unwrap());
        assert!(!c.contains(&qv(&[-1, 0])).unwrap());
        assert!(!c.contains(&qv(&[0, 1])).unwrap());
        // (1,1) is interior, the ray (1,0) is boundary.
        assert!(c.in_relative_interior(&qv(&[1, 1])).unwrap());
        assert!(!c.in_relative_interior(&qv(&[1, 0])).unwrap());
        assert!(!c.in_relative_interior(&qv(&[0, 0])).unwrap());
    }

    #[test]
    fn zero_cone_cases() {
        let c = RationalCone::from_int_vectors(2, &[]).unwrap();
        assert!(c.contains(&qv(&[0, 0])).unwrap());
        assert!(!c.contains(&qv(&[1, 0])).unwrap());
        assert!(c.in_relative_interior(&qv(&[0, 0])).unwrap());
        assert!(c.is_strongly_convex());
        assert_eq!(c.extreme_ray_indices().unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn strong_convexity_certificates_check_out() {
        let c = RationalCone::from_int_vectors(3, &square_cone_rays()).unwrap();
        match c.strong_convexity() {
            Convexity::StronglyConvex { covector } => {
                for g in c.generators() {
                    let val = crate::arith::rational_dot(&covector, &to_rational_vec(g));
                    assert!(val >= BigRational::one());
                }
            }
            Convexity::NotStronglyConvex { .. } => panic!("square cone is pointed"),
        }

        let flat =
            RationalCone::from_int_vectors(2, &[int_vec(&[1, 0]), int_vec(&[-1, 0]), int_vec(&[0, 1])])
                .unwrap();
        match flat.strong_convexity() {
            Convexity::NotStronglyConvex { line } => {
                let v = to_rational_vec(&line);
                let neg: Vec<BigRational> = v.iter().map(|x| -x.clone()).collect();
                assert!(!crate::arith::is_zero_vec(&line));
                assert!(flat.contains(&v).unwrap());
                assert!(flat.contains(&neg).unwrap());
            }
            Convexity::StronglyConvex { .. } => panic!("contains the x-axis"),
        }
    }

    #[test]
    fn extreme_rays_drop_redundant_and_parallel_generators() {
        // (1,1) is interior, (2,4) repeats the ray of (1,2).
        let c = RationalCone::from_int_vectors(
            2,
            &[int_vec(&[1, 0]), int_vec(&[1, 1]), int_vec(&[1, 2]), int_vec(&[2, 4])],
        )
        .unwrap();
        assert_eq!(c.extreme_ray_indices().unwrap(), alloc::vec![0, 2]);
    }

    #[test]
    fn face_certificates_on_the_square_cone() {
        let rays = square_cone_rays();
        // Adjacent pair: a 2-face.
        let e01 = BTreeSet::from([0usize, 1]);
        let cert = face_certificate(3, &rays, &e01).unwrap().expect("adjacent rays form a face");
        for (j, r) in rays.iter().enumerate() {
            let val = crate::arith::rational_dot(&cert, &to_rational_vec(r));
            if e01.contains(&j) {
                assert!(val.is_zero());
            } else {
                assert!(val >= BigRational::one());
            }
        }
        // Diagonal pairs are not faces; the empty set and singletons are.
        assert!(!is_face(3, &rays, &BTreeSet::from([0usize, 2])).unwrap());
        assert!(!is_face(3, &rays, &BTreeSet::from([1usize, 3])).unwrap());
        assert!(is_face(3, &rays, &BTreeSet::new()).unwrap());
        for i in 0..4 {
            assert!(is_face(3, &rays, &BTreeSet::from([i])).unwrap());
        }
        assert!(face_certificate(3, &rays, &BTreeSet::from([7usize])).is_err());
    }

    #[test]
    fn minimal_nonfaces_of_the_square_cone() {
        // Add a redundant fifth column inside a 2-face; it must not become a ray.
        let cols = alloc::vec![
            int_vec(&[1, 0, 1]),
            int_vec(&[0, 1, 1]),
            int_vec(&[-1, 0, 1]),
            int_vec(&[0, -1, 1]),
            int_vec(&[1, 1, 2]),
        ];
        let cfg = VectorConfiguration::from_columns(3, cols).unwrap();
        let fam = minimal_nonfaces(&cfg).unwrap();
        assert_eq!(fam.ray_columns(), &[0, 1, 2, 3]);
        assert_eq!(
            fam.nonfaces(),
            &[BTreeSet::from([0usize, 2]), BTreeSet::from([1usize, 3])]
        );
        assert!(fam.duplicates().is_empty());
        assert_eq!(fam.label(&fam.nonfaces()[0]), "{1,3}");
        // σ of a non-face is the whole vertical axis' upper half-plane slab;
        // sanity: it contains both defining rays.
        let sigma = fam.sigma(&fam.nonfaces()[0]).unwrap();
        assert!(sigma.contains(&qv(&[1, 0, 1])).unwrap());
        assert!(sigma.contains(&qv(&[-1, 0, 1])).unwrap());
    }

    #[test]
    fn nonfaces_reject_non_pointed_cones() {
        let cfg = VectorConfiguration::from_columns(
            1,
            alloc::vec![int_vec(&[1]), int_vec(&[-1])],
        )
        .unwrap();
        assert!(matches!(minimal_nonfaces(&cfg), Err(Error::NotStronglyConvex)));
    }

    #[test]
    fn relint_intersections() {
        let quadrant =
            RationalCone::from_int_vectors(2, &[int_vec(&[1, 0]), int_vec(&[0, 1])]).unwrap();
        let diagonal = RationalCone::from_int_vectors(2, &[int_vec(&[1, 1])]).unwrap();
        let axis = RationalCone::from_int_vectors(2, &[int_vec(&[1, 0])]).unwrap();

        let w = relint_intersection_witness(&[quadrant.clone(), diagonal.clone()])
            .unwrap()
            .expect("open quadrant meets open diagonal");
        assert!(quadrant.in_relative_interior(&w).unwrap());
        assert!(diagonal.in_relative_interior(&w).unwrap());

        // The x-axis ray is boundary of the quadrant: relints are disjoint.
        assert!(relint_intersection_witness(&[quadrant.clone(), axis.clone()]).unwrap().is_none());
        // A cone always meets itself.
        assert!(relint_intersection_nonempty(&[axis.clone(), axis.clone()]).unwrap());
        assert!(relint_intersection_witness(&[]).is_err());
    }

    #[test]
    fn projection_well_defined_and_guarded() {
        let id2 = VectorConfiguration::from_columns(2, alloc::vec![int_vec(&[1, 0]), int_vec(&[0, 1])])
            .unwrap();
        let sum = VectorConfiguration::from_columns(1, alloc::vec![int_vec(&[1]), int_vec(&[1])])
            .unwrap();
        // ker(id) = 0 ⊆ ker(sum): specialization; π(v) = v₁ + v₂.
        let pi = projection(&id2, &sum).unwrap();
        assert_eq!(pi.apply(&int_vec(&[2, 3])).unwrap(), qv(&[5]));
        // The reverse direction is not a specialization.
        assert!(matches!(projection(&sum, &id2), Err(Error::NotASpecialization)));

        // Vectors outside the column span are rejected.
        let zero = VectorConfiguration::from_columns(1, alloc::vec![int_vec(&[0]), int_vec(&[0])])
            .unwrap();
        let pi0 = projection(&zero, &zero).unwrap();
        assert!(matches!(pi0.apply(&int_vec(&[1])), Err(Error::NotInSpan)));

        let img = pi.image_cone(&[int_vec(&[1, 0]), int_vec(&[0, 2])]).unwrap();
        assert_eq!(img.generators(), &[int_vec(&[1]), int_vec(&[1])]);
        assert!(img.contains(&qv(&[3])).unwrap());
    }

    #[test]
    fn identity_projection_fixes_degrees() {
        let cfg = VectorConfiguration::from_columns(
            2,
            alloc::vec![int_vec(&[1, 2]), int_vec(&[3, 4]), int_vec(&[5, 6])],
        )
        .unwrap();
        let pi = Projection::identity(&cfg);
        assert_eq!(pi.apply(&int_vec(&[1, 2])).unwrap(), qv(&[1, 2]));
    }
}

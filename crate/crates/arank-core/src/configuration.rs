//! Vector configurations: ordered tuples of integer vectors that record the
//! degrees of the ambient polynomial variables, together with their
//! circuits and the cone attached to a monomial.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{is_zero_vec, primitive_signed};
use crate::cone::NonfaceFamily;
use crate::error::Error;
use crate::lattice::{kernel_basis, Lattice};
use crate::mat::IntMatrix;

/// Largest column count accepted by the circuit enumeration.
pub const CIRCUIT_BUDGET: usize = 20;
/// Internal cap on candidate sets examined by combinatorial sweeps.
const CANDIDATE_LIMIT: usize = 200_000;
/// Largest ray count accepted by the definitional monomial-cone search.
const MONOMIAL_CONE_BUDGET: usize = 16;

/// A configuration `A = (a_1, …, a_n)` of vectors in `Z^m`, stored as the
/// columns of an `m × n` matrix, optionally with display labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfiguration {
    matrix: IntMatrix,
    labels: Option<Vec<String>>,
}

impl VectorConfiguration {
    /// The configuration of the columns of `m`.
    pub fn from_matrix(m: &IntMatrix) -> Self {
        VectorConfiguration { matrix: m.clone(), labels: None }
    }

    pub fn from_columns(ambient: usize, cols: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        Ok(VectorConfiguration { matrix: IntMatrix::from_cols(ambient, cols)?, labels: None })
    }

    /// Attaches one display label per column.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Dimension of the ambient group `Z^m`.
    pub fn ambient(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of vectors.
    pub fn len(&self) -> usize {
        self.matrix.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.matrix.col(j)
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        self.matrix.col_vecs()
    }

    /// Display label of column `j`: the attached label, else the 1-based
    /// column number.
    pub fn label(&self, j: usize) -> String {
        match &self.labels {
            Some(ls) => ls[j].clone(),
            None => (j + 1).to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|j| self.label(j)).collect()
    }

    /// Degree `A·u` of the monomial `x^u`.
    pub fn degree(&self, u: &[BigInt]) -> Result<Vec<BigInt>, Error> {
        self.matrix.mul_vec(u)
    }

    /// The integer kernel `{u : A·u = 0}`, i.e. the saturated relation
    /// lattice of the configuration.
    pub fn kernel(&self) -> Lattice {
        kernel_basis(&self.matrix)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Height of the lattice ideal `I_L`: the rank of its lattice. For the
/// configuration of a connected bipartite graph this is `|E| − |V| + 1`.
pub fn height(l: &Lattice) -> usize {
    l.rank()
}

/// A circuit of a configuration: a primitive integer relation of minimal
/// nonzero support, sign-normalized so its first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Circuit {
    vector: Vec<BigInt>,
}

impl Circuit {
    /// Crate-internal constructor: the caller guarantees the circuit
    /// invariants (primitive, sign-normalized, minimal support).
    pub(crate) fn from_vector(vector: Vec<BigInt>) -> Self {
        Circuit { vector }
    }

    pub fn vector(&self) -> &[BigInt] {
        &self.vector
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.vector
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, _)| j)
            .collect()
    }

    /// Componentwise positive part `u₊`.
    pub fn positive_part(&self) -> Vec<BigInt> {
        self.vector.iter().map(|x| if x.is_positive() { x.clone() } else { BigInt::ZERO }).collect()
    }

    /// Componentwise negative part `u₋` (so `u = u₊ − u₋`).
    pub fn negative_part(&self) -> Vec<BigInt> {
        self.vector.iter().map(|x| if x.is_negative() { -x.clone() } else { BigInt::ZERO }).collect()
    }

    /// The circuit binomial `x^{u₊} − x^{u₋}`.
    pub fn binomial(&self) -> crate::poly::Polynomial {
        crate::poly::Polynomial::binomial_difference(
            self.vector.len(),
            self.positive_part(),
            self.negative_part(),
        )
        .expect("circuit parts are distinct")
    }

    /// Rendering such as `x12*x34 - x14*x23` using the configuration's
    /// column labels.
    pub fn binomial_string(&self, cfg: &VectorConfiguration) -> String {
        self.binomial().render(Some(&cfg.labels()))
    }
}

/// All circuits of `cfg`, sorted by (support size, support lex).
///
/// Levelwise search over column subsets: a subset is examined only when all
/// its proper subsets are independent, so each dependent set found has
/// one-dimensional kernel with full support — a circuit. Column counts
/// beyond [`CIRCUIT_BUDGET`] are rejected.
pub fn circuits(cfg: &VectorConfiguration) -> Result<Vec<Circuit>, Error> {
    let n = cfg.len();
    if n > CIRCUIT_BUDGET {
        return Err(Error::BudgetExceeded { budget: CIRCUIT_BUDGET, required: n });
    }
    let cols = cfg.columns();
    let mut out: Vec<Circuit> = Vec::new();
    let mut indep: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for j in 0..n {
        if is_zero_vec(&cols[j]) {
            let mut v = alloc::vec![BigInt::ZERO; n];
            v[j] = BigInt::from(1);
            out.push(Circuit { vector: v });
        } else {
            indep.insert(BTreeSet::from([j]));
        }
    }
    let max_level = cfg.rank() + 1;
    for size in 2..=max_level.min(n) {
        let mut next: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut candidates: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for s in &indep {
            let max = *s.iter().next_back().expect("independent sets at level ≥ 1");
            for j in max + 1..n {
                let mut t = s.clone();
                t.insert(j);
                if candidates.len() > CANDIDATE_LIMIT {
                    return Err(Error::BudgetExceeded {
                        budget: CANDIDATE_LIMIT,
                        required: candidates.len(),
                    });
                }
                let closed = t.iter().all(|&i| {
                    let mut sub = t.clone();
                    sub.remove(&i);
                    indep.contains(&sub)
                });
                if closed {
                    candidates.insert(t);
                }
            }
        }
        for t in candidates {
            let selected: Vec<Vec<BigInt>> = t.iter().map(|&j| cols[j].clone()).collect();
            let sub = IntMatrix::from_cols(cfg.ambient(), selected)?;
            let r = sub.rank();
            if r == size {
                next.insert(t);
            } else {
                // All proper subsets independent forces rank = size − 1 and a
                // one-dimensional kernel supported on all of `t`.
                debug_assert_eq!(r, size - 1);
                let ker = kernel_basis(&sub);
                debug_assert_eq!(ker.rank(), 1);
                let local = ker.basis().row(0);
                let mut v = alloc::vec![BigInt::ZERO; n];
                for (slot, &j) in local.iter().zip(t.iter()) {
                    v[j] = slot.clone();
                }
                let v = primitive_signed(&v);
                debug_assert_eq!(
                    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).count(),
                    size
                );
                out.push(Circuit { vector: v });
            }
        }
        indep = next;
        if indep.is_empty() {
            break;
        }
    }
    out.sort_by(|a, b| {
        let (sa, sb) = (a.support(), b.support());
        sa.len().cmp(&sb.len()).then_with(|| sa.cmp(&sb)).then_with(|| a.vector.cmp(&b.vector))
    });
    Ok(out)
}

/// The minimal non-face `E_i` with `cone(N(x^u)) = σ(E_i)`, if any.
///
/// Fast criterion: `deg_A(u) ∈ relint σ(E_i)`. When that pins down a unique
/// candidate the answer is immediate; if several relative interiors contain
/// the degree (they may overlap — non-faces are not faces), the
/// definitional search adjudicates.
pub fn cone_of_monomial(
    u: &[BigInt],
    cfg: &VectorConfiguration,
    nf: &NonfaceFamily,
) -> Result<Option<usize>, Error> {
    check_exponents(u, cfg)?;
    let deg = cfg.degree(u)?;
    let mut matches = Vec::new();
    for (i, e) in nf.nonfaces().iter().enumerate() {
        if nf.sigma(e)?.in_relative_interior_int(&deg)? {
            matches.push(i);
        }
    }
    match matches.len() {
        0 => Ok(None),
        1 => Ok(Some(matches[0])),
        _ => cone_of_monomial_definitional(u, cfg, nf),
    }
}

/// Definitional computation of `cone(N(x^u))`: the intersection of all
/// cones `σ(E)`, `E ⊆ {rays}`, containing the configuration vectors of the
/// support of `u`. Returns `Some(i)` exactly when that intersection equals
/// `σ(E_i)` for a (necessarily unique) minimal non-face `E_i`, certified by
/// `A_N ⊆ σ(E_i)` together with `σ(E_i) ⊆ σ(E)` for every containing `E`.
pub fn cone_of_monomial_definitional(
    u: &[BigInt],
    cfg: &VectorConfiguration,
    nf: &NonfaceFamily,
) -> Result<Option<usize>, Error> {
    check_exponents(u, cfg)?;
    let t = nf.rays().len();
    if t > MONOMIAL_CONE_BUDGET {
        return Err(Error::BudgetExceeded { budget: MONOMIAL_CONE_BUDGET, required: t });
    }
    let support_cols: Vec<Vec<BigInt>> = u
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(j, _)| cfg.column(j))
        .collect();

    // Membership of a fixed vector in σ(E), memoized over (vector id, E).
    type Cache = BTreeMap<(usize, Vec<usize>), bool>;
    let mut cache: Cache = BTreeMap::new();
    let mut vectors: Vec<Vec<BigInt>> = support_cols.clone();
    let ray_vec_ids: Vec<usize> = (0..t)
        .map(|r| {
            vectors.push(nf.rays()[r].clone());
            support_cols.len() + r
        })
        .collect();
    fn in_sigma(
        cache: &mut Cache,
        vectors: &[Vec<BigInt>],
        vid: usize,
        e: &BTreeSet<usize>,
        nf: &NonfaceFamily,
    ) -> Result<bool, Error> {
        let key = (vid, e.iter().copied().collect::<Vec<usize>>());
        if let Some(&hit) = cache.get(&key) {
            return Ok(hit);
        }
        let ans = nf.sigma(e)?.contains_int(&vectors[vid])?;
        cache.insert(key, ans);
        Ok(ans)
    }
    fn contains_support(
        cache: &mut Cache,
        vectors: &[Vec<BigInt>],
        support_len: usize,
        e: &BTreeSet<usize>,
        nf: &NonfaceFamily,
    ) -> Result<bool, Error> {
        for vid in 0..support_len {
            if !in_sigma(cache, vectors, vid, e, nf)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    let support_len = support_cols.len();

    // The family {E : A_N ⊆ σ(E)} is upward closed, so the intersection of
    // its cones equals the intersection over its set-minimal members.
    // Those are enumerated by greedy shrinking with exclusion branching:
    // any minimal member other than one already found must avoid one of its
    // elements, so branching on each element of every found member is
    // exhaustive.  (An empty family means the intersection is the whole
    // space, which is never a non-face cone.)
    fn eval(
        cache: &mut Cache,
        vectors: &[Vec<BigInt>],
        support_len: usize,
        e: &BTreeSet<usize>,
        nf: &NonfaceFamily,
        examined: &mut usize,
    ) -> Result<bool, Error> {
        *examined += 1;
        if *examined > CANDIDATE_LIMIT {
            return Err(Error::BudgetExceeded { budget: CANDIDATE_LIMIT, required: *examined });
        }
        contains_support(cache, vectors, support_len, e, nf)
    }
    let full: BTreeSet<usize> = (0..t).collect();
    let mut minimal: Vec<BTreeSet<usize>> = Vec::new();
    let mut examined = 0usize;
    if !eval(&mut cache, &vectors, support_len, &full, nf, &mut examined)? {
        return Ok(None);
    }
    let mut stack: Vec<BTreeSet<usize>> = alloc::vec![BTreeSet::new()];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    while let Some(excluded) = stack.pop() {
        if !seen.insert(excluded.iter().copied().collect()) {
            continue;
        }
        let mut e: BTreeSet<usize> = full.difference(&excluded).copied().collect();
        if !eval(&mut cache, &vectors, support_len, &e, nf, &mut examined)? {
            continue;
        }
        for r in e.clone() {
            let mut smaller = e.clone();
            smaller.remove(&r);
            if eval(&mut cache, &vectors, support_len, &smaller, nf, &mut examined)? {
                e = smaller;
            }
        }
        for &r in &e {
            let mut ex = excluded.clone();
            ex.insert(r);
            stack.push(ex);
        }
        if !minimal.contains(&e) {
            minimal.push(e);
        }
    }

    // Candidate check per the definition.
    let mut answer = None;
    for (i, e_i) in nf.nonfaces().iter().enumerate() {
        if !contains_support(&mut cache, &vectors, support_len, e_i, nf)? {
            continue;
        }
        let mut inside_all = true;
        for m in &minimal {
            for &r in e_i {
                if !in_sigma(&mut cache, &vectors, ray_vec_ids[r], m, nf)? {
                    inside_all = false;
                    break;
                }
            }
            if !inside_all {
                break;
            }
        }
        if inside_all {
            debug_assert!(answer.is_none(), "minimal non-face cones are pairwise distinct");
            answer = Some(i);
            #[cfg(not(debug_assertions))]
            break;
        }
    }
    Ok(answer)
}

fn check_exponents(u: &[BigInt], cfg: &VectorConfiguration) -> Result<(), Error> {
    if u.len() != cfg.len() {
        return Err(Error::DimensionMismatch { expected: cfg.len(), got: u.len() });
    }
    if u.iter().any(|e| e.is_negative()) {
        return Err(Error::NegativeExponent);
    }
    Ok(())
}

//! Simplicial complexes attached to a specialization of gradings: the
//! complex `D_F^G` on the minimal non-faces, its polynomial subcomplexes,
//! skeleton complements, and the cover-condition checks.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cone::{
    relint_intersection_nonempty, NonfaceFamily, Projection, RationalCone,
};
use crate::configuration::{cone_of_monomial, VectorConfiguration};
use crate::error::Error;
use crate::grading::Grading;
use crate::graph::Graph;
use crate::poly::Polynomial;

/// Vertex-count threshold up to which the exact levelwise face sweep runs;
/// beyond it facets are found by greedy seeded expansion to a fixpoint.
pub const EXACT_SWEEP_LIMIT: usize = 24;

/// A finite simplicial complex over globally numbered vertices. A set is a
/// face iff it is contained in some facet; facets are maximal, pairwise
/// incomparable, and jointly cover the vertex set (isolated vertices appear
/// as singleton facets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    labels: Vec<String>,
    facets: Vec<BTreeSet<usize>>,
}

impl SimplicialComplex {
    /// Normalizing constructor: drops non-maximal and duplicate facets,
    /// adds singletons for uncovered vertices, sorts everything.
    pub fn from_facets(
        vertices: Vec<usize>,
        labels: Vec<String>,
        facets: Vec<BTreeSet<usize>>,
    ) -> Result<Self, Error> {
        if labels.len() != vertices.len() {
            return Err(Error::DimensionMismatch { expected: vertices.len(), got: labels.len() });
        }
        let mut pairs: Vec<(usize, String)> =
            vertices.into_iter().zip(labels.into_iter()).collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::EmptyInput("duplicate vertex id"));
        }
        let (vertices, labels): (Vec<usize>, Vec<String>) = pairs.into_iter().unzip();
        let vertex_set: BTreeSet<usize> = vertices.iter().copied().collect();
        for f in &facets {
            if let Some(&bad) = f.iter().find(|v| !vertex_set.contains(v)) {
                return Err(Error::IndexOutOfRange { index: bad, len: vertices.len() });
            }
        }
        let mut covered: BTreeSet<usize> = facets.iter().flatten().copied().collect();
        let mut all = facets;
        for &v in &vertices {
            if !covered.contains(&v) {
                all.push(BTreeSet::from([v]));
                covered.insert(v);
            }
        }
        let mut maximal: Vec<BTreeSet<usize>> = Vec::new();
        for f in &all {
            if f.is_empty() {
                continue;
            }
            if all.iter().any(|g| f != g && f.is_subset(g)) {
                continue;
            }
            if !maximal.contains(f) {
                maximal.push(f.clone());
            }
        }
        maximal.sort();
        Ok(SimplicialComplex { vertices, labels, facets: maximal })
    }

    pub fn empty() -> Self {
        SimplicialComplex { vertices: Vec::new(), labels: Vec::new(), facets: Vec::new() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_of(&self, vertex: usize) -> Option<&str> {
        self.vertices.binary_search(&vertex).ok().map(|p| self.labels[p].as_str())
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension (largest facet size − 1); `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    /// Is `t` a face (contained in some facet)? The empty set always is.
    pub fn is_face(&self, t: &BTreeSet<usize>) -> bool {
        t.is_empty() || self.facets.iter().any(|f| t.is_subset(f))
    }

    /// A simplex is a complex whose full vertex set is a face; the empty
    /// complex counts as a simplex.
    pub fn is_simplex(&self) -> bool {
        let all: BTreeSet<usize> = self.vertices.iter().copied().collect();
        self.is_face(&all)
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.vertices.iter().all(|v| other.vertices.binary_search(v).is_ok())
            && self.facets.iter().all(|f| other.is_face(f))
    }

    /// Spanning = same vertex set; requires `self ⊆ other` as complexes.
    pub fn is_spanning_in(&self, other: &SimplicialComplex) -> Result<bool, Error> {
        if !self.is_subcomplex_of(other) {
            return Err(Error::NotASubcomplex);
        }
        Ok(self.vertices == other.vertices)
    }

    /// The subcomplex induced on `keep ∩ vertices`.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> SimplicialComplex {
        let vertices: Vec<usize> =
            self.vertices.iter().copied().filter(|v| keep.contains(v)).collect();
        let labels: Vec<String> = self
            .vertices
            .iter()
            .zip(&self.labels)
            .filter(|(v, _)| keep.contains(v))
            .map(|(_, l)| l.clone())
            .collect();
        let facets: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|f| f.intersection(keep).copied().collect::<BTreeSet<usize>>())
            .filter(|f| !f.is_empty())
            .collect();
        SimplicialComplex::from_facets(vertices, labels, facets)
            .expect("induced data is consistent")
    }
}

/// Builds `D_F^G`: one vertex per minimal non-face `E_i` of `σ(cfg)`; a set
/// `T` is a face exactly when the relative interiors of the projected
/// cones `π(σ(E_i))`, `i ∈ T`, intersect (decided by one joint LP per set).
///
/// Up to [`EXACT_SWEEP_LIMIT`] vertices every face is enumerated levelwise
/// (each reported facet and each of its one-larger non-faces is
/// LP-verified); beyond that, facets come from greedy seeded expansion run
/// to a fixpoint, which is sound but may miss facets.
pub fn build_complex(
    cfg: &VectorConfiguration,
    proj: &Projection,
    nf: &NonfaceFamily,
) -> Result<SimplicialComplex, Error> {
    build_complex_with_limit(cfg, proj, nf, EXACT_SWEEP_LIMIT)
}

pub(crate) fn build_complex_with_limit(
    cfg: &VectorConfiguration,
    proj: &Projection,
    nf: &NonfaceFamily,
    exact_limit: usize,
) -> Result<SimplicialComplex, Error> {
    if cfg.ambient() != nf.ambient() {
        return Err(Error::DimensionMismatch { expected: cfg.ambient(), got: nf.ambient() });
    }
    let f = nf.count();
    let mut cones: Vec<RationalCone> = Vec::with_capacity(f);
    for e in nf.nonfaces() {
        let gens: Vec<_> = e.iter().map(|&j| nf.rays()[j].clone()).collect();
        cones.push(proj.image_cone(&gens)?);
    }
    let labels: Vec<String> = nf.nonfaces().iter().map(|e| nf.label(e)).collect();
    let vertices: Vec<usize> = (0..f).collect();

    let joint_face = |t: &BTreeSet<usize>| -> Result<bool, Error> {
        let selected: Vec<RationalCone> = t.iter().map(|&i| cones[i].clone()).collect();
        relint_intersection_nonempty(&selected)
    };

    let facets: Vec<BTreeSet<usize>> = if f <= exact_limit {
        let mut faces: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut frontier: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for i in 0..f {
            let single = BTreeSet::from([i]);
            if joint_face(&single)? {
                frontier.insert(single);
            }
        }
        while !frontier.is_empty() {
            faces.extend(frontier.iter().cloned());
            let mut next: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            let mut candidates: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            for s in &frontier {
                let max = *s.iter().next_back().expect("nonempty frontier face");
                for j in max + 1..f {
                    let mut ext = s.clone();
                    ext.insert(j);
                    let closed = ext.iter().all(|&i| {
                        let mut sub = ext.clone();
                        sub.remove(&i);
                        frontier.contains(&sub)
                    });
                    if closed {
                        candidates.insert(ext);
                    }
                }
            }
            for ext in candidates {
                if joint_face(&ext)? {
                    next.insert(ext);
                }
            }
            frontier = next;
        }
        faces
            .iter()
            .filter(|t| {
                !(0..f).any(|j| {
                    if t.contains(&j) {
                        return false;
                    }
                    let mut bigger = (*t).clone();
                    bigger.insert(j);
                    faces.contains(&bigger)
                })
            })
            .cloned()
            .collect()
    } else {
        let mut found: Vec<BTreeSet<usize>> = Vec::new();
        for seed in 0..f {
            let single = BTreeSet::from([seed]);
            if !joint_face(&single)? {
                continue;
            }
            let mut face = single;
            // Greedy expansion to a fixpoint; the final full pass is the
            // exhaustive cannot-extend verification.
            loop {
                let mut grown = false;
                for w in 0..f {
                    if face.contains(&w) {
                        continue;
                    }
                    let mut ext = face.clone();
                    ext.insert(w);
                    if joint_face(&ext)? {
                        face = ext;
                        grown = true;
                    }
                }
                if !grown {
                    break;
                }
            }
            if !found.contains(&face) {
                found.push(face);
            }
        }
        found
    };

    SimplicialComplex::from_facets(vertices, labels, facets)
}

/// The subcomplex of `parent` induced on the vertices `E_i` realized as
/// `cone(N)` of some monomial of `poly`.
pub fn polynomial_subcomplex(
    parent: &SimplicialComplex,
    poly: &Polynomial,
    cfg: &VectorConfiguration,
    nf: &NonfaceFamily,
) -> Result<SimplicialComplex, Error> {
    let mut keep: BTreeSet<usize> = BTreeSet::new();
    for exp in poly.exponents() {
        if let Some(i) = cone_of_monomial(exp, cfg, nf)? {
            keep.insert(i);
        }
    }
    Ok(parent.induced(&keep))
}

/// Complement of the 0/1-skeleton: a graph on the complex's vertices (as
/// `1..=count` in vertex order) with an edge wherever a pair is NOT a face.
pub fn skeleton_complement(c: &SimplicialComplex) -> Graph {
    let n = c.vertex_count();
    let mut edges = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            let pair = BTreeSet::from([c.vertices()[p], c.vertices()[q]]);
            if !c.is_face(&pair) {
                edges.push((p + 1, q + 1));
            }
        }
    }
    Graph::new(n, edges).expect("complement edges are valid by construction")
}

/// Per-polynomial verdict of the cover-condition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyCoverReport {
    pub homogeneous: bool,
    /// Vertices of the polynomial's subcomplex (global ids in `parent`).
    pub vertices: Vec<usize>,
    pub is_simplex: bool,
}

/// Necessary conditions for a polynomial set to cut out the lattice ideal
/// up to radical: the union of subcomplexes spans `parent`, and each
/// homogeneous polynomial's subcomplex is a simplex. Can refute, never
/// certify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub per_poly: Vec<PolyCoverReport>,
    pub spanning: bool,
    pub uncovered: Vec<usize>,
    pub satisfied: bool,
}

pub fn verify_cover_conditions(
    polys: &[Polynomial],
    f: &Grading,
    parent: &SimplicialComplex,
    cfg: &VectorConfiguration,
    nf: &NonfaceFamily,
) -> Result<CoverReport, Error> {
    let mut per_poly = Vec::with_capacity(polys.len());
    let mut union: BTreeSet<usize> = BTreeSet::new();
    for p in polys {
        let homogeneous = f.is_homogeneous(p)?;
        let sub = polynomial_subcomplex(parent, p, cfg, nf)?;
        union.extend(sub.vertices().iter().copied());
        per_poly.push(PolyCoverReport {
            homogeneous,
            vertices: sub.vertices().to_vec(),
            is_simplex: sub.is_simplex(),
        });
    }
    let uncovered: Vec<usize> =
        parent.vertices().iter().copied().filter(|v| !union.contains(v)).collect();
    let spanning = uncovered.is_empty();
    let satisfied =
        spanning && per_poly.iter().all(|r| !r.homogeneous || r.is_simplex);
    Ok(CoverReport { per_poly, spanning, uncovered, satisfied })
}

/// Convenience: builds everything needed for complexes of a specialization
/// pair (used by the CLI and tests): non-faces of `σ(A_G)` and the
/// projection `deg_G → deg_F`.
pub struct ComplexContext {
    pub nonfaces: NonfaceFamily,
    pub projection: Projection,
}

impl ComplexContext {
    pub fn for_pair(g: &Grading, f: &Grading) -> Result<Self, Error> {
        if !f.is_specialization_of(g)? {
            return Err(Error::NotASpecialization);
        }
        let nonfaces = crate::cone::minimal_nonfaces(g.configuration())?;
        let projection = crate::cone::projection(g.configuration(), f.configuration())?;
        Ok(ComplexContext { nonfaces, projection })
    }

    pub fn identity(g: &Grading) -> Result<Self, Error> {
        let nonfaces = crate::cone::minimal_nonfaces(g.configuration())?;
        let projection = Projection::identity(g.configuration());
        Ok(ComplexContext { nonfaces, projection })
    }
}

//! Combinatorial lower bounds for the arithmetical rank: `δ` (minimum
//! number of faces covering the vertices, witnessed by an Ω-matching) and
//! the assembled bound report combining `γ`, `δ`, the height, the floors,
//! and user-supplied homogeneous generating sets.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::complex::{build_complex, skeleton_complement, SimplicialComplex};
use crate::cone::{minimal_nonfaces, projection};
use crate::error::Error;
use crate::grading::Grading;
use crate::graph::{chromatic_number_with_stop, ChromaticResult};
use crate::poly::Polynomial;

/// How many branch-and-bound nodes to expand between stop-callback polls.
const STOP_POLL_INTERVAL: u64 = 1024;

/// A family of pairwise-disjoint nonempty faces covering every vertex; its
/// cardinality witnesses `δ` from above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMatching {
    pub faces: Vec<BTreeSet<usize>>,
}

impl OmegaMatching {
    /// Checks the witness against `c`: faces nonempty, pairwise disjoint,
    /// each a face of `c`, union = all vertices.
    pub fn verify(&self, c: &SimplicialComplex) -> bool {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        for face in &self.faces {
            if face.is_empty() || !c.is_face(face) {
                return false;
            }
            if face.iter().any(|v| seen.contains(v)) {
                return false;
            }
            seen.extend(face.iter().copied());
        }
        seen.len() == c.vertex_count()
    }
}

/// Result of the δ computation. When `certified`, `lower == upper` is the
/// exact value; otherwise the search was stopped and only the bracket is
/// known. The matching always witnesses `upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaResult {
    pub lower: usize,
    pub upper: usize,
    pub certified: bool,
    pub matching: OmegaMatching,
}

impl DeltaResult {
    pub fn value(&self) -> Option<usize> {
        self.certified.then_some(self.upper)
    }
}

pub fn delta_omega(c: &SimplicialComplex) -> DeltaResult {
    delta_omega_with_stop(c, &mut || false)
}

/// Exact minimum face cover of the vertices by branch and bound over the
/// facets, then shrunk to an Ω-matching (pairwise-disjoint faces) of the
/// same cardinality. `stop` is polled periodically; returning `true`
/// aborts the proof and yields an uncertified bracket (unless the proven
/// endpoints already coincide, in which case the value stands).
pub fn delta_omega_with_stop(
    c: &SimplicialComplex,
    stop: &mut dyn FnMut() -> bool,
) -> DeltaResult {
    let n = c.vertex_count();
    if n == 0 {
        return DeltaResult {
            lower: 0,
            upper: 0,
            certified: true,
            matching: OmegaMatching { faces: Vec::new() },
        };
    }
    let facets = c.facets();
    let universe: BTreeSet<usize> = c.vertices().iter().copied().collect();
    let max_facet = facets.iter().map(|f| f.len()).max().unwrap_or(1);
    let covering: alloc::collections::BTreeMap<usize, Vec<usize>> = universe
        .iter()
        .map(|&v| {
            let fs = facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains(&v))
                .map(|(i, _)| i)
                .collect();
            (v, fs)
        })
        .collect();

    // Greedy cover: repeatedly the facet covering the most uncovered
    // vertices (ties to the lowest index). Each pick covers something new,
    // so the sequential differences below stay nonempty.
    let mut greedy: Vec<usize> = Vec::new();
    let mut uncovered = universe.clone();
    while !uncovered.is_empty() {
        let (best, _) = facets
            .iter()
            .enumerate()
            .map(|(i, f)| (i, f.intersection(&uncovered).count()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("complex has facets when vertices exist");
        for v in &facets[best] {
            uncovered.remove(v);
        }
        greedy.push(best);
    }

    let trivial_lower = n.div_ceil(max_facet);
    let mut best = greedy.clone();
    let mut nodes: u64 = 0;
    let mut aborted = false;
    let mut chosen: Vec<usize> = Vec::new();

    fn search(
        facets: &[BTreeSet<usize>],
        covering: &alloc::collections::BTreeMap<usize, Vec<usize>>,
        max_facet: usize,
        uncovered: &BTreeSet<usize>,
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
        nodes: &mut u64,
        aborted: &mut bool,
        stop: &mut dyn FnMut() -> bool,
    ) {
        if *aborted {
            return;
        }
        *nodes += 1;
        if *nodes % STOP_POLL_INTERVAL == 1 && stop() {
            *aborted = true;
            return;
        }
        if uncovered.is_empty() {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
            return;
        }
        if chosen.len() + uncovered.len().div_ceil(max_facet) >= best.len() {
            return;
        }
        // Branch on the uncovered vertex with the fewest covering facets.
        let v = *uncovered
            .iter()
            .min_by_key(|v| covering[v].len())
            .expect("uncovered nonempty");
        for &fi in &covering[&v] {
            let rest: BTreeSet<usize> =
                uncovered.difference(&facets[fi]).copied().collect();
            chosen.push(fi);
            search(facets, covering, max_facet, &rest, chosen, best, nodes, aborted, stop);
            chosen.pop();
            if *aborted {
                return;
            }
        }
    }

    search(
        facets,
        &covering,
        max_facet,
        &universe,
        &mut chosen,
        &mut best,
        &mut nodes,
        &mut aborted,
        stop,
    );

    // Shrink the cover to pairwise-disjoint faces: every pick covered a
    // vertex new at its turn, so each difference is nonempty, and subsets
    // of facets are faces.
    let mut faces: Vec<BTreeSet<usize>> = Vec::new();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for &fi in &best {
        let part: BTreeSet<usize> = facets[fi].difference(&seen).copied().collect();
        seen.extend(part.iter().copied());
        if !part.is_empty() {
            faces.push(part);
        }
    }
    let matching = OmegaMatching { faces };
    debug_assert!(matching.verify(c));
    let upper = matching.faces.len();
    let lower = if aborted { trivial_lower.min(upper) } else { upper };
    // Both endpoints are proven even after an abort (the matching is a real
    // cover, the counting bound a real floor), so a closed bracket is exact.
    DeltaResult { lower, upper, certified: !aborted || lower == upper, matching }
}

/// One user-supplied generating set, measured against the grading pair and
/// the floors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSetReport {
    pub name: String,
    pub cardinality: usize,
    /// Every member homogeneous for the specialized grading F.
    pub all_f_homogeneous: bool,
    /// Every member homogeneous for the saturation grading of F.
    pub all_sat_homogeneous: bool,
    pub total_monomials: usize,
    /// Total number of F-homogeneous components over all members.
    pub total_f_components: usize,
    /// `total_monomials ≥` vertex count of `D_G^G`.
    pub monomial_floor_met: bool,
    /// `total_f_components ≥ δ(D_F^G)`.
    pub component_floor_met: bool,
}

impl GeneratorSetReport {
    /// Which arithmetical rank this set's cardinality bounds from above:
    /// the F-graded one (implying the saturation-graded one as well), only
    /// the saturation-graded one, or neither.
    pub fn certifies(&self) -> &'static str {
        if self.all_f_homogeneous {
            "F"
        } else if self.all_sat_homogeneous {
            "saturation"
        } else {
            "none"
        }
    }
}

/// The assembled bounds for a specialization pair `F ≤ G`: the complex
/// `D_F^G`, `γ` of its skeleton complement, `δ` with witness, the height
/// of the lattice ideal, both floors, and the generator-set audits.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub complex: SimplicialComplex,
    pub gamma: ChromaticResult,
    pub delta: DeltaResult,
    pub height: usize,
    /// Vertex count of `D_G^G`: every monomial count of a generating set
    /// of the lattice ideal up to radical is at least this.
    pub monomial_floor: usize,
    /// `δ(D_F^G)`: floor for the total number of F-homogeneous components.
    pub component_floor: usize,
    pub generator_sets: Vec<GeneratorSetReport>,
    /// `max(γ, δ, height)` over the proven lower bounds.
    pub lower_bound: usize,
    /// Smallest cardinality among fully F-homogeneous generator sets.
    pub best_upper: Option<usize>,
    /// Height strictly below a proven lower bound: the ideal is not an
    /// F-homogeneous set-theoretic complete intersection.
    pub not_f_homogeneous_stci: bool,
    pub certified: bool,
}

impl BoundReport {
    /// The bracket `height ≤ max(γ, δ) ≤ best upper`, e.g. `5 <= 7 <= 7`.
    pub fn chain(&self) -> String {
        let mid = self.lower_bound;
        match self.best_upper {
            Some(u) => alloc::format!("{} <= {} <= {}", self.height, mid, u),
            None => alloc::format!("{} <= {}", self.height, mid),
        }
    }

    pub fn conclusion(&self) -> String {
        if self.not_f_homogeneous_stci {
            alloc::format!(
                "not an F-homogeneous set-theoretic complete intersection \
                 (height {} < lower bound {})",
                self.height,
                self.lower_bound
            )
        } else {
            String::from(
                "no obstruction found to an F-homogeneous set-theoretic \
                 complete intersection",
            )
        }
    }
}

pub fn bound_report(
    g: &Grading,
    f: &Grading,
    generator_sets: &[(String, Vec<Polynomial>)],
) -> Result<BoundReport, Error> {
    bound_report_with_stop(g, f, generator_sets, &mut || false)
}

pub fn bound_report_with_stop(
    g: &Grading,
    f: &Grading,
    generator_sets: &[(String, Vec<Polynomial>)],
    stop: &mut dyn FnMut() -> bool,
) -> Result<BoundReport, Error> {
    if !f.is_specialization_of(g)? {
        return Err(Error::NotASpecialization);
    }
    let nf = minimal_nonfaces(g.configuration())?;
    let proj = projection(g.configuration(), f.configuration())?;
    let complex = build_complex(g.configuration(), &proj, &nf)?;

    let gamma = chromatic_number_with_stop(&skeleton_complement(&complex), stop);
    let delta = delta_omega_with_stop(&complex, stop);
    if gamma.certified && delta.certified {
        debug_assert!(gamma.upper <= delta.upper, "γ ≤ δ must hold");
    }

    let height = g.height();
    let monomial_floor = nf.count();
    let component_floor = delta.lower;

    let sat = f.saturation();
    let mut reports = Vec::with_capacity(generator_sets.len());
    for (name, polys) in generator_sets {
        let mut all_f = true;
        let mut all_sat = true;
        let mut monomials = 0usize;
        let mut components = 0usize;
        for p in polys {
            all_f &= f.is_homogeneous(p)?;
            all_sat &= sat.is_homogeneous(p)?;
            monomials += p.term_count();
            components += f.homogeneous_components(p)?.len();
        }
        reports.push(GeneratorSetReport {
            name: name.clone(),
            cardinality: polys.len(),
            all_f_homogeneous: all_f,
            all_sat_homogeneous: all_sat,
            total_monomials: monomials,
            total_f_components: components,
            monomial_floor_met: monomials >= monomial_floor,
            component_floor_met: components >= component_floor,
        });
    }

    let lower_bound = gamma.lower.max(delta.lower).max(height);
    let best_upper = reports
        .iter()
        .filter(|r| r.all_f_homogeneous)
        .map(|r| r.cardinality)
        .min();
    let not_f_homogeneous_stci = height < gamma.lower.max(delta.lower);
    let certified = gamma.certified && delta.certified;

    Ok(BoundReport {
        complex,
        gamma,
        delta,
        height,
        monomial_floor,
        component_floor,
        generator_sets: reports,
        lower_bound,
        best_upper,
        not_f_homogeneous_stci,
        certified,
    })
}

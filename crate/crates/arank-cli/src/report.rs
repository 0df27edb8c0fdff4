//! Report structures: one per subcommand, each rendering deterministically
//! to text or JSON.  Big integers and rationals appear as decimal strings
//! in JSON.  All indices in reports are 1-based.

use arank_core::bounds::{BoundReport, DeltaResult, GeneratorSetReport};
use arank_core::complex::{CoverReport, SimplicialComplex};
use arank_core::graph::ChromaticResult;
use arank_core::grading::Grading;
use arank_core::lattice::GroupStructure;
use arank_core::mat::IntMatrix;
use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub trait Render: Serialize {
    fn text(&self) -> String;

    fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }
}

#[derive(Serialize)]
pub struct MatrixOut {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixOut {
    pub fn new(m: &IntMatrix) -> Self {
        MatrixOut {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }

    /// The matrix file format, so that every emitted matrix re-parses.
    fn text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for row in &self.entries {
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

fn group_text(g: &GroupOut) -> String {
    let mut parts = Vec::new();
    if g.free_rank > 0 {
        parts.push(format!("Z^{}", g.free_rank));
    }
    for t in &g.torsion {
        parts.push(format!("Z/{t}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

#[derive(Serialize)]
pub struct GroupOut {
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

impl GroupOut {
    pub fn new(g: &GroupStructure) -> Self {
        GroupOut {
            free_rank: g.free_rank,
            torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SeedReport {
    pub files: Vec<String>,
}

impl Render for SeedReport {
    fn text(&self) -> String {
        self.files.iter().map(|f| format!("wrote {f}\n")).collect()
    }
}

#[derive(Serialize)]
pub struct SnfReport {
    pub rank: usize,
    pub diag: Vec<String>,
    pub left: MatrixOut,
    pub right: MatrixOut,
    pub diagonal: MatrixOut,
}

impl Render for SnfReport {
    fn text(&self) -> String {
        format!(
            "rank: {}\ndiag: {}\nleft:\n{}right:\n{}diagonal:\n{}",
            self.rank,
            self.diag.join(" "),
            self.left.text(),
            self.right.text(),
            self.diagonal.text()
        )
    }
}

#[derive(Serialize)]
pub struct SaturateReport {
    pub ambient: usize,
    pub rank: usize,
    pub was_saturated: bool,
    pub quotient: GroupOut,
    pub basis: MatrixOut,
    pub saturation: MatrixOut,
}

impl Render for SaturateReport {
    fn text(&self) -> String {
        format!(
            "ambient: {}\nrank: {}\nwas saturated: {}\nquotient: {}\nbasis:\n{}saturation:\n{}",
            self.ambient,
            self.rank,
            self.was_saturated,
            group_text(&self.quotient),
            self.basis.text(),
            self.saturation.text()
        )
    }
}

#[derive(Serialize)]
pub struct GradingSideOut {
    pub rank: usize,
    pub group: GroupOut,
}

#[derive(Serialize)]
pub struct GradingCheckReport {
    pub ambient: usize,
    pub main: GradingSideOut,
    pub spec: GradingSideOut,
    pub is_specialization: bool,
    pub is_equivalent: bool,
}

impl Render for GradingCheckReport {
    fn text(&self) -> String {
        format!(
            "ambient: {}\nmain: rank {}, group {}\nspec: rank {}, group {}\nspecialization: {}\nequivalent: {}\n",
            self.ambient,
            self.main.rank,
            group_text(&self.main.group),
            self.spec.rank,
            group_text(&self.spec.group),
            self.is_specialization,
            self.is_equivalent
        )
    }
}

#[derive(Serialize)]
pub struct GradingReport {
    pub ambient: usize,
    pub basis: MatrixOut,
    pub height: usize,
    pub positive: bool,
}

impl GradingReport {
    pub fn new(g: &Grading) -> Self {
        GradingReport {
            ambient: g.ambient(),
            basis: MatrixOut::new(g.lattice().basis()),
            height: g.height(),
            positive: g.is_positive(),
        }
    }
}

impl Render for GradingReport {
    fn text(&self) -> String {
        format!(
            "grading:\n{}\n{}height: {}\npositive: {}\n",
            self.ambient,
            self.basis.text(),
            self.height,
            self.positive
        )
    }
}

#[derive(Serialize)]
pub struct PositiveReport {
    pub positive: bool,
    /// Covector strictly positive on every configuration vector.
    pub covector: Option<Vec<String>>,
    /// Positive integer degrees defining a rank-1 positive specialization.
    pub integer_specialization: Option<Vec<String>>,
    /// A nonzero nonnegative lattice vector, when not positive.
    pub violation: Option<Vec<String>>,
}

impl Render for PositiveReport {
    fn text(&self) -> String {
        let mut s = format!("positive: {}\n", self.positive);
        if let Some(c) = &self.covector {
            s.push_str(&format!("covector: {}\n", c.join(" ")));
        }
        if let Some(m) = &self.integer_specialization {
            s.push_str(&format!("integer specialization: {}\n", m.join(" ")));
        }
        if let Some(v) = &self.violation {
            s.push_str(&format!("violation: {}\n", v.join(" ")));
        }
        s
    }
}

#[derive(Serialize)]
pub struct CircuitsReport {
    pub count: usize,
    pub binomials: Vec<String>,
    pub vectors: MatrixOut,
}

impl Render for CircuitsReport {
    fn text(&self) -> String {
        let mut s = format!("count: {}\nbinomials:\n", self.count);
        for b in &self.binomials {
            s.push_str(b);
            s.push('\n');
        }
        s.push_str("vectors:\n");
        s.push_str(&self.vectors.text());
        s
    }
}

#[derive(Serialize)]
pub struct NonfaceOut {
    /// 1-based indices into the configuration's column order.
    pub columns: Vec<usize>,
    pub label: String,
}

#[derive(Serialize)]
pub struct NonfacesReport {
    pub ray_count: usize,
    /// 1-based column index of each extreme ray.
    pub ray_columns: Vec<usize>,
    pub ray_labels: Vec<String>,
    pub count: usize,
    pub nonfaces: Vec<NonfaceOut>,
    /// Pairs (kept, dropped) of equal-cone non-faces.
    pub duplicates: Vec<(String, String)>,
}

impl Render for NonfacesReport {
    fn text(&self) -> String {
        let mut s = format!(
            "rays: {} (columns {})\ncount: {}\n",
            self.ray_count,
            self.ray_columns.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
            self.count
        );
        for (i, nf) in self.nonfaces.iter().enumerate() {
            let cols: Vec<String> = nf.columns.iter().map(|c| c.to_string()).collect();
            s.push_str(&format!("v{}: {} (columns {})\n", i + 1, nf.label, cols.join(" ")));
        }
        if self.duplicates.is_empty() {
            s.push_str("duplicates: none\n");
        } else {
            for (kept, dropped) in &self.duplicates {
                s.push_str(&format!("duplicate: {dropped} = {kept}\n"));
            }
        }
        s
    }
}

#[derive(Serialize)]
pub struct ComplexReport {
    pub vertex_count: usize,
    pub vertices: Vec<String>,
    pub dim: Option<usize>,
    pub facet_count: usize,
    /// 1-based vertex indices, each facet ascending.
    pub facets: Vec<Vec<usize>>,
    pub method: String,
}

impl ComplexReport {
    pub fn new(c: &SimplicialComplex, method: &str) -> Self {
        ComplexReport {
            vertex_count: c.vertex_count(),
            vertices: c.labels().to_vec(),
            dim: c.dim(),
            facet_count: c.facets().len(),
            facets: c.facets().iter().map(|f| f.iter().map(|&v| v + 1).collect()).collect(),
            method: method.to_string(),
        }
    }
}

impl Render for ComplexReport {
    fn text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.vertex_count);
        for (i, label) in self.vertices.iter().enumerate() {
            s.push_str(&format!("v{}: {}\n", i + 1, label));
        }
        match self.dim {
            Some(d) => s.push_str(&format!("dim: {d}\n")),
            None => s.push_str("dim: empty\n"),
        }
        s.push_str(&format!("facets: {}\n", self.facet_count));
        for (i, f) in self.facets.iter().enumerate() {
            let vs: Vec<String> = f.iter().map(|v| format!("v{v}")).collect();
            s.push_str(&format!("f{}: {}\n", i + 1, vs.join(" ")));
        }
        s.push_str(&format!("method: {}\n", self.method));
        s
    }
}

#[derive(Serialize)]
pub struct BracketOut {
    pub lower: usize,
    pub upper: usize,
    pub certified: bool,
}

impl BracketOut {
    pub fn gamma(c: &ChromaticResult) -> Self {
        BracketOut { lower: c.lower, upper: c.upper, certified: c.certified }
    }

    fn text(&self) -> String {
        let cert = if self.certified { "certified" } else { "not certified" };
        format!("[{}, {}] {}", self.lower, self.upper, cert)
    }
}

#[derive(Serialize)]
pub struct DeltaOut {
    pub lower: usize,
    pub upper: usize,
    pub certified: bool,
    /// The disjoint witness faces, 1-based vertex indices.
    pub witness: Vec<Vec<usize>>,
}

impl DeltaOut {
    pub fn new(d: &DeltaResult) -> Self {
        DeltaOut {
            lower: d.lower,
            upper: d.upper,
            certified: d.certified,
            witness: d
                .matching
                .faces
                .iter()
                .map(|f| f.iter().map(|&v| v + 1).collect())
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct GenSetOut {
    pub name: String,
    pub cardinality: usize,
    pub all_f_homogeneous: bool,
    pub all_sat_homogeneous: bool,
    pub total_monomials: usize,
    pub monomial_floor_met: bool,
    pub total_f_components: usize,
    pub component_floor_met: bool,
    pub certifies: String,
}

impl GenSetOut {
    pub fn new(g: &GeneratorSetReport) -> Self {
        GenSetOut {
            name: g.name.clone(),
            cardinality: g.cardinality,
            all_f_homogeneous: g.all_f_homogeneous,
            all_sat_homogeneous: g.all_sat_homogeneous,
            total_monomials: g.total_monomials,
            monomial_floor_met: g.monomial_floor_met,
            total_f_components: g.total_f_components,
            component_floor_met: g.component_floor_met,
            certifies: g.certifies().to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct BoundsReport {
    pub vertex_count: usize,
    pub facet_count: usize,
    pub height: usize,
    pub gamma: BracketOut,
    pub delta: DeltaOut,
    pub monomial_floor: usize,
    pub component_floor: usize,
    pub lower_bound: usize,
    pub best_upper: Option<usize>,
    pub chain: String,
    pub certified: bool,
    pub not_f_homogeneous_stci: bool,
    pub generator_sets: Vec<GenSetOut>,
    pub conclusion: String,
}

impl BoundsReport {
    pub fn new(r: &BoundReport) -> Self {
        BoundsReport {
            vertex_count: r.complex.vertex_count(),
            facet_count: r.complex.facets().len(),
            height: r.height,
            gamma: BracketOut::gamma(&r.gamma),
            delta: DeltaOut::new(&r.delta),
            monomial_floor: r.monomial_floor,
            component_floor: r.component_floor,
            lower_bound: r.lower_bound,
            best_upper: r.best_upper,
            chain: r.chain(),
            certified: r.certified,
            not_f_homogeneous_stci: r.not_f_homogeneous_stci,
            generator_sets: r.generator_sets.iter().map(GenSetOut::new).collect(),
            conclusion: r.conclusion(),
        }
    }
}

fn face_list(faces: &[Vec<usize>]) -> String {
    faces
        .iter()
        .map(|f| {
            let vs: Vec<String> = f.iter().map(|v| format!("v{v}")).collect();
            vs.join(" ")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

impl Render for BoundsReport {
    fn text(&self) -> String {
        let mut s = format!(
            "complex: {} vertices, {} facets\nheight: {}\ngamma: {}\ndelta: {} {}\n",
            self.vertex_count,
            self.facet_count,
            self.height,
            self.gamma.text(),
            BracketOut {
                lower: self.delta.lower,
                upper: self.delta.upper,
                certified: self.delta.certified
            }
            .text(),
            if self.delta.witness.is_empty() {
                "witness: none".to_string()
            } else {
                format!("witness: {}", face_list(&self.delta.witness))
            }
        );
        s.push_str(&format!(
            "monomial floor: {}\ncomponent floor: {}\n",
            self.monomial_floor, self.component_floor
        ));
        for g in &self.generator_sets {
            s.push_str(&format!(
                "generator set {}: {} polynomials, F-homogeneous {}, sat-homogeneous {}, monomials {} (floor met {}), F-components {} (floor met {}), certifies {}\n",
                g.name,
                g.cardinality,
                g.all_f_homogeneous,
                g.all_sat_homogeneous,
                g.total_monomials,
                g.monomial_floor_met,
                g.total_f_components,
                g.component_floor_met,
                g.certifies
            ));
        }
        s.push_str(&format!("chain: {}\n", self.chain));
        s.push_str(&format!("lower bound: {}\n", self.lower_bound));
        match self.best_upper {
            Some(u) => s.push_str(&format!("best upper: {u}\n")),
            None => s.push_str("best upper: none\n"),
        }
        s.push_str(&format!("certified: {}\n", self.certified));
        s.push_str(&format!("conclusion: {}\n", self.conclusion));
        s
    }
}

#[derive(Serialize)]
pub struct PolyCoverOut {
    pub homogeneous: bool,
    pub is_simplex: bool,
    /// 1-based vertex indices covered by this polynomial.
    pub vertices: Vec<usize>,
}

#[derive(Serialize)]
pub struct VerifyCoverReport {
    pub per_poly: Vec<PolyCoverOut>,
    pub spanning: bool,
    pub uncovered: Vec<usize>,
    pub uncovered_labels: Vec<String>,
    pub satisfied: bool,
}

impl VerifyCoverReport {
    pub fn new(r: &CoverReport, complex: &SimplicialComplex) -> Self {
        let uncovered: Vec<usize> = r.uncovered.iter().map(|&v| v + 1).collect();
        let uncovered_labels = r
            .uncovered
            .iter()
            .map(|&v| complex.labels()[v].clone())
            .collect();
        VerifyCoverReport {
            per_poly: r
                .per_poly
                .iter()
                .map(|p| PolyCoverOut {
                    homogeneous: p.homogeneous,
                    is_simplex: p.is_simplex,
                    vertices: p.vertices.iter().map(|&v| v + 1).collect(),
                })
                .collect(),
            spanning: r.spanning,
            uncovered,
            uncovered_labels,
            satisfied: r.satisfied,
        }
    }
}

impl Render for VerifyCoverReport {
    fn text(&self) -> String {
        let mut s = format!("polynomials: {}\n", self.per_poly.len());
        for (i, p) in self.per_poly.iter().enumerate() {
            let vs: Vec<String> = p.vertices.iter().map(|v| format!("v{v}")).collect();
            s.push_str(&format!(
                "p{}: homogeneous {}, simplex {}, vertices {}\n",
                i + 1,
                p.homogeneous,
                p.is_simplex,
                if vs.is_empty() { "none".to_string() } else { vs.join(" ") }
            ));
        }
        s.push_str(&format!("spanning: {}\n", self.spanning));
        if self.uncovered.is_empty() {
            s.push_str("uncovered: none\n");
        } else {
            let labeled: Vec<String> = self
                .uncovered
                .iter()
                .zip(&self.uncovered_labels)
                .map(|(v, l)| format!("v{v} {l}"))
                .collect();
            s.push_str(&format!("uncovered: {}\n", labeled.join(", ")));
        }
        s.push_str(&format!("satisfied: {}\n", self.satisfied));
        s
    }
}

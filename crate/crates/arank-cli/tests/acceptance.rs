//! Acceptance suite: one test per shipped claim, numbered 1–10, each ending
//! in a single `ACCEPTANCE n (…): PASS` line.  Run
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see the
//! verdict lines in order; a failed criterion shows up as the test failing.
//!
//! The suite is deliberately self-contained: the reference tables below are
//! duplicated rather than shared with the unit tests, so a fixture mistake
//! in one place cannot hide in the other, and the cube inputs are taken
//! from the seeded example files exactly as a user would receive them.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use arank_cli::formats::{parse_config, parse_graph, parse_polys};
use arank_cli::seed::materialize;
use arank_core::bounds::{bound_report, delta_omega};
use arank_core::complex::{
    build_complex, polynomial_subcomplex, skeleton_complement, verify_cover_conditions,
    ComplexContext, SimplicialComplex,
};
use arank_core::cone::{minimal_nonfaces, NonfaceFamily};
use arank_core::configuration::{circuits, VectorConfiguration};
use arank_core::graph::chromatic_number;
use arank_core::grading::Grading;
use arank_core::lattice::Lattice;
use arank_core::lp::{lp_feasible, LinearSystem};
use arank_core::mat::IntMatrix;
use arank_core::poly::Polynomial;
use arank_oracles::{
    chromatic_bruteforce, delta_bruteforce, finite_epimorphism_exists, fm_feasible,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Reference data (independent transcription of the published cube values).

/// The 28 circuits of the cube configuration as unordered pairs of monomial
/// supports (all circuit binomials of a graph are squarefree, so supports
/// determine the exponent vectors up to global sign).
const CIRCUIT_PAIRS: [(&[&str], &[&str]); 28] = [
    // 4-cycles.
    (&["14", "23"], &["12", "34"]),
    (&["12", "56"], &["15", "26"]),
    (&["26", "37"], &["23", "67"]),
    (&["14", "58"], &["15", "48"]),
    (&["37", "48"], &["34", "78"]),
    (&["58", "67"], &["56", "78"]),
    // 6-cycles.
    (&["23", "48", "56"], &["26", "34", "58"]),
    (&["14", "37", "56"], &["15", "34", "67"]),
    (&["12", "37", "58"], &["15", "23", "78"]),
    (&["12", "48", "67"], &["14", "26", "78"]),
    (&["23", "56", "78"], &["26", "37", "58"]),
    (&["14", "56", "78"], &["15", "48", "67"]),
    (&["26", "34", "78"], &["23", "48", "67"]),
    (&["15", "34", "78"], &["14", "37", "58"]),
    (&["15", "26", "78"], &["12", "58", "67"]),
    (&["14", "23", "78"], &["12", "37", "48"]),
    (&["34", "58", "67"], &["37", "48", "56"]),
    (&["12", "34", "67"], &["14", "26", "37"]),
    (&["15", "23", "67"], &["12", "37", "56"]),
    (&["12", "34", "58"], &["15", "23", "48"]),
    (&["14", "26", "58"], &["12", "48", "56"]),
    (&["14", "23", "56"], &["15", "26", "34"]),
    // 8-cycles.
    (&["12", "34", "56", "78"], &["15", "23", "48", "67"]),
    (&["12", "34", "56", "78"], &["14", "26", "37", "58"]),
    (&["14", "23", "56", "78"], &["15", "26", "37", "48"]),
    (&["12", "34", "58", "67"], &["15", "26", "37", "48"]),
    (&["14", "23", "58", "67"], &["12", "37", "48", "56"]),
    (&["14", "23", "58", "67"], &["15", "26", "34", "78"]),
];

/// `E_1, …, E_20`: the minimal non-faces, in the published numbering.
const NONFACES: [&[&str]; 20] = [
    &["14", "23"],       // E1
    &["12", "34"],       // E2
    &["12", "56"],       // E3
    &["15", "26"],       // E4
    &["26", "37"],       // E5
    &["23", "67"],       // E6
    &["14", "58"],       // E7
    &["15", "48"],       // E8
    &["37", "48"],       // E9
    &["34", "78"],       // E10
    &["58", "67"],       // E11
    &["56", "78"],       // E12
    &["23", "48", "56"], // E13
    &["26", "34", "58"], // E14
    &["14", "37", "56"], // E15
    &["15", "34", "67"], // E16
    &["12", "37", "58"], // E17
    &["15", "23", "78"], // E18
    &["12", "48", "67"], // E19
    &["14", "26", "78"], // E20
];

/// Facets of `D_G^G`: ten disjoint edges `{E_{2k−1}, E_{2k}}`.
fn dgg_facets() -> BTreeSet<BTreeSet<usize>> {
    (1..=10).map(|k| BTreeSet::from([2 * k - 1, 2 * k])).collect()
}

/// Facets of `D_F^G`: the six quadric edges plus the 7-simplex.
fn dfg_facets() -> BTreeSet<BTreeSet<usize>> {
    let mut facets: BTreeSet<BTreeSet<usize>> =
        (1..=6).map(|k| BTreeSet::from([2 * k - 1, 2 * k])).collect();
    facets.insert((13..=20).collect());
    facets
}

fn label_set(labels: &[&str]) -> BTreeSet<String> {
    labels.iter().map(|l| l.to_string()).collect()
}

/// The `{a,b,…}` label a non-face carries as a complex vertex.
fn braced(labels: &[&str]) -> String {
    let sorted: BTreeSet<&str> = labels.iter().copied().collect();
    format!("{{{}}}", sorted.into_iter().collect::<Vec<_>>().join(","))
}

/// Published index (1-based) of a complex vertex from its `{…}` label.
fn e_number(label: &str) -> usize {
    NONFACES
        .iter()
        .position(|nf| braced(nf) == label)
        .unwrap_or_else(|| panic!("vertex label {label} is not one of E_1..E_20"))
        + 1
}

fn facet_numbers(c: &SimplicialComplex) -> BTreeSet<BTreeSet<usize>> {
    c.facets()
        .iter()
        .map(|f| f.iter().map(|&v| e_number(c.label_of(v).unwrap())).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Seeded cube inputs, read back through the same parsers the CLI uses.

struct Cube {
    _dir: tempfile::TempDir,
    dir: PathBuf,
    cfg: VectorConfiguration,
    b: VectorConfiguration,
    circuits10: Vec<Polynomial>,
    radical7: Vec<Polynomial>,
}

fn cube() -> Cube {
    let dir = tempfile::tempdir().expect("create temp dir");
    materialize("cube", dir.path()).expect("seed the cube example");
    let read = |name: &str| -> String {
        std::fs::read_to_string(dir.path().join(name)).expect("read seeded file")
    };
    let graph = parse_graph(Path::new("cube.graph"), &read("cube.graph")).unwrap();
    let cfg = graph.configuration().unwrap();
    let b = parse_config(Path::new("B.config"), &read("B.config")).unwrap();
    let circuits10 =
        parse_polys(Path::new("circuits10.polys"), &read("circuits10.polys")).unwrap();
    let radical7 = parse_polys(Path::new("radical7.polys"), &read("radical7.polys")).unwrap();
    assert_eq!(circuits10.len(), 10);
    assert_eq!(radical7.len(), 7);
    let path = dir.path().to_path_buf();
    Cube { _dir: dir, dir: path, cfg, b, circuits10, radical7 }
}

fn support(exp: &[BigInt], cfg: &VectorConfiguration) -> BTreeSet<String> {
    exp.iter()
        .enumerate()
        .filter(|(_, e)| e.is_positive())
        .map(|(j, _)| cfg.label(j))
        .collect()
}

fn family_label_sets(nf: &NonfaceFamily) -> BTreeSet<BTreeSet<String>> {
    nf.nonfaces()
        .iter()
        .map(|e| e.iter().map(|&i| nf.ray_labels()[i].clone()).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Criteria 1–8 and 10: the cube case study.

#[test]
fn acceptance_01_cube_circuits() {
    let start = Instant::now();
    let c = cube();
    let cs = circuits(&c.cfg).unwrap();
    assert_eq!(cs.len(), 28, "circuit count");

    let mut hist = std::collections::BTreeMap::new();
    for circuit in &cs {
        *hist.entry(circuit.support().len()).or_insert(0usize) += 1;
        // Graph circuits are squarefree, justifying the support comparison.
        assert!(circuit.vector().iter().all(|e| e.abs() <= BigInt::one()));
    }
    assert_eq!(hist, std::collections::BTreeMap::from([(4, 6), (6, 16), (8, 6)]));

    let got: BTreeSet<BTreeSet<BTreeSet<String>>> = cs
        .iter()
        .map(|circuit| {
            BTreeSet::from([
                support(&circuit.positive_part(), &c.cfg),
                support(&circuit.negative_part(), &c.cfg),
            ])
        })
        .collect();
    let want: BTreeSet<BTreeSet<BTreeSet<String>>> = CIRCUIT_PAIRS
        .iter()
        .map(|(p, m)| BTreeSet::from([label_set(p), label_set(m)]))
        .collect();
    assert_eq!(got, want, "circuit support pairs");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "criterion 1 overran: {elapsed:?}");
    println!("ACCEPTANCE 1 (28 cube circuits, histogram 4:6 / 6:16 / 8:6): PASS");
}

#[test]
fn acceptance_02_cube_minimal_nonfaces() {
    let start = Instant::now();
    let c = cube();
    let nf = minimal_nonfaces(&c.cfg).unwrap();
    assert_eq!(nf.count(), 20, "minimal non-face count");
    assert!(nf.duplicates().is_empty(), "no coinciding non-face cones");
    let want: BTreeSet<BTreeSet<String>> = NONFACES.iter().map(|e| label_set(e)).collect();
    assert_eq!(family_label_sets(&nf), want, "non-face index sets");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "criterion 2 overran: {elapsed:?}");
    println!("ACCEPTANCE 2 (20 minimal non-faces = E_1..E_20): PASS");
}

#[test]
fn acceptance_03_dgg_structure() {
    let c = cube();
    let g = Grading::from_configuration(&c.cfg);
    let ctx = ComplexContext::identity(&g).unwrap();
    let dgg = build_complex(g.configuration(), &ctx.projection, &ctx.nonfaces).unwrap();
    assert_eq!(dgg.vertex_count(), 20);
    assert_eq!(facet_numbers(&dgg), dgg_facets(), "the ten published 1-simplices");
    assert_eq!(dgg.dim(), Some(1), "no 2-simplices");
    println!("ACCEPTANCE 3 (D_G^G = ten disjoint 1-simplices, none higher): PASS");
}

#[test]
fn acceptance_04_gamma_and_g_homogeneous_bracket() {
    let c = cube();
    let g = Grading::from_configuration(&c.cfg);
    let ctx = ComplexContext::identity(&g).unwrap();
    let dgg = build_complex(g.configuration(), &ctx.projection, &ctx.nonfaces).unwrap();

    let gamma = chromatic_number(&skeleton_complement(&dgg));
    assert_eq!(gamma.value(), Some(10), "γ of the skeleton complement");

    let sets = vec![("circuit generators".to_string(), c.circuits10.clone())];
    let r = bound_report(&g, &g, &sets).unwrap();
    assert!(r.certified);
    assert!(r.generator_sets[0].all_f_homogeneous, "circuits are G-homogeneous");
    assert_eq!(r.lower_bound, 10);
    assert_eq!(r.best_upper, Some(10), "10 homogeneous generators close the bracket");
    assert_eq!(r.chain(), "5 <= 10 <= 10");
    println!("ACCEPTANCE 4 (γ = 10; G-homogeneous bracket closes at 10): PASS");
}

#[test]
fn acceptance_05_specialization_and_ranks() {
    let c = cube();
    let g = Grading::from_configuration(&c.cfg);
    let f = Grading::from_configuration(&c.b);
    assert!(f.is_specialization_of(&g).unwrap(), "L_ZA_G contained in L_ZB");
    assert!(!g.is_specialization_of(&f).unwrap(), "the order is strict");
    assert_eq!(f.height(), 8, "rank of L_ZB");
    assert_eq!(g.height(), 5, "rank of L_ZA_G = ht");
    assert_eq!(arank_core::configuration::height(g.lattice()), 5);
    println!("ACCEPTANCE 5 (B specializes the cube grading; ranks 8 and 5): PASS");
}

#[test]
fn acceptance_06_dfg_structure() {
    let start = Instant::now();
    let c = cube();
    let g = Grading::from_configuration(&c.cfg);
    let f = Grading::from_configuration(&c.b);
    let ctx = ComplexContext::for_pair(&g, &f).unwrap();
    let dfg = build_complex(g.configuration(), &ctx.projection, &ctx.nonfaces).unwrap();
    assert_eq!(dfg.facets().len(), 7, "facet count");
    assert_eq!(facet_numbers(&dfg), dfg_facets(), "six edges plus the 7-simplex");
    assert_eq!(dfg.dim(), Some(7));

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "criterion 6 overran: {elapsed:?}");
    println!("ACCEPTANCE 6 (D_F^G = seven facets: 7-simplex E_13..E_20 + six edges): PASS");
}

#[test]
fn acceptance_07_delta_gamma_and_report() {
    let c = cube();
    let g = Grading::from_configuration(&c.cfg);
    let f = Grading::from_configuration(&c.b);
    let sets = vec![
        ("radical generators".to_string(), c.radical7.clone()),
        ("circuit generators".to_string(), c.circuits10.clone()),
    ];
    let r = bound_report(&g, &f, &sets).unwrap();
    assert!(r.certified);
    assert_eq!(r.gamma.value(), Some(7), "γ");
    assert_eq!(r.delta.value(), Some(7), "δ");
    assert!(r.delta.matching.verify(&r.complex), "witness is an Ω-matching");

    // The published maximal Ω-matching: the facets themselves (the minimum
    // cover is unique here — E_13..E_20 admit no other covering face).
    let witness: BTreeSet<BTreeSet<usize>> = r
        .delta
        .matching
        .faces
        .iter()
        .map(|f| f.iter().map(|&v| e_number(r.complex.label_of(v).unwrap())).collect())
        .collect();
    assert_eq!(witness, dfg_facets(), "witness matches the published matching");

    assert_eq!(r.height, 5);
    assert_eq!(r.chain(), "5 <= 7 <= 7");
    assert!(r.not_f_homogeneous_stci, "ht = 5 < 7 rules the STCI out");
    assert!(r.conclusion().contains("set-theoretic complete intersection"));

    // End to end through the binary, on the seeded files.
    let out = Command::new(env!("CARGO_BIN_EXE_arank"))
        .args(["bounds", "--graph"])
        .arg(c.dir.join("cube.graph"))
        .arg("--spec")
        .arg(c.dir.join("B.config"))
        .arg("--gens")
        .arg(c.dir.join("radical7.polys"))
        .arg("--gens")
        .arg(c.dir.join("circuits10.polys"))
        .output()
        .expect("run the arank binary");
    assert!(out.status.success(), "CLI exit: {:?}", out.status);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("gamma: [7, 7] certified"), "CLI gamma line:\n{stdout}");
    assert!(stdout.contains("delta: [7, 7] certified"), "CLI delta line:\n{stdout}");
    assert!(stdout.contains("chain: 5 <= 7 <= 7"), "CLI chain line:\n{stdout}");
    assert!(
        stdout.contains("not an F-homogeneous set-theoretic complete intersection"),
        "CLI conclusion line:\n{stdout}"
    );
    println!("ACCEPTANCE 7 (δ = γ = 7, published witness, chain 5 <= 7 <= 7, not an STCI): PASS");
}

#[test]
fn acceptance_08_generator_floors() {
    let c = cube();
    let g = Grading::from_configuration(&c.cfg);
    let f = Grading::from_configuration(&c.b);
    let sets = vec![("radical generators".to_string(), c.radical7.clone())];
    let r = bound_report(&g, &f, &sets).unwrap();
    assert_eq!(r.monomial_floor, 20, "vertex count of D_G^G");
    assert_eq!(r.component_floor, 7, "δ(D_F^G)");
    let radical = &r.generator_sets[0];
    assert!(radical.all_f_homogeneous);
    assert_eq!(radical.total_monomials, 20, "total monomials, tight at 20");
    assert_eq!(radical.total_f_components, 7, "total F-components, tight at 7");
    assert!(radical.monomial_floor_met && radical.component_floor_met);
    println!("ACCEPTANCE 8 (floor counts on the radical set: 20 >= 20, 7 >= 7, both tight): PASS");
}

#[test]
fn acceptance_10_quadrics_negative_control() {
    let c = cube();
    let g = Grading::from_configuration(&c.cfg);
    let f = Grading::from_configuration(&c.b);
    let ctx = ComplexContext::for_pair(&g, &f).unwrap();
    let dfg = build_complex(g.configuration(), &ctx.projection, &ctx.nonfaces).unwrap();

    // The first six seeded circuit generators are the quadrics.
    let quadrics: Vec<Polynomial> = c.circuits10[..6].to_vec();
    for q in &quadrics {
        for exp in q.exponents() {
            let degree: BigInt = exp.iter().sum();
            assert_eq!(degree, BigInt::from(2), "quadric monomials have degree 2");
        }
    }

    let report = verify_cover_conditions(&quadrics, &f, &dfg, &c.cfg, &ctx.nonfaces).unwrap();
    assert!(!report.satisfied, "six quadrics cannot cover D_F^G");
    assert!(!report.spanning);
    let uncovered: BTreeSet<usize> = report
        .uncovered
        .iter()
        .map(|&v| e_number(dfg.label_of(v).unwrap()))
        .collect();
    assert_eq!(uncovered, (13..=20).collect::<BTreeSet<usize>>(), "uncovered = E_13..E_20");
    println!("ACCEPTANCE 10 (quadrics alone leave exactly E_13..E_20 uncovered): PASS");
}

// ---------------------------------------------------------------------------
// Criterion 9: seeded randomized law suites against the oracles.

fn rng_for(suite: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xA5EED + suite)
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = (0..rows)
        .map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
        .collect();
    IntMatrix::from_rows(cols, rows).unwrap()
}

/// SNF and HNF invariants on 1000 matrices up to 6×6 with entries up to 50.
fn suite_snf_hnf(rng: &mut ChaCha8Rng) {
    for _ in 0..1000 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let m = random_matrix(rng, r, c, 50);
        let s = m.snf();
        let product = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        assert_eq!(product, s.diagonal_matrix(), "U·M·Q is the diagonal");
        assert_eq!(s.left.det().unwrap().abs(), BigInt::one());
        assert_eq!(s.right.det().unwrap().abs(), BigInt::one());
        assert_eq!(s.rank, m.rank());
        for d in &s.diag {
            assert!(!d.is_negative());
        }
        for w in s.diag.windows(2) {
            if !w[1].is_zero() {
                assert!(!w[0].is_zero() && (&w[1] % &w[0]).is_zero(), "divisibility chain");
            }
        }

        let h = m.hnf();
        assert_eq!(h.hnf(), h, "HNF is canonical");
        assert_eq!(h.rank(), m.rank());
        let lm = Lattice::from_matrix(&m);
        let lh = Lattice::from_matrix(&h);
        assert!(lm.contains_lattice(&lh).unwrap() && lh.contains_lattice(&lm).unwrap());
    }
}

/// Saturation is idempotent, monotone, and rank-preserving.
fn suite_saturation(rng: &mut ChaCha8Rng) {
    for _ in 0..300 {
        let n = rng.gen_range(1..=5);
        let rows = rng.gen_range(1..=n);
        let m = random_matrix(rng, rows, n, 9);
        let l = Lattice::from_matrix(&m);
        let s = l.saturation();
        assert!(s.contains_lattice(&l).unwrap());
        assert_eq!(s.rank(), l.rank());
        assert!(s.is_saturated());
        assert!(s.group_structure().is_free(), "Z^n / Sat(L) is torsion-free");
        let ss = s.saturation();
        assert!(ss.contains_lattice(&s).unwrap() && s.contains_lattice(&ss).unwrap());

        // Monotonicity along an extension L ⊆ L'.
        let mut rows = l.basis().row_vecs();
        rows.push((0..n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect());
        let bigger = Lattice::from_rows(n, rows).unwrap();
        assert!(bigger.contains_lattice(&l).unwrap());
        assert!(bigger.saturation().contains_lattice(&s).unwrap());
    }
}

/// Containment of relation lattices coincides with the existence of a
/// generator-respecting epimorphism, brute-forced over finite quotients.
fn suite_epimorphism(rng: &mut ChaCha8Rng) {
    let mut related = 0usize;
    let mut unrelated = 0usize;
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let triangular = |rng: &mut ChaCha8Rng| -> Vec<Vec<BigInt>> {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            BigInt::from(match j.cmp(&i) {
                                std::cmp::Ordering::Less => rng.gen_range(-2i64..=2),
                                std::cmp::Ordering::Equal => rng.gen_range(1i64..=3),
                                std::cmp::Ordering::Greater => 0,
                            })
                        })
                        .collect()
                })
                .collect()
        };
        let lg = Lattice::from_rows(n, triangular(rng)).unwrap();
        let lf = if rng.gen_bool(0.5) {
            // Guaranteed L_G ⊆ L_F: extend G's lattice by one more row.
            let mut rows = lg.basis().row_vecs();
            rows.push((0..n).map(|_| BigInt::from(rng.gen_range(-2i64..=2))).collect());
            Lattice::from_rows(n, rows).unwrap()
        } else {
            Lattice::from_rows(n, triangular(rng)).unwrap()
        };
        let g = Grading::from_lattice(lg);
        let f = Grading::from_lattice(lf);
        let oracle = finite_epimorphism_exists(&g, &f, 1_000)
            .expect("full-rank triangular lattices have small finite quotients");
        let direct = f.is_specialization_of(&g).unwrap();
        assert_eq!(oracle, direct, "lattice containment vs. explicit epimorphism");
        if direct {
            related += 1;
        } else {
            unrelated += 1;
        }
    }
    assert!(related > 0 && unrelated > 0, "both outcomes exercised");
}

/// A random positive configuration (every degree has a strictly positive
/// first coordinate) together with a random coarsening of it.
fn random_positive_pair(
    rng: &mut ChaCha8Rng,
) -> (VectorConfiguration, Grading, Grading) {
    let d = rng.gen_range(3..=4);
    let k = rng.gen_range(4..=6);
    let cols: Vec<Vec<BigInt>> = (0..k)
        .map(|_| {
            (0..d)
                .map(|i| {
                    BigInt::from(if i == 0 {
                        rng.gen_range(1i64..=3)
                    } else {
                        rng.gen_range(-2i64..=2)
                    })
                })
                .collect()
        })
        .collect();
    let cfg = VectorConfiguration::from_columns(d, cols).unwrap();
    let g = Grading::from_configuration(&cfg);
    let m = rng.gen_range(1..=d);
    let p = random_matrix(rng, m, d, 2);
    let f = Grading::from_configuration(&VectorConfiguration::from_matrix(
        &p.mul(cfg.matrix()).unwrap(),
    ));
    (cfg, g, f)
}

fn gamma_le_delta(c: &SimplicialComplex) {
    let delta = delta_omega(c);
    assert!(delta.certified);
    assert!(delta.matching.verify(c));
    let gamma = chromatic_number(&skeleton_complement(c));
    assert!(gamma.certified);
    assert!(gamma.value().unwrap() <= delta.value().unwrap(), "γ ≤ δ");
}

/// A random multi-term polynomial homogeneous for `f`, or `None` when the
/// drawn exponents collide.
fn random_homogeneous_poly(
    rng: &mut ChaCha8Rng,
    f: &Grading,
) -> Option<Polynomial> {
    let basis = f.lattice().basis().row_vecs();
    if basis.is_empty() {
        return None;
    }
    let k = f.ambient();
    let draw = |rng: &mut ChaCha8Rng| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); k];
        for _ in 0..rng.gen_range(1..=2) {
            let row = &basis[rng.gen_range(0..basis.len())];
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            for (slot, x) in v.iter_mut().zip(row) {
                *slot += x * BigInt::from(sign);
            }
        }
        v
    };
    let mut shifts: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); k]];
    for _ in 0..rng.gen_range(1..=2) {
        shifts.push(draw(rng));
    }
    shifts.sort();
    shifts.dedup();
    if shifts.len() < 2 {
        return None;
    }
    // Shift every exponent into the nonnegative orthant with one offset, so
    // the pairwise differences stay inside the relation lattice.
    let mut offset = vec![BigInt::zero(); k];
    for s in &shifts {
        for (o, x) in offset.iter_mut().zip(s) {
            if (-x.clone()) > *o {
                *o = -x.clone();
            }
        }
    }
    for o in offset.iter_mut() {
        *o += BigInt::from(rng.gen_range(0i64..=1));
    }
    let terms: Vec<(Vec<BigInt>, BigRational)> = shifts
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let exp: Vec<BigInt> = s.iter().zip(&offset).map(|(x, o)| x + o).collect();
            let coeff = BigRational::from(BigInt::from(if i % 2 == 0 { 1 } else { -1 }));
            (exp, coeff)
        })
        .collect();
    Some(Polynomial::new(k, terms).unwrap())
}

/// The containment/spanning chain `D_G^G ⊆ D_F^G ⊆ D_O^G` with `D_O^G` a
/// simplex, the simplex property of homogeneous polynomials, and γ ≤ δ, on
/// 100 random configurations that have at least one minimal non-face.
fn suite_complex_chain(rng: &mut ChaCha8Rng) {
    let mut interesting = 0usize;
    let mut homogeneous_checked = 0usize;
    let mut draws = 0usize;
    while interesting < 100 {
        draws += 1;
        assert!(draws < 3000, "random configurations stopped producing non-faces");
        let (cfg, g, f) = random_positive_pair(rng);
        let ctx_g = ComplexContext::identity(&g).unwrap();
        if ctx_g.nonfaces.count() == 0 || ctx_g.nonfaces.count() > 8 {
            continue;
        }
        let o = Grading::coarsest(g.ambient());
        let ctx_f = ComplexContext::for_pair(&g, &f).unwrap();
        let ctx_o = ComplexContext::for_pair(&g, &o).unwrap();
        let dgg = build_complex(g.configuration(), &ctx_g.projection, &ctx_g.nonfaces).unwrap();
        let dfg = build_complex(g.configuration(), &ctx_f.projection, &ctx_f.nonfaces).unwrap();
        let dog = build_complex(g.configuration(), &ctx_o.projection, &ctx_o.nonfaces).unwrap();

        assert!(dgg.is_subcomplex_of(&dfg), "D_G^G ⊆ D_F^G");
        assert!(dfg.is_subcomplex_of(&dog), "D_F^G ⊆ D_O^G");
        assert!(dgg.is_spanning_in(&dfg).unwrap());
        assert!(dfg.is_spanning_in(&dog).unwrap());
        assert!(dog.is_simplex(), "the trivial grading gives the full simplex");

        gamma_le_delta(&dgg);
        gamma_le_delta(&dfg);
        gamma_le_delta(&dog);

        for _ in 0..2 {
            if let Some(p) = random_homogeneous_poly(rng, &f) {
                assert!(f.is_homogeneous(&p).unwrap());
                let sub = polynomial_subcomplex(&dfg, &p, &cfg, &ctx_f.nonfaces).unwrap();
                assert!(sub.is_simplex(), "subcomplex of a homogeneous polynomial");
                homogeneous_checked += 1;
            }
        }
        interesting += 1;
    }
    assert!(homogeneous_checked >= 50, "enough homogeneous polynomials exercised");
}

/// The exact simplex against Fourier–Motzkin elimination on 500 systems.
fn suite_lp(rng: &mut ChaCha8Rng) {
    for _ in 0..500 {
        let vars = rng.gen_range(1..=6);
        let mut sys = LinearSystem::new(vars);
        let row = |rng: &mut ChaCha8Rng| -> (Vec<BigRational>, BigRational) {
            let coeffs: Vec<BigRational> = (0..vars)
                .map(|_| BigRational::from(BigInt::from(rng.gen_range(-4i64..=4))))
                .collect();
            (coeffs, BigRational::from(BigInt::from(rng.gen_range(-4i64..=4))))
        };
        for _ in 0..rng.gen_range(0..=3) {
            let (c, b) = row(rng);
            sys.push_eq(c, b).unwrap();
        }
        for _ in 0..rng.gen_range(0..=6) {
            let (c, b) = row(rng);
            sys.push_geq(c, b).unwrap();
        }
        let lp = lp_feasible(&sys);
        assert_eq!(lp.is_some(), fm_feasible(&sys), "LP vs Fourier–Motzkin");
        if let Some(x) = lp {
            assert!(sys.satisfies(&x), "returned point satisfies the system");
        }
    }
}

/// Exact δ against the subset-DP oracle, plus γ ≤ δ, on 100 complexes.
fn suite_delta(rng: &mut ChaCha8Rng) {
    for _ in 0..100 {
        let n = rng.gen_range(3..=10);
        let facets: Vec<BTreeSet<usize>> = (0..rng.gen_range(1..=6))
            .map(|_| {
                let mask = rng.gen_range(1usize..(1 << n));
                (0..n).filter(|&v| mask & (1 << v) != 0).collect()
            })
            .collect();
        let c = SimplicialComplex::from_facets(
            (0..n).collect(),
            (0..n).map(|v| format!("v{v}")).collect(),
            facets,
        )
        .unwrap();
        let d = delta_omega(&c);
        assert!(d.certified);
        assert_eq!(d.value(), delta_bruteforce(&c), "δ vs subset DP");
        assert!(d.matching.verify(&c));

        let complement = skeleton_complement(&c);
        let gamma = chromatic_number(&complement);
        assert!(gamma.certified);
        assert!(gamma.value().unwrap() <= d.value().unwrap(), "γ ≤ δ");
        if n <= 8 {
            assert_eq!(gamma.value().unwrap(), chromatic_bruteforce(&complement));
        }
    }
}

#[test]
fn acceptance_09_property_suites() {
    let suites: [(&str, fn(&mut ChaCha8Rng)); 6] = [
        ("snf/hnf x1000", suite_snf_hnf),
        ("saturation x300", suite_saturation),
        ("epimorphism x200", suite_epimorphism),
        ("complex chain x100", suite_complex_chain),
        ("lp vs fourier-motzkin x500", suite_lp),
        ("delta vs dp x100", suite_delta),
    ];
    for (i, (name, suite)) in suites.iter().enumerate() {
        let start = Instant::now();
        suite(&mut rng_for(i as u64 + 1));
        eprintln!("  suite {name}: ok in {:.1?}", start.elapsed());
    }
    println!("ACCEPTANCE 9 (seeded property suites vs. oracles, zero failures): PASS");
}

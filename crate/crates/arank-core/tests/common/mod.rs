//! Shared fixture: the cube graph, its edge configuration, and the
//! 4-dimensional specialization used across the integration tests,
//! together with the published reference data they are checked against.

// Each integration-test target compiles its own copy; not all use every
// helper.
#![allow(dead_code)]

use std::collections::BTreeSet;

use arank_core::arith::int_vec;
use arank_core::configuration::VectorConfiguration;
use arank_core::graph::Graph;
use arank_core::poly::Polynomial;
use num_bigint::BigInt;

/// Edge labels in column order (lexicographic on the endpoint pairs).
pub const EDGE_LABELS: [&str; 12] =
    ["12", "14", "15", "23", "26", "34", "37", "48", "56", "58", "67", "78"];

/// The specialized degrees `b_ij`, one column per edge, same order.
pub const B_COLUMNS: [[i64; 4]; 12] = [
    [5, 0, 3, 4],   // b12
    [3, 1, 5, 5],   // b14
    [4, 1, 4, 8],   // b15
    [4, 0, 2, 3],   // b23
    [5, 0, 1, 6],   // b26
    [2, 1, 4, 4],   // b34
    [2, 1, 2, 6],   // b37
    [1, 2, 5, 8],   // b48
    [4, 1, 2, 10],  // b56
    [2, 2, 4, 11],  // b58
    [3, 1, 1, 9],   // b67
    [1, 2, 3, 10],  // b78
];

pub fn cube_graph() -> Graph {
    Graph::new(
        8,
        vec![
            (1, 2),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 6),
            (3, 4),
            (3, 7),
            (4, 8),
            (5, 6),
            (5, 8),
            (6, 7),
            (7, 8),
        ],
    )
    .unwrap()
}

/// The configuration `A_G = (e_i + e_j : {i,j} edge)` in `Z^8`.
pub fn cube_cfg() -> VectorConfiguration {
    cube_graph().configuration().unwrap()
}

/// The configuration `B` in `Z^4`, labeled like the edges.
pub fn b_cfg() -> VectorConfiguration {
    VectorConfiguration::from_columns(
        4,
        B_COLUMNS.iter().map(|c| int_vec(c)).collect(),
    )
    .unwrap()
    .with_labels(EDGE_LABELS.iter().map(|s| s.to_string()).collect())
    .unwrap()
}

/// Column index of an edge label.
pub fn col(label: &str) -> usize {
    EDGE_LABELS.iter().position(|&l| l == label).expect("known edge label")
}

/// Squarefree exponent vector supported on the given edge labels.
pub fn mono(labels: &[&str]) -> Vec<BigInt> {
    let mut e = vec![BigInt::from(0); 12];
    for l in labels {
        e[col(l)] = BigInt::from(1);
    }
    e
}

/// The binomial `x^{plus} − x^{minus}` on squarefree supports.
pub fn binomial(plus: &[&str], minus: &[&str]) -> Polynomial {
    Polynomial::binomial_difference(12, mono(plus), mono(minus)).unwrap()
}

fn label_set(labels: &[&str]) -> BTreeSet<&'static str> {
    let owned: BTreeSet<&str> = labels.iter().copied().collect();
    owned.iter().map(|l| EDGE_LABELS[col(l)]).collect()
}

/// All 28 circuits as unordered pairs of monomial supports.
pub fn expected_circuits() -> Vec<BTreeSet<BTreeSet<&'static str>>> {
    const PAIRS: [(&[&str], &[&str]); 28] = [
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
    PAIRS
        .iter()
        .map(|(p, m)| [label_set(p), label_set(m)].into_iter().collect())
        .collect()
}

/// `E_1, …, E_20` in the published numbering, as edge-label sets.
pub fn nonface_label_sets() -> Vec<BTreeSet<&'static str>> {
    vec![
        label_set(&["14", "23"]),       // E1
        label_set(&["12", "34"]),       // E2
        label_set(&["12", "56"]),       // E3
        label_set(&["15", "26"]),       // E4
        label_set(&["26", "37"]),       // E5
        label_set(&["23", "67"]),       // E6
        label_set(&["14", "58"]),       // E7
        label_set(&["15", "48"]),       // E8
        label_set(&["37", "48"]),       // E9
        label_set(&["34", "78"]),       // E10
        label_set(&["58", "67"]),       // E11
        label_set(&["56", "78"]),       // E12
        label_set(&["23", "48", "56"]), // E13
        label_set(&["26", "34", "58"]), // E14
        label_set(&["14", "37", "56"]), // E15
        label_set(&["15", "34", "67"]), // E16
        label_set(&["12", "37", "58"]), // E17
        label_set(&["15", "23", "78"]), // E18
        label_set(&["12", "48", "67"]), // E19
        label_set(&["14", "26", "78"]), // E20
    ]
}

/// Facets of `D_G^G`: ten disjoint 1-simplices `{E_{2k−1}, E_{2k}}`, given
/// as pairs of indices into [`nonface_label_sets`].
pub const DGG_FACET_PAIRS: [(usize, usize); 10] =
    [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11), (12, 13), (14, 15), (16, 17), (18, 19)];

/// Facets of `D_F^G`: six of the 1-simplices plus the 7-simplex on
/// `E_13, …, E_20`.
pub fn dfg_facet_index_sets() -> Vec<BTreeSet<usize>> {
    let mut facets: Vec<BTreeSet<usize>> =
        DGG_FACET_PAIRS[..6].iter().map(|&(a, b)| BTreeSet::from([a, b])).collect();
    facets.push((12..20).collect());
    facets
}

/// The ten circuit binomials minimally generating the toric ideal.
pub fn circuits10() -> Vec<Polynomial> {
    vec![
        binomial(&["14", "23"], &["12", "34"]),
        binomial(&["12", "56"], &["15", "26"]),
        binomial(&["26", "37"], &["23", "67"]),
        binomial(&["14", "58"], &["15", "48"]),
        binomial(&["37", "48"], &["34", "78"]),
        binomial(&["58", "67"], &["56", "78"]),
        binomial(&["23", "48", "56"], &["26", "34", "58"]),
        binomial(&["14", "37", "56"], &["15", "34", "67"]),
        binomial(&["12", "37", "58"], &["15", "23", "78"]),
        binomial(&["12", "48", "67"], &["14", "26", "78"]),
    ]
}

/// The six quadrics among the circuits.
pub fn quadrics6() -> Vec<Polynomial> {
    circuits10().into_iter().take(6).collect()
}

/// The published 7-element set generating the radical: the six quadrics
/// and the sum of the four cubic circuit binomials (8 monomials).
pub fn radical7() -> Vec<Polynomial> {
    let mut gens = quadrics6();
    let cubics: Vec<(Vec<BigInt>, num_rational::BigRational)> = [
        (mono(&["23", "48", "56"]), 1),
        (mono(&["26", "34", "58"]), -1),
        (mono(&["14", "37", "56"]), 1),
        (mono(&["15", "34", "67"]), -1),
        (mono(&["12", "37", "58"]), 1),
        (mono(&["15", "23", "78"]), -1),
        (mono(&["12", "48", "67"]), 1),
        (mono(&["14", "26", "78"]), -1),
    ]
    .into_iter()
    .map(|(e, c)| (e, num_rational::BigRational::from(BigInt::from(c))))
    .collect();
    gens.push(Polynomial::new(12, cubics).unwrap());
    gens
}

//! Built-in example inputs: the cube-graph case study.
//!
//! `--seed-example cube` writes four files — the cube graph, the
//! specialized degree configuration `B`, the ten circuit binomials that
//! generate the toric ideal, and the seven polynomials generating its
//! radical — in the formats of [`crate::formats`].

use std::fs;
use std::path::{Path, PathBuf};

use arank_core::poly::Polynomial;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::CliError;
use crate::formats;

/// Edge labels of the cube in column order.
pub const CUBE_EDGES: [&str; 12] =
    ["12", "14", "15", "23", "26", "34", "37", "48", "56", "58", "67", "78"];

const CUBE_GRAPH: &str = "\
# cube graph: vertices 1..8, edges in lexicographic order
8 12
1 2
1 4
1 5
2 3
2 6
3 4
3 7
4 8
5 6
5 8
6 7
7 8
";

const B_CONFIG: &str = "\
# specialized degrees, one column per edge (12 14 15 23 26 34 37 48 56 58 67 78)
4 12
5 3 4 4 5 2 2 1 4 2 3 1
0 1 1 0 0 1 1 2 1 2 1 2
3 5 4 2 1 4 2 5 2 4 1 3
4 5 8 3 6 4 6 8 10 11 9 10
";

const POLYS_HEADER: &str =
    "# variables x12 x14 x15 x23 x26 x34 x37 x48 x56 x58 x67 x78 in column order\n\n";

fn col(label: &str) -> usize {
    CUBE_EDGES.iter().position(|&l| l == label).expect("known edge label")
}

fn mono(labels: &[&str]) -> Vec<BigInt> {
    let mut e = vec![BigInt::from(0); 12];
    for l in labels {
        e[col(l)] = BigInt::from(1);
    }
    e
}

fn binomial(plus: &[&str], minus: &[&str]) -> Polynomial {
    Polynomial::binomial_difference(12, mono(plus), mono(minus)).expect("distinct monomials")
}

/// The ten circuit binomials minimally generating the toric ideal: the six
/// quadrics and four of the cubic pairs.
fn circuit_gens() -> Vec<Polynomial> {
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

/// The seven generators of the radical: the quadrics plus the sum of the
/// four cubic binomials.
fn radical_gens() -> Vec<Polynomial> {
    let mut gens: Vec<Polynomial> = circuit_gens().into_iter().take(6).collect();
    let terms: Vec<(Vec<BigInt>, BigRational)> = [
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
    .map(|(e, c)| (e, BigRational::from(BigInt::from(c))))
    .collect();
    gens.push(Polynomial::new(12, terms).expect("eight distinct monomials"));
    gens
}

/// Write the named example's input files into `dir` and return their paths.
pub fn materialize(name: &str, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    if name != "cube" {
        return Err(CliError::Usage(format!("unknown example `{name}` (available: cube)")));
    }
    let files = [
        ("cube.graph", CUBE_GRAPH.to_string()),
        ("B.config", B_CONFIG.to_string()),
        ("circuits10.polys", format!("{POLYS_HEADER}{}", formats::render_polys(&circuit_gens()))),
        ("radical7.polys", format!("{POLYS_HEADER}{}", formats::render_polys(&radical_gens()))),
    ];
    let mut written = Vec::with_capacity(files.len());
    for (file, contents) in files {
        let path = dir.join(file);
        fs::write(&path, contents).map_err(|e| CliError::Io { path: path.clone(), source: e })?;
        written.push(path);
    }
    Ok(written)
}

//! Line-oriented text formats.
//!
//! `#` starts a comment line anywhere.  A matrix is `rows cols` followed by
//! one line of space-separated integers per row; a grading (or lattice) is
//! the ambient dimension `n` followed by a basis of the relation lattice in
//! the matrix format; a graph is `vertices edges` followed by one 1-based
//! `i j` line per edge with `i < j`; a polynomial file holds one term per
//! line as `coefficient e_1 … e_n` (coefficient an integer or `p/q`), with
//! blank lines separating polynomials.

use std::path::Path;
use std::str::FromStr;

use arank_core::configuration::VectorConfiguration;
use arank_core::grading::Grading;
use arank_core::graph::Graph;
use arank_core::lattice::Lattice;
use arank_core::mat::IntMatrix;
use arank_core::poly::Polynomial;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::CliError;

fn parse_err(path: &Path, line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { path: path.to_path_buf(), line, msg: msg.into() }
}

/// Non-comment, non-blank lines paired with their 1-based numbers.
fn logical_lines(src: &str) -> Vec<(usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn fields<T: FromStr>(
    path: &Path,
    no: usize,
    line: &str,
    expected: usize,
) -> Result<Vec<T>, CliError> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != expected {
        return Err(parse_err(
            path,
            no,
            format!("expected {expected} fields, found {}", toks.len()),
        ));
    }
    toks.iter()
        .map(|t| t.parse().map_err(|_| parse_err(path, no, format!("bad number `{t}`"))))
        .collect()
}

/// Parse a matrix block starting at `lines[0]`; returns the matrix and the
/// number of lines consumed.
fn matrix_block(path: &Path, lines: &[(usize, &str)]) -> Result<(IntMatrix, usize), CliError> {
    let &(no, header) = lines.first().ok_or_else(|| parse_err(path, 1, "missing matrix header"))?;
    let hdr: Vec<usize> = fields(path, no, header, 2)?;
    let (rows, cols) = (hdr[0], hdr[1]);
    if lines.len() < rows + 1 {
        return Err(parse_err(path, no, format!("expected {rows} matrix rows")));
    }
    let mut data = Vec::with_capacity(rows);
    for r in 0..rows {
        let (rno, line) = lines[1 + r];
        data.push(fields::<BigInt>(path, rno, line, cols)?);
    }
    Ok((IntMatrix::from_rows(cols, data)?, rows + 1))
}

fn no_trailing(path: &Path, lines: &[(usize, &str)], used: usize) -> Result<(), CliError> {
    match lines.get(used) {
        Some(&(no, _)) => Err(parse_err(path, no, "unexpected trailing data")),
        None => Ok(()),
    }
}

pub fn parse_matrix(path: &Path, src: &str) -> Result<IntMatrix, CliError> {
    let lines = logical_lines(src);
    let (m, used) = matrix_block(path, &lines)?;
    no_trailing(path, &lines, used)?;
    Ok(m)
}

pub fn render_matrix(m: &IntMatrix) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_grading(path: &Path, src: &str) -> Result<Grading, CliError> {
    let lines = logical_lines(src);
    let &(no, first) = lines.first().ok_or_else(|| parse_err(path, 1, "missing ambient dimension"))?;
    let n = fields::<usize>(path, no, first, 1)?[0];
    let (m, used) = matrix_block(path, &lines[1..])?;
    no_trailing(path, &lines, 1 + used)?;
    if m.cols() != n {
        return Err(parse_err(path, no, format!("basis has {} columns, ambient is {n}", m.cols())));
    }
    Ok(Grading::from_lattice(Lattice::from_matrix(&m)))
}

pub fn render_grading(g: &Grading) -> String {
    format!("{}\n{}", g.ambient(), render_matrix(g.lattice().basis()))
}

pub fn parse_graph(path: &Path, src: &str) -> Result<Graph, CliError> {
    let lines = logical_lines(src);
    let &(no, header) = lines.first().ok_or_else(|| parse_err(path, 1, "missing graph header"))?;
    let hdr: Vec<usize> = fields(path, no, header, 2)?;
    let (vertices, k) = (hdr[0], hdr[1]);
    if lines.len() < k + 1 {
        return Err(parse_err(path, no, format!("expected {k} edge lines")));
    }
    no_trailing(path, &lines, k + 1)?;
    let mut edges = Vec::with_capacity(k);
    for e in 0..k {
        let (eno, line) = lines[1 + e];
        let ij: Vec<usize> = fields(path, eno, line, 2)?;
        if ij[0] >= ij[1] {
            return Err(parse_err(path, eno, "edges must be written `i j` with i < j"));
        }
        edges.push((ij[0], ij[1]));
    }
    Graph::new(vertices, edges).map_err(CliError::from)
}

pub fn render_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(i, j) in g.edges() {
        s.push_str(&format!("{i} {j}\n"));
    }
    s
}

/// A configuration file is a matrix whose columns are the degree vectors.
pub fn parse_config(path: &Path, src: &str) -> Result<VectorConfiguration, CliError> {
    Ok(VectorConfiguration::from_matrix(&parse_matrix(path, src)?))
}

pub fn parse_polys(path: &Path, src: &str) -> Result<Vec<Polynomial>, CliError> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !blocks.last().expect("nonempty").is_empty() {
                blocks.push(Vec::new());
            }
            continue;
        }
        blocks.last_mut().expect("nonempty").push((i + 1, line));
    }
    let mut vars: Option<usize> = None;
    let mut out = Vec::new();
    for block in blocks.into_iter().filter(|b| !b.is_empty()) {
        let mut terms = Vec::with_capacity(block.len());
        for (no, line) in block {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() < 2 {
                return Err(parse_err(path, no, "a term needs a coefficient and exponents"));
            }
            let n = toks.len() - 1;
            match vars {
                None => vars = Some(n),
                Some(v) if v == n => {}
                Some(v) => {
                    return Err(parse_err(path, no, format!("expected {v} exponents, found {n}")))
                }
            }
            let coeff = BigRational::from_str(toks[0])
                .map_err(|_| parse_err(path, no, format!("bad coefficient `{}`", toks[0])))?;
            let exps = toks[1..]
                .iter()
                .map(|t| {
                    BigInt::from_str(t).map_err(|_| parse_err(path, no, format!("bad exponent `{t}`")))
                })
                .collect::<Result<Vec<BigInt>, CliError>>()?;
            terms.push((exps, coeff));
        }
        out.push(Polynomial::new(vars.expect("set above"), terms)?);
    }
    if out.is_empty() {
        return Err(parse_err(path, 1, "no polynomials in file"));
    }
    Ok(out)
}

pub fn render_polys(polys: &[Polynomial]) -> String {
    let mut s = String::new();
    for (i, p) in polys.iter().enumerate() {
        if i > 0 {
            s.push('\n');
        }
        for (exp, coeff) in p.terms() {
            let exps: Vec<String> = exp.iter().map(|e| e.to_string()).collect();
            s.push_str(&format!("{coeff} {}\n", exps.join(" ")));
        }
    }
    s
}

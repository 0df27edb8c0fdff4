//! Polynomials with exact rational coefficients and nonnegative integer
//! exponents, the inputs of the homogeneity and cover-condition checks.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A nonzero polynomial in `vars` variables. Terms are deduplicated,
/// zero-coefficient-free, and sorted by descending lexicographic exponent,
/// so equal polynomials compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: Vec<(Vec<BigInt>, BigRational)>,
}

impl Polynomial {
    pub fn new(vars: usize, raw: Vec<(Vec<BigInt>, BigRational)>) -> Result<Self, Error> {
        let mut merged: BTreeMap<Vec<BigInt>, BigRational> = BTreeMap::new();
        for (exp, coeff) in raw {
            if exp.len() != vars {
                return Err(Error::DimensionMismatch { expected: vars, got: exp.len() });
            }
            if exp.iter().any(|e| e.is_negative()) {
                return Err(Error::NegativeExponent);
            }
            *merged.entry(exp).or_insert_with(BigRational::zero) += coeff;
        }
        let terms: Vec<(Vec<BigInt>, BigRational)> =
            merged.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Polynomial { vars, terms })
    }

    /// The monomial `x^u`.
    pub fn monomial(vars: usize, exp: Vec<BigInt>) -> Result<Self, Error> {
        Polynomial::new(vars, alloc::vec![(exp, BigRational::one())])
    }

    /// The binomial `x^{u₊} − x^{u₋}`.
    pub fn binomial_difference(
        vars: usize,
        plus: Vec<BigInt>,
        minus: Vec<BigInt>,
    ) -> Result<Self, Error> {
        Polynomial::new(
            vars,
            alloc::vec![(plus, BigRational::one()), (minus, -BigRational::one())],
        )
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Terms in descending lexicographic exponent order.
    pub fn terms(&self) -> &[(Vec<BigInt>, BigRational)] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn exponents(&self) -> Vec<&[BigInt]> {
        self.terms.iter().map(|(e, _)| e.as_slice()).collect()
    }

    /// Human-readable form, e.g. `x12*x34 - x14*x23` with column labels or
    /// `2*x1^3 - 1/2*x2` without.
    pub fn render(&self, labels: Option<&[String]>) -> String {
        let mut out = String::new();
        for (k, (exp, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = if negative { -coeff.clone() } else { coeff.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = monomial_string(exp, labels);
            if mono.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

/// `x`-product form of an exponent vector, empty for the constant monomial.
pub fn monomial_string(exp: &[BigInt], labels: Option<&[String]>) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (j, e) in exp.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let name = match labels {
            Some(ls) => alloc::format!("x{}", ls[j]),
            None => alloc::format!("x{}", j + 1),
        };
        if e.is_one() {
            parts.push(name);
        } else {
            parts.push(alloc::format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

//! Small helpers on integer and rational vectors.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Greatest common divisor of all entries (nonnegative; 0 for the zero vector).
pub fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides a nonzero vector by its content. Direction is preserved.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Primitive with the first nonzero entry positive (for sign-ambiguous data
/// such as circuits).
pub fn primitive_signed(v: &[BigInt]) -> Vec<BigInt> {
    let mut p = primitive(v);
    if let Some(first) = p.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut p {
                *x = -&*x;
            }
        }
    }
    p
}

/// Clears denominators of a rational vector by the positive factor
/// `lcm(denominators) / gcd(numerators)`, i.e. returns the primitive integer
/// vector pointing the same way.
pub fn primitive_from_rational(v: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive(&ints)
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn rational_dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Integer vector viewed over the rationals.
pub fn to_rational_vec(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Convenience constructor used all over the tests.
pub fn int_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

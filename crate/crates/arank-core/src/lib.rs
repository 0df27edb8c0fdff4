//! Exact arithmetic for multigradings of polynomial rings and the
//! combinatorics of lattice ideals.
//!
//! A grading of `k[x_1..x_n]` by a finitely generated abelian group is
//! presented here by its relation lattice `L ⊆ Z^n` (the exponent differences
//! that receive degree zero). Everything downstream is exact: integer linear
//! algebra over arbitrary-precision integers, rational-arithmetic linear
//! programming over cones, and combinatorial search over the simplicial
//! complexes that bound the arithmetical rank of the associated lattice
//! ideal from below.
//!
//! The crate is `no_std` + `alloc`; all collections are ordered so results
//! are deterministic across runs and platforms.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bounds;
pub mod complex;
pub mod cone;
pub mod configuration;
pub mod error;
pub mod grading;
pub mod graph;
pub mod lattice;
pub mod lp;
pub mod mat;
pub mod poly;

pub use error::Error;
pub use mat::{IntMatrix, SmithNormalForm};
pub use lattice::{GroupStructure, Lattice};

//! Cyclic codes over `GF(q)` defined by two-prime Whiteman generalized
//! cyclotomic sequences of order 6.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: field
//! arithmetic in `GF(q)` and `GF(q^m)`, dense polynomials, the cyclotomic
//! classes `D_0, ..., D_5`, generator polynomials by a gcd oracle and by
//! closed forms, and minimum-distance search.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod codegen;
pub mod cyclotomy;
pub mod distance;
pub mod error;
pub mod field;
pub mod poly;
pub mod sequence;
pub mod verify;

pub use codegen::{Construction, Constructor, CyclicCode, Provenance};
pub use cyclotomy::{Label, TwoPrimeParams, WhitemanSystem};
pub use distance::{DistanceResult, Kind, Method};
pub use error::{Error, Result};
pub use field::{ExtElem, ExtField, Field, PrimeField, UnityRoot};
pub use poly::{IndexSupportPoly, Poly, PolyRing};
pub use sequence::{omega_triple, CyclotomicSequence, OmegaTriple, Which};

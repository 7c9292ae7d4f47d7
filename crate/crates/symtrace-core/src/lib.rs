//! Exact arithmetic for trace measures of symmetrizable integer matrices.
//!
//! The crate provides, with no floating point anywhere in a verdict path:
//!
//! * scalar primitives: arbitrary-precision integers, exact rationals, and
//!   signed square-root scalars ([`numerics`]);
//! * matrix classes and their membership predicates: sign symmetry, the cycle
//!   condition, the rational cycle condition, connectivity ([`matrices`]);
//! * the symmetrization map and its constructive inverse ([`symmetry`]);
//! * characteristic polynomials, Newton identities, Sturm root counting, and
//!   exact positive-definiteness ([`spectra`]);
//! * trace measures and the associated lower bounds ([`measures`]);
//! * extremal and density constructions ([`constructions`]);
//! * polynomial screeners ([`screener`]);
//! * an exhaustive enumeration and verification harness ([`harness`]).
//!
//! The library is `no_std` (with `alloc`); IO, file formats, and the command
//! line front end live in the companion `symtrace-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod harness;
pub mod matrices;
pub mod measures;
pub mod numerics;
pub mod screener;
pub mod spectra;
pub mod symmetry;

pub use error::Error;
pub use matrices::{AnyMatrix, ClassificationReport, IntMatrix, RadicalMatrix, RatMatrix, TriState};
pub use numerics::{Rational, RadicalScalar, Sign};
pub use spectra::CharPoly;

//! Typed failures shared across the crate. Every variant names the violated
//! precondition; witnesses use 0-based row/column indices.

use alloc::vec::Vec;
use core::fmt;

/// Failure of an operation's precondition or resource guard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An off-diagonal pair (i, j) where exactly one entry is zero or
    /// a_ij * a_ji < 0.
    NotSignSymmetric { witness: (usize, usize) },
    /// The matrix is not symmetric; witness is the first offending pair.
    NotSymmetric { witness: (usize, usize) },
    /// Forward and backward entry products differ around this vertex cycle.
    CycleConditionViolated { cycle: Vec<usize> },
    /// The radicand product around this cycle is not a perfect square.
    RationalCycleConditionViolated { cycle: Vec<usize> },
    /// A diagonal radicand is not a perfect square, so the matrix has no
    /// rational similar form.
    IrrationalDiagonal { index: usize },
    /// Operands have different orders.
    DimensionMismatch { left: usize, right: usize },
    /// Trace target below the feasibility threshold 2n - 1.
    TraceTooSmall,
    /// Matrix order below the smallest the construction supports.
    OrderTooSmall,
    /// The four-square residual must exceed 18.
    ResidualTooSmall,
    /// The four-square residual is outside the brute-force search range.
    ResidualTooLarge,
    /// The polynomial is not monic.
    NonMonic,
    /// The polynomial must have integer coefficients here.
    NonIntegerCoefficients,
    /// Density target outside the feasible range for the requested family.
    TargetOutOfRange,
    /// The enumeration search space exceeds the configured node budget.
    BudgetExceeded { nodes: u128, budget: u64 },
    /// Canonical dedupe enumerates all n! permutations and is refused for
    /// orders above 6.
    DedupeUnsupported { n: usize },
    /// Exponent outside the supported set for this operation.
    UnsupportedExponent { k: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSignSymmetric { witness: (i, j) } => {
                write!(f, "not sign-symmetric at entry pair ({i}, {j})")
            }
            Error::NotSymmetric { witness: (i, j) } => {
                write!(f, "not symmetric at entry pair ({i}, {j})")
            }
            Error::CycleConditionViolated { cycle } => {
                write!(f, "cycle condition violated on cycle {cycle:?}")
            }
            Error::RationalCycleConditionViolated { cycle } => {
                write!(f, "rational cycle condition violated on cycle {cycle:?}")
            }
            Error::IrrationalDiagonal { index } => {
                write!(f, "diagonal entry {index} is irrational (non-square radicand)")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::TraceTooSmall => write!(f, "trace target below 2n - 1"),
            Error::OrderTooSmall => write!(f, "matrix order too small for this construction"),
            Error::ResidualTooSmall => write!(f, "four-square residual must exceed 18"),
            Error::ResidualTooLarge => write!(f, "four-square residual exceeds the search range"),
            Error::NonMonic => write!(f, "polynomial is not monic"),
            Error::NonIntegerCoefficients => write!(f, "polynomial coefficients must be integers"),
            Error::TargetOutOfRange => write!(f, "density target outside the feasible range"),
            Error::BudgetExceeded { nodes, budget } => {
                write!(f, "search space of {nodes} nodes exceeds budget {budget}")
            }
            Error::DedupeUnsupported { n } => {
                write!(f, "canonical dedupe unsupported for order {n} (max 6)")
            }
            Error::UnsupportedExponent { k } => write!(f, "unsupported exponent index {k}"),
        }
    }
}

impl core::error::Error for Error {}

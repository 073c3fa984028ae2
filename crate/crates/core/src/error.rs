//! Crate-wide error type.
//!
//! Every failure is classified into one of three kinds so that front ends can
//! map them onto stable exit codes: domain errors (bad arguments or violated
//! preconditions), resource errors (an enumeration or table would exceed its
//! budget) and internal errors (a consistency check failed).

use thiserror::Error;

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    Domain,
    Resource,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{a} is divisible by {p}; quadratic character undefined")]
    ZeroResidue { a: i64, p: u64 },
    #[error("{a} and {modulus} are not coprime")]
    NotCoprime { a: u64, modulus: u64 },
    #[error("r and p must be distinct primes (both are {0})")]
    SamePrime(u64),
    #[error("field of order {r}^{k} exceeds the {limit} element limit")]
    FieldTooLarge { r: u64, k: u32, limit: u64 },
    #[error("modulus is not a monic irreducible polynomial of degree {k} over F_{r}")]
    ReducibleModulus { r: u64, k: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("{0}")]
    NotDivisible(String),
    #[error("F_{r}^{j} is not a subfield of F_{r}^{k}")]
    NotSubfield { r: u64, j: u32, k: u32 },
    #[error("element {0} is not in the image of the subfield")]
    NotInSubfield(u64),
    #[error("{p} does not divide the multiplicative group order {order}")]
    NoRootOfUnity { p: u64, order: u64 },
    #[error("{q} is not a quadratic residue modulo {p}")]
    NotQuadraticResidue { q: u64, p: u64 },
    #[error("Hermitian form needs a field of square order, got {r}^{k}")]
    NotSquareOrder { r: u64, k: u32 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("enumeration needs {required} codewords but the budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },
    #[error("strength t={t} exceeds ground set size v={v}")]
    StrengthTooLarge { t: usize, v: usize },
    #[error("strength t={t} must be below the minimum distance d={d}")]
    StrengthNotBelowDistance { t: usize, d: usize },
    #[error("invalid weight distribution: {0}")]
    InvalidDistribution(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::FieldTooLarge { .. } | Error::BudgetExceeded { .. } => ErrorKind::Resource,
            Error::Inconsistent(_) => ErrorKind::Internal,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

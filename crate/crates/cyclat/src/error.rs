use thiserror::Error;

/// Errors raised by lattice, polynomial and census operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty lattice")]
    EmptyLattice,
    #[error("zero vector")]
    ZeroVector,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("not a sublattice")]
    NotSublattice,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("dependent basis")]
    DependentBasis,
    #[error("polynomial degree {degree} does not fit in {dim} coordinates")]
    DegreeOverflow { degree: usize, dim: usize },
    #[error("{divisor} does not divide {n}")]
    NotDivisor { divisor: u64, n: u64 },
    #[error("search too large")]
    SearchTooLarge,
    #[error("enumeration guard exceeded: {points} points > {guard} (try a smaller R)")]
    GuardExceeded { points: u128, guard: u64 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not an N-cycle")]
    NotNCycle,
    #[error("zero entry in k")]
    ZeroK,
    #[error("not in R'_N")]
    NotInRPrime,
}

pub type Result<T> = std::result::Result<T, Error>;

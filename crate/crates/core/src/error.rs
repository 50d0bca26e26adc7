use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("coordinate {value} is not reduced modulo {p}")]
    UnreducedCoordinate { value: u64, p: u32 },

    #[error("structure constant index ({i},{j},{k}) out of range for dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },

    #[error("duplicate structure constant entry ({i},{j},{k})")]
    DuplicateEntry { i: usize, j: usize, k: usize },

    #[error("associativity fails on basis triple (e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})")]
    NonAssociative { i: usize, j: usize, k: usize },

    #[error("polynomial {0:?} is reducible")]
    ReduciblePolynomial(Vec<u32>),

    #[error("algebra has no unity")]
    NotUnital,

    #[error("unsupported algebra: {0}")]
    Unsupported(String),

    #[error("subspace is not closed under multiplication by the center")]
    NotCSubmodule,

    #[error("not a Lie ideal: [{element:?}, e{basis}] = {bracket:?} lies outside the subspace")]
    NotLieIdeal {
        element: Vec<u32>,
        basis: usize,
        bracket: Vec<u32>,
    },

    #[error("budget exceeded: {needed} element scans needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("limit exceeded: more than {limit} subspaces ({count} found so far)")]
    LimitExceeded { count: usize, limit: usize },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

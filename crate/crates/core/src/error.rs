use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no Dynkin diagram of type {series}{rank}")]
    InvalidSeriesRank { series: String, rank: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("weight {0} is not in the simple-current lattice")]
    NotInSimpleCurrentLattice(String),

    #[error("odd generator must satisfy mu not in L and 2 mu in L: {0}")]
    MuNotHalfOdd(String),

    #[error("weight {0} is not in the lattice")]
    NotInLattice(String),

    #[error("cocycle table is missing entry {0}")]
    IncompleteTable(String),

    #[error("cocycle table fails the algebra conditions: {0}")]
    CocycleInvalid(String),

    #[error("lattice is not contained in its scaled dual: generator {0} fails")]
    NotSubgroup(String),

    #[error("the algebra object is not (super)commutative: {0}")]
    AlgebraInvalid(String),

    #[error("the census of simple local modules is infinite")]
    InfiniteCensus,

    #[error("series {0} is not of ADE type")]
    NonADESeries(String),

    #[error("construction requires even ell, got {0}")]
    OddEll(i64),

    #[error("weight {0} is not local")]
    NotLocal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong inside the library.
///
/// Apart from [`Error::Parse`], [`Error::Io`], [`Error::SingularMatrix`],
/// [`Error::RankDeficient`] and [`Error::DimensionMismatch`], every variant
/// signals a broken internal invariant rather than bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix has rank {rank}, expected full row rank {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("torus subgroup closure exceeded its volume {volume}")]
    ClosureOverflow { volume: usize },
    #[error("could not find a generic seed point after {attempts} attempts")]
    DegenerateSeed { attempts: usize },
    #[error("maximal cone {cone} has no basis without broken circuits")]
    EmptyNbc { cone: usize },
    #[error("column {column} of the matrix is zero")]
    ZeroDenominatorFactor { column: usize },
    #[error("series truncated at order {order}, residue needs order {needed}")]
    TruncationTooLow { order: usize, needed: usize },
    #[error("coefficient {0} is not rational")]
    NonRationalCoefficient(String),
    #[error("chambers {0} and {1} were glued but carry different quasi-polynomials")]
    GluingMismatch(usize, usize),
    #[error("glued chamber {0} is not convex")]
    NonConvexGluing(usize),
    #[error("multiplicity evaluated to the non-integer {0}")]
    NonIntegerValue(String),
    #[error("multiplicity evaluated to the negative value {0}")]
    NegativeValue(String),
    #[error("unknown chamber id {0}")]
    UnknownChamberId(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("corrupt database: {0}")]
    CorruptDatabase(String),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {0:?} as a rational (expected \"p\" or \"p/q\")")]
pub struct ParseRationalError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    ParseRational(#[from] ParseRationalError),

    #[error("polynomials live in different variable contexts: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },

    #[error("variable {0:?} is not declared in the ring")]
    UnknownVariable(String),

    #[error("matrix has shape {rows}x{cols}, expected {expected}")]
    Shape {
        rows: usize,
        cols: usize,
        expected: String,
    },

    #[error("element has bidegree {found:?}, expected {expected:?}")]
    Bidegree {
        expected: (u32, u32),
        found: (u32, u32),
    },

    #[error("linear system is singular")]
    SingularSystem,

    #[error("quadric has rank {rank}, expected rank 3")]
    RankNotThree { rank: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("the three quadrics of the net are linearly dependent")]
    DependentNet,

    #[error("expected a homogeneous quartic in 3 variables")]
    InputNotHomogeneousQuartic,

    #[error("base locus of the net is positive dimensional")]
    PositiveDimensionalBaseLocus,

    #[error("alpha system (rows 1,1,1 / s_i1 / s_i2) is singular")]
    SingularAlphaSystem,

    #[error("beta system (rows s_i1 / s_i2 / s_i1*s_i2) is singular")]
    SingularBetaSystem,

    #[error("beta_{index} vanishes, so s_{index}3 = alpha/beta is undefined")]
    BetaComponentZero { index: usize },

    #[error("columns {columns:?} of the configuration are linearly dependent (four points on a plane)")]
    GeneralPositionViolation { columns: [usize; 4] },

    #[error("branch points must be 8 pairwise distinct rationals")]
    InvalidBranchPoints,

    #[error("theta must be symmetric")]
    ThetaNotSymmetric,

    #[error("standard monomials of bidegree (2,2) differ from the expected M-basis: got [{found}]")]
    BasisMismatch { found: String },

    #[error("Groebner basis computation exceeded the step limit of {limit} S-pair reductions")]
    StepLimitExceeded { limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

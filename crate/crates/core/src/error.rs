use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(u32, u32),
    #[error("Bernoulli numbers are only exposed for even indices (got {0})")]
    OddIndex(u32),
    #[error("characteristic polynomial coefficient {0} is not an integer")]
    NonIntegral(String),
    #[error("invalid weight {0}")]
    BadWeight(i64),
    #[error("insufficient precision: need {needed} coefficients, have {available}")]
    InsufficientPrecision { needed: usize, available: usize },
    #[error(
        "form is not a member of the space of weight {weight} (first disagreement at q^{index})"
    )]
    NotMember { weight: u32, index: usize },
    #[error("q-expansion carries no weight tag")]
    MissingWeight,
    #[error("space of cusp forms of weight {0} is zero-dimensional")]
    EmptySpace(u32),
    #[error("the zero form has no eigenvalues")]
    ZeroForm,
    #[error("weight {0} admits no nonzero cusp forms")]
    BadCuspidality(u32),
    #[error("cuspidal f of weight {0} has no canonical rational eigenform (dim S > 1)")]
    UnsupportedCuspidalF(u32),
    #[error("n = 0 is pointwise multiplication and is not classified here")]
    ProductCase,
    #[error("weight {wtg} is not in residue class {residue} mod 12")]
    ResidueMismatch { wtg: u32, residue: u32 },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("{0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

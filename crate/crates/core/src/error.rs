use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("first component must depend only on z")]
    FirstComponentDependsOnW,
    #[error("degree of {which} is {degree}, need at least 2")]
    DegreeTooSmall { which: &'static str, degree: i64 },
    #[error("leading w-coefficient b_d vanishes identically")]
    ZeroLeadingCoefficient,
    #[error("non-integer or negative exponent")]
    BadExponent,
    #[error("non-monomial denominator")]
    NonMonomialDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("lattice is not of finite index")]
    NotFiniteIndex,
    #[error("iterate too large: {terms} terms exceeds budget {budget}")]
    IterateTooLarge { terms: usize, budget: usize },
    #[error("polynomial is not in normal form; normalize first")]
    NotNormalForm,
    #[error("bounds mode required: b_d is not a monomial")]
    BoundsModeRequired,
    #[error("sampler failure: {0}")]
    SamplerFailure(String),
    #[error("phi-degenerate orbit")]
    PhiDegenerate,
    #[error("shrink to larger |w|: Böttcher factor {factor:.3e} too far from 1")]
    BranchInstability { factor: f64 },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

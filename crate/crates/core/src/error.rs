use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("gcd undefined: both inputs are zero")]
    GcdUndefined,
    #[error("zero polynomial has no content")]
    ZeroInput,
    #[error("specialization pole line at {0}")]
    PoleLine(String),
    #[error("degree-0 input in the elimination variable")]
    DegreeZero,
    #[error("function is constant in the main variable")]
    ConstantInMainVariable,
    #[error("bidegree exceeds (1,1)")]
    NotBilinear,
    #[error("point outside the domain: {0}")]
    Domain(String),
    #[error("not zero-dimensional")]
    NotZeroDimensional,
    #[error("basis is not a lex Groebner basis")]
    NotLex,
    #[error("all generators are zero")]
    AllZero,
    #[error("map polynomials are not homogeneous of a common degree")]
    NotHomogeneous,
    #[error("constant input: {0}")]
    Constant(&'static str),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("mixed quadratic extensions: sqrt({0}) and sqrt({1})")]
    MixedExtension(String, String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

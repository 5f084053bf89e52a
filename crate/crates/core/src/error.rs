use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sum of fractions is not a Laurent polynomial")]
    NotPolynomial,
    #[error("zero weight in a (1 - t^w) denominator")]
    ZeroDenominatorWeight,
    #[error("deformation part contains a weight-zero character")]
    ZeroDeformationWeight,
    #[error("virtual class has non-integral coefficients: {0}")]
    NonIntegral(String),
    #[error("Todd series needs a nonzero hyperplane weight")]
    ZeroTwist,
    #[error("series truncated at order {order}, degree {requested} requested")]
    OrderTooLow { requested: usize, order: usize },
    #[error("degree {0} is outside the supported range 1..=4")]
    UnsupportedDegree(i64),
    #[error("chi(F,F) has constant term {0}, expected at least 1")]
    BadConstantTerm(String),
    #[error("insertion summand has lambda-degree {0}, expected 0")]
    LambdaDegreeMismatch(i32),
    #[error("cannot add lambda^{0} and lambda^{1}")]
    MixedLambdaDegree(i32, i32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("meeting invariant needs n0 in degree {0}")]
    NeedsHigherN0(i64),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("parse error: {0}")]
    Parse(String),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
    #[error("p = {0} is outside the domain p >= -1")]
    Domain(i64),
    #[error("n = {n} must exceed p = {p}")]
    Range { n: u64, p: u64 },
    #[error("{0}")]
    Precondition(String),
}

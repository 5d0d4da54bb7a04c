use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    /// A request exceeds a configured enumeration bound.
    #[error("capacity exceeded: {what} = {requested} exceeds bound {bound}")]
    Capacity {
        what: &'static str,
        requested: usize,
        bound: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;


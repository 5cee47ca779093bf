use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid graph parameters: {0}")]
    InvalidParams(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("average degree {0} is degenerate (must satisfy 0 < d < n-1)")]
    DegenerateDensity(String),
    #[error("sequence {0} is not graphical")]
    NotGraphical(String),
    #[error("order {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("grid search found no feasible point")]
    InfeasibleSearch,
    #[error("extremal graph is not realizable: {0}")]
    NotRealizable(String),
    #[error("no construction satisfies {0}")]
    InfeasibleConstruction(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree exceeds d: vertex {vertex} has degree {degree} > {d}")]
    DegreeExceedsD {
        vertex: usize,
        degree: usize,
        d: usize,
    },

    #[error("unmatched steps at position {position}")]
    UnmatchedSteps { position: usize },

    #[error("non-matchable path: no down-step vertex to the right of {vertex}")]
    NonMatchable { vertex: usize },

    #[error("multiple arc ({0}, {1}): path contains the Lambda pattern")]
    MultipleArc(usize, usize),

    #[error("system did not stabilize after {iterations} iterations")]
    NotStabilized { iterations: usize },

    #[error("parameter out of family range: exponent {exponent} at m = {m}")]
    FamilyRange { exponent: i64, m: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

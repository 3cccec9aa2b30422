use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph kinds differ: expected {expected}, found {found}")]
    KindMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("not a morphism: {0}")]
    NotMorphism(String),

    #[error("not isomorphic: {0}")]
    NotIsomorphic(String),

    #[error("graph is disconnected ({} components)", per_component.len())]
    Disconnected { per_component: Vec<u64> },

    #[error("in-degree and out-degree differ at vertex {0}")]
    Unbalanced(usize),

    #[error("search exceeded its cap ({0})")]
    Undecided(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

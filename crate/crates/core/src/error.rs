use thiserror::Error;

/// Errors shared across the crate.
///
/// Variants group into three classes that front ends map to exit codes:
/// input/validation problems, resource-cap overruns, and configurations the
/// closed formulas do not cover.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {n} unsupported; expected 1..={max}", max = crate::vset::MAX_LABEL)]
    BadVertexCount { n: usize },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },

    #[error("invalid family spec at vertex {vertex}: {reason}")]
    InvalidSpec { vertex: usize, reason: String },

    #[error("ambient variable counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("antichain grew to {size} sets, over the cap of {cap}")]
    AntichainCap { size: usize, cap: usize },

    #[error("{gens} generators exceed the search bound of {bound}")]
    SearchBound { gens: usize, bound: usize },

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("order is not a permutation of the {gens} generators")]
    NotAPermutation { gens: usize },

    #[error("ideal does not match the closed form for this spec")]
    IdealMismatch,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    fn invalid_spec(vertex: usize, reason: impl Into<String>) -> Self {
        Error::InvalidSpec {
            vertex,
            reason: reason.into(),
        }
    }

    pub(crate) fn spec_overlap(vertex: usize) -> Self {
        Self::invalid_spec(vertex, "appears in more than one role")
    }

    pub(crate) fn spec_out_of_range(vertex: usize, n: usize) -> Self {
        Self::invalid_spec(vertex, format!("label out of range 1..={n}"))
    }

    pub(crate) fn spec_uncovered(vertex: usize) -> Self {
        Self::invalid_spec(vertex, "neither a clique vertex nor a leaf")
    }
}

pub type Result<T> = std::result::Result<T, Error>;

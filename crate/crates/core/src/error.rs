use thiserror::Error;

use crate::word::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("symbol {symbol} is outside the alphabet 1..={alphabet}")]
    InvalidWord { symbol: usize, alphabet: usize },

    #[error("invalid IFS: {0}")]
    InvalidIfs(String),

    #[error("natural measure requires a 1-set (sum of ratios = 1); use the similarity dimension instead")]
    UnsupportedMeasure,

    #[error("depth {depth} too shallow: 2 * max_ratio^depth must be < 1")]
    DepthTooShallow { depth: u32 },

    #[error("similarity dimension exceeds 2 (sum of squared ratios > 1)")]
    DimensionOutOfRange,

    #[error("enumeration budget of {limit} cylinders exceeded (reached depth {depth_reached})")]
    Budget { limit: usize, depth_reached: usize },

    #[error("internal consistency violated: {0}")]
    InternalConsistency(String),

    #[error("operation requires a finite rotation semigroup")]
    InfiniteSemigroup,

    #[error("operation requires an infinite rotation semigroup")]
    FiniteSemigroup,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("rotation by a rational multiple of pi never reaches gap {delta}")]
    NeverEquidistributes { delta: f64 },

    #[error("not found: {0}")]
    NotFound(String),

    #[error("viewpoint lies inside the disc of cylinder {word}")]
    ViewpointTooClose { word: Word },

    #[error("maps with rotations or reflections have no induced line IFS")]
    UnsupportedForm,
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed word at position {position}: {reason}")]
    MalformedWord { position: usize, reason: String },

    #[error("malformed normal form at position {position}: {reason}")]
    MalformedNormalForm { position: usize, reason: String },

    #[error("ball budget of {budget} elements exceeded while growing to radius {radius}")]
    Resource { budget: usize, radius: u32 },

    #[error("element lies outside the radius-{radius} ball; enlarge the radius")]
    OutOfRange { radius: u32 },

    #[error("word `{word}` does not evaluate to the identity")]
    NotALoop { word: String },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("sampled range too short: need samples through n={needed}, have {available}")]
    Range { needed: usize, available: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

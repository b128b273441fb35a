use thiserror::Error;

/// Errors raised while building or querying belief structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state space must contain at least one state")]
    EmptySpace,
    #[error("state label must be nonempty")]
    EmptyLabel,
    #[error("duplicate state label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("state index {index} out of range for a space of {size} states")]
    StateOutOfRange { index: usize, size: usize },
    #[error("objects are defined over different state spaces")]
    SpaceMismatch,
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("not a probability distribution: {0}")]
    NotAPmf(String),
    #[error("player list must be nonempty")]
    NoPlayers,
    #[error("duplicate player `{0}`")]
    DuplicatePlayer(String),
    #[error("unknown player `{0}`")]
    UnknownPlayer(String),
    #[error("player `{0}` has no actions")]
    NoActions(String),
    #[error("duplicate action `{action}` for player `{player}`")]
    DuplicateAction { player: String, action: String },
    #[error("player `{0}` has no types")]
    NoTypes(String),
    #[error("player `{player}` lists type {index} twice")]
    DuplicateType { player: String, index: usize },
    #[error("unknown opponent profile `{0}`")]
    UnknownProfile(String),
    #[error("credal set must contain at least one measure")]
    EmptyCredalSet,
    #[error("extension space has {states} states, above the cap of {cap}")]
    SizeLimit { states: usize, cap: usize },
    #[error("exhaustive enumeration is capped at n = {cap}, requested {requested}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("blindspot set cannot be the whole state space")]
    InvalidBlindspotSet,
    #[error("decision function is undefined at {0}")]
    UndefinedAt(String),
    #[error("conditioning on {0}, which has zero prior probability")]
    ZeroProbabilityConditioning(String),
    #[error("at subset {subset}: {source}")]
    AtSubset { subset: String, source: Box<Error> },
    #[error("player `{player}` at state `{state}`: {source}")]
    AtPlayerState { player: String, state: String, source: Box<Error> },
    #[error("no instance satisfying the hypotheses found after {0} attempts")]
    GenerationExhausted(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

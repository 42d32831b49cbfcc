use thiserror::Error;

/// Errors raised by automaton operations and synthesis.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SctError {
    #[error("alphabet mismatch: {left} vs {right} ({context})")]
    AlphabetMismatch {
        left: String,
        right: String,
        context: &'static str,
    },

    #[error("{op} requires a deterministic automaton")]
    NondeterministicInput { op: &'static str },

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("unknown event `{0}`")]
    UnknownEvent(String),

    #[error("event `{event}` is not in the alphabet of `{automaton}`")]
    EventNotInAlphabet { event: String, automaton: String },

    #[error("invalid event partition: {reason}")]
    PartitionInvalid { reason: String },

    #[error("cannot realize a supervisor from an empty supremal result")]
    EmptySupervisor,

    #[error("automaton `{0}` has no initial state but a nonempty state set")]
    MissingInitial(String),

    #[error("invalid automaton `{name}`: {reason}")]
    InvalidAutomaton { name: String, reason: String },

    #[error("operands have empty marked language ({context})")]
    EmptyOperand { context: &'static str },
}

pub type Result<T> = std::result::Result<T, SctError>;

use alloc::string::String;

/// Errors raised by constructions. Axiom violations are not errors; they are
/// collected in a [`crate::Report`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("datum mismatch between operands")]
    DatumMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("component exceeds the cap of {0} elements")]
    CapExceeded(usize),
    #[error("seed is not a highest weight element: {0}")]
    NotHighestWeight(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("statistics of word {word} are unstable: {detail}")]
    Instability { word: String, detail: String },
    #[error("S-condition failure: {0}")]
    SCondition(String),
    #[error("crystal is not seminormal: {0}")]
    NotSeminormal(String),
    #[error("cannot compare -inf_ev with -inf_odd")]
    IncomparableInfinities,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistent values across words: {0}")]
    WordInconsistency(String),
    #[error("no stabilization within depth {depth}: {detail}")]
    NoStabilization { depth: usize, detail: String },
    #[error("decomposition failure: {0}")]
    Decomposition(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("relation check failed: {0}")]
    Relation(String),
}

pub type Result<T> = core::result::Result<T, Error>;

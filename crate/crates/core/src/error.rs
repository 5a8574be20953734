use std::io;

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("n = {n} exceeds the brute-force enumeration cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("{what} = {value} is out of range {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    NotPartition(String),

    #[error(
        "order {order} degree {degree} with holdout {holdout} needs at least \
         (order+1)(degree+1)+order+1+holdout = {needed} terms, got {got}"
    )]
    InsufficientTerms {
        order: usize,
        degree: usize,
        holdout: usize,
        needed: usize,
        got: usize,
    },

    #[error("all input terms are zero")]
    DegenerateInput,

    #[error("leading coefficient p_0(n) vanishes at n = {n}")]
    SingularLeading { n: i64 },

    #[error("recurrence does not divide exactly at n = {n}; wrong operator or seeds")]
    InexactDivision { n: i64 },

    #[error("engine {engine} does not apply: {reason}")]
    EngineNotApplicable { engine: String, reason: String },

    #[error("{engine} disagrees with the oracle at n = {n}: {got} vs {expected}")]
    OracleMismatch {
        engine: &'static str,
        n: usize,
        got: String,
        expected: String,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

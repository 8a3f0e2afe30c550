use thiserror::Error;

/// Errors raised by the evaluation and zero-finding pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("pole at s = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("non-finite result in {0}")]
    NonFinite(&'static str),

    #[error("accuracy budget not met: estimated error {estimate:e} exceeds target {target:e}")]
    AccuracyBudget { estimate: f64, target: f64 },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("character mod {modulus} is not primitive (conductor {conductor})")]
    NotPrimitive { modulus: u64, conductor: u64 },

    #[error("|L(s)| = {magnitude:e} is below the floor {floor:e}; s is too close to a zero")]
    NearZero { magnitude: f64, floor: f64 },

    #[error("rotated Z is not real at t = {t}: imaginary residue {residue:e}")]
    ImaginaryResidue { t: f64, residue: f64 },

    #[error("bracket [{lo}, {hi}] does not straddle a sign change")]
    SameSignBracket { lo: f64, hi: f64 },

    #[error("possible multiple zero or near-tangency of Z near t = {t} (|Z| = {value:e})")]
    Tangency { t: f64, value: f64 },

    #[error("argument-principle mesh failed near s = {re} + {im}i")]
    MeshFailure { re: f64, im: f64 },

    #[error("zero count mismatch: scan found {scanned}, argument principle gives {counted}; first discrepancy in ({lo}, {hi}]")]
    CountMismatch {
        scanned: usize,
        counted: i64,
        lo: f64,
        hi: f64,
    },

    #[error("ill-conditioned Laurent fit: {0}")]
    IllConditioned(String),

    #[error("L'(rho) failed at gamma = {gamma}: {source}")]
    ZeroEvaluation {
        gamma: f64,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

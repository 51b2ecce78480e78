use thiserror::Error;

/// Errors shared across the arithmetic and classification layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// All digits of a value vanished below its guaranteed precision, so no
    /// valuation (or residue, or decision depending on one) can be certified.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    /// The special fibre of the cover is not reduced (Kummer data cannot be
    /// brought to a unit of level divisible by p).
    #[error("special fibre not reduced: {0}")]
    NonReducedSpecialFibre(String),

    /// A series operation needed coefficients outside its exponent window.
    #[error("window exceeded: needed exponent {needed}, window bound {bound}")]
    WindowExceeded { needed: i64, bound: i64 },

    /// Branch divisor has a repeated zero or pole inside the germ.
    #[error("multiplicity not supported: repeated branch point inside the germ")]
    MultiplicityNotSupported,

    /// A branch point sits exactly on a gluing boundary (valuation 0 or e).
    #[error("branch point on boundary: root of valuation {0} on the gluing circle")]
    BranchOnBoundary(String),

    /// Input violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Integer identity cannot hold on the given data.
    #[error("parity violation: {0}")]
    ParityViolation(String),

    /// Data is internally inconsistent (e.g. negative genus).
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// An m-th root lives in a residue extension the coefficient tower does
    /// not contain; the needed degree over F_p is reported.
    #[error("needs residue extension of degree {degree}")]
    NeedsResidueExtension { degree: usize },

    /// Blow-up resolution exceeded its step limit.
    #[error("resolution step limit exceeded ({0} blow-ups)")]
    ResolutionLimit(usize),

    /// Germ is not reduced (square factor detected).
    #[error("germ not reduced: {0}")]
    NonReducedGerm(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

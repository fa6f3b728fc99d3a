use thiserror::Error;

/// Errors raised by the exact-arithmetic layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse scalar {0:?}: {1}")]
    ScalarParse(String, String),

    #[error("polynomial does not split over the working field: {poly}")]
    NonSplitOverField {
        poly: String,
        /// true when non-splitness is proved, false when the root search
        /// is merely inconclusive (residual factor of degree > 2)
        definitive: bool,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("form is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociativeForm(usize, usize, usize),

    #[error("form is not symmetric")]
    NotSymmetricForm,

    #[error("algebra is not semisimple (degenerate regular trace form)")]
    NotSemisimple,

    #[error("block {block} has dimension {dim}, not a perfect square")]
    NonSquareBlock { block: usize, dim: usize },

    #[error("map is not an antiautomorphism: fails on basis pair ({0}, {1})")]
    NotAntiautomorphism(usize, usize),

    #[error("map is not an involution: S^2 differs from the identity on basis element {0}")]
    NotInvolution(usize),

    #[error("S(e_{0}) is not a primitive central idempotent of the decomposition")]
    IdempotentNotMapped(usize),

    #[error("integral space has dimension {0}, expected 1")]
    NoIntegral(usize),

    #[error("counit vanishes on the integral space; Hopf algebra is not semisimple")]
    NotSemisimpleHopf,

    #[error("right-integral property fails; Hopf algebra is not unimodular")]
    NotUnimodular,

    #[error("regular character does not normalize: lambda(Lambda) != 1")]
    NormalizationFailure,

    #[error("character {0} vanishes on the Casimir contraction")]
    ZeroNormalizer(usize),

    #[error("adjoint-form solution space has dimension {0}, expected 1")]
    NoAdjointForm(usize),

    #[error("matrices do not define a representation: fails on basis pair ({0}, {1})")]
    NotRepresentation(usize, usize),

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

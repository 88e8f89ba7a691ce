//! Error type shared by all modules of the crate.
//!
//! Variants fall into three groups, which the CLI maps onto exit codes:
//! input validation (bad Kupisch series, out-of-range lengths, malformed
//! files), mathematical refusals (queries the theory gives no answer for,
//! which are reported rather than extrapolated), and triangular certificate
//! failures (a claimed Gorenstein-projective module over a triangular matrix
//! algebra that does not validate).

use thiserror::Error;

/// Coarse classification of an [`Error`], used for CLI exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input itself is malformed or out of range.
    Validation,
    /// The input is well-formed but the requested quantity is undefined
    /// or the theory does not apply; refused rather than fabricated.
    Refusal,
    /// A triangular-module certificate failed validation.
    Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // ---- input validation ----
    #[error("Kupisch series must be nonempty")]
    EmptySeries,
    #[error("simple projective present: c_{vertex} = {length} (every entry must be >= 2)")]
    SimpleProjectivePresent { vertex: usize, length: usize },
    #[error("Kupisch series not admissible: c_{next_vertex} = {next_length} < c_{vertex} - 1 = {required}")]
    NotAdmissible {
        vertex: usize,
        next_vertex: usize,
        next_length: usize,
        required: usize,
    },
    #[error("module length {len} out of range 1..={max} at vertex {vertex}")]
    LengthOutOfRange { vertex: usize, len: usize, max: usize },
    #[error("matrix dimension must be >= 1")]
    NonPositiveDimension,
    #[error("integer overflow in exact polynomial arithmetic")]
    Overflow,
    #[error("unknown bimodule label \"{0}\"")]
    UnknownLabel(String),
    #[error("invalid triangular spec: {0}")]
    InvalidSpec(String),

    // ---- mathematical refusals ----
    #[error("module is projective: syzygy orbit is undefined")]
    ProjectiveInput,
    #[error("the Gorenstein core is empty: no non-projective Gorenstein-projective module exists")]
    EmptyCore,
    #[error("module M({top},{len}) is not in the Gorenstein core")]
    NotInCore { top: usize, len: usize },
    #[error("projective core objects have no position in the stable Auslander-Reiten quiver")]
    ProjectiveInCore,
    #[error("stable Auslander-Reiten quiver of the core is empty (core Loewy length 1)")]
    DegenerateTube,
    #[error("module M({top},{len}) is not Gorenstein-projective: no deformation ring formula applies")]
    NotGorensteinProjective { top: usize, len: usize },
    #[error("unsupported: hypothesis s < |P(E_i)| fails for elementary with top {top} (s = {s}, |P| = {cover_length})")]
    HypothesisViolated {
        top: usize,
        s: usize,
        cover_length: usize,
    },
    #[error("Gorenstein core invariant violated: {0}")]
    CoreInvariantViolation(String),

    // ---- triangular certificate failures ----
    #[error("length accounting failed: |V| = {v_total} but |B (x) W| + |coker f| = {bw_total} + {coker_total}")]
    LengthMismatch {
        v_total: usize,
        bw_total: usize,
        coker_total: usize,
    },
    #[error("no embedding of B (x) W into V realizes the declared cokernel: {0}")]
    EmbeddingMismatch(String),
    #[error("cokernel component M({top},{len}) is not Gorenstein-projective over Lambda")]
    CokerNotGorenstein { top: usize, len: usize },
    #[error("Sigma is not asserted Gorenstein")]
    NotGorensteinSigma,
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("V must be a single indecomposable (got {0} components)")]
    DecomposableV(usize),
}

impl Error {
    /// Stable variant name, for typed error reporting on the CLI.
    pub fn name(&self) -> &'static str {
        use Error::*;
        match self {
            EmptySeries => "EmptySeries",
            SimpleProjectivePresent { .. } => "SimpleProjectivePresent",
            NotAdmissible { .. } => "NotAdmissible",
            LengthOutOfRange { .. } => "LengthOutOfRange",
            NonPositiveDimension => "NonPositiveDimension",
            Overflow => "Overflow",
            UnknownLabel(_) => "UnknownLabel",
            InvalidSpec(_) => "InvalidSpec",
            ProjectiveInput => "ProjectiveInput",
            EmptyCore => "EmptyCore",
            NotInCore { .. } => "NotInCore",
            ProjectiveInCore => "ProjectiveInCore",
            DegenerateTube => "DegenerateTube",
            NotGorensteinProjective { .. } => "NotGorensteinProjective",
            HypothesisViolated { .. } => "HypothesisViolated",
            CoreInvariantViolation(_) => "CoreInvariantViolation",
            LengthMismatch { .. } => "LengthMismatch",
            EmbeddingMismatch(_) => "EmbeddingMismatch",
            CokerNotGorenstein { .. } => "CokerNotGorenstein",
            NotGorensteinSigma => "NotGorensteinSigma",
            PreconditionUnmet(_) => "PreconditionUnmet",
            DecomposableV(_) => "DecomposableV",
        }
    }

    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            EmptySeries
            | SimpleProjectivePresent { .. }
            | NotAdmissible { .. }
            | LengthOutOfRange { .. }
            | NonPositiveDimension
            | Overflow
            | UnknownLabel(_)
            | InvalidSpec(_) => ErrorKind::Validation,
            ProjectiveInput
            | EmptyCore
            | NotInCore { .. }
            | ProjectiveInCore
            | DegenerateTube
            | NotGorensteinProjective { .. }
            | HypothesisViolated { .. }
            | CoreInvariantViolation(_) => ErrorKind::Refusal,
            LengthMismatch { .. }
            | EmbeddingMismatch(_)
            | CokerNotGorenstein { .. }
            | NotGorensteinSigma
            | PreconditionUnmet(_)
            | DecomposableV(_) => ErrorKind::Certificate,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

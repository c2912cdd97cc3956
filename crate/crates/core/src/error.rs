use thiserror::Error;

/// Errors raised by diagram construction and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: no diagram terms found")]
    EmptyInput,

    #[error("malformed token `{token}`: {reason}")]
    MalformedToken { token: String, reason: String },

    #[error("edge label {label} appears {count} times (expected 2)")]
    EdgeLabelCount { label: String, count: usize },

    #[error("orientation inconsistency at edge label {label}")]
    OrientationConflict { label: String },

    #[error("Euler check failed on a connected piece: V={vertices} E={edges} F={faces}")]
    EulerCheckFailed {
        vertices: usize,
        edges: usize,
        faces: usize,
    },

    #[error("diagram is disconnected; {operation} requires a connected diagram")]
    Disconnected { operation: &'static str },

    #[error("crossing index {index} out of range (crossing count {count})")]
    CrossingIndexOutOfRange { index: usize, count: usize },

    #[error("state assignment length {got} does not match crossing count {expected}")]
    StateLengthMismatch { got: usize, expected: usize },

    #[error("crossing count {crossings} exceeds the {operation} cap of {cap}")]
    CapExceeded {
        operation: &'static str,
        crossings: usize,
        cap: usize,
    },

    #[error("component {component} has no crossing passes; edge weights are undefined")]
    CrossinglessComponent { component: usize },

    #[error("edge {edge} does not belong to component {component}")]
    EdgeNotOnComponent { edge: usize, component: usize },

    #[error("braid parameter out of range: {reason}")]
    BraidParameter { reason: String },

    #[error("family parameters outside the cited range: {reason}")]
    FamilyParameter { reason: String },

    #[error("{p} and {q} are not relatively prime")]
    NotCoprime { p: u64, q: u64 },

    #[error("twist parameter r={r} out of range 0 < r < p for p={p}")]
    TorusRemainderRange { p: u64, r: u64 },

    #[error("whitehead doubling requires a single-component diagram (got {components})")]
    MultiComponentDouble { components: usize },

    #[error("tangle is not alternating")]
    TangleNotAlternating,

    #[error("tangle does not extend the crossing: {reason}")]
    TangleDoesNotExtend { reason: String },

    #[error("boundary stub {stub} appears {count} times in tangle (expected 1)")]
    TangleBoundaryCount { stub: String, count: usize },

    #[error("Jones polynomials of the supplied diagrams disagree: {left} vs {right}")]
    JonesMismatch { left: String, right: String },

    #[error("no diagrams supplied")]
    NoDiagrams,

    #[error("dimension map is empty")]
    EmptyDimensions,
}

pub type Result<T> = std::result::Result<T, Error>;

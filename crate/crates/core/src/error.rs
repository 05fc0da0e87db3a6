use crate::frames::RayId;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("vector must have at least one entry")]
    EmptyVector,

    #[error("zero vector cannot be used as a ray")]
    ZeroRay,

    #[error("zero state vector")]
    ZeroState,

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse scalar {text:?}: {reason}")]
    ScalarParse { text: String, reason: String },

    #[error("operator entries do not form a {dim}x{dim} matrix")]
    MalformedMatrix { dim: usize },

    #[error("operator is not Hermitian")]
    NotHermitian,

    #[error("operator trace is {trace}, expected 1")]
    TraceNotOne { trace: String },

    #[error("operator is not positive semi-definite: principal minor {rows:?} is {value}")]
    NotPositiveSemiDefinite { rows: Vec<usize>, value: String },

    #[error("positive semi-definiteness check is capped at dimension {cap}, got {dim}")]
    PsdDimensionCap { dim: usize, cap: usize },

    #[error("operator is not unitary")]
    NotUnitary,

    #[error("mixture must have at least one component, all weights positive")]
    InvalidMixture,

    #[error("duplicate ray id {id}")]
    DuplicateRayId { id: RayId },

    #[error("rays {first} and {second} have identical canonical coordinates")]
    DuplicateRay { first: RayId, second: RayId },

    #[error("ray {id} has dimension {actual}, frame dimension is {expected}")]
    RayDimension {
        id: RayId,
        actual: usize,
        expected: usize,
    },

    #[error("unknown ray id {id}")]
    UnknownRayId { id: RayId },

    #[error("declared basis #{index} is invalid: {reason}")]
    InvalidBasis { index: usize, reason: String },

    #[error("context members are not pairwise orthogonal: {first} and {second}")]
    NotAContext { first: RayId, second: RayId },

    #[error("frame has no basis contexts: nothing to valuate against")]
    NoBasisContexts,

    #[error("frame is not classical: {reason}")]
    NotClassical { reason: String },

    #[error("local valuations are incompatible; run check_compatibility to locate the offending pair")]
    IncompatibleFamily,

    #[error("valuation is not total: missing ray id {id}")]
    MissingAssignment { id: RayId },

    #[error("valuation assigns {id}, which is not a ray of the frame")]
    ForeignAssignment { id: RayId },

    #[error("intensive value {value} for ray {id} is outside [0, 1]")]
    ValueOutOfRange { id: RayId, value: String },

    #[error("subgraph is not contained in the host graph")]
    HostMismatch,

    #[error("subgraph violates endpoint closure: edge ({0}, {1}) lacks an endpoint node")]
    EndpointClosure(u32, u32),

    #[error("host has {nodes} nodes; brute-force enumeration is capped at {cap}")]
    HostTooLarge { nodes: usize, cap: usize },

    #[error("graph edge ({0}, {1}) references a missing node")]
    UnknownNode(u32, u32),
}

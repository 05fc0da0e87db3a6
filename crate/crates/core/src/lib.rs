//! Exact-arithmetic toolkit for quantum contextuality scenarios.
//!
//! A scenario is a finite set of rays (unnormalized vectors with identifiers)
//! in a fixed dimension. Orthogonality between rays induces a graph whose
//! complete subgraphs are the measurement contexts; maximal contexts of size
//! equal to the dimension are orthonormal bases. On top of that structure the
//! crate provides:
//!
//! * exact linear algebra over the rationals and Gaussian rationals
//!   ([`algebra`]) — projectors, density operators, rational unitaries, and
//!   the Born rule, with no floating point anywhere;
//! * frame and context machinery ([`frames`]) — canonical ray forms,
//!   orthogonality graphs, and maximal-clique enumeration;
//! * valuations ([`valuations`]) — binary valuations and a complete
//!   Kochen-Specker solver with parity certificates, intensive (rational
//!   `[0,1]`-valued) valuations generated by the Born rule, the support
//!   collapse from intensive to binary valuations, and exact density-operator
//!   reconstruction from a valuation table;
//! * the Heyting algebra of subgraphs of a fixed graph ([`logos`]), with a
//!   brute-force oracle for the implication operation.
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

pub mod algebra;
pub mod frames;
pub mod logos;
pub mod random;
pub mod samples;
pub mod valuations;

mod error;

pub use error::Error;

pub use algebra::{
    born_probability, commutes, inner_product, projector_from_ray, vector_rank, DensityOperator,
    Operator, RationalUnitary, Scalar, State, Vector,
};
pub use frames::{
    build_graph, contexts_compatible, enumerate_maximal_contexts, resolve_bases, Context, Frame,
    OrthogonalityGraph, Ray, RayId,
};
pub use logos::{HostGraph, Subgraph};
pub use valuations::{
    born_giv, check_compatibility, check_psa, classical_asa, collapse_tau, evolution_commutes,
    is_asa, ks_solve, ks_solve_with, parity_certificate, paste_local_valuations,
    reconstruct_density, restrict_global, BinaryValuation, IntensiveValuation, KsReport,
    KsVerdict, LocalBinaryValuation, Origin, ParityCertificate, Reconstruction, SolveOptions,
    UnsatCertificate,
};

/// Arbitrary-precision rational, re-exported for downstream crates.
pub type Rational = num::BigRational;
/// Arbitrary-precision integer, re-exported for downstream crates.
pub type Integer = num::BigInt;

pub(crate) type Result<T> = std::result::Result<T, Error>;

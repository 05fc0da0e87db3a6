//! Exact linear algebra over the rationals and Gaussian rationals.
//!
//! Every quantity in this module is an arbitrary-precision rational or a
//! Gaussian rational (`a + bi` with rational `a`, `b`). There is no floating
//! point and no tolerance anywhere: equality of scalars, operators, and Born
//! probabilities is decidable and exact. Rays are kept unnormalized and the
//! normalization is folded into the formulas, so irrational norms never
//! appear.

mod density;
mod operator;
mod scalar;
mod vector;

pub use density::{born_probability, DensityOperator, RationalUnitary, State, PSD_CHECK_CAP};
pub use operator::{commutes, projector_from_ray, Operator};
pub use scalar::{format_rational, parse_rational, Scalar};
pub use vector::{inner_product, vector_rank, Vector};

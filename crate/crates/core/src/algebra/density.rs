use std::fmt;

use num::{BigRational, One, Signed};

use super::operator::{projector_from_ray, Operator};
use super::scalar::{format_rational, Scalar};
use super::vector::{inner_product, Vector};
use crate::{Error, Result};

/// Largest dimension at which the principal-minor positive-semidefiniteness
/// check runs: the check enumerates all `2^d - 1` principal minors.
pub const PSD_CHECK_CAP: usize = 8;

fn check_psd_by_minors(op: &Operator) -> Result<()> {
    let d = op.dim();
    if d > PSD_CHECK_CAP {
        return Err(Error::PsdDimensionCap {
            dim: d,
            cap: PSD_CHECK_CAP,
        });
    }
    // A Hermitian matrix is positive semi-definite iff every principal minor
    // (not only the leading ones) is nonnegative.
    for mask in 1u32..(1 << d) {
        let rows: Vec<usize> = (0..d).filter(|k| mask & (1 << k) != 0).collect();
        let det = op.principal_submatrix(&rows).determinant();
        let value = det
            .as_rational()
            .expect("principal minor of a Hermitian matrix is real");
        if value.is_negative() {
            return Err(Error::NotPositiveSemiDefinite {
                rows,
                value: format_rational(&value),
            });
        }
    }
    Ok(())
}

/// A density operator: Hermitian, trace exactly 1, positive semi-definite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DensityOperator {
    op: Operator,
}

impl DensityOperator {
    /// Validates all three invariants. The semi-definiteness check enumerates
    /// principal minors and is capped at dimension [`PSD_CHECK_CAP`]; use
    /// [`DensityOperator::from_mixture`] above the cap, where positivity
    /// holds by construction.
    pub fn new(op: Operator) -> Result<Self> {
        if !op.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let trace = op.trace();
        if !trace.is_one() {
            return Err(Error::TraceNotOne {
                trace: trace.to_string(),
            });
        }
        check_psd_by_minors(&op)?;
        Ok(DensityOperator { op })
    }

    /// The pure state `|ψ⟩⟨ψ| / ⟨ψ|ψ⟩`.
    pub fn from_pure(state: &Vector) -> Result<Self> {
        if state.is_zero() {
            return Err(Error::ZeroState);
        }
        Ok(DensityOperator {
            op: projector_from_ray(state)?,
        })
    }

    /// Convex mixture `Σ wᵢ·|ψᵢ⟩⟨ψᵢ|` with the weights normalized to sum 1.
    /// Positive semi-definite by construction, so this works at any
    /// dimension.
    pub fn from_mixture(components: &[(Vector, BigRational)]) -> Result<Self> {
        if components.is_empty() || components.iter().any(|(_, w)| !w.is_positive()) {
            return Err(Error::InvalidMixture);
        }
        let total: BigRational = components.iter().map(|(_, w)| w.clone()).sum();
        let dim = components[0].0.dim();
        let mut op = Operator::identity(dim).scale(&Scalar::zero());
        for (state, weight) in components {
            let p = projector_from_ray(state)?;
            let w = Scalar::from_rational(weight / &total);
            op = op.add(&p.scale(&w))?;
        }
        debug_assert!(op.is_hermitian() && op.trace().is_one());
        Ok(DensityOperator { op })
    }

    /// The maximally mixed state `I/d`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedMatrix { dim });
        }
        let op = Operator::identity(dim).scale(&Scalar::ratio(1, dim as i64));
        Ok(DensityOperator { op })
    }

    /// Wraps an operator whose invariants are guaranteed by the caller
    /// (unitary conjugation of a valid density operator).
    pub(crate) fn from_op_unchecked(op: Operator) -> Self {
        debug_assert!(op.is_hermitian() && op.trace().is_one());
        DensityOperator { op }
    }

    pub fn op(&self) -> &Operator {
        &self.op
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }
}

/// A unitary with exact rational (or Gaussian-rational) entries:
/// `U·U† = I` holds exactly, verified at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalUnitary {
    op: Operator,
}

impl RationalUnitary {
    pub fn new(op: Operator) -> Result<Self> {
        let product = op.matmul(&op.adjoint())?;
        if product != Operator::identity(op.dim()) {
            return Err(Error::NotUnitary);
        }
        Ok(RationalUnitary { op })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedMatrix { dim });
        }
        Ok(RationalUnitary {
            op: Operator::identity(dim),
        })
    }

    /// Permutation unitary: `perm[i]` is the source coordinate routed into
    /// coordinate `i`, i.e. `(Uv)_i = v_perm[i]`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let dim = perm.len();
        let mut seen = vec![false; dim];
        for &p in perm {
            if p >= dim || seen[p] {
                return Err(Error::NotUnitary);
            }
            seen[p] = true;
        }
        let mut rows = vec![vec![Scalar::zero(); dim]; dim];
        for (i, &p) in perm.iter().enumerate() {
            rows[i][p] = Scalar::one();
        }
        Ok(RationalUnitary {
            op: Operator::from_rows(rows).expect("square by construction"),
        })
    }

    /// Plane rotation acting on coordinates `i, j` with exact rational
    /// cosine and sine (a Pythagorean pair such as 3/5, 4/5).
    pub fn givens(dim: usize, i: usize, j: usize, cos: BigRational, sin: BigRational) -> Result<Self> {
        if i >= dim || j >= dim || i == j {
            return Err(Error::NotUnitary);
        }
        if &cos * &cos + &sin * &sin != BigRational::one() {
            return Err(Error::NotUnitary);
        }
        let mut rows: Vec<Vec<Scalar>> = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|c| if r == c { Scalar::one() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        rows[i][i] = Scalar::from_rational(cos.clone());
        rows[i][j] = Scalar::from_rational(sin.clone());
        rows[j][i] = Scalar::from_rational(-sin);
        rows[j][j] = Scalar::from_rational(cos);
        Ok(RationalUnitary {
            op: Operator::from_rows(rows).expect("square by construction"),
        })
    }

    /// Diagonal unitary from unit scalars (each must satisfy `u·conj(u) = 1`,
    /// e.g. `±1`, `±i`, or `3/5 + 4/5·i`).
    pub fn diagonal(units: Vec<Scalar>) -> Result<Self> {
        let dim = units.len();
        if dim == 0 || units.iter().any(|u| !(&u.conj() * u).is_one()) {
            return Err(Error::NotUnitary);
        }
        let mut rows = vec![vec![Scalar::zero(); dim]; dim];
        for (k, u) in units.into_iter().enumerate() {
            rows[k][k] = u;
        }
        Ok(RationalUnitary {
            op: Operator::from_rows(rows).expect("square by construction"),
        })
    }

    /// `self · other`, applying `other` first.
    pub fn compose(&self, other: &RationalUnitary) -> Result<Self> {
        Ok(RationalUnitary {
            op: self.op.matmul(&other.op)?,
        })
    }

    pub fn op(&self) -> &Operator {
        &self.op
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        self.op.apply(v)
    }

    /// Heisenberg-style conjugation `U·P·U†`.
    pub fn conjugate_operator(&self, p: &Operator) -> Result<Operator> {
        self.op.matmul(p)?.matmul(&self.op.adjoint())
    }

    /// Schrödinger-style evolution `U·ρ·U†`, which preserves every density
    /// invariant exactly.
    pub fn evolve_density(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        let op = self.conjugate_operator(rho.op())?;
        Ok(DensityOperator::from_op_unchecked(op))
    }
}

/// A quantum state: either a pure state (an unnormalized nonzero vector) or
/// a density operator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum State {
    Pure(Vector),
    Density(DensityOperator),
}

impl State {
    pub fn pure(v: Vector) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroState);
        }
        Ok(State::Pure(v))
    }

    pub fn dim(&self) -> usize {
        match self {
            State::Pure(v) => v.dim(),
            State::Density(rho) => rho.dim(),
        }
    }

    pub fn evolve(&self, u: &RationalUnitary) -> Result<State> {
        match self {
            State::Pure(v) => Ok(State::Pure(u.apply(v)?)),
            State::Density(rho) => Ok(State::Density(u.evolve_density(rho)?)),
        }
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            State::Pure(v) => write!(f, "pure {v}"),
            State::Density(rho) => write!(f, "density (dim {})", rho.dim()),
        }
    }
}

/// Born probability of finding the state along the ray `v`:
/// `Tr(ρ·P_v)`, or `|⟨ψ|v⟩|² / (⟨ψ|ψ⟩·⟨v|v⟩)` for a pure state. Exact, and
/// always in `[0, 1]`.
pub fn born_probability(state: &State, v: &Vector) -> Result<BigRational> {
    if v.is_zero() {
        return Err(Error::ZeroRay);
    }
    let prob = match state {
        State::Pure(psi) => {
            if psi.is_zero() {
                return Err(Error::ZeroState);
            }
            let overlap = inner_product(psi, v)?;
            overlap.norm_sqr() / (psi.norm_sqr() * v.norm_sqr())
        }
        State::Density(rho) => {
            if rho.dim() != v.dim() {
                return Err(Error::DimensionMismatch {
                    left: rho.dim(),
                    right: v.dim(),
                });
            }
            // Tr(ρ|v⟩⟨v|)/⟨v|v⟩ as the quadratic form ⟨v|ρ|v⟩/⟨v|v⟩.
            let d = v.dim();
            let mut form = Scalar::zero();
            for j in 0..d {
                for k in 0..d {
                    form = &form + &(&(&v.entry(j).conj() * rho.op().entry(j, k)) * v.entry(k));
                }
            }
            let value = form
                .as_rational()
                .expect("quadratic form of a Hermitian operator is real");
            value / v.norm_sqr()
        }
    };
    debug_assert!(!prob.is_negative() && prob <= BigRational::one());
    Ok(prob)
}

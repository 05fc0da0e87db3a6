//! Binary and intensive valuations over a frame.
//!
//! A binary valuation assigns `{0, 1}` to every ray; it is an admissible
//! state of affairs when every basis context carries exactly one `1`.
//! [`ks_solve`] decides whether such a valuation exists, producing a witness
//! or an unsatisfiability certificate. An intensive valuation assigns an
//! exact rational in `[0, 1]` to every ray; the Born rule generates one from
//! any state, [`check_psa`] tests the quantum additivity axioms, and
//! [`reconstruct_density`] inverts the Born map where the frame determines
//! the state.

mod reconstruct;
mod solver;

pub use reconstruct::{reconstruct_density, Reconstruction};
pub use solver::{ks_solve, ks_solve_with, paste_local_valuations, SolveOptions};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::algebra::{born_probability, format_rational, RationalUnitary, State};
use crate::frames::{build_graph, enumerate_maximal_contexts, resolve_bases, Context, Frame, RayId};
use crate::{Error, Result};

/// A total `{0, 1}` assignment over a frame's rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryValuation {
    values: BTreeMap<RayId, bool>,
}

impl BinaryValuation {
    /// Requires the assignment to be total over the frame and to mention no
    /// foreign rays.
    pub fn new(frame: &Frame, values: BTreeMap<RayId, bool>) -> Result<Self> {
        for id in values.keys() {
            if !frame.contains(*id) {
                return Err(Error::ForeignAssignment { id: *id });
            }
        }
        for id in frame.ray_ids() {
            if !values.contains_key(&id) {
                return Err(Error::MissingAssignment { id });
            }
        }
        Ok(BinaryValuation { values })
    }

    pub fn value(&self, id: RayId) -> Option<bool> {
        self.values.get(&id).copied()
    }

    pub fn values(&self) -> &BTreeMap<RayId, bool> {
        &self.values
    }

    /// The constant valuation.
    pub fn constant(frame: &Frame, value: bool) -> Self {
        BinaryValuation {
            values: frame.ray_ids().into_iter().map(|id| (id, value)).collect(),
        }
    }
}

/// A `{0, 1}` assignment on a single context.
///
/// A local valuation on a basis context is admissible when exactly one member
/// is assigned `1` ([`LocalBinaryValuation::satisfies_basis_rule`]). The rule
/// is a predicate rather than a construction-time requirement: pasting takes
/// arbitrary local assignments and decides whether a global extension exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalBinaryValuation {
    context: Context,
    values: BTreeMap<RayId, bool>,
}

impl LocalBinaryValuation {
    /// Requires the assignment to be total over the context, with no foreign
    /// rays.
    pub fn new(context: Context, values: BTreeMap<RayId, bool>) -> Result<Self> {
        for id in values.keys() {
            if !context.contains(*id) {
                return Err(Error::ForeignAssignment { id: *id });
            }
        }
        for &id in context.members() {
            if !values.contains_key(&id) {
                return Err(Error::MissingAssignment { id });
            }
        }
        Ok(LocalBinaryValuation { context, values })
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn value(&self, id: RayId) -> Option<bool> {
        self.values.get(&id).copied()
    }

    pub fn values(&self) -> &BTreeMap<RayId, bool> {
        &self.values
    }

    /// If the context is a basis, exactly one member carries a `1`.
    pub fn satisfies_basis_rule(&self) -> bool {
        !self.context.is_basis() || self.values.values().filter(|&&v| v).count() == 1
    }
}

/// Where an intensive valuation came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    /// Generated by the Born rule from a state.
    Born(State),
    /// Supplied directly (e.g. loaded from a scenario file).
    Loaded,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Born(state) => write!(f, "born({state})"),
            Origin::Loaded => write!(f, "loaded"),
        }
    }
}

/// A total assignment of exact rationals in `[0, 1]` over a frame's rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntensiveValuation {
    values: BTreeMap<RayId, BigRational>,
    origin: Origin,
}

impl IntensiveValuation {
    pub fn new(
        frame: &Frame,
        values: BTreeMap<RayId, BigRational>,
        origin: Origin,
    ) -> Result<Self> {
        for (id, value) in &values {
            if !frame.contains(*id) {
                return Err(Error::ForeignAssignment { id: *id });
            }
            if value.is_negative() || *value > BigRational::one() {
                return Err(Error::ValueOutOfRange {
                    id: *id,
                    value: format_rational(value),
                });
            }
        }
        for id in frame.ray_ids() {
            if !values.contains_key(&id) {
                return Err(Error::MissingAssignment { id });
            }
        }
        Ok(IntensiveValuation { values, origin })
    }

    pub fn value(&self, id: RayId) -> Option<&BigRational> {
        self.values.get(&id)
    }

    pub fn values(&self) -> &BTreeMap<RayId, BigRational> {
        &self.values
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }
}

/// A certificate that no admissible binary valuation exists: with an odd
/// number of bases and every ray occurring an even number of times across
/// them, summing the per-basis "exactly one 1" equations would make an odd
/// number equal an even one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCertificate {
    basis_count: usize,
    multiplicities: BTreeMap<RayId, usize>,
}

impl ParityCertificate {
    pub fn basis_count(&self) -> usize {
        self.basis_count
    }

    pub fn multiplicities(&self) -> &BTreeMap<RayId, usize> {
        &self.multiplicities
    }

    /// Valid iff the basis count is odd and every multiplicity is even.
    pub fn is_valid(&self) -> bool {
        self.basis_count % 2 == 1 && self.multiplicities.values().all(|&m| m % 2 == 0)
    }
}

/// Outcome of the satisfiability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KsVerdict {
    Satisfiable(BinaryValuation),
    Unsatisfiable(UnsatCertificate),
}

/// Why the search concluded unsatisfiability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnsatCertificate {
    Parity(ParityCertificate),
    SearchExhausted { nodes: u64, branches: u64 },
}

/// Solver verdict for a frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KsReport {
    pub verdict: KsVerdict,
}

impl KsReport {
    pub fn is_satisfiable(&self) -> bool {
        matches!(self.verdict, KsVerdict::Satisfiable(_))
    }

    pub fn witness(&self) -> Option<&BinaryValuation> {
        match &self.verdict {
            KsVerdict::Satisfiable(v) => Some(v),
            KsVerdict::Unsatisfiable(_) => None,
        }
    }
}

/// True iff every basis context carries exactly one `1`.
pub fn is_asa(valuation: &BinaryValuation, bases: &[Context]) -> bool {
    bases.iter().all(|basis| {
        basis
            .members()
            .iter()
            .filter(|&&id| valuation.value(id) == Some(true))
            .count()
            == 1
    })
}

/// Builds a parity certificate when the basis family admits one.
pub fn parity_certificate(bases: &[Context]) -> Option<ParityCertificate> {
    let mut multiplicities: BTreeMap<RayId, usize> = BTreeMap::new();
    for basis in bases {
        for &id in basis.members() {
            *multiplicities.entry(id).or_insert(0) += 1;
        }
    }
    let certificate = ParityCertificate {
        basis_count: bases.len(),
        multiplicities,
    };
    certificate.is_valid().then_some(certificate)
}

/// Pointwise restriction of a global valuation to a context.
///
/// The context must lie within the valuation's frame.
pub fn restrict_global(valuation: &BinaryValuation, context: &Context) -> LocalBinaryValuation {
    let values = context
        .members()
        .iter()
        .map(|&id| {
            let v = valuation
                .value(id)
                .expect("context lies within the valuation's frame");
            (id, v)
        })
        .collect();
    LocalBinaryValuation {
        context: context.clone(),
        values,
    }
}

/// True iff every pair of local valuations agrees on every shared ray.
/// Necessary for a common global extension, but not sufficient.
pub fn check_compatibility(family: &[LocalBinaryValuation]) -> bool {
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            let shared = a
                .values
                .keys()
                .filter(|id| b.values.contains_key(id));
            for id in shared {
                if a.values[id] != b.values[id] {
                    return false;
                }
            }
        }
    }
    true
}

/// The Born-rule intensive valuation of a frame under a state.
pub fn born_giv(frame: &Frame, state: &State) -> Result<IntensiveValuation> {
    if state.dim() != frame.dim() {
        return Err(Error::DimensionMismatch {
            left: state.dim(),
            right: frame.dim(),
        });
    }
    let mut values = BTreeMap::new();
    for ray in frame.rays() {
        values.insert(ray.id(), born_probability(state, ray.coords())?);
    }
    Ok(IntensiveValuation {
        values,
        origin: Origin::Born(state.clone()),
    })
}

/// Tests the additivity axioms of an intensive valuation: every basis context
/// sums to exactly 1 and every other context sums to at most 1.
///
/// Checking maximal contexts suffices: values are nonnegative, so the sum
/// over any context is bounded by the sum over a maximal context containing
/// it.
pub fn check_psa(giv: &IntensiveValuation, frame: &Frame) -> bool {
    let graph = build_graph(frame);
    let contexts = enumerate_maximal_contexts(frame, &graph);
    let one = BigRational::one();
    for context in &contexts {
        let sum: BigRational = context
            .members()
            .iter()
            .map(|id| giv.value(*id).expect("valuation is total").clone())
            .sum();
        if context.is_basis() {
            if sum != one {
                return false;
            }
        } else if sum > one {
            return false;
        }
    }
    true
}

/// The support collapse `τ`: value 0 maps to 0, any positive value to 1.
pub fn collapse_tau(giv: &IntensiveValuation) -> BinaryValuation {
    BinaryValuation {
        values: giv
            .values
            .iter()
            .map(|(&id, value)| (id, !value.is_zero()))
            .collect(),
    }
}

/// An admissible valuation for a classical frame — one whose orthogonality
/// graph is a disjoint union of complete components, so that constraints
/// never overlap. Assigns `1` to the lowest-id ray of each basis.
pub fn classical_asa(frame: &Frame) -> Result<BinaryValuation> {
    let graph = build_graph(frame);
    // Connected components, each of which must be a clique.
    let mut unvisited: BTreeSet<RayId> = graph.node_ids().iter().copied().collect();
    while let Some(&start) = unvisited.iter().next() {
        let mut component = BTreeSet::new();
        let mut queue = vec![start];
        while let Some(id) = queue.pop() {
            if !component.insert(id) {
                continue;
            }
            unvisited.remove(&id);
            if let Some(neighbors) = graph.neighbors(id) {
                queue.extend(neighbors.iter().copied().filter(|n| !component.contains(n)));
            }
        }
        let members: Vec<RayId> = component.iter().copied().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !graph.edge(a, b) {
                    return Err(Error::NotClassical {
                        reason: format!(
                            "rays {a} and {b} share a component but are not orthogonal"
                        ),
                    });
                }
            }
        }
    }
    let bases = resolve_bases(frame)?;
    let mut values: BTreeMap<RayId, bool> =
        frame.ray_ids().into_iter().map(|id| (id, false)).collect();
    for basis in &bases {
        let lowest = *basis.members().iter().next().expect("basis is nonempty");
        values.insert(lowest, true);
    }
    let valuation = BinaryValuation { values };
    debug_assert!(is_asa(&valuation, &bases));
    Ok(valuation)
}

/// True iff the Born table is invariant under simultaneously evolving the
/// state and the rays: `born(UρU†, Uv) = born(ρ, v)` for every ray `v`.
pub fn evolution_commutes(frame: &Frame, state: &State, u: &RationalUnitary) -> Result<bool> {
    if u.dim() != frame.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: frame.dim(),
        });
    }
    let evolved = state.evolve(u)?;
    for ray in frame.rays() {
        let before = born_probability(state, ray.coords())?;
        let after = born_probability(&evolved, &u.apply(ray.coords())?)?;
        if before != after {
            return Ok(false);
        }
    }
    Ok(true)
}

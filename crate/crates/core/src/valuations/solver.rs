//! Backtracking search for admissible binary valuations.
//!
//! Constraints are the frame's basis contexts, each demanding exactly one
//! member valued `1`. The solver branches on the lowest-id unassigned ray of
//! the most constrained undecided basis, trying `1` before `0`, with unit
//! propagation after every assignment:
//!
//! * a `1` in a basis zeroes its unassigned siblings;
//! * a basis with every member `0` but one forces the last to `1`;
//! * a second `1` in a basis, or an all-`0` basis, is a conflict.
//!
//! The search is sequential and fully deterministic: verdicts, witnesses,
//! and node/branch statistics are reproducible across runs. Before
//! searching, the parity certificate is attempted as a fast path (unless
//! disabled).

use std::collections::BTreeMap;

use crate::frames::{resolve_bases, Context, Frame, RayId};
use crate::{Error, Result};

use super::{
    check_compatibility, is_asa, parity_certificate, BinaryValuation, KsReport, KsVerdict,
    LocalBinaryValuation, UnsatCertificate,
};

/// Knobs for [`ks_solve_with`].
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Attempt the parity certificate before searching. Disable to force the
    /// exhaustive search path.
    pub try_parity_certificate: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            try_parity_certificate: true,
        }
    }
}

/// Decides whether the frame admits a binary valuation with exactly one `1`
/// per basis. See [`ks_solve_with`].
pub fn ks_solve(frame: &Frame) -> Result<KsReport> {
    ks_solve_with(frame, &SolveOptions::default())
}

/// Like [`ks_solve`], with explicit options.
///
/// Errors if the frame has no basis contexts. On success the verdict is
/// either a witness valuation (which passes [`is_asa`]) or an
/// unsatisfiability certificate — the parity argument when it applies,
/// otherwise exhausted-search statistics.
pub fn ks_solve_with(frame: &Frame, options: &SolveOptions) -> Result<KsReport> {
    let bases = resolve_bases(frame)?;
    if bases.is_empty() {
        return Err(Error::NoBasisContexts);
    }
    if options.try_parity_certificate {
        if let Some(certificate) = parity_certificate(&bases) {
            return Ok(KsReport {
                verdict: KsVerdict::Unsatisfiable(UnsatCertificate::Parity(certificate)),
            });
        }
    }
    let mut search = Search::new(frame, &bases);
    let verdict = match search.run(&[]) {
        Some(valuation) => {
            debug_assert!(is_asa(&valuation, &bases));
            KsVerdict::Satisfiable(valuation)
        }
        None => KsVerdict::Unsatisfiable(UnsatCertificate::SearchExhausted {
            nodes: search.nodes,
            branches: search.branches,
        }),
    };
    Ok(KsReport { verdict })
}

/// Extends a compatible family of local valuations to a global valuation
/// that restricts to every member and is admissible on all of the frame's
/// bases, when such an extension exists.
///
/// Errors if the family fails [`check_compatibility`].
pub fn paste_local_valuations(
    family: &[LocalBinaryValuation],
    frame: &Frame,
) -> Result<Option<BinaryValuation>> {
    if !check_compatibility(family) {
        return Err(Error::IncompatibleFamily);
    }
    let mut seeds: BTreeMap<RayId, bool> = BTreeMap::new();
    for local in family {
        for (&id, &value) in local.values() {
            if !frame.contains(id) {
                return Err(Error::ForeignAssignment { id });
            }
            seeds.insert(id, value);
        }
    }
    let bases = resolve_bases(frame)?;
    let seed_list: Vec<(RayId, bool)> = seeds.into_iter().collect();
    let mut search = Search::new(frame, &bases);
    Ok(search.run(&seed_list))
}

struct Search {
    ray_ids: Vec<RayId>,
    /// Basis membership as dense ray indices, ascending.
    bases: Vec<Vec<usize>>,
    /// For each ray, the bases containing it.
    bases_of_ray: Vec<Vec<usize>>,
    assignment: Vec<Option<bool>>,
    ones: Vec<usize>,
    unassigned: Vec<usize>,
    trail: Vec<usize>,
    nodes: u64,
    branches: u64,
}

impl Search {
    fn new(frame: &Frame, bases: &[Context]) -> Self {
        let ray_ids = frame.ray_ids();
        let index: BTreeMap<RayId, usize> = ray_ids
            .iter()
            .enumerate()
            .map(|(i, &id)| (id, i))
            .collect();
        let dense_bases: Vec<Vec<usize>> = bases
            .iter()
            .map(|b| b.members().iter().map(|id| index[id]).collect())
            .collect();
        let mut bases_of_ray = vec![Vec::new(); ray_ids.len()];
        for (b, members) in dense_bases.iter().enumerate() {
            for &m in members {
                bases_of_ray[m].push(b);
            }
        }
        let unassigned = dense_bases.iter().map(Vec::len).collect();
        let ray_count = ray_ids.len();
        Search {
            ray_ids,
            ones: vec![0; dense_bases.len()],
            unassigned,
            bases: dense_bases,
            bases_of_ray,
            assignment: vec![None; ray_count],
            trail: Vec::new(),
            nodes: 0,
            branches: 0,
        }
    }

    fn run(&mut self, seeds: &[(RayId, bool)]) -> Option<BinaryValuation> {
        let index: BTreeMap<RayId, usize> = self
            .ray_ids
            .iter()
            .enumerate()
            .map(|(i, &id)| (id, i))
            .collect();
        for &(id, value) in seeds {
            if !self.assign_and_propagate(index[&id], value) {
                return None;
            }
        }
        if !self.search() {
            return None;
        }
        let values = self
            .ray_ids
            .iter()
            .enumerate()
            .map(|(i, &id)| (id, self.assignment[i].unwrap_or(false)))
            .collect();
        Some(BinaryValuation { values })
    }

    fn search(&mut self) -> bool {
        let Some(basis) = self.pick_basis() else {
            return true;
        };
        let ray = self.bases[basis]
            .iter()
            .copied()
            .find(|&r| self.assignment[r].is_none())
            .expect("undecided basis has an unassigned member");
        self.nodes += 1;
        for value in [true, false] {
            self.branches += 1;
            let checkpoint = self.trail.len();
            if self.assign_and_propagate(ray, value) && self.search() {
                return true;
            }
            self.undo_to(checkpoint);
        }
        false
    }

    /// The undecided basis with the fewest unassigned members, ties broken
    /// by position in the canonical basis order.
    fn pick_basis(&self) -> Option<usize> {
        (0..self.bases.len())
            .filter(|&b| self.ones[b] == 0 && self.unassigned[b] > 0)
            .min_by_key(|&b| self.unassigned[b])
    }

    fn assign_and_propagate(&mut self, ray: usize, value: bool) -> bool {
        let mut queue = vec![(ray, value)];
        while let Some((r, v)) = queue.pop() {
            match self.assignment[r] {
                Some(existing) => {
                    if existing != v {
                        return false;
                    }
                    continue;
                }
                None => {
                    self.assignment[r] = Some(v);
                    self.trail.push(r);
                }
            }
            // Counter updates must complete for every basis of `r`, even
            // after a conflict, so that undoing the trail stays balanced.
            let mut conflict = false;
            for k in 0..self.bases_of_ray[r].len() {
                let b = self.bases_of_ray[r][k];
                self.unassigned[b] -= 1;
                if v {
                    self.ones[b] += 1;
                }
                if conflict {
                    continue;
                }
                if self.ones[b] >= 2 {
                    conflict = true;
                } else if self.ones[b] == 1 && v {
                    for &m in &self.bases[b] {
                        if self.assignment[m].is_none() {
                            queue.push((m, false));
                        }
                    }
                } else if self.ones[b] == 0 {
                    match self.unassigned[b] {
                        0 => conflict = true,
                        1 => {
                            let last = self.bases[b]
                                .iter()
                                .copied()
                                .find(|&m| self.assignment[m].is_none())
                                .expect("one member is unassigned");
                            queue.push((last, true));
                        }
                        _ => {}
                    }
                }
            }
            if conflict {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, checkpoint: usize) {
        while self.trail.len() > checkpoint {
            let r = self.trail.pop().expect("trail is nonempty");
            let value = self.assignment[r].take().expect("trail entries are assigned");
            for k in 0..self.bases_of_ray[r].len() {
                let b = self.bases_of_ray[r][k];
                self.unassigned[b] += 1;
                if value {
                    self.ones[b] -= 1;
                }
            }
        }
    }
}

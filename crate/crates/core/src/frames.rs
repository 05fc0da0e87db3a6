//! Scenario representation: rays with identifiers, the orthogonality graph,
//! and context (maximal clique) enumeration.
//!
//! Edges record exact orthogonality between distinct rays, which for rank-1
//! projectors coincides with commutation, so one relation serves both
//! readings. The relation is reflexive by convention; loops are implicit.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{inner_product, vector_rank, Vector};
use crate::{Error, Result};

/// Identifier of a ray, unique within a frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RayId(pub u32);

impl fmt::Display for RayId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A labeled ray. Coordinates are always stored in canonical projective
/// form, so equality of coordinates is equality of rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    id: RayId,
    label: Option<String>,
    coords: Vector,
}

impl Ray {
    /// Canonicalizes the coordinates; fails on a zero vector.
    pub fn new(id: RayId, label: Option<String>, coords: &Vector) -> Result<Self> {
        Ok(Ray {
            id,
            label,
            coords: coords.canonical_ray()?,
        })
    }

    pub fn id(&self) -> RayId {
        self.id
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn coords(&self) -> &Vector {
        &self.coords
    }
}

/// A scenario: rays of one fixed dimension, with optional declared bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    dim: usize,
    rays: Vec<Ray>,
    declared_bases: Option<Vec<Vec<RayId>>>,
}

impl Frame {
    pub fn new(
        dim: usize,
        rays: Vec<Ray>,
        declared_bases: Option<Vec<Vec<RayId>>>,
    ) -> Result<Self> {
        let mut seen_ids = BTreeSet::new();
        for ray in &rays {
            if ray.coords.dim() != dim {
                return Err(Error::RayDimension {
                    id: ray.id,
                    actual: ray.coords.dim(),
                    expected: dim,
                });
            }
            if !seen_ids.insert(ray.id) {
                return Err(Error::DuplicateRayId { id: ray.id });
            }
        }
        for (i, a) in rays.iter().enumerate() {
            for b in &rays[i + 1..] {
                if a.coords == b.coords {
                    return Err(Error::DuplicateRay {
                        first: a.id,
                        second: b.id,
                    });
                }
            }
        }
        let frame = Frame {
            dim,
            rays,
            declared_bases: None,
        };
        if let Some(bases) = &declared_bases {
            for (index, basis) in bases.iter().enumerate() {
                frame.validate_declared_basis(index, basis)?;
            }
        }
        Ok(Frame {
            declared_bases,
            ..frame
        })
    }

    fn validate_declared_basis(&self, index: usize, basis: &[RayId]) -> Result<()> {
        let invalid = |reason: String| Error::InvalidBasis { index, reason };
        if basis.len() != self.dim {
            return Err(invalid(format!(
                "has {} rays, dimension is {}",
                basis.len(),
                self.dim
            )));
        }
        let mut members = Vec::with_capacity(basis.len());
        for id in basis {
            let ray = self
                .ray(*id)
                .ok_or_else(|| invalid(format!("references unknown ray {id}")))?;
            members.push(ray);
        }
        for (i, a) in members.iter().enumerate() {
            if members[i + 1..].iter().any(|b| b.id == a.id) {
                return Err(invalid(format!("repeats ray {}", a.id)));
            }
        }
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                let ip = inner_product(&a.coords, &b.coords)?;
                if !ip.is_zero() {
                    return Err(invalid(format!(
                        "rays {} and {} are not orthogonal",
                        a.id, b.id
                    )));
                }
            }
        }
        let coords: Vec<&Vector> = members.iter().map(|r| &r.coords).collect();
        if vector_rank(&coords)? != self.dim {
            return Err(invalid("does not span".to_string()));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn ray(&self, id: RayId) -> Option<&Ray> {
        self.rays.iter().find(|r| r.id == id)
    }

    pub fn ray_ids(&self) -> Vec<RayId> {
        let mut ids: Vec<RayId> = self.rays.iter().map(|r| r.id).collect();
        ids.sort();
        ids
    }

    pub fn declared_bases(&self) -> Option<&[Vec<RayId>]> {
        self.declared_bases.as_deref()
    }

    pub fn contains(&self, id: RayId) -> bool {
        self.ray(id).is_some()
    }
}

/// Adjacency structure over a frame's rays: an edge joins two distinct rays
/// with inner product exactly zero. Reflexivity is a convention and is not
/// stored; `edge(u, u)` reports `true`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityGraph {
    ids: Vec<RayId>,
    adjacency: BTreeMap<RayId, BTreeSet<RayId>>,
}

impl OrthogonalityGraph {
    /// Builds a graph from explicit adjacency. Orthogonality semantics are
    /// guaranteed only for graphs produced by [`build_graph`]; this
    /// constructor serves graph-level work such as clique-enumeration
    /// oracles.
    pub fn from_edges(mut ids: Vec<RayId>, edges: &[(RayId, RayId)]) -> Result<Self> {
        ids.sort();
        ids.dedup();
        let mut adjacency: BTreeMap<RayId, BTreeSet<RayId>> =
            ids.iter().map(|&id| (id, BTreeSet::new())).collect();
        for &(a, b) in edges {
            if a == b {
                continue;
            }
            if !adjacency.contains_key(&a) || !adjacency.contains_key(&b) {
                return Err(Error::UnknownNode(a.0, b.0));
            }
            adjacency.get_mut(&a).unwrap().insert(b);
            adjacency.get_mut(&b).unwrap().insert(a);
        }
        Ok(OrthogonalityGraph { ids, adjacency })
    }

    pub fn node_ids(&self) -> &[RayId] {
        &self.ids
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge(&self, a: RayId, b: RayId) -> bool {
        if a == b {
            return self.adjacency.contains_key(&a);
        }
        self.adjacency.get(&a).is_some_and(|n| n.contains(&b))
    }

    pub fn neighbors(&self, id: RayId) -> Option<&BTreeSet<RayId>> {
        self.adjacency.get(&id)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Distinct edges as ordered pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(RayId, RayId)> {
        let mut out = Vec::new();
        for (&a, neighbors) in &self.adjacency {
            for &b in neighbors.iter().filter(|&&b| a < b) {
                out.push((a, b));
            }
        }
        out
    }
}

/// Builds the orthogonality graph by exact inner products over all pairs.
pub fn build_graph(frame: &Frame) -> OrthogonalityGraph {
    let ids = frame.ray_ids();
    let mut adjacency: BTreeMap<RayId, BTreeSet<RayId>> =
        ids.iter().map(|&id| (id, BTreeSet::new())).collect();
    let rays = frame.rays();
    for (i, a) in rays.iter().enumerate() {
        for b in &rays[i + 1..] {
            let ip = inner_product(a.coords(), b.coords())
                .expect("frame rays share one dimension");
            if ip.is_zero() {
                adjacency.get_mut(&a.id()).unwrap().insert(b.id());
                adjacency.get_mut(&b.id()).unwrap().insert(a.id());
            }
        }
    }
    OrthogonalityGraph { ids, adjacency }
}

/// A context: a set of pairwise-orthogonal rays (a complete subgraph of the
/// orthogonality graph). A basis context has `dim` rays and spans.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Context {
    members: BTreeSet<RayId>,
    is_maximal: bool,
    is_basis: bool,
}

impl Context {
    /// Builds a context from explicit members, checking pairwise adjacency
    /// and computing the maximality and basis flags.
    pub fn new(frame: &Frame, graph: &OrthogonalityGraph, members: BTreeSet<RayId>) -> Result<Self> {
        for &id in &members {
            if !frame.contains(id) {
                return Err(Error::UnknownRayId { id });
            }
        }
        let list: Vec<RayId> = members.iter().copied().collect();
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                if !graph.edge(a, b) {
                    return Err(Error::NotAContext { first: a, second: b });
                }
            }
        }
        let is_maximal = !graph.node_ids().iter().any(|&candidate| {
            !members.contains(&candidate) && list.iter().all(|&m| graph.edge(candidate, m))
        });
        let is_basis = compute_is_basis(frame, &members)?;
        Ok(Context {
            members,
            is_maximal,
            is_basis,
        })
    }

    pub fn members(&self) -> &BTreeSet<RayId> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: RayId) -> bool {
        self.members.contains(&id)
    }

    pub fn is_maximal(&self) -> bool {
        self.is_maximal
    }

    pub fn is_basis(&self) -> bool {
        self.is_basis
    }

    /// Members formatted as `[a b c]`.
    pub fn display_members(&self) -> String {
        let ids: Vec<String> = self.members.iter().map(|id| id.to_string()).collect();
        format!("[{}]", ids.join(" "))
    }
}

fn compute_is_basis(frame: &Frame, members: &BTreeSet<RayId>) -> Result<bool> {
    if members.len() != frame.dim() {
        return Ok(false);
    }
    let coords: Vec<&Vector> = members
        .iter()
        .map(|&id| frame.ray(id).expect("member validated").coords())
        .collect();
    Ok(vector_rank(&coords)? == frame.dim())
}

/// All maximal cliques of the graph, Bron–Kerbosch with pivoting.
///
/// The pivot is the candidate-or-excluded node with the fewest neighbors in
/// the candidate set (ties broken by lowest id), and expansion proceeds in
/// ascending id order, so the recursion — and hence the output — is fully
/// deterministic. Cliques are returned sorted lexicographically by their
/// sorted member ids.
pub fn maximal_cliques(graph: &OrthogonalityGraph) -> Vec<BTreeSet<RayId>> {
    let mut result = Vec::new();
    let mut current = BTreeSet::new();
    let candidates: BTreeSet<RayId> = graph.node_ids().iter().copied().collect();
    let excluded = BTreeSet::new();
    expand(graph, &mut current, candidates, excluded, &mut result);
    result.sort();
    result
}

fn expand(
    graph: &OrthogonalityGraph,
    current: &mut BTreeSet<RayId>,
    mut candidates: BTreeSet<RayId>,
    mut excluded: BTreeSet<RayId>,
    result: &mut Vec<BTreeSet<RayId>>,
) {
    if candidates.is_empty() && excluded.is_empty() {
        result.push(current.clone());
        return;
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .min_by_key(|&u| {
            let degree = graph
                .neighbors(u)
                .map_or(0, |n| n.intersection(&candidates).count());
            (degree, u)
        })
        .expect("candidate or excluded set is nonempty");
    let pivot_neighbors = graph.neighbors(pivot).cloned().unwrap_or_default();
    let expansion: Vec<RayId> = candidates
        .iter()
        .copied()
        .filter(|v| !pivot_neighbors.contains(v))
        .collect();
    for v in expansion {
        let neighbors = graph.neighbors(v).cloned().unwrap_or_default();
        current.insert(v);
        expand(
            graph,
            current,
            candidates.intersection(&neighbors).copied().collect(),
            excluded.intersection(&neighbors).copied().collect(),
            result,
        );
        current.remove(&v);
        candidates.remove(&v);
        excluded.insert(v);
    }
}

/// All maximal contexts of the frame, in canonical order, with basis flags
/// computed by an exact rank check.
pub fn enumerate_maximal_contexts(frame: &Frame, graph: &OrthogonalityGraph) -> Vec<Context> {
    maximal_cliques(graph)
        .into_iter()
        .map(|members| {
            let is_basis =
                compute_is_basis(frame, &members).expect("clique members belong to the frame");
            Context {
                members,
                is_maximal: true,
                is_basis,
            }
        })
        .collect()
}

/// The frame's basis contexts: the declared bases when present (validated at
/// frame construction), otherwise every maximal context of size `dim` that
/// spans. Canonically ordered.
pub fn resolve_bases(frame: &Frame) -> Result<Vec<Context>> {
    let graph = build_graph(frame);
    match frame.declared_bases() {
        Some(declared) => {
            let mut contexts = Vec::with_capacity(declared.len());
            for basis in declared {
                let members: BTreeSet<RayId> = basis.iter().copied().collect();
                contexts.push(Context::new(frame, &graph, members)?);
            }
            contexts.sort();
            contexts.dedup();
            Ok(contexts)
        }
        None => Ok(enumerate_maximal_contexts(frame, &graph)
            .into_iter()
            .filter(Context::is_basis)
            .collect()),
    }
}

/// Two contexts are jointly measurable iff the union of their members is
/// itself a complete subgraph.
pub fn contexts_compatible(c1: &Context, c2: &Context, graph: &OrthogonalityGraph) -> bool {
    c1.members
        .iter()
        .all(|&a| c2.members.iter().all(|&b| a == b || graph.edge(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn ids(list: &[u32]) -> BTreeSet<RayId> {
        list.iter().map(|&n| RayId(n)).collect()
    }

    fn frame_of(dim: usize, coords: &[&[i64]]) -> Frame {
        let rays = coords
            .iter()
            .enumerate()
            .map(|(k, c)| Ray::new(RayId(k as u32 + 1), None, &Vector::from_ints(c)).unwrap())
            .collect();
        Frame::new(dim, rays, None).unwrap()
    }

    #[test]
    fn graph_of_a_basis_is_complete() {
        let frame = frame_of(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let graph = build_graph(&frame);
        assert_eq!(graph.edge_count(), 3);
        assert!(graph.edge(RayId(1), RayId(2)));
        assert!(graph.edge(RayId(2), RayId(2)), "reflexive by convention");
    }

    #[test]
    fn non_orthogonal_rays_have_no_edge() {
        let frame = frame_of(2, &[&[1, 0], &[1, 1]]);
        let graph = build_graph(&frame);
        assert_eq!(graph.edge_count(), 0);
    }

    #[test]
    fn cabello_graph_contains_the_off_basis_relations() {
        let graph = build_graph(&samples::cabello18());
        assert!(graph.edge(RayId(1), RayId(2)));
        // The nine orthogonality relations that are not part of any basis.
        let extra = [
            (4, 9),
            (6, 16),
            (1, 11),
            (2, 17),
            (8, 5),
            (14, 18),
            (3, 10),
            (7, 12),
            (13, 15),
        ];
        for (a, b) in extra {
            assert!(graph.edge(RayId(a), RayId(b)), "missing edge {a}-{b}");
        }
        assert_eq!(graph.edge_count(), 63);
    }

    #[test]
    fn duplicate_canonical_rays_are_rejected() {
        let rays = vec![
            Ray::new(RayId(1), None, &Vector::from_ints(&[1, 0])).unwrap(),
            Ray::new(RayId(2), None, &Vector::from_ints(&[2, 0])).unwrap(),
        ];
        let err = Frame::new(2, rays, None).unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateRay {
                first: RayId(1),
                second: RayId(2)
            }
        );
    }

    #[test]
    fn maximal_contexts_of_k4_and_edgeless_frames() {
        let frame = frame_of(
            4,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        );
        let graph = build_graph(&frame);
        let contexts = enumerate_maximal_contexts(&frame, &graph);
        assert_eq!(contexts.len(), 1);
        assert_eq!(contexts[0].members(), &ids(&[1, 2, 3, 4]));
        assert!(contexts[0].is_basis() && contexts[0].is_maximal());

        // Pairwise non-orthogonal rays: singleton maximal contexts.
        let loose = frame_of(2, &[&[1, 1], &[1, 2], &[1, 3]]);
        let graph = build_graph(&loose);
        let contexts = enumerate_maximal_contexts(&loose, &graph);
        assert_eq!(contexts.len(), 3);
        assert!(contexts.iter().all(|c| c.len() == 1 && !c.is_basis()));
    }

    #[test]
    fn resolve_bases_on_declared_and_undeclared_frames() {
        let declared = samples::qubit_pair();
        let bases = resolve_bases(&declared).unwrap();
        assert_eq!(bases.len(), 2);
        assert_eq!(bases[0].members(), &ids(&[1, 2]));
        assert_eq!(bases[1].members(), &ids(&[3, 4]));

        let single = frame_of(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let bases = resolve_bases(&single).unwrap();
        assert_eq!(bases.len(), 1);
        assert!(bases[0].is_basis());
    }

    #[test]
    fn declared_non_orthogonal_basis_is_an_error() {
        let rays = vec![
            Ray::new(RayId(1), None, &Vector::from_ints(&[1, 0])).unwrap(),
            Ray::new(RayId(2), None, &Vector::from_ints(&[1, 1])).unwrap(),
        ];
        let err = Frame::new(2, rays, Some(vec![vec![RayId(1), RayId(2)]])).unwrap_err();
        match err {
            Error::InvalidBasis { index: 0, reason } => {
                assert!(reason.contains("not orthogonal"), "reason: {reason}")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn compatibility_of_contexts() {
        let frame = samples::cabello18();
        let graph = build_graph(&frame);
        let bases = resolve_bases(&frame).unwrap();
        // Any context is compatible with itself.
        assert!(contexts_compatible(&bases[0], &bases[0], &graph));
        // Two bases sharing v1 = {1,2,3,18} and {1,4,12,13}: rays 2 and 4
        // are not orthogonal, so the union is not complete.
        let b0 = &bases[0];
        let b1 = &bases[1];
        assert_eq!(b0.members(), &ids(&[1, 2, 3, 18]));
        assert_eq!(b1.members(), &ids(&[1, 4, 12, 13]));
        assert!(!contexts_compatible(b0, b1, &graph));
        // Two adjacent singletons are jointly measurable.
        let s1 = Context::new(&frame, &graph, ids(&[1])).unwrap();
        let s2 = Context::new(&frame, &graph, ids(&[2])).unwrap();
        assert!(contexts_compatible(&s1, &s2, &graph));
    }

    #[test]
    fn context_construction_validates_completeness() {
        let frame = samples::cabello18();
        let graph = build_graph(&frame);
        let err = Context::new(&frame, &graph, ids(&[2, 4])).unwrap_err();
        assert_eq!(
            err,
            Error::NotAContext {
                first: RayId(2),
                second: RayId(4)
            }
        );
        let triangle = Context::new(&frame, &graph, ids(&[1, 4, 18])).unwrap();
        assert!(triangle.is_maximal() && !triangle.is_basis());
        let pair = Context::new(&frame, &graph, ids(&[1, 4])).unwrap();
        assert!(!pair.is_maximal());
    }
}

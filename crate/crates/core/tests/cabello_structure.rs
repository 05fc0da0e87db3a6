//! Structural checks for the 18-ray scenario, each verified against an
//! independent brute-force oracle.

use std::collections::BTreeSet;

use potentia_core::frames::maximal_cliques;
use potentia_core::{
    build_graph, enumerate_maximal_contexts, inner_product, resolve_bases, samples, vector_rank,
    OrthogonalityGraph, RayId,
};
use rand::Rng;

// Independent oracle: try every 4-subset of the rays, keep the mutually
// orthogonal ones that span.
fn brute_force_bases() -> Vec<BTreeSet<RayId>> {
    let frame = samples::cabello18();
    let rays = frame.rays();
    let mut found = Vec::new();
    let n = rays.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [&rays[a], &rays[b], &rays[c], &rays[d]];
                    let orthogonal = quad.iter().enumerate().all(|(i, x)| {
                        quad[i + 1..]
                            .iter()
                            .all(|y| inner_product(x.coords(), y.coords()).unwrap().is_zero())
                    });
                    if !orthogonal {
                        continue;
                    }
                    let coords: Vec<_> = quad.iter().map(|r| r.coords()).collect();
                    if vector_rank(&coords).unwrap() == 4 {
                        found.push(quad.iter().map(|r| r.id()).collect());
                    }
                }
            }
        }
    }
    found.sort();
    found
}

#[test]
fn nine_bases_each_ray_in_exactly_two() {
    let frame = samples::cabello18();
    let bases = resolve_bases(&frame).unwrap();
    let oracle = brute_force_bases();
    assert_eq!(oracle.len(), 9);
    let resolved: Vec<BTreeSet<RayId>> = bases.iter().map(|c| c.members().clone()).collect();
    assert_eq!(resolved, oracle);
    assert!(bases.iter().all(|b| b.len() == 4 && b.is_basis()));

    let mut multiplicity = std::collections::BTreeMap::new();
    for basis in &bases {
        for &id in basis.members() {
            *multiplicity.entry(id).or_insert(0usize) += 1;
        }
    }
    assert_eq!(multiplicity.len(), 18);
    assert!(multiplicity.values().all(|&m| m == 2));
}

#[test]
fn maximal_context_census() {
    // Beyond the nine bases the graph has six maximal triangles and nine
    // maximal edges: twenty-four maximal contexts in all.
    let frame = samples::cabello18();
    let graph = build_graph(&frame);
    let contexts = enumerate_maximal_contexts(&frame, &graph);
    assert_eq!(contexts.len(), 24);
    let by_size = |n: usize| contexts.iter().filter(|c| c.len() == n).count();
    assert_eq!(by_size(4), 9);
    assert_eq!(by_size(3), 6);
    assert_eq!(by_size(2), 9);
    assert!(contexts.iter().all(|c| c.is_basis() == (c.len() == 4)));
    // Canonical order: sorted lexicographically by member ids.
    let mut sorted = contexts.clone();
    sorted.sort();
    assert_eq!(contexts, sorted);
}

#[test]
fn every_enumerated_context_is_maximal() {
    let frame = samples::cabello18();
    let graph = build_graph(&frame);
    for context in enumerate_maximal_contexts(&frame, &graph) {
        for &outside in graph.node_ids() {
            if context.contains(outside) {
                continue;
            }
            let extends = context
                .members()
                .iter()
                .all(|&m| graph.edge(outside, m));
            assert!(
                !extends,
                "{} can be extended by {outside}",
                context.display_members()
            );
        }
    }
}

// Naive exponential clique enumeration for graphs with at most 12 nodes.
fn naive_maximal_cliques(graph: &OrthogonalityGraph) -> Vec<BTreeSet<RayId>> {
    let ids = graph.node_ids();
    let n = ids.len();
    assert!(n <= 12);
    let mut cliques: Vec<BTreeSet<RayId>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<RayId> = (0..n)
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| ids[k])
            .collect();
        let is_clique = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| graph.edge(a, b)));
        if is_clique {
            cliques.push(members.into_iter().collect());
        }
    }
    let mut maximal: Vec<BTreeSet<RayId>> = cliques
        .iter()
        .filter(|c| {
            !cliques
                .iter()
                .any(|other| *c != other && c.is_subset(other))
        })
        .cloned()
        .collect();
    maximal.sort();
    maximal
}

#[test]
fn edges_coincide_with_projector_commutation_on_bundled_frames() {
    // Cross-module consistency: for distinct rays, orthogonality of the
    // vectors and commutation of their rank-1 projectors are the same
    // relation.
    use potentia_core::{commutes, projector_from_ray};
    let frames = [
        samples::cabello18(),
        samples::qubit_pair(),
        samples::single_basis_d3(),
        samples::tomography_qubit(),
    ];
    for frame in &frames {
        let graph = build_graph(frame);
        let rays = frame.rays();
        for (i, a) in rays.iter().enumerate() {
            for b in &rays[i + 1..] {
                let pa = projector_from_ray(a.coords()).unwrap();
                let pb = projector_from_ray(b.coords()).unwrap();
                assert_eq!(
                    graph.edge(a.id(), b.id()),
                    commutes(&pa, &pb).unwrap(),
                    "edge and commutation disagree on rays {} and {}",
                    a.id(),
                    b.id()
                );
            }
        }
    }
}

#[test]
fn enumerated_contexts_are_maximal_on_random_planted_frames() {
    let mut rng = potentia_core::random::rng(0xaaaa);
    for _ in 0..10 {
        let frame = potentia_core::random::random_planted_frame(&mut rng, 12);
        let graph = build_graph(&frame);
        for context in enumerate_maximal_contexts(&frame, &graph) {
            for &outside in graph.node_ids() {
                if context.contains(outside) {
                    continue;
                }
                assert!(
                    !context.members().iter().all(|&m| graph.edge(outside, m)),
                    "context {} is extendable",
                    context.display_members()
                );
            }
        }
    }
}

#[test]
fn clique_enumeration_matches_naive_oracle_on_random_graphs() {
    let mut rng = potentia_core::random::rng(0x5eed);
    for _ in 0..60 {
        let n = rng.random_range(1..=12usize);
        let ids: Vec<RayId> = (1..=n as u32).map(RayId).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(0.5) {
                    edges.push((ids[i], ids[j]));
                }
            }
        }
        let graph = OrthogonalityGraph::from_edges(ids, &edges).unwrap();
        assert_eq!(maximal_cliques(&graph), naive_maximal_cliques(&graph));
    }
}

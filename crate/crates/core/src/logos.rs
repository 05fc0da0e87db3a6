//! The lattice of subgraphs of a fixed graph, with Heyting implication.
//!
//! Subgraphs are general: the edge set may be any subset of the host edges
//! whose endpoints are included — not only the induced edges. Node-induced
//! subgraphs would form a Boolean algebra; on general subgraphs the lattice
//! is properly intuitionistic, and `join(a, not(a)) = top` fails (take both
//! endpoints of an edge without the edge).
//!
//! The closed-form implication is validated against a brute-force oracle
//! ([`HostGraph::brute_force_implication`]) in the test suite; the oracle is
//! authoritative.

use std::collections::BTreeSet;

use crate::frames::OrthogonalityGraph;
use crate::{Error, Result};

/// Node cap for brute-force subgraph enumeration.
pub const BRUTE_FORCE_NODE_CAP: usize = 5;

/// An undirected graph on integer node ids, serving as the ambient host for
/// a subgraph lattice. Edges are stored as ordered pairs `(a, b)`, `a < b`;
/// loops are implicit and never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostGraph {
    nodes: BTreeSet<u32>,
    edges: BTreeSet<(u32, u32)>,
}

fn normalize_edge(a: u32, b: u32) -> (u32, u32) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl HostGraph {
    pub fn new(nodes: BTreeSet<u32>, edges: &[(u32, u32)]) -> Result<Self> {
        let mut normalized = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                continue; // reflexive loops are implicit
            }
            if !nodes.contains(&a) || !nodes.contains(&b) {
                return Err(Error::UnknownNode(a, b));
            }
            normalized.insert(normalize_edge(a, b));
        }
        Ok(HostGraph {
            nodes,
            edges: normalized,
        })
    }

    /// Complete graph on nodes `1..=n`.
    pub fn complete(n: u32) -> Self {
        let nodes: BTreeSet<u32> = (1..=n).collect();
        let edges = nodes
            .iter()
            .flat_map(|&a| nodes.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .collect();
        HostGraph { nodes, edges }
    }

    /// Path graph `1 — 2 — … — n`.
    pub fn path(n: u32) -> Self {
        HostGraph {
            nodes: (1..=n).collect(),
            edges: (1..n).map(|k| (k, k + 1)).collect(),
        }
    }

    /// Cycle graph on `1..=n` (`n >= 3`).
    pub fn cycle(n: u32) -> Self {
        let mut edges: BTreeSet<(u32, u32)> = (1..n).map(|k| (k, k + 1)).collect();
        edges.insert((1, n));
        HostGraph {
            nodes: (1..=n).collect(),
            edges,
        }
    }

    /// Reuses a frame's orthogonality graph as a host.
    pub fn from_orthogonality(graph: &OrthogonalityGraph) -> Self {
        HostGraph {
            nodes: graph.node_ids().iter().map(|id| id.0).collect(),
            edges: graph
                .edges()
                .into_iter()
                .map(|(a, b)| normalize_edge(a.0, b.0))
                .collect(),
        }
    }

    pub fn nodes(&self) -> &BTreeSet<u32> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<(u32, u32)> {
        &self.edges
    }

    /// The whole host as a subgraph: the top element.
    pub fn top(&self) -> Subgraph {
        Subgraph {
            nodes: self.nodes.clone(),
            edges: self.edges.clone(),
        }
    }

    /// The empty subgraph: the bottom element.
    pub fn bottom(&self) -> Subgraph {
        Subgraph {
            nodes: BTreeSet::new(),
            edges: BTreeSet::new(),
        }
    }

    fn validate(&self, s: &Subgraph) -> Result<()> {
        if !s.nodes.is_subset(&self.nodes) || !s.edges.is_subset(&self.edges) {
            return Err(Error::HostMismatch);
        }
        Ok(())
    }

    /// Lattice order: `a ≤ b` iff nodes and edges are both contained.
    pub fn leq(&self, a: &Subgraph, b: &Subgraph) -> Result<bool> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(a.nodes.is_subset(&b.nodes) && a.edges.is_subset(&b.edges))
    }

    /// Componentwise intersection; endpoint-closed automatically.
    pub fn meet(&self, a: &Subgraph, b: &Subgraph) -> Result<Subgraph> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(Subgraph {
            nodes: a.nodes.intersection(&b.nodes).copied().collect(),
            edges: a.edges.intersection(&b.edges).copied().collect(),
        })
    }

    /// Componentwise union; endpoint-closed automatically.
    pub fn join(&self, a: &Subgraph, b: &Subgraph) -> Result<Subgraph> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(Subgraph {
            nodes: a.nodes.union(&b.nodes).copied().collect(),
            edges: a.edges.union(&b.edges).copied().collect(),
        })
    }

    /// Heyting implication: the largest subgraph `c` with `meet(c, a) ≤ b`.
    ///
    /// Candidate nodes are those where membership in `a` implies membership
    /// in `b`, likewise for edges; edges then lose any endpoint not among the
    /// candidate nodes.
    pub fn implication(&self, a: &Subgraph, b: &Subgraph) -> Result<Subgraph> {
        self.validate(a)?;
        self.validate(b)?;
        let nodes: BTreeSet<u32> = self
            .nodes
            .iter()
            .copied()
            .filter(|n| !a.nodes.contains(n) || b.nodes.contains(n))
            .collect();
        let edges: BTreeSet<(u32, u32)> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !a.edges.contains(e) || b.edges.contains(e))
            .filter(|&(x, y)| nodes.contains(&x) && nodes.contains(&y))
            .collect();
        let result = Subgraph { nodes, edges };
        debug_assert!(
            self.leq(&self.meet(&result, a)?, b)?,
            "implication violates the adjunction lower bound"
        );
        Ok(result)
    }

    /// `¬a = a ⇒ ⊥`.
    pub fn pseudo_complement(&self, a: &Subgraph) -> Result<Subgraph> {
        self.implication(a, &self.bottom())
    }

    /// Every subgraph of the host. Capped at [`BRUTE_FORCE_NODE_CAP`] nodes.
    pub fn all_subgraphs(&self) -> Result<Vec<Subgraph>> {
        if self.nodes.len() > BRUTE_FORCE_NODE_CAP {
            return Err(Error::HostTooLarge {
                nodes: self.nodes.len(),
                cap: BRUTE_FORCE_NODE_CAP,
            });
        }
        let nodes: Vec<u32> = self.nodes.iter().copied().collect();
        let mut result = Vec::new();
        for node_mask in 0u32..(1 << nodes.len()) {
            let node_set: BTreeSet<u32> = nodes
                .iter()
                .enumerate()
                .filter(|(k, _)| node_mask & (1 << k) != 0)
                .map(|(_, &n)| n)
                .collect();
            let available: Vec<(u32, u32)> = self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| node_set.contains(&a) && node_set.contains(&b))
                .collect();
            for edge_mask in 0u32..(1 << available.len()) {
                let edge_set: BTreeSet<(u32, u32)> = available
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| edge_mask & (1 << k) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                result.push(Subgraph {
                    nodes: node_set.clone(),
                    edges: edge_set,
                });
            }
        }
        Ok(result)
    }

    /// Oracle for [`HostGraph::implication`]: the join of every subgraph `c`
    /// with `meet(c, a) ≤ b`, by exhaustive enumeration.
    pub fn brute_force_implication(&self, a: &Subgraph, b: &Subgraph) -> Result<Subgraph> {
        self.validate(a)?;
        self.validate(b)?;
        let mut best = self.bottom();
        for c in self.all_subgraphs()? {
            if self.leq(&self.meet(&c, a)?, b)? {
                best = self.join(&best, &c)?;
            }
        }
        Ok(best)
    }
}

/// A subgraph of a [`HostGraph`]: subsets of nodes and edges with every edge
/// endpoint included.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgraph {
    nodes: BTreeSet<u32>,
    edges: BTreeSet<(u32, u32)>,
}

impl Subgraph {
    pub fn new(nodes: BTreeSet<u32>, edges: &[(u32, u32)]) -> Result<Self> {
        let mut normalized = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                continue;
            }
            let edge = normalize_edge(a, b);
            if !nodes.contains(&edge.0) || !nodes.contains(&edge.1) {
                return Err(Error::EndpointClosure(edge.0, edge.1));
            }
            normalized.insert(edge);
        }
        Ok(Subgraph {
            nodes,
            edges: normalized,
        })
    }

    pub fn nodes(&self) -> &BTreeSet<u32> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<(u32, u32)> {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Renders as `({1, 2}, {1-2})`.
    pub fn describe(&self) -> String {
        let nodes: Vec<String> = self.nodes.iter().map(u32::to_string).collect();
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect();
        format!("({{{}}}, {{{}}})", nodes.join(", "), edges.join(", "))
    }
}

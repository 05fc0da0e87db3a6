//! Result documents. Every command builds exactly one [`Report`]; the text
//! and JSON renderings are two views of that value, never recomputed.

use serde::Serialize;

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scenario: Option<String>,
    pub body: Body,
    /// Wall-clock milliseconds; omitted in sequential mode so that reports
    /// are byte-identical across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Body {
    Contexts(ContextsBody),
    Ks(KsBody),
    Valuate(ValuateBody),
    Collapse(CollapseBody),
    CheckPsa(CheckPsaBody),
    Reconstruct(ReconstructBody),
    Evolve(EvolveBody),
    Heyting(HeytingBody),
}

#[derive(Debug, Serialize)]
pub struct ContextRow {
    pub index: usize,
    pub members: String,
    pub size: usize,
    pub basis: bool,
}

#[derive(Debug, Serialize)]
pub struct ContextsBody {
    pub dimension: usize,
    pub ray_count: usize,
    pub edge_count: usize,
    pub context_count: usize,
    pub basis_count: usize,
    pub contexts: Vec<ContextRow>,
}

#[derive(Debug, Serialize)]
pub struct MultiplicityRow {
    pub id: u32,
    pub count: usize,
}

#[derive(Debug, Serialize)]
pub struct ParityInfo {
    pub basis_count: usize,
    pub multiplicities: Vec<MultiplicityRow>,
}

#[derive(Debug, Serialize)]
pub struct SearchInfo {
    pub nodes: u64,
    pub branches: u64,
}

#[derive(Debug, Serialize)]
pub struct AssignmentRow {
    pub id: u32,
    pub value: u8,
}

#[derive(Debug, Serialize)]
pub struct KsBody {
    pub basis_count: usize,
    pub satisfiable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<AssignmentRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity_certificate: Option<ParityInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchInfo>,
}

#[derive(Debug, Serialize)]
pub struct ValueRow {
    pub id: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct SumRow {
    pub context: String,
    pub sum: String,
}

#[derive(Debug, Serialize)]
pub struct ValuateBody {
    pub state: String,
    pub rows: Vec<ValueRow>,
    pub basis_sums: Vec<SumRow>,
    pub psa: bool,
}

#[derive(Debug, Serialize)]
pub struct CollapseRow {
    pub id: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub intensity: String,
    pub bit: u8,
}

#[derive(Debug, Serialize)]
pub struct CollapseBody {
    pub source: String,
    pub rows: Vec<CollapseRow>,
    pub asa: bool,
}

#[derive(Debug, Serialize)]
pub struct CheckPsaBody {
    pub source: String,
    pub psa: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ReconstructBody {
    pub source: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize)]
pub struct EvolveRow {
    pub id: u32,
    pub before: String,
    pub after: String,
}

#[derive(Debug, Serialize)]
pub struct EvolveBody {
    pub state: String,
    pub invariant: bool,
    pub rows: Vec<EvolveRow>,
}

#[derive(Debug, Serialize)]
pub struct HeytingHost {
    pub name: String,
    pub nodes: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgraph_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjunction_verified: Option<bool>,
    pub witness_a: String,
    pub witness_not_a: String,
    pub witness_join: String,
    pub excluded_middle_holds: bool,
    pub double_negation_of_a: String,
    pub double_negation_collapses: bool,
}

#[derive(Debug, Serialize)]
pub struct HeytingBody {
    pub hosts: Vec<HeytingHost>,
}

impl Report {
    /// Renders the report as pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    /// Renders the report as human-readable text.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: &str| {
            out.push_str(line);
            out.push('\n');
        };
        match &self.scenario {
            Some(name) => push(&mut out, &format!("{}: {}", self.command, name)),
            None => push(&mut out, self.command),
        }
        match &self.body {
            Body::Contexts(b) => {
                push(
                    &mut out,
                    &format!(
                        "dimension: {}, rays: {}, orthogonality edges: {}",
                        b.dimension, b.ray_count, b.edge_count
                    ),
                );
                push(
                    &mut out,
                    &format!(
                        "maximal contexts: {} ({} bases)",
                        b.context_count, b.basis_count
                    ),
                );
                for row in &b.contexts {
                    let flag = if row.basis { "  basis" } else { "" };
                    push(
                        &mut out,
                        &format!("  ctx{:<3} {}{}", row.index, row.members, flag),
                    );
                }
            }
            Body::Ks(b) => {
                push(&mut out, &format!("bases: {}", b.basis_count));
                if b.satisfiable {
                    push(&mut out, "verdict: SATISFIABLE");
                    if let Some(witness) = &b.witness {
                        let pairs: Vec<String> = witness
                            .iter()
                            .map(|row| format!("{}:{}", row.id, row.value))
                            .collect();
                        push(&mut out, &format!("witness: {}", pairs.join(" ")));
                    }
                } else if let Some(parity) = &b.parity_certificate {
                    let all_even = parity.multiplicities.iter().all(|m| m.count % 2 == 0);
                    push(
                        &mut out,
                        &format!(
                            "verdict: UNSATISFIABLE (parity certificate: {} bases, {})",
                            parity.basis_count,
                            if all_even {
                                "all multiplicities even"
                            } else {
                                "invalid multiplicities"
                            }
                        ),
                    );
                    let pairs: Vec<String> = parity
                        .multiplicities
                        .iter()
                        .map(|m| format!("{}:{}", m.id, m.count))
                        .collect();
                    push(&mut out, &format!("multiplicities: {}", pairs.join(" ")));
                } else if let Some(search) = &b.search {
                    push(
                        &mut out,
                        &format!(
                            "verdict: UNSATISFIABLE (search exhausted: {} nodes, {} branches)",
                            search.nodes, search.branches
                        ),
                    );
                }
            }
            Body::Valuate(b) => {
                push(&mut out, &format!("state: {}", b.state));
                push(&mut out, "ray  value");
                for row in &b.rows {
                    let label = row.label.as_deref().unwrap_or("");
                    push(&mut out, &format!("  {:<4} {:<10} {}", row.id, row.value, label));
                }
                push(&mut out, "basis sums:");
                for sum in &b.basis_sums {
                    push(&mut out, &format!("  {:<18} {}", sum.context, sum.sum));
                }
                push(&mut out, &format!("psa: {}", b.psa));
            }
            Body::Collapse(b) => {
                push(&mut out, &format!("source: {}", b.source));
                push(&mut out, "ray  intensity -> bit");
                for row in &b.rows {
                    let label = row.label.as_deref().unwrap_or("");
                    push(
                        &mut out,
                        &format!("  {:<4} {:<10} -> {} {}", row.id, row.intensity, row.bit, label),
                    );
                }
                push(&mut out, &format!("asa: {}", b.asa));
            }
            Body::CheckPsa(b) => {
                push(&mut out, &format!("source: {}", b.source));
                push(&mut out, &format!("psa: {}", b.psa));
                if let Some(violation) = &b.first_violation {
                    push(&mut out, &format!("first violation: {violation}"));
                }
            }
            Body::Reconstruct(b) => {
                push(&mut out, &format!("source: {}", b.source));
                push(&mut out, &format!("outcome: {}", b.outcome));
                if let Some(rows) = &b.density {
                    push(&mut out, "density:");
                    for row in rows {
                        push(&mut out, &format!("  [{}]", row.join(", ")));
                    }
                }
            }
            Body::Evolve(b) => {
                push(&mut out, &format!("state: {}", b.state));
                push(&mut out, "ray  before -> after");
                for row in &b.rows {
                    push(
                        &mut out,
                        &format!("  {:<4} {:<10} -> {}", row.id, row.before, row.after),
                    );
                }
                push(&mut out, &format!("invariant: {}", b.invariant));
            }
            Body::Heyting(b) => {
                for host in &b.hosts {
                    push(
                        &mut out,
                        &format!("host {}: {} nodes, {} edges", host.name, host.nodes, host.edges),
                    );
                    if let Some(count) = host.subgraph_count {
                        push(&mut out, &format!("  subgraphs: {count}"));
                    }
                    if let Some(ok) = host.adjunction_verified {
                        push(
                            &mut out,
                            &format!("  adjunction (exhaustive): {}", if ok { "verified" } else { "FAILED" }),
                        );
                    }
                    push(&mut out, &format!("  a      = {}", host.witness_a));
                    push(&mut out, &format!("  not a  = {}", host.witness_not_a));
                    push(&mut out, &format!("  a v ~a = {}", host.witness_join));
                    push(
                        &mut out,
                        &format!("  excluded middle holds: {}", host.excluded_middle_holds),
                    );
                    push(&mut out, &format!("  ~~a    = {}", host.double_negation_of_a));
                    push(
                        &mut out,
                        &format!("  ~~a == a: {}", host.double_negation_collapses),
                    );
                }
            }
        }
        if let Some(ms) = self.timing_ms {
            push(&mut out, &format!("time: {ms} ms"));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

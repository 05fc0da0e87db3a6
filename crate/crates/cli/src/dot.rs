//! Deterministic DOT export of a frame's orthogonality graph.
//!
//! Nodes are named `n<id>` and get the ray label (falling back to the id).
//! The supplied contexts — by default the basis contexts — are rendered as
//! clusters named `ctx<k>` in canonical context order. With an intensive
//! valuation, each node shows its exact rational value and is filled with a
//! gray level proportional to the intensity (value 0 renders white, value 1
//! black); layout is left entirely to the renderer.

use num::{BigInt, BigRational, ToPrimitive};
use potentia_core::algebra::format_rational;
use potentia_core::{Context, Frame, IntensiveValuation, OrthogonalityGraph};

fn sanitize_graph_name(name: &str) -> String {
    let mut out: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    if out.is_empty() || out.chars().next().unwrap().is_ascii_digit() {
        out.insert(0, 'g');
    }
    out
}

fn escape_label(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Gray level for an intensity: lightness `1 - value`, rounded half-up to
/// the Graphviz `gray0..gray100` scale.
fn gray_level(value: &BigRational) -> u8 {
    let lightness = (BigRational::from_integer(BigInt::from(1)) - value)
        * BigRational::from_integer(BigInt::from(200))
        + BigRational::from_integer(BigInt::from(1));
    let doubled = lightness.floor().to_integer().to_u32().unwrap_or(0);
    (doubled / 2).min(100) as u8
}

/// Renders the frame as an undirected DOT graph.
pub fn export_dot(
    name: &str,
    frame: &Frame,
    graph: &OrthogonalityGraph,
    contexts: &[Context],
    giv: Option<&IntensiveValuation>,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {} {{\n", sanitize_graph_name(name)));
    out.push_str("  node [shape=circle, style=filled, fillcolor=white];\n");
    for ray in frame.rays() {
        let base = match ray.label() {
            Some(label) => label.to_string(),
            None => ray.id().to_string(),
        };
        match giv.and_then(|g| g.value(ray.id())) {
            Some(value) => {
                let gray = gray_level(value);
                let font = if gray < 50 { "white" } else { "black" };
                out.push_str(&format!(
                    "  n{} [label=\"{}\\n{}\", fillcolor=\"gray{}\", fontcolor=\"{}\"];\n",
                    ray.id(),
                    escape_label(&base),
                    format_rational(value),
                    gray,
                    font
                ));
            }
            None => {
                out.push_str(&format!(
                    "  n{} [label=\"{}\"];\n",
                    ray.id(),
                    escape_label(&base)
                ));
            }
        }
    }
    for (k, context) in contexts.iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_ctx{k} {{\n"));
        out.push_str(&format!("    label=\"ctx{k}\";\n"));
        let members: Vec<String> = context
            .members()
            .iter()
            .map(|id| format!("n{id}"))
            .collect();
        out.push_str(&format!("    {};\n", members.join("; ")));
        out.push_str("  }\n");
    }
    for (a, b) in graph.edges() {
        out.push_str(&format!("  n{a} -- n{b};\n"));
    }
    out.push_str("}\n");
    out
}

//! One function per subcommand. Each resolves its inputs, runs the
//! corresponding library operation, and packages exactly one [`Report`].

use anyhow::{bail, Context as _};
use num::{BigRational, One};
use potentia_core::algebra::format_rational;
use potentia_core::{
    born_giv, build_graph, check_psa, collapse_tau, enumerate_maximal_contexts, is_asa,
    ks_solve_with, reconstruct_density, resolve_bases, HostGraph, IntensiveValuation, KsVerdict,
    RationalUnitary, Reconstruction, SolveOptions, State, Subgraph, UnsatCertificate,
};

use crate::report::{
    AssignmentRow, Body, CheckPsaBody, CollapseBody, CollapseRow, ContextRow, ContextsBody,
    EvolveBody, EvolveRow, HeytingBody, HeytingHost, KsBody, MultiplicityRow, ParityInfo, Report,
    SearchInfo, SumRow, ValuateBody, ValueRow,
};
use crate::scenario::{parse_state_arg, LoadedScenario};

fn label_of(scenario: &LoadedScenario, id: potentia_core::RayId) -> Option<String> {
    scenario
        .frame
        .ray(id)
        .and_then(|r| r.label())
        .map(str::to_string)
}

/// The state for commands that require one: an explicit `--state` argument
/// wins, otherwise the scenario's bundled state.
fn resolve_state(scenario: &LoadedScenario, state_arg: Option<&str>) -> anyhow::Result<State> {
    if let Some(arg) = state_arg {
        return Ok(parse_state_arg(arg, scenario.field)?);
    }
    match &scenario.state {
        Some(state) => Ok(state.clone()),
        None => bail!(
            "scenario {} bundles no state; pass --state <path|inline-json>",
            scenario.name
        ),
    }
}

/// An intensive valuation and a description of where it came from: an
/// explicit state argument, the scenario's standalone valuation, or the
/// scenario's bundled state, in that order.
fn resolve_giv(
    scenario: &LoadedScenario,
    state_arg: Option<&str>,
) -> anyhow::Result<(IntensiveValuation, String)> {
    if let Some(arg) = state_arg {
        let state = parse_state_arg(arg, scenario.field)?;
        let giv = born_giv(&scenario.frame, &state)?;
        return Ok((giv, format!("born({state})")));
    }
    if let Some(valuation) = &scenario.valuation {
        return Ok((valuation.clone(), "loaded valuation".to_string()));
    }
    if let Some(state) = &scenario.state {
        let giv = born_giv(&scenario.frame, state)?;
        return Ok((giv, format!("born({state})")));
    }
    bail!(
        "scenario {} has neither a valuation nor a state; pass --state <path|inline-json>",
        scenario.name
    )
}

pub fn cmd_contexts(scenario: &LoadedScenario) -> anyhow::Result<Report> {
    let graph = build_graph(&scenario.frame);
    let contexts = enumerate_maximal_contexts(&scenario.frame, &graph);
    let rows: Vec<ContextRow> = contexts
        .iter()
        .enumerate()
        .map(|(index, c)| ContextRow {
            index,
            members: c.display_members(),
            size: c.len(),
            basis: c.is_basis(),
        })
        .collect();
    let basis_count = contexts.iter().filter(|c| c.is_basis()).count();
    Ok(Report {
        command: "contexts",
        scenario: Some(scenario.name.clone()),
        body: Body::Contexts(ContextsBody {
            dimension: scenario.frame.dim(),
            ray_count: scenario.frame.rays().len(),
            edge_count: graph.edge_count(),
            context_count: contexts.len(),
            basis_count,
            contexts: rows,
        }),
        timing_ms: None,
    })
}

pub fn cmd_ks(scenario: &LoadedScenario, exhaustive: bool) -> anyhow::Result<Report> {
    let bases = resolve_bases(&scenario.frame)?;
    let options = SolveOptions {
        try_parity_certificate: !exhaustive,
    };
    let report = ks_solve_with(&scenario.frame, &options)?;
    let body = match report.verdict {
        KsVerdict::Satisfiable(witness) => KsBody {
            basis_count: bases.len(),
            satisfiable: true,
            witness: Some(
                witness
                    .values()
                    .iter()
                    .map(|(id, &v)| AssignmentRow {
                        id: id.0,
                        value: v as u8,
                    })
                    .collect(),
            ),
            parity_certificate: None,
            search: None,
        },
        KsVerdict::Unsatisfiable(UnsatCertificate::Parity(cert)) => KsBody {
            basis_count: bases.len(),
            satisfiable: false,
            witness: None,
            parity_certificate: Some(ParityInfo {
                basis_count: cert.basis_count(),
                multiplicities: cert
                    .multiplicities()
                    .iter()
                    .map(|(id, &count)| MultiplicityRow { id: id.0, count })
                    .collect(),
            }),
            search: None,
        },
        KsVerdict::Unsatisfiable(UnsatCertificate::SearchExhausted { nodes, branches }) => KsBody {
            basis_count: bases.len(),
            satisfiable: false,
            witness: None,
            parity_certificate: None,
            search: Some(SearchInfo { nodes, branches }),
        },
    };
    Ok(Report {
        command: "ks",
        scenario: Some(scenario.name.clone()),
        body: Body::Ks(body),
        timing_ms: None,
    })
}

pub fn cmd_valuate(scenario: &LoadedScenario, state_arg: Option<&str>) -> anyhow::Result<Report> {
    let state = resolve_state(scenario, state_arg)
        .context("valuate requires a state")?;
    let giv = born_giv(&scenario.frame, &state)?;
    let rows = valuation_rows(scenario, &giv);
    let bases = resolve_bases(&scenario.frame)?;
    let basis_sums = bases
        .iter()
        .map(|basis| {
            let sum: BigRational = basis
                .members()
                .iter()
                .map(|id| giv.value(*id).expect("total").clone())
                .sum();
            SumRow {
                context: basis.display_members(),
                sum: format_rational(&sum),
            }
        })
        .collect();
    let psa = check_psa(&giv, &scenario.frame);
    Ok(Report {
        command: "valuate",
        scenario: Some(scenario.name.clone()),
        body: Body::Valuate(ValuateBody {
            state: state.to_string(),
            rows,
            basis_sums,
            psa,
        }),
        timing_ms: None,
    })
}

fn valuation_rows(scenario: &LoadedScenario, giv: &IntensiveValuation) -> Vec<ValueRow> {
    giv.values()
        .iter()
        .map(|(id, value)| ValueRow {
            id: id.0,
            label: label_of(scenario, *id),
            value: format_rational(value),
        })
        .collect()
}

pub fn cmd_collapse(scenario: &LoadedScenario, state_arg: Option<&str>) -> anyhow::Result<Report> {
    let (giv, source) = resolve_giv(scenario, state_arg)?;
    let collapsed = collapse_tau(&giv);
    let bases = resolve_bases(&scenario.frame)?;
    let rows = giv
        .values()
        .iter()
        .map(|(id, value)| CollapseRow {
            id: id.0,
            label: label_of(scenario, *id),
            intensity: format_rational(value),
            bit: collapsed.value(*id).expect("total") as u8,
        })
        .collect();
    Ok(Report {
        command: "collapse",
        scenario: Some(scenario.name.clone()),
        body: Body::Collapse(CollapseBody {
            source,
            rows,
            asa: is_asa(&collapsed, &bases),
        }),
        timing_ms: None,
    })
}

pub fn cmd_check_psa(scenario: &LoadedScenario, state_arg: Option<&str>) -> anyhow::Result<Report> {
    let (giv, source) = resolve_giv(scenario, state_arg)?;
    let psa = check_psa(&giv, &scenario.frame);
    let first_violation = (!psa).then(|| first_psa_violation(scenario, &giv));
    Ok(Report {
        command: "check-psa",
        scenario: Some(scenario.name.clone()),
        body: Body::CheckPsa(CheckPsaBody {
            source,
            psa,
            first_violation,
        }),
        timing_ms: None,
    })
}

fn first_psa_violation(scenario: &LoadedScenario, giv: &IntensiveValuation) -> String {
    let graph = build_graph(&scenario.frame);
    for context in enumerate_maximal_contexts(&scenario.frame, &graph) {
        let sum: BigRational = context
            .members()
            .iter()
            .map(|id| giv.value(*id).expect("total").clone())
            .sum();
        if context.is_basis() && !sum.is_one() {
            return format!(
                "basis {} sums to {}",
                context.display_members(),
                format_rational(&sum)
            );
        }
        if !context.is_basis() && sum > BigRational::one() {
            return format!(
                "context {} sums to {}",
                context.display_members(),
                format_rational(&sum)
            );
        }
    }
    "no violating context".to_string()
}

pub fn cmd_reconstruct(
    scenario: &LoadedScenario,
    state_arg: Option<&str>,
) -> anyhow::Result<Report> {
    let (giv, source) = resolve_giv(scenario, state_arg)?;
    let outcome = reconstruct_density(&scenario.frame, &giv)?;
    let density = match &outcome {
        Reconstruction::Unique(rho) => {
            let d = rho.dim();
            Some(
                (0..d)
                    .map(|i| (0..d).map(|j| rho.op().entry(i, j).to_string()).collect())
                    .collect(),
            )
        }
        _ => None,
    };
    Ok(Report {
        command: "reconstruct",
        scenario: Some(scenario.name.clone()),
        body: Body::Reconstruct(crate::report::ReconstructBody {
            source,
            outcome: outcome.describe().to_string(),
            density,
        }),
        timing_ms: None,
    })
}

pub fn cmd_evolve(
    scenario: &LoadedScenario,
    state_arg: Option<&str>,
    unitary: &RationalUnitary,
) -> anyhow::Result<Report> {
    let state = resolve_state(scenario, state_arg)
        .context("evolve requires a state")?;
    let invariant = potentia_core::evolution_commutes(&scenario.frame, &state, unitary)?;
    let evolved = state.evolve(unitary)?;
    let rows = scenario
        .frame
        .rays()
        .iter()
        .map(|ray| {
            let before = potentia_core::born_probability(&state, ray.coords())?;
            let after =
                potentia_core::born_probability(&evolved, &unitary.apply(ray.coords())?)?;
            Ok(EvolveRow {
                id: ray.id().0,
                before: format_rational(&before),
                after: format_rational(&after),
            })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Report {
        command: "evolve",
        scenario: Some(scenario.name.clone()),
        body: Body::Evolve(EvolveBody {
            state: state.to_string(),
            invariant,
            rows,
        }),
        timing_ms: None,
    })
}

fn heyting_host_report(name: &str, host: &HostGraph) -> anyhow::Result<HeytingHost> {
    // Demonstration subgraph: every node, no edges. Its pseudo-complement is
    // empty whenever the host has an edge, so excluded middle fails exactly
    // on non-discrete hosts.
    let a = Subgraph::new(host.nodes().clone(), &[])?;
    let not_a = host.pseudo_complement(&a)?;
    let join = host.join(&a, &not_a)?;
    let nn = host.pseudo_complement(&not_a)?;
    let (subgraph_count, adjunction_verified) = if host.nodes().len()
        <= potentia_core::logos::BRUTE_FORCE_NODE_CAP
    {
        let all = host.all_subgraphs()?;
        let mut verified = true;
        'outer: for x in &all {
            for y in &all {
                let imp = host.implication(x, y)?;
                for c in &all {
                    let lhs = host.leq(&host.meet(c, x)?, y)?;
                    let rhs = host.leq(c, &imp)?;
                    if lhs != rhs {
                        verified = false;
                        break 'outer;
                    }
                }
            }
        }
        (Some(all.len()), Some(verified))
    } else {
        (None, None)
    };
    Ok(HeytingHost {
        name: name.to_string(),
        nodes: host.nodes().len(),
        edges: host.edges().len(),
        subgraph_count,
        adjunction_verified,
        witness_a: a.describe(),
        witness_not_a: not_a.describe(),
        witness_join: join.describe(),
        excluded_middle_holds: join == host.top(),
        double_negation_of_a: nn.describe(),
        double_negation_collapses: nn == a,
    })
}

pub fn cmd_heyting_demo(scenario: Option<&LoadedScenario>) -> anyhow::Result<Report> {
    let (scenario_name, hosts) = match scenario {
        Some(scenario) => {
            let graph = build_graph(&scenario.frame);
            let host = HostGraph::from_orthogonality(&graph);
            (
                Some(scenario.name.clone()),
                vec![(scenario.name.clone(), host)],
            )
        }
        None => (
            None,
            vec![
                ("K2".to_string(), HostGraph::complete(2)),
                ("P3".to_string(), HostGraph::path(3)),
                ("K3".to_string(), HostGraph::complete(3)),
            ],
        ),
    };
    let hosts = hosts
        .iter()
        .map(|(name, host)| heyting_host_report(name, host))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Report {
        command: "heyting-demo",
        scenario: scenario_name,
        body: Body::Heyting(HeytingBody { hosts }),
        timing_ms: None,
    })
}

/// DOT text for the scenario; when an intensity source is available the
/// nodes carry their values.
pub fn cmd_export_dot(
    scenario: &LoadedScenario,
    state_arg: Option<&str>,
) -> anyhow::Result<String> {
    let graph = build_graph(&scenario.frame);
    let bases = resolve_bases(&scenario.frame)?;
    let giv = match resolve_giv(scenario, state_arg) {
        Ok((giv, _)) => Some(giv),
        Err(_) => None,
    };
    Ok(crate::dot::export_dot(
        &scenario.name,
        &scenario.frame,
        &graph,
        &bases,
        giv.as_ref(),
    ))
}

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand};

use potentia_cli::commands;
use potentia_cli::report::{Format, Report};
use potentia_cli::scenario::{load_scenario, parse_unitary_arg, LoadedScenario};

/// Exact-arithmetic toolkit for quantum contextuality scenarios.
///
/// Analyses always exit 0, whatever the verdict; only operational errors
/// (missing files, parse errors, violated preconditions) exit nonzero.
#[derive(Parser)]
#[command(name = "potentia", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Scenario file (JSON).
    #[arg(long)]
    scenario: PathBuf,
    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Deterministic sequential mode: reports become byte-identical across
    /// runs (timing is suppressed).
    #[arg(long)]
    sequential: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct StateArg {
    /// State as a JSON file path or inline JSON (`{"pure": ...}` or
    /// `{"density": ...}`). Falls back to the scenario's bundled state.
    #[arg(long)]
    state: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the maximal contexts of the orthogonality graph.
    Contexts {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Decide whether an admissible binary valuation exists.
    Ks {
        #[command(flatten)]
        common: CommonArgs,
        /// Skip the parity-certificate fast path and force the search.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Born-rule valuation table of a state over the scenario's rays.
    Valuate {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        state: StateArg,
    },
    /// Support collapse of an intensive valuation to a binary one.
    Collapse {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        state: StateArg,
    },
    /// Test the additivity axioms of an intensive valuation.
    CheckPsa {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        state: StateArg,
    },
    /// Invert the Born table back to a density operator where possible.
    Reconstruct {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        state: StateArg,
    },
    /// Check Born-table invariance under a rational unitary evolution.
    Evolve {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        state: StateArg,
        /// Unitary as a JSON file path or inline JSON matrix of scalar
        /// strings.
        #[arg(long)]
        unitary: String,
    },
    /// Subgraph-lattice demonstration: implication, pseudo-complement, and
    /// the failure of excluded middle.
    HeytingDemo {
        /// Scenario whose orthogonality graph hosts the demo; defaults to
        /// the built-in K2, P3, K3 hosts.
        #[arg(long)]
        scenario: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the orthogonality graph as DOT, with basis contexts as clusters.
    ExportDot {
        #[arg(long)]
        scenario: PathBuf,
        #[command(flatten)]
        state: StateArg,
        /// Accepted for interface uniformity; DOT output is always
        /// deterministic.
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn emit(text: &str, output: Option<&PathBuf>) -> anyhow::Result<()> {
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn finish(
    mut report: Report,
    common: &CommonArgs,
    started: Instant,
) -> anyhow::Result<()> {
    if !common.sequential {
        report.timing_ms = Some(started.elapsed().as_millis());
    }
    emit(&report.render(common.format), common.output.as_ref())
}

fn load(common: &CommonArgs) -> anyhow::Result<LoadedScenario> {
    Ok(load_scenario(&common.scenario)?)
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let started = Instant::now();
    match cli.command {
        Command::Contexts { common } => {
            let scenario = load(&common)?;
            finish(commands::cmd_contexts(&scenario)?, &common, started)
        }
        Command::Ks { common, exhaustive } => {
            let scenario = load(&common)?;
            finish(commands::cmd_ks(&scenario, exhaustive)?, &common, started)
        }
        Command::Valuate { common, state } => {
            let scenario = load(&common)?;
            finish(
                commands::cmd_valuate(&scenario, state.state.as_deref())?,
                &common,
                started,
            )
        }
        Command::Collapse { common, state } => {
            let scenario = load(&common)?;
            finish(
                commands::cmd_collapse(&scenario, state.state.as_deref())?,
                &common,
                started,
            )
        }
        Command::CheckPsa { common, state } => {
            let scenario = load(&common)?;
            finish(
                commands::cmd_check_psa(&scenario, state.state.as_deref())?,
                &common,
                started,
            )
        }
        Command::Reconstruct { common, state } => {
            let scenario = load(&common)?;
            finish(
                commands::cmd_reconstruct(&scenario, state.state.as_deref())?,
                &common,
                started,
            )
        }
        Command::Evolve {
            common,
            state,
            unitary,
        } => {
            let scenario = load(&common)?;
            let unitary = parse_unitary_arg(&unitary, scenario.field)?;
            finish(
                commands::cmd_evolve(&scenario, state.state.as_deref(), &unitary)?,
                &common,
                started,
            )
        }
        Command::HeytingDemo {
            scenario,
            format,
            sequential,
            output,
        } => {
            let loaded = scenario.as_deref().map(load_scenario).transpose()?;
            let mut report = commands::cmd_heyting_demo(loaded.as_ref())?;
            if !sequential {
                report.timing_ms = Some(started.elapsed().as_millis());
            }
            emit(&report.render(format), output.as_ref())
        }
        Command::ExportDot {
            scenario,
            state,
            sequential: _,
            output,
        } => {
            let loaded = load_scenario(&scenario)?;
            let dot = commands::cmd_export_dot(&loaded, state.state.as_deref())?;
            emit(&dot, output.as_ref())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(error) = run(cli) {
        eprintln!("error: {error:#}");
        std::process::exit(1);
    }
}

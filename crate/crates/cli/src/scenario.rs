//! The scenario file format and its loader.
//!
//! Scenarios are UTF-8 JSON. All numeric entries are exact strings: integers,
//! rationals `p/q`, decimals (converted exactly, so `0.96` means `24/25`),
//! and — in the `gaussian-rational` field — complex values like `1/2-1/3i`.
//! Unknown fields are rejected. Ray coordinates are canonicalized on load and
//! two rays with the same canonical form are an error.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use potentia_core::algebra::{format_rational, parse_rational};
use potentia_core::{
    DensityOperator, Frame, IntensiveValuation, Operator, Origin, Ray, RayId, Scalar, State,
    Vector,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed scenario JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{location}: {source}")]
    Scalar {
        location: String,
        source: potentia_core::Error,
    },
    #[error("{location}: complex entry {text:?} in a rational-field scenario")]
    ComplexEntry { location: String, text: String },
    #[error("basis #{index} references unknown ray id {id}")]
    UnknownBasisRay { index: usize, id: u32 },
    #[error("valuation references unknown ray id {id}")]
    UnknownValuationRay { id: u32 },
    #[error("valuation assigns ray {id} twice")]
    DuplicateValuationRay { id: u32 },
    #[error(transparent)]
    Core(#[from] potentia_core::Error),
}

type Result<T> = std::result::Result<T, ScenarioError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldTag {
    Rational,
    GaussianRational,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RayEntry {
    pub id: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub coords: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "lowercase")]
pub enum StateSpec {
    Pure(Vec<String>),
    Density(Vec<Vec<String>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValuationEntry {
    pub id: u32,
    pub value: String,
}

/// On-disk schema of a scenario.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub dimension: usize,
    pub field: FieldTag,
    pub rays: Vec<RayEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<StateSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valuation: Option<Vec<ValuationEntry>>,
}

/// A parsed and validated scenario.
#[derive(Debug, Clone)]
pub struct LoadedScenario {
    pub name: String,
    pub field: FieldTag,
    pub frame: Frame,
    pub state: Option<State>,
    pub valuation: Option<IntensiveValuation>,
}

fn parse_scalar(text: &str, field: FieldTag, location: &str) -> Result<Scalar> {
    let scalar = Scalar::from_str(text).map_err(|source| ScenarioError::Scalar {
        location: location.to_string(),
        source,
    })?;
    if field == FieldTag::Rational && !scalar.is_real() {
        return Err(ScenarioError::ComplexEntry {
            location: location.to_string(),
            text: text.to_string(),
        });
    }
    Ok(scalar)
}

fn parse_vector(coords: &[String], field: FieldTag, location: &str) -> Result<Vector> {
    let entries = coords
        .iter()
        .map(|text| parse_scalar(text, field, location))
        .collect::<Result<Vec<_>>>()?;
    Vector::new(entries).map_err(|source| ScenarioError::Scalar {
        location: location.to_string(),
        source,
    })
}

fn parse_state_spec(spec: &StateSpec, field: FieldTag) -> Result<State> {
    match spec {
        StateSpec::Pure(coords) => {
            let vector = parse_vector(coords, field, "state.pure")?;
            Ok(State::pure(vector)?)
        }
        StateSpec::Density(rows) => {
            let parsed = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .map(|text| parse_scalar(text, field, &format!("state.density[{i}]")))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let op = Operator::from_rows(parsed)?;
            Ok(State::Density(DensityOperator::new(op)?))
        }
    }
}

/// Parses scenario text. `name` is carried into reports and DOT output.
pub fn parse_scenario(text: &str, name: &str) -> Result<LoadedScenario> {
    let file: ScenarioFile = serde_json::from_str(text)?;
    let field = file.field;
    let mut rays = Vec::with_capacity(file.rays.len());
    for entry in &file.rays {
        let location = format!("ray {}", entry.id);
        let coords = parse_vector(&entry.coords, field, &location)?;
        rays.push(Ray::new(RayId(entry.id), entry.label.clone(), &coords)?);
    }
    let declared = file.bases.as_ref().map(|bases| {
        bases
            .iter()
            .map(|basis| basis.iter().map(|&id| RayId(id)).collect())
            .collect()
    });
    let frame = Frame::new(file.dimension, rays, declared)?;
    let state = file
        .state
        .as_ref()
        .map(|spec| parse_state_spec(spec, field))
        .transpose()?;
    let valuation = file
        .valuation
        .as_ref()
        .map(|entries| {
            let mut values = BTreeMap::new();
            for entry in entries {
                if !frame.contains(RayId(entry.id)) {
                    return Err(ScenarioError::UnknownValuationRay { id: entry.id });
                }
                let value =
                    parse_rational(&entry.value).map_err(|source| ScenarioError::Scalar {
                        location: format!("valuation for ray {}", entry.id),
                        source,
                    })?;
                if values.insert(RayId(entry.id), value).is_some() {
                    return Err(ScenarioError::DuplicateValuationRay { id: entry.id });
                }
            }
            Ok(IntensiveValuation::new(&frame, values, Origin::Loaded)?)
        })
        .transpose()?;
    Ok(LoadedScenario {
        name: name.to_string(),
        field,
        frame,
        state,
        valuation,
    })
}

/// Loads a scenario from disk; the file stem becomes the scenario name.
pub fn load_scenario(path: &Path) -> Result<LoadedScenario> {
    let text = fs::read_to_string(path).map_err(|source| ScenarioError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "scenario".to_string());
    parse_scenario(&text, &name)
}

fn scalar_string(s: &Scalar) -> String {
    s.to_string()
}

/// Serializes a frame (plus optional state and valuation) back to the file
/// schema with canonical coordinates.
pub fn write_scenario(
    frame: &Frame,
    field: FieldTag,
    state: Option<&State>,
    valuation: Option<&IntensiveValuation>,
) -> ScenarioFile {
    let rays = frame
        .rays()
        .iter()
        .map(|ray| RayEntry {
            id: ray.id().0,
            label: ray.label().map(str::to_string),
            coords: ray.coords().entries().iter().map(scalar_string).collect(),
        })
        .collect();
    let bases = frame.declared_bases().map(|bases| {
        bases
            .iter()
            .map(|basis| basis.iter().map(|id| id.0).collect())
            .collect()
    });
    let state = state.map(|state| match state {
        State::Pure(v) => StateSpec::Pure(v.entries().iter().map(scalar_string).collect()),
        State::Density(rho) => {
            let d = rho.dim();
            StateSpec::Density(
                (0..d)
                    .map(|i| (0..d).map(|j| scalar_string(rho.op().entry(i, j))).collect())
                    .collect(),
            )
        }
    });
    let valuation = valuation.map(|giv| {
        giv.values()
            .iter()
            .map(|(id, value)| ValuationEntry {
                id: id.0,
                value: format_rational(value),
            })
            .collect()
    });
    ScenarioFile {
        dimension: frame.dim(),
        field,
        rays,
        bases,
        state,
        valuation,
    }
}

/// Renders a scenario file as pretty JSON.
pub fn scenario_to_json(file: &ScenarioFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("scenario serializes");
    text.push('\n');
    text
}

/// Parses a `--state` argument: inline JSON when it starts with `{`,
/// otherwise a path to a JSON file holding a [`StateSpec`].
pub fn parse_state_arg(arg: &str, field: FieldTag) -> Result<State> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|source| ScenarioError::Io {
            path: arg.to_string(),
            source,
        })?
    };
    let spec: StateSpec = serde_json::from_str(&text)?;
    parse_state_spec(&spec, field)
}

/// Parses a `--unitary` argument: inline JSON when it starts with `[`,
/// otherwise a path. The payload is a square matrix of scalar strings.
pub fn parse_unitary_arg(
    arg: &str,
    field: FieldTag,
) -> Result<potentia_core::RationalUnitary> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|source| ScenarioError::Io {
            path: arg.to_string(),
            source,
        })?
    };
    let rows: Vec<Vec<String>> = serde_json::from_str(&text)?;
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|text| parse_scalar(text, field, &format!("unitary row {i}")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let op = Operator::from_rows(parsed)?;
    Ok(potentia_core::RationalUnitary::new(op)?)
}

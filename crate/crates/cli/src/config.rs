//! Concept configuration documents (JSON) and their validation.

use std::collections::HashSet;
use std::path::Path;

use hilbert_concepts::fuzzy::TriangularMembership;
use hilbert_concepts::{GaussianState, Grid};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// The shipped car/boat/object configuration.
pub const BUILTIN_CONFIG: &str = include_str!("../../../configs/car_boat.json");

pub const DEFAULT_OBJECT: (f64, f64) = (3.0, 2.0);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConceptConfig {
    pub concepts: Vec<ConceptEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<ObjectEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub memberships: Option<Vec<MembershipEntry>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConceptEntry {
    pub name: String,
    pub mu: f64,
    pub sigma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectEntry {
    pub mu: f64,
    pub sigma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridEntry {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MembershipEntry {
    pub name: String,
    pub center: f64,
    pub half_width: f64,
}

/// A configuration that passed validation, in library types.
#[derive(Debug, Clone)]
pub struct Config {
    pub concepts: Vec<(String, GaussianState)>,
    pub object: GaussianState,
    /// Configured grid, if any; otherwise commands use [`Config::grid`].
    pub explicit_grid: Option<Grid>,
    pub memberships: Option<Vec<(String, TriangularMembership)>>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        match path {
            None => parse(BUILTIN_CONFIG, "<builtin car/boat config>"),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| {
                    CliError::Usage(format!("{}: cannot read config: {e}", p.display()))
                })?;
                parse(&text, &p.display().to_string())
            }
        }
    }

    pub fn with_object(mut self, mu: Option<f64>, sigma: Option<f64>) -> Result<Self, CliError> {
        let mu = mu.unwrap_or(self.object.mu());
        let sigma = sigma.unwrap_or(self.object.sigma());
        self.object =
            GaussianState::new(mu, sigma).map_err(|e| CliError::Usage(format!("object: {e}")))?;
        Ok(self)
    }

    /// The configured grid, or the default grid covering every concept and
    /// the object.
    pub fn grid(&self) -> Result<Grid, CliError> {
        match &self.explicit_grid {
            Some(g) => Ok(g.clone()),
            None => Grid::covering(
                self.concepts
                    .iter()
                    .map(|(_, s)| s)
                    .chain(std::iter::once(&self.object)),
            )
            .map_err(CliError::from),
        }
    }
}

/// Parses and validates a configuration document. `source` names the
/// document in error messages.
pub fn parse(text: &str, source: &str) -> Result<Config, CliError> {
    let raw: ConceptConfig = serde_json::from_str(text)
        .map_err(|e| CliError::Usage(format!("{source}:{}:{}: {e}", e.line(), e.column())))?;
    validate(&raw, text, source)
}

pub fn validate(raw: &ConceptConfig, text: &str, source: &str) -> Result<Config, CliError> {
    let fail = |section: &str, index: Option<usize>, msg: String| {
        CliError::Usage(format!("{source}:{}: {msg}", line_of(text, section, index)))
    };

    if raw.concepts.is_empty() {
        return Err(fail(
            "concepts",
            None,
            "concepts: at least one concept is required".into(),
        ));
    }
    let mut seen = HashSet::new();
    let mut concepts = Vec::with_capacity(raw.concepts.len());
    for (i, c) in raw.concepts.iter().enumerate() {
        if c.name.is_empty() {
            return Err(fail(
                "concepts",
                Some(i),
                format!("concepts[{i}]: name must be non-empty"),
            ));
        }
        if !seen.insert(c.name.as_str()) {
            return Err(fail(
                "concepts",
                Some(i),
                format!("concepts[{i}] '{}': duplicate name", c.name),
            ));
        }
        if !(c.sigma.is_finite() && c.sigma > 0.0) {
            return Err(fail(
                "concepts",
                Some(i),
                format!(
                    "concepts[{i}] '{}': sigma must be positive, got {}",
                    c.name, c.sigma
                ),
            ));
        }
        let state = GaussianState::new(c.mu, c.sigma).map_err(|e| {
            fail(
                "concepts",
                Some(i),
                format!("concepts[{i}] '{}': {e}", c.name),
            )
        })?;
        concepts.push((c.name.clone(), state));
    }

    let (mu, sigma) = raw
        .object
        .map(|o| (o.mu, o.sigma))
        .unwrap_or(DEFAULT_OBJECT);
    let object =
        GaussianState::new(mu, sigma).map_err(|e| fail("object", None, format!("object: {e}")))?;

    let explicit_grid = raw
        .grid
        .map(|g| Grid::new(g.x_min, g.x_max, g.n_points))
        .transpose()
        .map_err(|e| fail("grid", None, format!("grid: {e}")))?;

    let memberships = match &raw.memberships {
        None => None,
        Some(list) => {
            let mut seen = HashSet::new();
            let mut out = Vec::with_capacity(list.len());
            for (i, m) in list.iter().enumerate() {
                if m.name.is_empty() {
                    return Err(fail(
                        "memberships",
                        Some(i),
                        format!("memberships[{i}]: name must be non-empty"),
                    ));
                }
                if !seen.insert(m.name.as_str()) {
                    return Err(fail(
                        "memberships",
                        Some(i),
                        format!("memberships[{i}] '{}': duplicate name", m.name),
                    ));
                }
                let tri = TriangularMembership::new(m.center, m.half_width).map_err(|_| {
                    fail(
                        "memberships",
                        Some(i),
                        format!(
                            "memberships[{i}] '{}': half_width must be positive, got {}",
                            m.name, m.half_width
                        ),
                    )
                })?;
                out.push((m.name.clone(), tri));
            }
            Some(out)
        }
    };

    Ok(Config {
        concepts,
        object,
        explicit_grid,
        memberships,
    })
}

/// 1-based line where `section` starts; with `index`, the line of that
/// entry's `"name"` key inside the section.
fn line_of(text: &str, section: &str, index: Option<usize>) -> usize {
    let key = format!("\"{section}\"");
    let Some(start) = text.find(&key) else {
        return 1;
    };
    let offset = match index {
        None => start,
        Some(i) => text[start..]
            .match_indices("\"name\"")
            .nth(i)
            .map_or(start, |(k, _)| start + k),
    };
    text[..offset].matches('\n').count() + 1
}

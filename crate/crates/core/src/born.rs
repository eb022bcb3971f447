//! Born-rule classification against a registry of concept states, and
//! interference through phase-weighted superpositions.

use std::collections::BTreeSet;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::hilbert::{inner_product, GaussianState, GridState, State};
use crate::{Error, Result};

/// Scores closer than this count as tied.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Concept {
    name: String,
    state: State,
}

impl Concept {
    pub fn new(name: impl Into<String>, state: impl Into<State>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        Ok(Self {
            name,
            state: state.into(),
        })
    }

    pub fn gaussian(name: impl Into<String>, mu: f64, sigma: f64) -> Result<Self> {
        Self::new(name, GaussianState::new(mu, sigma)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn state(&self) -> &State {
        &self.state
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScoreEntry {
    pub name: String,
    pub raw_score: f64,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Winner(String),
    /// Tied names in lexicographic order.
    Tie(Vec<String>),
}

impl Decision {
    pub fn is_tie(&self) -> bool {
        matches!(self, Decision::Tie(_))
    }
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Decision::Winner(name) => f.write_str(name),
            Decision::Tie(names) => write!(f, "TIE{{{}}}", names.join(",")),
        }
    }
}

/// Per-concept scores, sorted by name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationResult {
    pub entries: Vec<ScoreEntry>,
    pub decision: Decision,
}

impl ClassificationResult {
    /// Normalizes raw scores over exactly the supplied names.
    ///
    /// When every score is zero all probabilities are zero and the decision
    /// is a tie over every name.
    pub fn from_scores(scores: Vec<(String, f64)>) -> Result<Self> {
        if scores.is_empty() {
            return Err(Error::EmptyRegistry);
        }
        let mut seen = BTreeSet::new();
        for (name, score) in &scores {
            if name.is_empty() {
                return Err(Error::EmptyName);
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
            if !(score.is_finite() && *score >= 0.0) {
                return Err(Error::DomainError(format!(
                    "score for '{name}' must be finite and nonnegative, got {score}"
                )));
            }
        }
        let mut scores = scores;
        scores.sort_by(|a, b| a.0.cmp(&b.0));

        let total: f64 = scores.iter().map(|(_, s)| s).sum();
        let entries: Vec<ScoreEntry> = scores
            .into_iter()
            .map(|(name, raw_score)| ScoreEntry {
                probability: if total > 0.0 { raw_score / total } else { 0.0 },
                name,
                raw_score,
            })
            .collect();

        let best = entries
            .iter()
            .map(|e| e.probability)
            .fold(f64::MIN, f64::max);
        let top: Vec<String> = entries
            .iter()
            .filter(|e| best - e.probability < TIE_TOLERANCE)
            .map(|e| e.name.clone())
            .collect();
        let decision = match <[String; 1]>::try_from(top) {
            Ok([name]) => Decision::Winner(name),
            Err(names) => Decision::Tie(names),
        };
        Ok(Self { entries, decision })
    }

    pub fn entry(&self, name: &str) -> Option<&ScoreEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn probability(&self, name: &str) -> Option<f64> {
        self.entry(name).map(|e| e.probability)
    }

    pub fn raw_score(&self, name: &str) -> Option<f64> {
        self.entry(name).map(|e| e.raw_score)
    }
}

/// `|<psi_C|psi_obj>|^2`.
pub fn raw_score(concept: &Concept, object: &State) -> Result<f64> {
    Ok(inner_product(&concept.state, object)?.norm_sqr())
}

pub fn classify(registry: &[Concept], object: &State) -> Result<ClassificationResult> {
    if registry.is_empty() {
        return Err(Error::EmptyRegistry);
    }
    let scores = registry
        .iter()
        .map(|c| Ok((c.name.clone(), raw_score(c, object)?)))
        .collect::<Result<Vec<_>>>()?;
    ClassificationResult::from_scores(scores)
}

/// Normalized pointwise linear combination of states on a shared grid.
pub fn superpose(components: &[(Complex64, GridState)]) -> Result<GridState> {
    let (_, first) = components.first().ok_or(Error::ZeroVector)?;
    let grid = first.grid();
    let mut sum = vec![Complex64::new(0.0, 0.0); grid.n_points()];
    for (coef, state) in components {
        if state.grid() != grid {
            return Err(Error::GridMismatch);
        }
        for (acc, amp) in sum.iter_mut().zip(state.amplitudes()) {
            *acc += coef * amp;
        }
    }
    GridState::new(grid.clone(), sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interference {
    /// Score against `a + b`.
    pub constructive: f64,
    /// Score against `a + e^{i phase} b`.
    pub dephased: f64,
}

pub fn interference_demo(
    object: &State,
    a: &GridState,
    b: &GridState,
    phase: f64,
) -> Result<Interference> {
    let score = |coef: Complex64| -> Result<f64> {
        let mix = superpose(&[(Complex64::new(1.0, 0.0), a.clone()), (coef, b.clone())])?;
        Ok(inner_product(object, &State::Grid(mix))?.norm_sqr())
    };
    Ok(Interference {
        constructive: score(Complex64::new(1.0, 0.0))?,
        dephased: score(Complex64::from_polar(1.0, phase))?,
    })
}

//! One function per subcommand. Each returns the full text it prints so
//! output can be compared byte for byte.

use std::f64::consts::PI;

use hilbert_concepts::born::{self, ClassificationResult, Concept, Interference};
use hilbert_concepts::fuzzy;
use hilbert_concepts::suite::{self, CheckLine, InjectedFault};
use hilbert_concepts::{GaussianState, State};
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::CliError;
use crate::format::{exact, fixed6};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    Wavefunctions,
    Densities,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectReport {
    pub mu: f64,
    pub sigma: f64,
}

impl From<&GaussianState> for ObjectReport {
    fn from(s: &GaussianState) -> Self {
        Self {
            mu: s.mu(),
            sigma: s.sigma(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Quadrature,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyReport {
    pub object: ObjectReport,
    pub method: Method,
    pub result: ClassificationResult,
}

pub fn classify(config: &Config, quadrature: bool, format: Format) -> Result<String, CliError> {
    let object = State::Gaussian(config.object);
    let (registry, object) = if quadrature {
        let grid = config.grid()?;
        let registry = config
            .concepts
            .iter()
            .map(|(n, s)| Ok(Concept::new(n.clone(), s.discretize(&grid)?)?))
            .collect::<Result<Vec<_>, CliError>>()?;
        (registry, State::Grid(object.on_grid(&grid)?))
    } else {
        let registry = config
            .concepts
            .iter()
            .map(|(n, s)| Concept::new(n.clone(), *s))
            .collect::<Result<Vec<_>, _>>()?;
        (registry, object)
    };
    let result = born::classify(&registry, &object)?;
    let report = ClassifyReport {
        object: (&config.object).into(),
        method: if quadrature {
            Method::Quadrature
        } else {
            Method::ClosedForm
        },
        result,
    };
    Ok(match format {
        Format::Json => to_json(&report)?,
        Format::Table => {
            let width = name_width(report.result.entries.iter().map(|e| e.name.as_str()));
            let mut out = format!(
                "object mu={} sigma={}\n{:<width$}{:>12}{:>14}\n",
                fixed6(report.object.mu),
                fixed6(report.object.sigma),
                "concept",
                "raw_score",
                "probability",
            );
            for e in &report.result.entries {
                out += &format!(
                    "{:<width$}{:>12}{:>14}\n",
                    e.name,
                    fixed6(e.raw_score),
                    fixed6(e.probability)
                );
            }
            out += &format!("decision: {}\n", report.result.decision);
            out
        }
    })
}

/// CSV over the command grid: `x`, one column per concept plus the object,
/// and in density mode the pointwise products `psi_object * psi_concept`.
pub fn emit_figure(config: &Config, which: FigureKind) -> Result<String, CliError> {
    let grid = config.grid()?;
    let mut columns: Vec<(String, Vec<f64>)> = Vec::new();
    let object = config.object.discretize(&grid)?;
    let concepts = config
        .concepts
        .iter()
        .map(|(n, s)| Ok((n.as_str(), s.discretize(&grid)?)))
        .collect::<Result<Vec<_>, CliError>>()?;

    let prefix = match which {
        FigureKind::Wavefunctions => "psi",
        FigureKind::Densities => "density",
    };
    let values = |s: &hilbert_concepts::GridState| -> Vec<f64> {
        match which {
            FigureKind::Wavefunctions => s.amplitudes().iter().map(|a| a.re).collect(),
            FigureKind::Densities => s.densities(),
        }
    };
    for (name, s) in &concepts {
        columns.push((format!("{prefix}_{name}"), values(s)));
    }
    columns.push((format!("{prefix}_object"), values(&object)));
    if which == FigureKind::Densities {
        for (name, s) in &concepts {
            let overlap = object
                .amplitudes()
                .iter()
                .zip(s.amplitudes())
                .map(|(o, c)| (o.conj() * c).re)
                .collect();
            columns.push((format!("overlap_{name}"), overlap));
        }
    }

    let mut out = String::from("x");
    for (h, _) in &columns {
        out.push(',');
        out.push_str(h);
    }
    out.push('\n');
    for (i, x) in grid.points().enumerate() {
        out.push_str(&exact(x));
        for (_, col) in &columns {
            out.push(',');
            out.push_str(&exact(col[i]));
        }
        out.push('\n');
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricCheckReport {
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<CheckLine>,
}

impl MetricCheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn metric_check(
    trials: usize,
    seed: u64,
    fault: Option<InjectedFault>,
) -> Result<MetricCheckReport, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let mut checks = suite::metric_axioms(trials, seed, fault)?;
    checks.extend(suite::fuzzy_axioms(trials, seed, fault)?);
    Ok(MetricCheckReport {
        trials,
        seed,
        checks,
    })
}

pub fn render_metric_check(report: &MetricCheckReport, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => to_json(report)?,
        Format::Table => {
            let mut out = format!("trials={} seed={}\n", report.trials, report.seed);
            for c in &report.checks {
                out += &format!("{}  {}", if c.passed { "PASS" } else { "FAIL" }, c.label);
                if let Some(d) = &c.detail {
                    out += &format!("  ({d})");
                }
                out.push('\n');
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            out += &format!("{} checks, {} failed\n", report.checks.len(), failed);
            out
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareRow {
    pub name: String,
    pub quantum_raw: Option<f64>,
    pub quantum_probability: Option<f64>,
    pub fuzzy_raw: Option<f64>,
    pub fuzzy_probability: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareReport {
    pub object: ObjectReport,
    pub x: f64,
    pub rows: Vec<CompareRow>,
    pub quantum: ClassificationResult,
    pub fuzzy: ClassificationResult,
    pub decisions_agree: bool,
    /// Every membership is zero at `x` while the Born scores are not.
    pub memberships_vanish: bool,
}

pub fn compare_fuzzy(config: &Config, x: Option<f64>, format: Format) -> Result<String, CliError> {
    let memberships = config.memberships.as_ref().ok_or_else(|| {
        CliError::Usage("compare-fuzzy needs a \"memberships\" list in the config".into())
    })?;
    let x = x.unwrap_or(config.object.mu());
    if !x.is_finite() {
        return Err(CliError::Usage(format!("--x must be finite, got {x}")));
    }
    let registry = config
        .concepts
        .iter()
        .map(|(n, s)| Concept::new(n.clone(), *s))
        .collect::<Result<Vec<_>, _>>()?;
    let quantum = born::classify(&registry, &State::Gaussian(config.object))?;
    let fuzzy = fuzzy::fuzzy_classify(memberships, x)?;

    let mut names: Vec<String> = quantum
        .entries
        .iter()
        .chain(&fuzzy.entries)
        .map(|e| e.name.clone())
        .collect();
    names.sort_unstable();
    names.dedup();
    let rows = names
        .iter()
        .map(|n| CompareRow {
            name: n.clone(),
            quantum_raw: quantum.raw_score(n),
            quantum_probability: quantum.probability(n),
            fuzzy_raw: fuzzy.raw_score(n),
            fuzzy_probability: fuzzy.probability(n),
        })
        .collect();
    let report = CompareReport {
        object: (&config.object).into(),
        x,
        rows,
        decisions_agree: quantum.decision == fuzzy.decision,
        memberships_vanish: fuzzy.entries.iter().all(|e| e.raw_score == 0.0)
            && quantum.entries.iter().any(|e| e.raw_score > 0.0),
        quantum,
        fuzzy,
    };

    Ok(match format {
        Format::Json => to_json(&report)?,
        Format::Table => {
            let width = name_width(names.iter().map(String::as_str));
            let cell = |v: Option<f64>| v.map_or_else(|| "-".to_string(), fixed6);
            let mut out = format!(
                "object mu={} sigma={}  x={}\n{:<width$}{:>13}{:>13}{:>13}{:>13}\n",
                fixed6(report.object.mu),
                fixed6(report.object.sigma),
                fixed6(x),
                "concept",
                "quantum_raw",
                "quantum_p",
                "fuzzy_raw",
                "fuzzy_p",
            );
            for r in &report.rows {
                out += &format!(
                    "{:<width$}{:>13}{:>13}{:>13}{:>13}\n",
                    r.name,
                    cell(r.quantum_raw),
                    cell(r.quantum_probability),
                    cell(r.fuzzy_raw),
                    cell(r.fuzzy_probability),
                );
            }
            out += &format!("quantum decision: {}\n", report.quantum.decision);
            out += &format!("fuzzy decision: {}\n", report.fuzzy.decision);
            out += &format!(
                "decisions agree: {}\n",
                if report.decisions_agree { "yes" } else { "no" }
            );
            if report.memberships_vanish {
                out += "note: every membership is 0 at x while the overlaps are not; \
                        the triangular widths do not reach x\n";
            }
            out
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterferenceReport {
    pub a: String,
    pub b: String,
    pub object: ObjectReport,
    pub phase: f64,
    pub score_a: f64,
    pub score_b: f64,
    pub constructive: f64,
    pub dephased: f64,
}

pub fn interference(
    config: &Config,
    phase: Option<f64>,
    format: Format,
) -> Result<String, CliError> {
    let [(name_a, a), (name_b, b), ..] = config.concepts.as_slice() else {
        return Err(CliError::Usage(
            "interference needs at least two concepts".into(),
        ));
    };
    let phase = phase.unwrap_or(PI);
    if !phase.is_finite() {
        return Err(CliError::Usage(format!(
            "--phase must be finite, got {phase}"
        )));
    }
    let grid = config.grid()?;
    let (ga, gb) = (a.discretize(&grid)?, b.discretize(&grid)?);
    let object = State::Gaussian(config.object);
    let Interference {
        constructive,
        dephased,
    } = born::interference_demo(&object, &ga, &gb, phase)?;
    let score = |s: &hilbert_concepts::GridState| -> Result<f64, CliError> {
        Ok(born::raw_score(&Concept::new("c", s.clone())?, &object)?)
    };
    let report = InterferenceReport {
        a: name_a.clone(),
        b: name_b.clone(),
        object: (&config.object).into(),
        phase,
        score_a: score(&ga)?,
        score_b: score(&gb)?,
        constructive,
        dephased,
    };
    Ok(match format {
        Format::Json => to_json(&report)?,
        Format::Table => format!(
            "a={} b={} object mu={} sigma={} phase={}\n\
             score_a       {}\nscore_b       {}\nconstructive  {}\ndephased      {}\n",
            report.a,
            report.b,
            fixed6(report.object.mu),
            fixed6(report.object.sigma),
            fixed6(phase),
            fixed6(report.score_a),
            fixed6(report.score_b),
            fixed6(constructive),
            fixed6(dephased),
        ),
    })
}

fn name_width<'a>(names: impl Iterator<Item = &'a str>) -> usize {
    names.map(str::len).max().unwrap_or(0).max(7) + 2
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Compute(format!("serializing report: {e}")))?;
    s.push('\n');
    Ok(s)
}

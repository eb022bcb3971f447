//! Seeded property suites: metric axioms for the Hilbert distance and the
//! fuzzy-baseline axioms, shared by the CLI and the tests.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::born::superpose;
use crate::fuzzy::{self, FuzzyMetric, IndicatorFuzzyMetric, TNorm};
use crate::hilbert::{GaussianState, Grid, GridState};
use crate::Result;

pub const MU_RANGE: (f64, f64) = (-5.0, 10.0);
pub const SIGMA_RANGE: (f64, f64) = (0.5, 3.0);

const IDENTITY_TOL: f64 = 1e-9;
const SYMMETRY_TOL: f64 = 1e-12;
const TRIANGLE_SLACK: f64 = 1e-9;

pub fn random_gaussian(rng: &mut impl Rng) -> GaussianState {
    let mu = rng.gen_range(MU_RANGE.0..=MU_RANGE.1);
    let sigma = rng.gen_range(SIGMA_RANGE.0..=SIGMA_RANGE.1);
    GaussianState::new(mu, sigma).expect("sampling ranges are valid")
}

/// Grid wide enough for every state [`random_gaussian`] can produce.
pub fn sampling_grid(n_points: usize) -> Result<Grid> {
    let span = 8.0 * SIGMA_RANGE.1;
    Grid::new(MU_RANGE.0 - span, MU_RANGE.1 + span, n_points)
}

/// Superposition of one to three random Gaussians with random complex
/// coefficients.
pub fn random_grid_state(rng: &mut impl Rng, grid: &Grid) -> Result<GridState> {
    loop {
        let k = rng.gen_range(1..=3);
        let mut parts = Vec::with_capacity(k);
        for _ in 0..k {
            let coef = Complex64::from_polar(
                rng.gen_range(0.1..1.0),
                rng.gen_range(0.0..std::f64::consts::TAU),
            );
            parts.push((coef, random_gaussian(rng).discretize(grid)?));
        }
        match superpose(&parts) {
            Ok(s) => return Ok(s),
            // near-total cancellation; draw again
            Err(crate::Error::ZeroVector) => continue,
            Err(e) => return Err(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MetricAxiom {
    NonNegativity,
    Identity,
    Symmetry,
    Triangle,
}

impl MetricAxiom {
    pub const ALL: [MetricAxiom; 4] = [
        MetricAxiom::NonNegativity,
        MetricAxiom::Identity,
        MetricAxiom::Symmetry,
        MetricAxiom::Triangle,
    ];

    pub fn label(self) -> &'static str {
        match self {
            MetricAxiom::NonNegativity => "non-negativity",
            MetricAxiom::Identity => "identity of indiscernibles",
            MetricAxiom::Symmetry => "symmetry",
            MetricAxiom::Triangle => "triangle inequality",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Deliberate breakage used to prove that the suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InjectedFault {
    /// Distance offset by a constant, so `d(a, a) != 0`.
    Identity,
    /// Fuzzy metric returning 1 at `t = 0`.
    Km1,
}

/// Runs the Hilbert metric axioms on `trials` random triples.
pub fn metric_axioms(
    trials: usize,
    seed: u64,
    fault: Option<InjectedFault>,
) -> Result<Vec<CheckLine>> {
    let grid = sampling_grid(2049)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offset = if fault == Some(InjectedFault::Identity) {
        1e-3
    } else {
        0.0
    };
    let dist = |a: &GridState, b: &GridState| a.distance(b).map(|d| d + offset);

    let mut failures: [Option<String>; 4] = Default::default();
    let mut note = |slot: usize, msg: String| {
        if failures[slot].is_none() {
            failures[slot] = Some(msg);
        }
    };
    for trial in 0..trials {
        let a = random_grid_state(&mut rng, &grid)?;
        let b = random_grid_state(&mut rng, &grid)?;
        let c = random_grid_state(&mut rng, &grid)?;
        let (ab, ba, bc, ac) = (dist(&a, &b)?, dist(&b, &a)?, dist(&b, &c)?, dist(&a, &c)?);
        let aa = dist(&a, &a)?;

        if [ab, bc, ac, aa].iter().any(|d| *d < 0.0) {
            note(0, format!("trial {trial}: negative distance"));
        }
        if aa > IDENTITY_TOL {
            note(1, format!("trial {trial}: d(a,a) = {aa:e}"));
        }
        if ab <= IDENTITY_TOL {
            note(
                1,
                format!("trial {trial}: distinct states at distance {ab:e}"),
            );
        }
        if (ab - ba).abs() > SYMMETRY_TOL {
            note(
                2,
                format!("trial {trial}: |d(a,b) - d(b,a)| = {:e}", (ab - ba).abs()),
            );
        }
        if ac > ab + bc + TRIANGLE_SLACK {
            note(3, format!("trial {trial}: d(a,c) = {ac} > {}", ab + bc));
        }
    }
    Ok(MetricAxiom::ALL
        .iter()
        .zip(failures)
        .map(|(axiom, failure)| CheckLine {
            label: format!("hilbert {}", axiom.label()),
            passed: failure.is_none(),
            detail: failure,
        })
        .collect())
}

/// T-norm axioms for every kind plus KM1–KM5 for the indicator metric under
/// the minimum t-norm.
pub fn fuzzy_axioms(
    trials: usize,
    seed: u64,
    fault: Option<InjectedFault>,
) -> Result<Vec<CheckLine>> {
    let mut lines = Vec::new();
    let triples = fuzzy::random_unit_triples(trials, seed);
    for t in TNorm::ALL {
        for (axiom, ok) in fuzzy::check_tnorm_axioms(t, &triples)? {
            lines.push(CheckLine {
                label: format!("t-norm {t:?} {axiom:?}").to_lowercase(),
                passed: ok,
                detail: None,
            });
        }
    }
    let tuples = fuzzy::random_km_tuples(trials.max(100), seed);
    let report = if fault == Some(InjectedFault::Km1) {
        fuzzy::check_km_axioms(&OneAtZero, TNorm::Minimum, &tuples)?
    } else {
        fuzzy::check_km_axioms(&IndicatorFuzzyMetric::default(), TNorm::Minimum, &tuples)?
    };
    lines.extend(report.outcomes.iter().map(|o| CheckLine {
        label: format!("fuzzy {}", o.axiom.label()),
        passed: o.passed,
        detail: o.counterexample.map(|c| {
            format!(
                "counterexample x={} y={} z={} t={} s={}",
                c.x, c.y, c.z, c.t, c.s
            )
        }),
    }));
    Ok(lines)
}

struct OneAtZero;

impl FuzzyMetric for OneAtZero {
    fn degree(&self, x: f64, y: f64, t: f64) -> Result<f64> {
        if t == 0.0 {
            Ok(1.0)
        } else {
            IndicatorFuzzyMetric::default().degree(x, y, t)
        }
    }
}

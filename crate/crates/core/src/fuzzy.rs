//! Fuzzy-metric baseline: t-norms, the indicator fuzzy metric built from a
//! classical metric, Kramosil–Michálek axiom checks and triangular
//! memberships.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::born::ClassificationResult;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TNorm {
    Minimum,
    Product,
    Lukasiewicz,
}

impl TNorm {
    pub const ALL: [TNorm; 3] = [TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz];

    pub fn apply(self, a: f64, b: f64) -> Result<f64> {
        for v in [a, b] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::DomainError(format!(
                    "t-norm argument {v} outside [0, 1]"
                )));
            }
        }
        Ok(self.apply_unchecked(a, b))
    }

    fn apply_unchecked(self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Minimum => a.min(b),
            TNorm::Product => a * b,
            TNorm::Lukasiewicz => {
                // lo - (1 - hi) keeps a * 1 = a exact and is symmetric
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                (lo - (1.0 - hi)).max(0.0)
            }
        }
    }
}

/// Fuzzy union; pointwise maximum.
pub fn union(a: f64, b: f64) -> f64 {
    a.max(b)
}

/// Degree to which the distance between two points is below `t`.
pub trait FuzzyMetric {
    fn degree(&self, x: f64, y: f64, t: f64) -> Result<f64>;
}

/// `M(x, y, t) = 1` if `d(x, y) < t`, else `0`.
#[derive(Debug, Clone, Copy)]
pub struct IndicatorFuzzyMetric<D = fn(f64, f64) -> f64> {
    base_metric: D,
}

fn absolute_difference(x: f64, y: f64) -> f64 {
    (x - y).abs()
}

impl Default for IndicatorFuzzyMetric {
    fn default() -> Self {
        Self {
            base_metric: absolute_difference,
        }
    }
}

impl<D: Fn(f64, f64) -> f64> IndicatorFuzzyMetric<D> {
    pub fn new(base_metric: D) -> Self {
        Self { base_metric }
    }

    pub fn base_distance(&self, x: f64, y: f64) -> f64 {
        (self.base_metric)(x, y)
    }
}

impl<D: Fn(f64, f64) -> f64> FuzzyMetric for IndicatorFuzzyMetric<D> {
    fn degree(&self, x: f64, y: f64, t: f64) -> Result<f64> {
        if t.is_nan() || t < 0.0 {
            return Err(Error::DomainError(format!(
                "tolerance t must be >= 0, got {t}"
            )));
        }
        Ok(if (self.base_metric)(x, y) < t {
            1.0
        } else {
            0.0
        })
    }
}

pub fn indicator_metric<D: Fn(f64, f64) -> f64>(
    m: &IndicatorFuzzyMetric<D>,
    x: f64,
    y: f64,
    t: f64,
) -> Result<f64> {
    m.degree(x, y, t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KmAxiom {
    /// `M(x, y, 0) = 0`
    Km1,
    /// `M(x, y, t) = 1` for all `t > 0` iff `x = y`
    Km2,
    /// symmetry
    Km3,
    /// `M(x, y, t) * M(y, z, s) <= M(x, z, t + s)`
    Km4,
    /// `M(x, y, .)` is a monotone step in `t`
    Km5,
}

impl KmAxiom {
    pub const ALL: [KmAxiom; 5] = [
        KmAxiom::Km1,
        KmAxiom::Km2,
        KmAxiom::Km3,
        KmAxiom::Km4,
        KmAxiom::Km5,
    ];

    pub fn label(self) -> &'static str {
        match self {
            KmAxiom::Km1 => "KM1 M(x,y,0)=0",
            KmAxiom::Km2 => "KM2 identity",
            KmAxiom::Km3 => "KM3 symmetry",
            KmAxiom::Km4 => "KM4 fuzzy triangle",
            KmAxiom::Km5 => "KM5 monotone step in t",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KmTuple {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
    pub s: f64,
}

/// Random `(x, y, z, t, s)` tuples. Every fifth tuple has `y = x` and every
/// seventh `z = y` so the identity branches are exercised.
pub fn random_km_tuples(n: usize, seed: u64) -> Vec<KmTuple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let x = rng.gen_range(-10.0..10.0);
            let mut y = rng.gen_range(-10.0..10.0);
            let mut z = rng.gen_range(-10.0..10.0);
            if i % 5 == 0 {
                y = x;
            }
            if i % 7 == 0 {
                z = y;
            }
            KmTuple {
                x,
                y,
                z,
                t: rng.gen_range(1e-6..25.0),
                s: rng.gen_range(1e-6..25.0),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomOutcome {
    pub axiom: KmAxiom,
    pub passed: bool,
    pub checked: usize,
    pub counterexample: Option<KmTuple>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn outcome(&self, axiom: KmAxiom) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.axiom == axiom)
    }
}

/// Evaluates KM1–KM5 on every tuple, recording the first counterexample.
///
/// KM2 is probed at `t`, `s`, `t + s` and a tiny positive tolerance; for
/// distinct points the tiny tolerance must give a degree below one. KM5 checks
/// that the degree is nondecreasing in `t` over a sweep.
pub fn check_km_axioms<M: FuzzyMetric>(
    m: &M,
    tnorm: TNorm,
    samples: &[KmTuple],
) -> Result<AxiomReport> {
    if samples.len() < 100 {
        return Err(Error::DomainError(format!(
            "need at least 100 sample tuples, got {}",
            samples.len()
        )));
    }
    let mut outcomes: Vec<AxiomOutcome> = KmAxiom::ALL
        .iter()
        .map(|&axiom| AxiomOutcome {
            axiom,
            passed: true,
            checked: 0,
            counterexample: None,
        })
        .collect();

    for tup in samples {
        let &KmTuple { x, y, z, t, s } = tup;
        let checks = [
            m.degree(x, y, 0.0)? == 0.0,
            km2_holds(m, x, y, [t, s, t + s])?,
            m.degree(x, y, t)? == m.degree(y, x, t)?,
            tnorm.apply(m.degree(x, y, t)?, m.degree(y, z, s)?)? <= m.degree(x, z, t + s)?,
            monotone_in_t(m, x, y, t + s)?,
        ];
        for (outcome, ok) in outcomes.iter_mut().zip(checks) {
            outcome.checked += 1;
            if !ok && outcome.passed {
                outcome.passed = false;
                outcome.counterexample = Some(*tup);
            }
        }
    }
    Ok(AxiomReport { outcomes })
}

fn km2_holds<M: FuzzyMetric>(m: &M, x: f64, y: f64, ts: [f64; 3]) -> Result<bool> {
    let mut all_one = true;
    for t in ts.into_iter().chain([f64::MIN_POSITIVE]) {
        all_one &= m.degree(x, y, t)? == 1.0;
    }
    Ok(all_one == (x == y))
}

fn monotone_in_t<M: FuzzyMetric>(m: &M, x: f64, y: f64, t_max: f64) -> Result<bool> {
    const STEPS: usize = 32;
    let mut prev = m.degree(x, y, 0.0)?;
    for k in 1..=STEPS {
        let cur = m.degree(x, y, t_max * k as f64 / STEPS as f64)?;
        if cur < prev || !(0.0..=1.0).contains(&cur) {
            return Ok(false);
        }
        prev = cur;
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TNormAxiom {
    Associativity,
    Commutativity,
    Monotonicity,
    Unit,
}

/// Checks the t-norm axioms on `(a, b, c)` triples in `[0, 1]`, each within
/// 1e-12.
pub fn check_tnorm_axioms(
    t: TNorm,
    triples: &[(f64, f64, f64)],
) -> Result<Vec<(TNormAxiom, bool)>> {
    let mut ok = [true; 4];
    for &(a, b, c) in triples {
        const TOL: f64 = 1e-12;
        let assoc = (t.apply(t.apply(a, b)?, c)? - t.apply(a, t.apply(b, c)?)?).abs() < TOL;
        let comm = (t.apply(a, b)? - t.apply(b, a)?).abs() < TOL;
        let (lo, hi) = if b <= c { (b, c) } else { (c, b) };
        let mono = t.apply(a, lo)? <= t.apply(a, hi)? + TOL;
        let unit = (t.apply(a, 1.0)? - a).abs() < TOL;
        for (slot, v) in ok.iter_mut().zip([assoc, comm, mono, unit]) {
            *slot &= v;
        }
    }
    Ok([
        TNormAxiom::Associativity,
        TNormAxiom::Commutativity,
        TNormAxiom::Monotonicity,
        TNormAxiom::Unit,
    ]
    .into_iter()
    .zip(ok)
    .collect())
}

pub fn random_unit_triples(n: usize, seed: u64) -> Vec<(f64, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| (rng.gen(), rng.gen(), rng.gen())).collect()
}

/// `max(0, 1 - |x - center| / half_width)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangularMembership {
    center: f64,
    half_width: f64,
}

impl TriangularMembership {
    pub fn new(center: f64, half_width: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::DomainError(format!(
                "center must be finite, got {center}"
            )));
        }
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::InvalidWidth(half_width));
        }
        Ok(Self { center, half_width })
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn degree(&self, x: f64) -> f64 {
        (1.0 - (x - self.center).abs() / self.half_width).max(0.0)
    }
}

pub fn membership(m: &TriangularMembership, x: f64) -> f64 {
    m.degree(x)
}

/// Membership degrees at `x`, normalized like Born scores so the two can be
/// tabulated side by side.
pub fn fuzzy_classify(
    memberships: &[(String, TriangularMembership)],
    x: f64,
) -> Result<ClassificationResult> {
    ClassificationResult::from_scores(
        memberships
            .iter()
            .map(|(name, m)| (name.clone(), m.degree(x)))
            .collect(),
    )
}

//! State types, inner products, the Hilbert-norm metric and the Gaussian
//! uncertainty product (hbar = 1).

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::numerics::{self, Rule};
use crate::{Error, Result};

/// Smallest width a Gaussian concept may have.
pub const MIN_SIGMA: f64 = 1e-8;

/// Half-span, in units of sigma, of the default grid around each state.
pub const DEFAULT_SPAN_SIGMAS: f64 = 8.0;

/// Half-span, in units of sigma, that a grid must cover before a Gaussian can
/// be sampled onto it.
pub const REQUIRED_SPAN_SIGMAS: f64 = 6.0;

pub const DEFAULT_GRID_POINTS: usize = 4097;

/// Exponents below this are reported as an exact zero overlap.
const UNDERFLOW_EXPONENT: f64 = -700.0;

/// Normalized Gaussian wavefunction
/// `psi(x) = (pi sigma^2)^(-1/4) exp(-(x - mu)^2 / (2 sigma^2))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianState {
    mu: f64,
    sigma: f64,
}

impl GaussianState {
    pub fn new(mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::DomainError(format!(
                "center must be finite, got {mu}"
            )));
        }
        if !sigma.is_finite() || sigma < MIN_SIGMA {
            return Err(Error::InvalidWidth(sigma));
        }
        Ok(Self { mu, sigma })
    }

    /// Builds the state whose probability density `|psi|^2` has standard
    /// deviation `density_std`, i.e. `sigma = sqrt(2) * density_std`.
    ///
    /// Under this parameterization the squared overlap takes the form
    /// `2 s_a s_b / (s_a^2 + s_b^2) * exp(-(mu_a - mu_b)^2 / (2 (s_a^2 + s_b^2)))`.
    pub fn from_density_std(mu: f64, density_std: f64) -> Result<Self> {
        Self::new(mu, SQRT_2 * density_std)
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Standard deviation of the position density `|psi|^2`.
    pub fn density_std(&self) -> f64 {
        self.sigma / SQRT_2
    }

    pub fn evaluate(&self, x: f64) -> Complex64 {
        let z = (x - self.mu) / self.sigma;
        let norm = (PI * self.sigma * self.sigma).powf(-0.25);
        Complex64::new(norm * (-0.5 * z * z).exp(), 0.0)
    }

    /// `<self|other>`; real and in `(0, 1]` for two Gaussians.
    pub fn overlap(&self, other: &GaussianState) -> f64 {
        let var_sum = self.sigma * self.sigma + other.sigma * other.sigma;
        let prefactor = (2.0 * self.sigma * other.sigma / var_sum).sqrt();
        let dmu = self.mu - other.mu;
        let exponent = -dmu * dmu / (2.0 * var_sum);
        if exponent < UNDERFLOW_EXPONENT {
            0.0
        } else {
            prefactor * exponent.exp()
        }
    }

    pub fn distance(&self, other: &GaussianState) -> f64 {
        (2.0 - 2.0 * self.overlap(other)).max(0.0).sqrt()
    }

    pub fn uncertainty(&self) -> UncertaintyReport {
        let delta_x = self.sigma / SQRT_2;
        let delta_p = 1.0 / (SQRT_2 * self.sigma);
        UncertaintyReport {
            delta_x,
            delta_p,
            product: delta_x * delta_p,
        }
    }

    /// Samples the wavefunction on `grid` and renormalizes.
    pub fn discretize(&self, grid: &Grid) -> Result<GridState> {
        let need_min = self.mu - REQUIRED_SPAN_SIGMAS * self.sigma;
        let need_max = self.mu + REQUIRED_SPAN_SIGMAS * self.sigma;
        if grid.x_min > need_min || grid.x_max < need_max {
            return Err(Error::GridTooNarrow {
                x_min: grid.x_min,
                x_max: grid.x_max,
                need_min,
                need_max,
            });
        }
        let amplitudes = grid.points().map(|x| self.evaluate(x)).collect();
        GridState::new(grid.clone(), amplitudes)
    }
}

/// Uniform grid with an odd number of nodes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    n_points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) || x_max <= x_min {
            return Err(Error::InvalidGrid(format!(
                "need finite x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if n_points < 3 || n_points.is_multiple_of(2) {
            return Err(Error::InvalidGrid(format!(
                "n_points must be odd and >= 3, got {n_points}"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            n_points,
        })
    }

    /// Union of `[mu - 8 sigma, mu + 8 sigma]` over `states`, with the
    /// default node count.
    pub fn covering<'a>(states: impl IntoIterator<Item = &'a GaussianState>) -> Result<Self> {
        let (lo, hi) =
            states
                .into_iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
                    (
                        lo.min(s.mu - DEFAULT_SPAN_SIGMAS * s.sigma),
                        hi.max(s.mu + DEFAULT_SPAN_SIGMAS * s.sigma),
                    )
                });
        if lo > hi {
            return Err(Error::InvalidGrid("no states to cover".into()));
        }
        Self::new(lo, hi, DEFAULT_GRID_POINTS)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx()
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let dx = self.dx();
        (0..self.n_points).map(move |i| self.x_min + i as f64 * dx)
    }

    /// Simpson quadrature of samples taken on this grid.
    pub fn integrate(&self, samples: &[Complex64]) -> Result<Complex64> {
        numerics::integrate(samples, self.dx(), Rule::Simpson)
    }

    pub fn integrate_real(&self, samples: &[f64]) -> Result<f64> {
        numerics::integrate(samples, self.dx(), Rule::Simpson)
    }
}

/// Complex wavefunction sampled on a uniform grid, normalized under Simpson
/// quadrature.
#[derive(Debug, Clone, PartialEq)]
pub struct GridState {
    grid: Grid,
    amplitudes: Vec<Complex64>,
}

impl GridState {
    /// Normalizes `amplitudes` so that the quadrature of `|psi|^2` is 1.
    pub fn new(grid: Grid, amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() != grid.n_points {
            return Err(Error::LengthMismatch {
                expected: grid.n_points,
                got: amplitudes.len(),
            });
        }
        if amplitudes.iter().any(|a| !a.is_finite()) {
            return Err(Error::DomainError("amplitudes must be finite".into()));
        }
        let norm_sq = norm_sq(&grid, &amplitudes)?;
        if norm_sq.sqrt() <= 1e-12 {
            return Err(Error::ZeroVector);
        }
        let scale = 1.0 / norm_sq.sqrt();
        let amplitudes = amplitudes.into_iter().map(|a| a * scale).collect();
        Ok(Self { grid, amplitudes })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn densities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm_sq(&self) -> f64 {
        // the grid was validated at construction
        norm_sq(&self.grid, &self.amplitudes).unwrap_or(f64::NAN)
    }

    /// Multiplies every amplitude by `e^{i phase}`.
    pub fn with_global_phase(&self, phase: f64) -> Self {
        let factor = Complex64::from_polar(1.0, phase);
        Self {
            grid: self.grid.clone(),
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
        }
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &GridState) -> Result<Complex64> {
        self.same_grid(other)?;
        let integrand: Vec<Complex64> = self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .collect();
        self.grid.integrate(&integrand)
    }

    /// `||self - other||`.
    pub fn distance(&self, other: &GridState) -> Result<f64> {
        self.distance_rotated(other, Complex64::new(1.0, 0.0))
    }

    /// `min_phi ||self - e^{i phi} other||`, i.e. `sqrt(2 - 2 |<self|other>|)`.
    pub fn phase_invariant_distance(&self, other: &GridState) -> Result<f64> {
        let ov = other.inner(self)?;
        let n = ov.norm();
        let rotation = if n > 0.0 {
            ov / n
        } else {
            Complex64::new(1.0, 0.0)
        };
        self.distance_rotated(other, rotation)
    }

    fn distance_rotated(&self, other: &GridState, rotation: Complex64) -> Result<f64> {
        self.same_grid(other)?;
        let diff: Vec<f64> = self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b * rotation).norm_sqr())
            .collect();
        Ok(self.grid.integrate_real(&diff)?.max(0.0).sqrt())
    }

    /// Position and momentum spreads from grid moments; momentum uses a
    /// finite-difference derivative.
    pub fn uncertainty(&self) -> Result<UncertaintyReport> {
        let g = &self.grid;
        let dens = self.densities();
        let xs: Vec<f64> = g.points().collect();
        let weighted =
            |k: i32| -> Vec<f64> { dens.iter().zip(&xs).map(|(d, x)| d * x.powi(k)).collect() };
        let mean_x = g.integrate_real(&weighted(1))?;
        let mean_x2 = g.integrate_real(&weighted(2))?;
        let deriv = numerics::central_derivative(&self.amplitudes, g.dx())?;
        let psi_dpsi: Vec<Complex64> = self
            .amplitudes
            .iter()
            .zip(&deriv)
            .map(|(a, d)| a.conj() * d)
            .collect();
        // <p> = -i <psi|psi'>, real for a normalized state
        let mean_p = g.integrate(&psi_dpsi)?.im;
        let dpsi_sq: Vec<f64> = deriv.iter().map(|d| d.norm_sqr()).collect();
        let mean_p2 = g.integrate_real(&dpsi_sq)?;
        let delta_x = (mean_x2 - mean_x * mean_x).max(0.0).sqrt();
        let delta_p = (mean_p2 - mean_p * mean_p).max(0.0).sqrt();
        Ok(UncertaintyReport {
            delta_x,
            delta_p,
            product: delta_x * delta_p,
        })
    }

    fn same_grid(&self, other: &GridState) -> Result<()> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }
}

fn norm_sq(grid: &Grid, amplitudes: &[Complex64]) -> Result<f64> {
    let dens: Vec<f64> = amplitudes.iter().map(|a| a.norm_sqr()).collect();
    grid.integrate_real(&dens)
}

/// Spreads in position and momentum, in units with hbar = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyReport {
    pub delta_x: f64,
    pub delta_p: f64,
    pub product: f64,
}

/// A state in either representation.
#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Gaussian(GaussianState),
    Grid(GridState),
}

impl From<GaussianState> for State {
    fn from(s: GaussianState) -> Self {
        State::Gaussian(s)
    }
}

impl From<GridState> for State {
    fn from(s: GridState) -> Self {
        State::Grid(s)
    }
}

impl State {
    /// Grid form of this state on `grid`; Gaussians are discretized.
    pub fn on_grid(&self, grid: &Grid) -> Result<GridState> {
        match self {
            State::Gaussian(g) => g.discretize(grid),
            State::Grid(g) if g.grid() == grid => Ok(g.clone()),
            State::Grid(_) => Err(Error::GridMismatch),
        }
    }

    fn grid_pair(a: &State, b: &State) -> Result<(GridState, GridState)> {
        let grid = match (a, b) {
            (State::Grid(g), _) | (_, State::Grid(g)) => g.grid().clone(),
            (State::Gaussian(x), State::Gaussian(y)) => Grid::covering([x, y])?,
        };
        Ok((a.on_grid(&grid)?, b.on_grid(&grid)?))
    }
}

/// `<a|b>`: closed form for two Gaussians, quadrature otherwise.
pub fn inner_product(a: &State, b: &State) -> Result<Complex64> {
    match (a, b) {
        (State::Gaussian(x), State::Gaussian(y)) => Ok(Complex64::new(x.overlap(y), 0.0)),
        _ => {
            let (x, y) = State::grid_pair(a, b)?;
            x.inner(&y)
        }
    }
}

/// `||a - b||` (not invariant under a global phase).
pub fn hilbert_distance(a: &State, b: &State) -> Result<f64> {
    match (a, b) {
        (State::Gaussian(x), State::Gaussian(y)) => Ok(x.distance(y)),
        _ => {
            let (x, y) = State::grid_pair(a, b)?;
            x.distance(&y)
        }
    }
}

/// `sqrt(2 - 2 |<a|b>|)`; zero iff the states agree up to a global phase.
pub fn phase_invariant_distance(a: &State, b: &State) -> Result<f64> {
    match (a, b) {
        // Gaussian overlaps are real and nonnegative
        (State::Gaussian(x), State::Gaussian(y)) => Ok(x.distance(y)),
        _ => {
            let (x, y) = State::grid_pair(a, b)?;
            x.phase_invariant_distance(&y)
        }
    }
}

//! WebAssembly bindings for the browser demo in `www/`.
//!
//! The page drives three operations on a two-concept scene: density curves,
//! Born-rule classification of the object, and an interference phase sweep.
//! [`Scene`] holds the plain-Rust logic; [`Demo`] wraps it for JavaScript.

use hilbert_concepts::born::{classify, interference_demo, Concept};
use hilbert_concepts::{GaussianState, Grid, Result, State};
use wasm_bindgen::prelude::*;

#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    a: GaussianState,
    b: GaussianState,
    object: GaussianState,
}

/// Flat curve data: `n` abscissae followed by `n` densities each for `a`,
/// `b` and the object.
#[derive(Debug, Clone, PartialEq)]
pub struct Curves {
    pub n: usize,
    pub values: Vec<f64>,
}

impl Scene {
    pub fn new(a: GaussianState, b: GaussianState, object: GaussianState) -> Self {
        Self { a, b, object }
    }

    fn span(&self, n_points: usize) -> Result<Grid> {
        let full = Grid::covering([&self.a, &self.b, &self.object])?;
        Grid::new(full.x_min(), full.x_max(), n_points)
    }

    pub fn curves(&self, n_points: usize) -> Result<Curves> {
        let grid = self.span(n_points)?;
        let mut values: Vec<f64> = grid.points().collect();
        for s in [&self.a, &self.b, &self.object] {
            values.extend(grid.points().map(|x| s.evaluate(x).norm_sqr()));
        }
        Ok(Curves {
            n: grid.n_points(),
            values,
        })
    }

    /// `[raw_a, raw_b, p_a, p_b]`.
    pub fn classify(&self) -> Result<[f64; 4]> {
        let registry = [Concept::new("a", self.a)?, Concept::new("b", self.b)?];
        let r = classify(&registry, &State::Gaussian(self.object))?;
        let (a, b) = (r.entry("a").unwrap(), r.entry("b").unwrap());
        Ok([a.raw_score, b.raw_score, a.probability, b.probability])
    }

    /// Score of the object against `a + e^{i phase} b` at `steps` phases
    /// evenly spaced over `[0, 2 pi]`.
    pub fn phase_sweep(&self, steps: usize) -> Result<Vec<f64>> {
        let grid = Grid::covering([&self.a, &self.b, &self.object])?;
        let a = self.a.discretize(&grid)?;
        let b = self.b.discretize(&grid)?;
        let object = State::Gaussian(self.object);
        let denom = steps.saturating_sub(1).max(1) as f64;
        (0..steps)
            .map(|k| {
                let phase = std::f64::consts::TAU * k as f64 / denom;
                Ok(interference_demo(&object, &a, &b, phase)?.dephased)
            })
            .collect()
    }
}

#[wasm_bindgen]
pub struct Demo {
    scene: Scene,
}

#[wasm_bindgen]
impl Demo {
    #[wasm_bindgen(constructor)]
    pub fn new(
        a_mu: f64,
        a_sigma: f64,
        b_mu: f64,
        b_sigma: f64,
        object_mu: f64,
        object_sigma: f64,
    ) -> std::result::Result<Demo, JsError> {
        Ok(Demo {
            scene: Scene::new(
                GaussianState::new(a_mu, a_sigma)?,
                GaussianState::new(b_mu, b_sigma)?,
                GaussianState::new(object_mu, object_sigma)?,
            ),
        })
    }

    /// See [`Curves`]; `n_points` must be odd and at least 3.
    pub fn curves(&self, n_points: usize) -> std::result::Result<Vec<f64>, JsError> {
        Ok(self.scene.curves(n_points)?.values)
    }

    pub fn classify(&self) -> std::result::Result<Vec<f64>, JsError> {
        Ok(self.scene.classify()?.to_vec())
    }

    #[wasm_bindgen(js_name = phaseSweep)]
    pub fn phase_sweep(&self, steps: usize) -> std::result::Result<Vec<f64>, JsError> {
        Ok(self.scene.phase_sweep(steps)?)
    }
}

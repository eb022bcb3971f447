//! Separable product states over several feature axes, Gram matrices of
//! squared overlaps and their relation to the Gaussian RBF kernel.

use std::collections::HashSet;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::hilbert::GaussianState;
use crate::{Error, Result};

/// Tensor product of one Gaussian per feature axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductState {
    factors: Vec<GaussianState>,
}

impl ProductState {
    pub fn new(factors: Vec<GaussianState>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::DimensionMismatch(0, 1));
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[GaussianState] {
        &self.factors
    }

    pub fn dims(&self) -> usize {
        self.factors.len()
    }

    /// Product of the per-axis wavefunctions at `point`.
    pub fn evaluate(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.dims() {
            return Err(Error::DimensionMismatch(point.len(), self.dims()));
        }
        Ok(self
            .factors
            .iter()
            .zip(point)
            .map(|(f, &x)| f.evaluate(x).re)
            .product())
    }
}

/// `|<a|b>|^2` for product states: the product of per-axis squared overlaps.
pub fn product_overlap(a: &ProductState, b: &ProductState) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch(a.dims(), b.dims()));
    }
    Ok(a.factors
        .iter()
        .zip(&b.factors)
        .map(|(x, y)| x.overlap(y).powi(2))
        .product())
}

/// `exp(-(x - mu_c)^2 / (2 sigma_c^2))`.
pub fn rbf_kernel(x: f64, center: &GaussianState) -> f64 {
    let z = (x - center.mu()) / center.sigma();
    (-0.5 * z * z).exp()
}

/// Squared-overlap Gram matrix of a labelled state set.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelMatrix {
    labels: Vec<String>,
    entries: DMatrix<f64>,
}

impl KernelMatrix {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }

    pub fn entry(&self, row: &str, col: &str) -> Option<f64> {
        let i = self.labels.iter().position(|l| l == row)?;
        let j = self.labels.iter().position(|l| l == col)?;
        Some(self.entries[(i, j)])
    }

    pub fn rows(&self) -> impl Iterator<Item = (&str, Vec<f64>)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), self.entries.row(i).iter().copied().collect()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries == self.entries.transpose()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        SymmetricEigen::new(self.entries.clone())
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    pub fn is_positive_semidefinite(&self, tolerance: f64) -> bool {
        self.min_eigenvalue() >= -tolerance
    }
}

pub fn kernel_matrix(states: &[(String, GaussianState)]) -> Result<KernelMatrix> {
    if states.is_empty() {
        return Err(Error::EmptyRegistry);
    }
    let mut seen = HashSet::new();
    for (name, _) in states {
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::DuplicateName(name.clone()));
        }
    }
    let n = states.len();
    let mut entries = DMatrix::zeros(n, n);
    for i in 0..n {
        entries[(i, i)] = states[i].1.overlap(&states[i].1).powi(2);
        for j in 0..i {
            let v = states[i].1.overlap(&states[j].1).powi(2);
            entries[(i, j)] = v;
            entries[(j, i)] = v;
        }
    }
    Ok(KernelMatrix {
        labels: states.iter().map(|(n, _)| n.clone()).collect(),
        entries,
    })
}

/// Squared overlap split into a width prefactor times an RBF kernel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RbfDecomposition {
    pub overlap_sq: f64,
    pub prefactor: f64,
    pub rbf_form: f64,
    /// Kernel width: `sqrt((sigma_a^2 + sigma_b^2) / 2)`.
    pub bandwidth: f64,
}

impl RbfDecomposition {
    pub fn residual(&self) -> f64 {
        (self.overlap_sq - self.prefactor * self.rbf_form).abs()
    }
}

/// `|<a|b>|^2 = 2 s_a s_b / (s_a^2 + s_b^2) * k(mu_a; mu_b, bandwidth)` with
/// `bandwidth^2 = (s_a^2 + s_b^2) / 2`. For equal widths the prefactor is 1
/// and the squared overlap is exactly the RBF kernel at the common width.
pub fn overlap_equals_rbf_check(a: &GaussianState, b: &GaussianState) -> Result<RbfDecomposition> {
    let var_sum = a.sigma() * a.sigma() + b.sigma() * b.sigma();
    let prefactor = 2.0 * a.sigma() * b.sigma() / var_sum;
    let bandwidth = (0.5 * var_sum).sqrt();
    let rbf_form = rbf_kernel(a.mu(), &GaussianState::new(b.mu(), bandwidth)?);
    let out = RbfDecomposition {
        overlap_sq: a.overlap(b).powi(2),
        prefactor,
        rbf_form,
        bandwidth,
    };
    if out.residual() > 1e-12 {
        return Err(Error::DomainError(format!(
            "overlap/RBF decomposition residual {} exceeds 1e-12",
            out.residual()
        )));
    }
    Ok(out)
}

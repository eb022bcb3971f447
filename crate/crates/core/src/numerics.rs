//! Uniform-grid quadrature and finite-difference derivatives.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    Simpson,
    Trapezoid,
}

/// Value of an integral together with the rule that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub rule: Rule,
}

/// Composite quadrature of uniformly spaced samples.
///
/// Simpson requires an odd sample count so that the panels pair up.
pub fn integrate<T>(samples: &[T], dx: f64, rule: Rule) -> Result<T>
where
    T: Copy + Zero + Add<Output = T> + Mul<f64, Output = T>,
{
    check_spacing(dx)?;
    let n = samples.len();
    match rule {
        Rule::Simpson => {
            if n < 3 || n.is_multiple_of(2) {
                return Err(Error::BadSampleCount(n));
            }
            let mut odd = T::zero();
            let mut even = T::zero();
            for (i, &s) in samples[1..n - 1].iter().enumerate() {
                if i % 2 == 0 {
                    odd = odd + s;
                } else {
                    even = even + s;
                }
            }
            let total = samples[0] + samples[n - 1] + odd * 4.0 + even * 2.0;
            Ok(total * (dx / 3.0))
        }
        Rule::Trapezoid => {
            if n < 2 {
                return Err(Error::BadSampleCount(n));
            }
            let inner = samples[1..n - 1].iter().fold(T::zero(), |acc, &s| acc + s);
            Ok((inner + (samples[0] + samples[n - 1]) * 0.5) * dx)
        }
    }
}

/// Simpson when the sample count allows it, trapezoid otherwise.
pub fn integrate_auto(samples: &[Complex64], dx: f64) -> Result<QuadratureResult> {
    let rule = if samples.len() >= 3 && samples.len() % 2 == 1 {
        Rule::Simpson
    } else {
        Rule::Trapezoid
    };
    let value = integrate(samples, dx, rule)?;
    Ok(QuadratureResult { value, rule })
}

/// Second-order central differences, with second-order one-sided stencils at
/// both ends. Output has the same length as the input.
pub fn central_derivative<T>(samples: &[T], dx: f64) -> Result<Vec<T>>
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<f64, Output = T>,
{
    check_spacing(dx)?;
    let n = samples.len();
    if n < 3 {
        return Err(Error::BadSampleCount(n));
    }
    let h = 1.0 / (2.0 * dx);
    let f = samples;
    let mut out = Vec::with_capacity(n);
    out.push((f[1] * 4.0 - f[0] * 3.0 - f[2]) * h);
    out.extend(f.windows(3).map(|w| (w[2] - w[0]) * h));
    out.push((f[n - 1] * 3.0 - f[n - 2] * 4.0 + f[n - 3]) * h);
    Ok(out)
}

fn check_spacing(dx: f64) -> Result<()> {
    if dx.is_finite() && dx > 0.0 {
        Ok(())
    } else {
        Err(Error::DomainError(format!(
            "grid spacing must be positive, got {dx}"
        )))
    }
}

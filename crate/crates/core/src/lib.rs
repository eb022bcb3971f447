//! Concepts as normalized wavefunctions on a one-dimensional feature axis.
//!
//! Distances come from the Hilbert norm, classification from Born-rule
//! overlaps, and a fuzzy-metric baseline (t-norms, the indicator fuzzy
//! metric, triangular memberships) is kept alongside for comparison.
//!
//! ```
//! use hilbert_concepts::{born, GaussianState, State};
//!
//! let car = born::Concept::gaussian("car", 5.0, 1.0).unwrap();
//! let boat = born::Concept::gaussian("boat", 1.0, 1.0).unwrap();
//! let object = State::Gaussian(GaussianState::new(3.0, 2.0).unwrap());
//!
//! let result = born::classify(&[car, boat], &object).unwrap();
//! assert!((result.probability("car").unwrap() - 0.5).abs() < 1e-12);
//! assert!(result.decision.is_tie());
//! ```

pub mod born;
pub mod composition;
mod error;
pub mod fuzzy;
pub mod hilbert;
pub mod numerics;
pub mod suite;

pub use error::{Error, Result};
pub use hilbert::{GaussianState, Grid, GridState, State, UncertaintyReport};
pub use num_complex::Complex64;

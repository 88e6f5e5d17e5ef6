//! Persistence probabilities of Gaussian auto-regressive processes.
//!
//! The crate is organized around the pipeline
//! `polynomial -> zeros -> decay regime -> estimate / predicted exponent`:
//!
//! * [`polyalg`] — polynomials, root finding with multiplicities, companion
//!   matrices and Jordan-power evaluation.
//! * [`arproc`] — AR path simulation, impulse responses, modal decompositions,
//!   rotated-component recursions and Gaussian conditioning.
//! * [`regime`] — the five-way decay classifier with closed-form exponents.
//! * [`persist`] — naive Monte Carlo, multilevel splitting, a small-horizon
//!   exact orthant oracle, and exponent regression.
//! * [`cone`] — the AR3 reduction to Brownian motion in a generalized cone:
//!   the spherical domain, its principal Dirichlet eigenvalue, and the
//!   discontinuity sweep over zero angles.
//!
//! Monte Carlo loops run on rayon when the default `parallel` feature is
//! enabled and fall back to sequential execution otherwise; results are
//! byte-identical either way because every path index maps to its own
//! deterministic noise stream.

pub mod arproc;
pub mod cone;
pub mod error;
pub mod exec;
pub mod persist;
pub mod polyalg;
pub mod regime;
pub mod rng;

pub use error::{Error, Result};
pub use polyalg::{GeneratingPolynomial, SpectralSummary, ZeroSet};
pub use regime::{Regime, RegimeClass};

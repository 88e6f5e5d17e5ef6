//! Grid lower bounds for low-degree polynomials.
//!
//! A polynomial `g(x) = c_1 + c_2 x + ... + c_m x^{m-1}` cannot be small on
//! the whole grid `{1/L, ..., 1}` when `L >= m`: inverting the Vandermonde
//! system on the first `m` grid points recovers each coefficient as a
//! combination of at most `m` grid values, so some grid point must satisfy
//! `|g(y)| >= max_j |c_j| / (L M)` where `M` bounds the inverse-Vandermonde
//! entries. `grid_witness` returns that point together with the certified
//! constant.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A grid point where the polynomial is provably not small.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridWitness {
    /// Grid point `y = k/L` maximizing `|g|`.
    pub y: f64,
    /// `g(y)`.
    pub value: f64,
    /// Certified lower bound `max_j |c_j| / (L M)` with `M` the largest
    /// entry (in absolute value) of the inverse Vandermonde on the first
    /// `m` grid points.
    pub bound: f64,
}

fn eval_ascending(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Finds `y in {1/L, ..., 1}` with `|g(y)| >= max_j |c_j| / (L M)`.
///
/// `coeffs` are ascending (`c_1..c_m`); requires `L >= m >= 1`.
pub fn grid_witness(coeffs: &[f64], l: usize) -> Result<GridWitness> {
    let m = coeffs.len();
    if m == 0 {
        return Err(Error::Precondition("polynomial must be non-empty".into()));
    }
    if l < m {
        return Err(Error::Precondition(format!(
            "grid size L = {l} must be >= number of coefficients m = {m}"
        )));
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Precondition("coefficients must be finite".into()));
    }

    // Inverse Vandermonde on the first m grid points gives M, hence C = 1/(L M).
    let v = DMatrix::from_fn(m, m, |j, k| ((k + 1) as f64 / l as f64).powi(j as i32));
    let inv = v
        .try_inverse()
        .ok_or_else(|| Error::Numeric("grid Vandermonde is singular".into()))?;
    let m_const = inv.iter().map(|a| a.abs()).fold(0.0f64, f64::max);
    let cmax = coeffs.iter().map(|c| c.abs()).fold(0.0f64, f64::max);
    let bound = cmax / (l as f64 * m_const);

    let (mut best_y, mut best_v) = (1.0 / l as f64, f64::NEG_INFINITY);
    for k in 1..=l {
        let y = k as f64 / l as f64;
        let g = eval_ascending(coeffs, y);
        if g.abs() > best_v.abs() || best_v == f64::NEG_INFINITY {
            best_y = y;
            best_v = g;
        }
    }
    debug_assert!(best_v.abs() >= bound * (1.0 - 1e-9));
    Ok(GridWitness {
        y: best_y,
        value: best_v,
        bound,
    })
}

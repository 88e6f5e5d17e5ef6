//! Non-negative polynomial multipliers.
//!
//! A quadratic `z^2 + b z + c` with complex roots admits a finite series
//! `b_0 + b_1 z + ... + b_{n0} z^{n0}` with positive coefficients whose
//! product with the quadratic has non-negative coefficients: iterate
//! `b_0 = 1`, `b_1 = -b/c`, `b_k = -(b b_{k-1} + b_{k-2})/c` and truncate
//! just before the first non-positive term. Since the iterates are
//! `2 Re(a lambda^k)` for a non-real `lambda`, the sign change arrives in
//! finitely many steps. Multiplying the truncations for every complex-pair
//! factor handles any polynomial without positive zeros.

use crate::error::{Error, Result};

use super::ZeroSet;

const STEP_CAP: usize = 1_000_000;

/// Multiplier for `z^2 + b z + c`, requiring `b^2 - 4c < 0`. Coefficients
/// are returned in ascending order and are all strictly positive.
pub fn nonneg_multiplier_quadratic(b: f64, c: f64) -> Result<Vec<f64>> {
    if !(b.is_finite() && c.is_finite()) {
        return Err(Error::Precondition("coefficients must be finite".into()));
    }
    if b * b - 4.0 * c >= 0.0 {
        return Err(Error::Precondition(
            "quadratic must have complex roots (b^2 - 4c < 0)".into(),
        ));
    }
    let mut coeffs = vec![1.0];
    let mut prev = 1.0f64; // b_{k-2}
    let mut cur = -b / c; // b_{k-1}
    for _ in 0..STEP_CAP {
        if cur <= 0.0 {
            return Ok(coeffs);
        }
        coeffs.push(cur);
        let next = -(b * cur + prev) / c;
        prev = cur;
        cur = next;
        if !cur.is_finite() {
            return Err(Error::Numeric(
                "multiplier recursion overflowed".into(),
            ));
        }
    }
    Err(Error::NoConvergence {
        iterations: STEP_CAP,
        residual: cur,
    })
}

/// Polynomial product, ascending coefficients.
pub fn convolve(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Multiplier `P` such that `Q P` has non-negative coefficients, built as
/// the product of quadratic multipliers over the complex-pair factors of
/// `Q`. Requires `Q` to have no positive real zero; negative real factors
/// `(z + a)` already have non-negative coefficients and contribute nothing.
pub fn nonneg_multiplier(zeros: &ZeroSet) -> Result<Vec<f64>> {
    let mut p = vec![1.0];
    for e in zeros.entries() {
        if e.root.im == 0.0 {
            if e.root.re > 0.0 {
                return Err(Error::Precondition(
                    "polynomial has a positive zero; no non-negative multiplier exists".into(),
                ));
            }
            continue;
        }
        if e.root.im < 0.0 {
            continue; // handled with its conjugate
        }
        let b = -2.0 * e.root.re;
        let c = e.root.norm_sqr();
        let q = nonneg_multiplier_quadratic(b, c)?;
        for _ in 0..e.mult {
            p = convolve(&p, &q);
        }
    }
    Ok(p)
}

//! Principal Dirichlet eigenvalue of the spherical Laplacian on a masked
//! domain.
//!
//! Finite-volume discretization on the cell-centered latitude-longitude
//! grid: the flux through a polar face at angle `psi` carries the factor
//! `sin psi`, which vanishes at the poles, so no pole condition is needed.
//! The Dirichlet boundary runs along cell faces: a face shared with an
//! outside cell contributes a doubled diagonal term (ghost value chosen so
//! the solution vanishes at the face, half a cell away). The discrete
//! problem is `A u = lambda M u` with `M = diag(sin psi_i dpsi daz)`;
//! symmetrizing by `M^{1/2}` gives an SPD operator whose smallest
//! eigenvalue is found by inverse power iteration with conjugate-gradient
//! inner solves.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;

use super::SphericalDomain;

/// Principal eigenvalue with the derived persistence power.
#[derive(Debug, Clone, Serialize)]
pub struct EigenResult {
    pub lambda: f64,
    /// `sqrt(lambda + 1/4) / 2`.
    pub beta: f64,
    pub n_polar: usize,
    pub n_azimuth: usize,
    /// `||B u - lambda u|| / ||u||` of the returned pair.
    pub residual: f64,
    pub iterations: usize,
}

const RAYLEIGH_TOL: f64 = 1e-8;
const MAX_POWER_ITERS: usize = 10_000;
const CG_TOL: f64 = 1e-10;
const CG_MAX_ITERS: usize = 100_000;

struct Operator {
    /// Diagonal of the symmetrized operator `B = M^{-1/2} A M^{-1/2}`.
    diag: Vec<f64>,
    /// CSR off-diagonal part of `B`.
    row_start: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<f64>,
}

impl Operator {
    fn dim(&self) -> usize {
        self.diag.len()
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        exec::map_collect(self.dim(), |r| {
            let mut acc = self.diag[r] * x[r];
            for k in self.row_start[r]..self.row_start[r + 1] {
                acc += self.vals[k] * x[self.cols[k] as usize];
            }
            acc
        })
    }
}

fn assemble(domain: &SphericalDomain) -> Operator {
    let (np, na) = (domain.n_polar, domain.n_azimuth);
    let dpsi = std::f64::consts::PI / np as f64;
    let daz = 2.0 * std::f64::consts::PI / na as f64;

    let mut index = vec![usize::MAX; np * na];
    let mut cells = Vec::new();
    for i in 0..np {
        for j in 0..na {
            if domain.inside(i, j) {
                index[i * na + j] = cells.len();
                cells.push((i, j));
            }
        }
    }

    // Mass (cell area) and face coefficients.
    let sin_center = |i: usize| ((i as f64 + 0.5) * dpsi).sin();
    let mass = |i: usize| sin_center(i) * dpsi * daz;
    let coef_polar_face = |face: usize| (face as f64 * dpsi).sin() * daz / dpsi;
    let coef_az = |i: usize| dpsi / (sin_center(i) * daz);

    let inv_sqrt_m: Vec<f64> = cells.iter().map(|&(i, _)| 1.0 / mass(i).sqrt()).collect();

    let mut diag = vec![0.0f64; cells.len()];
    let mut row_start = Vec::with_capacity(cells.len() + 1);
    let mut cols = Vec::new();
    let mut vals = Vec::new();
    for (r, &(i, j)) in cells.iter().enumerate() {
        row_start.push(cols.len());
        let mut push = |c: f64, ni: usize, nj: usize, diag_r: &mut f64| {
            if c == 0.0 {
                return;
            }
            let n = index[ni * na + nj];
            if n == usize::MAX {
                // Dirichlet face half a cell away: doubled coefficient.
                *diag_r += 2.0 * c;
            } else {
                *diag_r += c;
                cols.push(n as u32);
                vals.push(-c * inv_sqrt_m[r] * inv_sqrt_m[n]);
            }
        };
        let mut d = 0.0;
        if i > 0 {
            push(coef_polar_face(i), i - 1, j, &mut d);
        }
        if i + 1 < np {
            push(coef_polar_face(i + 1), i + 1, j, &mut d);
        }
        let ca = coef_az(i);
        push(ca, i, (j + na - 1) % na, &mut d);
        push(ca, i, (j + 1) % na, &mut d);
        diag[r] = d * inv_sqrt_m[r] * inv_sqrt_m[r];
    }
    row_start.push(cols.len());
    Operator {
        diag,
        row_start,
        cols,
        vals,
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Conjugate gradients for `B z = rhs`, warm-started from `z0`.
fn cg(op: &Operator, rhs: &[f64], z0: &[f64]) -> Result<Vec<f64>> {
    let mut z = z0.to_vec();
    let bz = op.apply(&z);
    let mut r: Vec<f64> = rhs.iter().zip(&bz).map(|(b, v)| b - v).collect();
    let mut p = r.clone();
    let mut rr = dot(&r, &r);
    let target = (CG_TOL * norm(rhs)).powi(2);
    for _ in 0..CG_MAX_ITERS {
        if rr <= target {
            return Ok(z);
        }
        let bp = op.apply(&p);
        let alpha = rr / dot(&p, &bp);
        for k in 0..z.len() {
            z[k] += alpha * p[k];
            r[k] -= alpha * bp[k];
        }
        let rr_new = dot(&r, &r);
        let beta = rr_new / rr;
        rr = rr_new;
        for k in 0..p.len() {
            p[k] = r[k] + beta * p[k];
        }
    }
    Err(Error::NoConvergence {
        iterations: CG_MAX_ITERS,
        residual: rr.sqrt(),
    })
}

/// Smallest eigenvalue of the Dirichlet Laplace-Beltrami operator on the
/// masked domain, by inverse power iteration (Rayleigh tolerance 1e-8).
pub fn principal_eigenvalue(domain: &SphericalDomain) -> Result<EigenResult> {
    let op = assemble(domain);
    let n = op.dim();
    if n == 0 {
        return Err(Error::Precondition("empty domain".into()));
    }
    // Positive start vector: overlaps the (sign-definite) ground state.
    let mut y = vec![1.0 / (n as f64).sqrt(); n];
    let mut z_guess = y.clone();
    let mut lambda = f64::INFINITY;
    for it in 1..=MAX_POWER_ITERS {
        let z = cg(&op, &y, &z_guess)?;
        let zn = norm(&z);
        if !zn.is_finite() || zn == 0.0 {
            return Err(Error::Numeric("inverse iteration collapsed".into()));
        }
        // B z = y, so the Rayleigh quotient of y_new = z/|z| is
        // (z . y) / |z|^2 up to the CG tolerance.
        let lambda_new = dot(&z, &y) / (zn * zn);
        let y_new: Vec<f64> = z.iter().map(|v| v / zn).collect();
        let done = (lambda_new - lambda).abs() <= RAYLEIGH_TOL * lambda_new.abs().max(1.0);
        y = y_new;
        z_guess = z.iter().map(|v| v / (zn * lambda_new.max(1e-300))).collect();
        lambda = lambda_new;
        if done {
            let by = op.apply(&y);
            let residual = by
                .iter()
                .zip(&y)
                .map(|(b, v)| (b - lambda * v).powi(2))
                .sum::<f64>()
                .sqrt();
            return Ok(EigenResult {
                lambda,
                beta: (lambda + 0.25).sqrt() / 2.0,
                n_polar: domain.n_polar,
                n_azimuth: domain.n_azimuth,
                residual,
                iterations: it,
            });
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_POWER_ITERS,
        residual: lambda,
    })
}

//! The AR3 reduction to Brownian motion in a generalized cone.
//!
//! For zeros `{1, e^{i theta}, e^{-i theta}}` the path decomposes into a
//! random-walk mode with weight `c0` and one rotating mode with weight `c1`
//! and a phase, via the impulse response `h_n = c0 + c1 cos(n theta +
//! phase)`. Scaling limits turn persistence into survival of a 3-D Brownian
//! motion inside the cone over the spherical domain
//!
//! `M = { x in S^2 : c0 x1 + phi([x2, x3] / sqrt 2) >= 0 }`,
//!
//! where `phi(t) = min_i c1 [1,0] R_theta^i t` — a finite min over one
//! period when `theta/2pi` is rational, and `-|c1| ||t||` when it is
//! irrational (dense orbit). The persistence power is
//! `beta = sqrt(lambda(M) + 1/4) / 2` with `lambda(M)` the principal
//! Dirichlet eigenvalue of the spherical Laplacian on `M`. The map
//! `theta -> beta` is therefore discontinuous at rational angles, which
//! `discontinuity_sweep` measures directly.

mod eigen;
mod mc;

pub use eigen::{principal_eigenvalue, EigenResult};
pub use mc::{cone_membership, cone_survival_mc, ConeSurvivalFit};

use serde::{Deserialize, Serialize};

use crate::arproc::{impulse_response, modal_decomposition};
use crate::error::{Error, Result};
use crate::polyalg::{from_zero_set, ZeroEntry, ZeroSet};

use num_complex::Complex64;

/// Rationality classification of `theta / 2pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Rationality {
    Rational { p: u64, q: u64 },
    Irrational,
}

/// Denominators beyond this are treated as irrational: the phi limit is
/// discontinuous in the classification, so the cutoff is explicit.
pub const RATIONALITY_DENOM_CAP: u64 = 720;

/// Classifies `theta / 2pi` by continued fractions with denominator cap.
pub fn classify_rationality(theta: f64, q_cap: u64) -> Rationality {
    let x = theta / (2.0 * std::f64::consts::PI);
    // Convergents p/q of x; accept when the approximation error is far
    // below the resolution any nearby fraction with q <= cap could have.
    let (mut h0, mut h1) = (1u64, 0u64); // numerators (p_{-1}, p_{-2}) style
    let (mut k0, mut k1) = (0u64, 1u64);
    let mut frac = x.abs();
    for _ in 0..40 {
        let a = frac.floor();
        if a > q_cap as f64 * 1e6 {
            break;
        }
        let a_u = a as u64;
        let (h2, k2) = (h1, k1);
        let h_new = a_u.saturating_mul(h0).saturating_add(h2);
        let k_new = a_u.saturating_mul(k0).saturating_add(k2);
        h1 = h0;
        k1 = k0;
        h0 = h_new;
        k0 = k_new;
        if k0 > q_cap {
            break;
        }
        let approx = h0 as f64 / k0 as f64;
        if (x.abs() - approx).abs() < 1e-9 / k0 as f64 {
            let g = gcd(h0.max(1), k0);
            return Rationality::Rational {
                p: h0 / g,
                q: k0 / g,
            };
        }
        let rem = frac - a;
        if rem < 1e-12 {
            break;
        }
        frac = 1.0 / rem;
    }
    Rationality::Irrational
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Modal data of the AR3 family: `h_n = c0 + c1 cos(n theta + phase)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PhiSpec {
    pub theta: f64,
    pub c0: f64,
    pub c1: f64,
    pub phase: f64,
    pub rationality: Rationality,
}

/// `phi_K(t) = min_{0 <= i <= K} c1 [1,0] R_{i theta + phase} t`, with the
/// angle of each term computed directly (no cumulative rotation drift).
pub fn phi_k(spec: &PhiSpec, t: [f64; 2], k: usize) -> f64 {
    (0..=k)
        .map(|i| rotated_first_coord(spec, i, t))
        .fold(f64::INFINITY, f64::min)
}

fn rotated_first_coord(spec: &PhiSpec, i: usize, t: [f64; 2]) -> f64 {
    let ang = i as f64 * spec.theta + spec.phase;
    spec.c1 * (ang.cos() * t[0] - ang.sin() * t[1])
}

/// `lim_K phi_K`: a min over one full period for rational `theta/2pi`,
/// `-|c1| ||t||` for irrational (the rotation orbit is dense, so the
/// infimum of the first coordinate over the orbit is attained at the
/// antipode of `t`'s direction).
pub fn phi_limit(spec: &PhiSpec, t: [f64; 2]) -> f64 {
    match spec.rationality {
        Rationality::Rational { q, .. } => phi_k(spec, t, (q as usize).saturating_sub(1)),
        Rationality::Irrational => -spec.c1.abs() * (t[0] * t[0] + t[1] * t[1]).sqrt(),
    }
}

/// Solves the 3-mode system for the AR3 impulse response and returns the
/// modal constants. Errors when `|sin theta| < 1e-6` (zeros collide).
pub fn modal_constants_ar3(theta: f64) -> Result<PhiSpec> {
    if !(theta > 0.0 && theta < std::f64::consts::PI) || theta.sin().abs() < 1e-6 {
        return Err(Error::IllConditioned {
            cond: 1.0 / theta.sin().abs().max(f64::MIN_POSITIVE),
            hint: "theta must be in (0, pi), away from the endpoints".into(),
        });
    }
    let zeros = ZeroSet::new(
        vec![
            ZeroEntry { root: Complex64::new(1.0, 0.0), mult: 1 },
            ZeroEntry {
                root: Complex64::from_polar(1.0, theta),
                mult: 1,
            },
        ],
        1e-12,
    )?;
    let poly = from_zero_set(&zeros)?;
    let h = impulse_response(&poly, 2).h;
    let decomp = modal_decomposition(&zeros, &h)?;

    let mut c0 = None;
    let mut beta = None;
    for (lambda, coeffs) in &decomp.modes {
        if lambda.im.abs() < 1e-12 {
            c0 = Some(coeffs[0]);
        } else if lambda.im > 0.0 {
            beta = Some(coeffs[0]);
        }
    }
    let c0 = c0.ok_or_else(|| Error::Numeric("missing mode at z = 1".into()))?;
    let beta = beta.ok_or_else(|| Error::Numeric("missing rotating mode".into()))?;
    if c0.im.abs() > 1e-10 * c0.norm().max(1.0) {
        return Err(Error::Numeric(format!(
            "non-real random-walk weight: {c0}"
        )));
    }
    Ok(PhiSpec {
        theta,
        c0: c0.re,
        c1: 2.0 * beta.norm(),
        phase: beta.arg(),
        rationality: classify_rationality(theta, RATIONALITY_DENOM_CAP),
    })
}

/// Inclusion mask over a cell-centered latitude-longitude grid.
///
/// Cell `(i, j)` is centered at polar angle `psi = (i + 1/2) pi / n_polar`
/// (measured from the `x1` axis) and azimuth `(j + 1/2) 2 pi / n_azimuth`.
#[derive(Debug, Clone)]
pub struct SphericalDomain {
    pub n_polar: usize,
    pub n_azimuth: usize,
    /// Row-major `n_polar x n_azimuth`.
    pub mask: Vec<bool>,
}

impl SphericalDomain {
    pub fn inside(&self, i: usize, j: usize) -> bool {
        self.mask[i * self.n_azimuth + j]
    }

    /// Cell-center coordinates of grid cell `(i, j)`.
    pub fn cell_center(&self, i: usize, j: usize) -> [f64; 3] {
        let psi = (i as f64 + 0.5) * std::f64::consts::PI / self.n_polar as f64;
        let az = (j as f64 + 0.5) * 2.0 * std::f64::consts::PI / self.n_azimuth as f64;
        [psi.cos(), psi.sin() * az.cos(), psi.sin() * az.sin()]
    }

    /// Surface area of the masked region by cell quadrature.
    pub fn area(&self) -> f64 {
        let dpsi = std::f64::consts::PI / self.n_polar as f64;
        let daz = 2.0 * std::f64::consts::PI / self.n_azimuth as f64;
        let mut acc = 0.0;
        for i in 0..self.n_polar {
            let psi = (i as f64 + 0.5) * dpsi;
            let row = self.mask[i * self.n_azimuth..(i + 1) * self.n_azimuth]
                .iter()
                .filter(|&&b| b)
                .count();
            acc += row as f64 * psi.sin() * dpsi * daz;
        }
        acc
    }

    /// `true` when every cell of `self` is inside `other`.
    pub fn subset_of(&self, other: &SphericalDomain) -> bool {
        self.n_polar == other.n_polar
            && self.n_azimuth == other.n_azimuth
            && self
                .mask
                .iter()
                .zip(&other.mask)
                .all(|(&a, &b)| !a || b)
    }

    /// CSV rows `polar_index,azimuth_index,inside`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("polar_index,azimuth_index,inside\n");
        for i in 0..self.n_polar {
            for j in 0..self.n_azimuth {
                out.push_str(&format!("{i},{j},{}\n", u8::from(self.inside(i, j))));
            }
        }
        out
    }
}

/// Builds the mask from an arbitrary membership predicate on `S^2`
/// (test hook, also used for reference domains like the hemisphere).
pub fn domain_from_fn<F>(n_polar: usize, n_azimuth: usize, f: F) -> Result<SphericalDomain>
where
    F: Fn([f64; 3]) -> bool,
{
    if n_polar < 32 || n_azimuth < 64 {
        return Err(Error::Precondition(
            "resolution must be at least 32 x 64".into(),
        ));
    }
    let mut mask = Vec::with_capacity(n_polar * n_azimuth);
    let dom = SphericalDomain {
        n_polar,
        n_azimuth,
        mask: vec![],
    };
    for i in 0..n_polar {
        for j in 0..n_azimuth {
            mask.push(f(dom.cell_center(i, j)));
        }
    }
    let n_in = mask.iter().filter(|&&b| b).count();
    if n_in == 0 || n_in == mask.len() {
        return Err(Error::Precondition(
            "degenerate domain: mask is empty or covers the whole sphere".into(),
        ));
    }
    Ok(SphericalDomain {
        n_polar,
        n_azimuth,
        mask,
    })
}

/// The domain `M = {x : c0 x1 + phi([x2,x3]/sqrt 2) >= 0}`.
pub fn build_domain(spec: &PhiSpec, n_polar: usize, n_azimuth: usize) -> Result<SphericalDomain> {
    build_domain_eps(spec, 0.0, n_polar, n_azimuth)
}

/// The shrunk domain `M_eps` with `c0 (1 + eps)`; `M_eps` is a subset of
/// `M` wherever the `phi` term is non-positive on the boundary side
/// (`x1 < 0` half), and converges to `M` as `eps -> 0`.
pub fn build_domain_eps(
    spec: &PhiSpec,
    eps: f64,
    n_polar: usize,
    n_azimuth: usize,
) -> Result<SphericalDomain> {
    let s = 1.0 / 2f64.sqrt();
    domain_from_fn(n_polar, n_azimuth, |x| {
        spec.c0 * (1.0 + eps) * x[0] + phi_limit(spec, [s * x[1], s * x[2]]) >= 0.0
    })
}

/// `beta_Q` for the AR3 family at angle `theta`:
/// modal constants -> domain -> principal eigenvalue.
pub fn exponent_ar3(theta: f64, n_polar: usize, n_azimuth: usize) -> Result<EigenResult> {
    let spec = modal_constants_ar3(theta)?;
    let domain = build_domain(&spec, n_polar, n_azimuth)?;
    principal_eigenvalue(&domain)
}

/// One row of a discontinuity sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub theta: f64,
    pub beta: f64,
    pub lambda: f64,
}

/// Result of sweeping irrational offsets around a rational base angle.
#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub base: SweepRow,
    pub perturbed: Vec<SweepRow>,
    /// `min_offsets beta(theta') - beta(theta)`; positive means the power
    /// jumps up under irrational perturbation.
    pub min_gap: f64,
}

/// Evaluates `beta` at a rational base angle and at irrational
/// perturbations of it.
pub fn discontinuity_sweep(
    theta: f64,
    offsets: &[f64],
    n_polar: usize,
    n_azimuth: usize,
) -> Result<SweepResult> {
    if offsets.is_empty() || offsets.iter().any(|&o| o == 0.0) {
        return Err(Error::Precondition("offsets must be non-zero".into()));
    }
    if classify_rationality(theta, RATIONALITY_DENOM_CAP) == Rationality::Irrational {
        return Err(Error::Precondition(
            "base angle must have rational theta / 2pi".into(),
        ));
    }
    let base_eig = exponent_ar3(theta, n_polar, n_azimuth)?;
    let base = SweepRow {
        theta,
        beta: base_eig.beta,
        lambda: base_eig.lambda,
    };
    let mut perturbed = Vec::with_capacity(offsets.len());
    for &off in offsets {
        let th = theta + off;
        if classify_rationality(th, RATIONALITY_DENOM_CAP) != Rationality::Irrational {
            return Err(Error::Precondition(format!(
                "offset {off} lands on a rational angle"
            )));
        }
        let e = exponent_ar3(th, n_polar, n_azimuth)?;
        perturbed.push(SweepRow {
            theta: th,
            beta: e.beta,
            lambda: e.lambda,
        });
    }
    let min_gap = perturbed
        .iter()
        .map(|r| r.beta - base.beta)
        .fold(f64::INFINITY, f64::min);
    Ok(SweepResult {
        base,
        perturbed,
        min_gap,
    })
}

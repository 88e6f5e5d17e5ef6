//! AR process machinery.
//!
//! Conventions fixed here and used everywhere (including the orthant
//! oracle): noise index 0 drives `X_0`, i.e. `X_n = sum_j a_j X_{n-j} + xi_n`
//! with zero initial conditions, so `X_n = sum_{j<=n} h_{n-j} xi_j` for the
//! impulse response `h`. The persistence event is `{X_n >= 0 for all
//! 0 <= n < N}` with ties counting as survival.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::polyalg::GeneratingPolynomial;
use crate::polyalg::ZeroSet;
use crate::rng;

/// Saturation threshold for explosive simulations: values are clamped here
/// (keeping their sign) so the recurrence never produces inf - inf = NaN.
const SATURATE: f64 = 1e300;

/// One simulated path `X_0..X_{N-1}`, reproducible from its seed.
#[derive(Debug, Clone)]
pub struct PathSample {
    pub xs: Vec<f64>,
    pub seed: u64,
    /// Set when any value hit the saturation clamp; signs past that point
    /// are still meaningful, magnitudes are not.
    pub saturated: bool,
}

/// Simulates the recurrence with iid standard normal noise from the seeded
/// stream `rng::stream(seed, &[])`.
pub fn simulate(poly: &GeneratingPolynomial, n: usize, seed: u64) -> PathSample {
    let mut r = rng::stream(seed, &[]);
    let noise: Vec<f64> = (0..n).map(|_| r.sample(StandardNormal)).collect();
    let mut s = simulate_with_noise(poly, &noise);
    s.seed = seed;
    s
}

/// Test hook: runs the recurrence on explicit noise.
pub fn simulate_with_noise(poly: &GeneratingPolynomial, noise: &[f64]) -> PathSample {
    let a = poly.coeffs();
    let mut xs = Vec::with_capacity(noise.len());
    let mut saturated = false;
    for (n, &xi) in noise.iter().enumerate() {
        let mut acc = xi;
        for (j, &aj) in a.iter().enumerate() {
            if n > j {
                acc += aj * xs[n - 1 - j];
            } else if n == j {
                break;
            }
        }
        // n >= j+1 required: X_{n-j-1} exists only then. (Indices above.)
        if !acc.is_finite() || acc.abs() > SATURATE {
            saturated = true;
            acc = if acc.is_nan() {
                0.0
            } else {
                acc.signum() * SATURATE
            };
        }
        xs.push(acc);
    }
    PathSample {
        xs,
        seed: 0,
        saturated,
    }
}

/// Impulse response `h_0..h_N` of the recurrence.
#[derive(Debug, Clone)]
pub struct ImpulseResponse {
    pub h: Vec<f64>,
}

/// `h_0 = 1`, `h_n = sum_j a_j h_{n-j}`; `X_n = sum_j h_{n-j} xi_j`.
pub fn impulse_response(poly: &GeneratingPolynomial, n: usize) -> ImpulseResponse {
    let a = poly.coeffs();
    let mut h = Vec::with_capacity(n + 1);
    h.push(1.0);
    for m in 1..=n {
        let mut acc = 0.0;
        for (j, &aj) in a.iter().enumerate() {
            if m > j {
                acc += aj * h[m - 1 - j];
            }
        }
        h.push(acc);
    }
    ImpulseResponse { h }
}

/// Modal expansion `q_ell = sum_lambda sum_j beta_{lambda,j} lambda^ell ell^j`
/// matching given initial conditions.
#[derive(Debug, Clone)]
pub struct ModalDecomposition {
    /// Per zero: `(lambda, [beta_{lambda,0}, ..., beta_{lambda,m-1}])`.
    pub modes: Vec<(Complex64, Vec<Complex64>)>,
}

const MODAL_COND_LIMIT: f64 = 1e12;

/// Solves the confluent Vandermonde system `q_ell = init[ell]`,
/// `ell = 0..L-1`. Errors when the system's condition estimate exceeds
/// 1e12 (nearly coincident zeros).
pub fn modal_decomposition(zeros: &ZeroSet, init: &[f64]) -> Result<ModalDecomposition> {
    let l = zeros.total_multiplicity();
    if init.len() != l {
        return Err(Error::Precondition(format!(
            "init length {} != total multiplicity {}",
            init.len(),
            l
        )));
    }
    let mut columns = Vec::with_capacity(l); // (entry idx, power j)
    for (ei, e) in zeros.entries().iter().enumerate() {
        for j in 0..e.mult {
            columns.push((ei, j));
        }
    }
    let basis = DMatrix::from_fn(l, l, |ell, col| {
        let (ei, j) = columns[col];
        let lambda = zeros.entries()[ei].root;
        let ellj = if j == 0 { 1.0 } else { (ell as f64).powi(j as i32) };
        lambda.powi(ell as i32) * ellj
    });
    let svd = basis.clone().svd(false, false);
    let (smax, smin) = (svd.singular_values.max(), svd.singular_values.min());
    let cond = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if cond > MODAL_COND_LIMIT {
        return Err(Error::IllConditioned {
            cond,
            hint: "modal basis; increase root separation".into(),
        });
    }
    let rhs = DVector::from_fn(l, |i, _| Complex64::new(init[i], 0.0));
    let beta = basis
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Numeric("modal LU solve failed".into()))?;

    let mut modes: Vec<(Complex64, Vec<Complex64>)> = zeros
        .entries()
        .iter()
        .map(|e| (e.root, Vec::with_capacity(e.mult)))
        .collect();
    for (col, &(ei, _)) in columns.iter().enumerate() {
        modes[ei].1.push(beta[col]);
    }
    Ok(ModalDecomposition { modes })
}

/// Evaluates the modal closed form at `ell`; errors if the imaginary
/// residue exceeds `1e-9` relative.
pub fn eval_modal(decomp: &ModalDecomposition, ell: usize) -> Result<f64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (lambda, betas) in &decomp.modes {
        let lp = lambda.powi(ell as i32);
        for (j, &b) in betas.iter().enumerate() {
            let ellj = if j == 0 { 1.0 } else { (ell as f64).powi(j as i32) };
            acc += b * lp * ellj;
        }
    }
    let scale = acc.norm().max(1.0);
    if acc.im.abs() > 1e-9 * scale {
        return Err(Error::Numeric(format!(
            "imaginary residue {:.3e} in modal evaluation at ell = {ell}",
            acc.im
        )));
    }
    Ok(acc.re)
}

/// Binomial triangle coefficient `b_{n,i,M}`: `b_{n,i,0} = 1` and
/// `b_{n+1,i,M} = b_{n,i,M} + b_{n+1,i,M-1}` for `i <= n`, which telescopes
/// to `C(n-i+M, M)`.
pub fn triangle_coeff(n: usize, i: usize, m: usize) -> f64 {
    debug_assert!(i <= n);
    crate::polyalg::binomial_f64((n - i + m) as u64, m as u64)
}

/// The defining recursion, kept as an oracle for `triangle_coeff`.
pub fn triangle_coeff_recursive(n: usize, i: usize, m: usize) -> f64 {
    assert!(i <= n);
    // Row-by-row in n, all orders up to m; depends only on n - i.
    let d = n - i;
    let mut row = vec![1.0f64; m + 1]; // b_{i,i,*} = 1 for every order
    for _ in 0..d {
        for k in 1..=m {
            row[k] += row[k - 1];
        }
    }
    row[m]
}

/// Cosine/sine component pair of one oscillatory mode at each time.
#[derive(Debug, Clone)]
pub struct RotatedComponent {
    pub theta: f64,
    pub phase: f64,
    pub k: usize,
    /// `T_n = sum_{i<=n} b_{n,i,k} cos((n-i) theta + phase) xi_i`.
    pub t: Vec<f64>,
    /// Same with sine.
    pub t_prime: Vec<f64>,
}

/// Direct-sum evaluation of the rotated components for `n = 0..N-1`.
pub fn rotated_components(
    noise: &[f64],
    theta: f64,
    phase: f64,
    k: usize,
    n: usize,
) -> RotatedComponent {
    assert!(n >= 1 && n <= noise.len());
    let mut t = Vec::with_capacity(n);
    let mut t_prime = Vec::with_capacity(n);
    for m in 0..n {
        let mut c = 0.0;
        let mut s = 0.0;
        for (i, &xi) in noise.iter().enumerate().take(m + 1) {
            let b = triangle_coeff(m, i, k);
            let ang = (m - i) as f64 * theta + phase;
            c += b * ang.cos() * xi;
            s += b * ang.sin() * xi;
        }
        t.push(c);
        t_prime.push(s);
    }
    RotatedComponent {
        theta,
        phase,
        k,
        t,
        t_prime,
    }
}

/// Applies the 2x2 rotation by `theta`.
pub fn rotate(theta: f64, v: [f64; 2]) -> [f64; 2] {
    let (s, c) = theta.sin_cos();
    [c * v[0] - s * v[1], s * v[0] + c * v[1]]
}

/// One time step of the rotated-component recursion, all orders at once:
/// `T_{n+1,k} = R_theta T_{n,k} + T_{n+1,k-1}` with the new noise entering
/// at order -1 as `xi [cos phase, sin phase]`. `state[k]` is the order-`k`
/// pair; updated in place.
pub fn rotation_step(state: &mut [[f64; 2]], theta: f64, phase: f64, xi_next: f64) {
    let mut inj = [xi_next * phase.cos(), xi_next * phase.sin()];
    for v in state.iter_mut() {
        let r = rotate(theta, *v);
        *v = [r[0] + inj[0], r[1] + inj[1]];
        inj = *v;
    }
}

/// Covariance of the window `(X_{n-L+1}, ..., X_n)` from the impulse
/// response: `Cov(X_p, X_q) = sum_i h_{p-i} h_{q-i}`.
pub fn covariance_window(poly: &GeneratingPolynomial, n: usize) -> Result<DMatrix<f64>> {
    let l = poly.degree();
    if n + 1 < l {
        return Err(Error::Precondition(format!(
            "window needs n >= L - 1 (n = {n}, L = {l})"
        )));
    }
    let h = impulse_response(poly, n).h;
    let lo = n + 1 - l;
    let mut sigma = DMatrix::zeros(l, l);
    for a in 0..l {
        for b in a..l {
            let (p, q) = (lo + a, lo + b);
            let mut acc = 0.0;
            for i in 0..=p.min(q) {
                acc += h[p - i] * h[q - i];
            }
            sigma[(a, b)] = acc;
            sigma[(b, a)] = acc;
        }
    }
    Ok(sigma)
}

/// Schur-complement Gaussian conditioning. Returns the conditional mean and
/// covariance of the unobserved coordinates given `observed` as
/// `(index, value)` pairs. The conditional covariance does not depend on
/// the observed values.
pub fn conditional_gaussian(
    mean: &[f64],
    cov: &DMatrix<f64>,
    observed: &[(usize, f64)],
) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let d = mean.len();
    if cov.nrows() != d || cov.ncols() != d {
        return Err(Error::Precondition("covariance shape mismatch".into()));
    }
    let obs_idx: Vec<usize> = observed.iter().map(|&(i, _)| i).collect();
    if obs_idx.iter().any(|&i| i >= d) {
        return Err(Error::Precondition("observed index out of range".into()));
    }
    let mut seen = vec![false; d];
    for &i in &obs_idx {
        if seen[i] {
            return Err(Error::Precondition("duplicate observed index".into()));
        }
        seen[i] = true;
    }
    let free_idx: Vec<usize> = (0..d).filter(|i| !seen[*i]).collect();

    let s_oo = DMatrix::from_fn(obs_idx.len(), obs_idx.len(), |r, c| {
        cov[(obs_idx[r], obs_idx[c])]
    });
    let s_uo = DMatrix::from_fn(free_idx.len(), obs_idx.len(), |r, c| {
        cov[(free_idx[r], obs_idx[c])]
    });
    let s_uu = DMatrix::from_fn(free_idx.len(), free_idx.len(), |r, c| {
        cov[(free_idx[r], free_idx[c])]
    });
    let chol = s_oo.clone().cholesky().ok_or_else(|| {
        Error::Numeric("observed covariance block is not positive definite".into())
    })?;

    let resid = DVector::from_fn(obs_idx.len(), |r, _| {
        observed[r].1 - mean[obs_idx[r]]
    });
    let gain = chol.solve(&resid);
    let mu: Vec<f64> = free_idx
        .iter()
        .enumerate()
        .map(|(r, &i)| mean[i] + (s_uo.row(r) * &gain)[(0, 0)])
        .collect();

    let solved = chol.solve(&s_uo.transpose());
    let sigma = s_uu - &s_uo * solved;
    Ok((mu, sigma))
}

/// Finds the first `i` with
/// `sum_j r_j cos(i theta_j + gamma_j) <= -max_j |r_j| / 4`.
///
/// Angles must be distinct and in `(0, pi]`, with `gamma_j in {0, pi}`
/// whenever `theta_j = pi`. The search is capped at `12 l^2 (C v 1)^2`
/// where `C` bounds the oscillatory partial sums involved
/// (`C = max 1/|sin(a/2)|` over the angles `theta_j`, `2 theta_j` and
/// `theta_j1 +- theta_j2`); exceeding the cap signals a violated
/// precondition such as duplicate angles.
pub fn rotation_negativity_witness(
    thetas: &[f64],
    rs: &[f64],
    gammas: &[f64],
) -> Result<usize> {
    let l = thetas.len();
    if l == 0 || rs.len() != l || gammas.len() != l {
        return Err(Error::Precondition("thetas/rs/gammas length mismatch".into()));
    }
    let pi = std::f64::consts::PI;
    for (j, &th) in thetas.iter().enumerate() {
        if !(th > 0.0 && th <= pi) {
            return Err(Error::Precondition(format!(
                "theta[{j}] = {th} outside (0, pi]"
            )));
        }
        if (th - pi).abs() < 1e-12 {
            let g = gammas[j].rem_euclid(2.0 * pi);
            if g.min((g - pi).abs()).min((g - 2.0 * pi).abs()) > 1e-9 {
                return Err(Error::Precondition(
                    "gamma must be 0 or pi when theta = pi".into(),
                ));
            }
        }
        for &th2 in thetas.iter().skip(j + 1) {
            if (th - th2).abs() < 1e-12 {
                return Err(Error::Precondition("duplicate angles".into()));
            }
        }
    }
    let r_max = rs.iter().map(|r| r.abs()).fold(0.0f64, f64::max);
    if r_max == 0.0 {
        return Err(Error::Precondition("all amplitudes are zero".into()));
    }

    // Partial-sum bound: |sum_{i<=n} cos(i a + b)| <= 1/|sin(a/2)|.
    let mut c_const = 1.0f64;
    let mut consider = |a: f64| {
        let a = a.rem_euclid(2.0 * pi);
        if a > 1e-12 && (a - 2.0 * pi).abs() > 1e-12 {
            c_const = c_const.max(1.0 / (a / 2.0).sin().abs());
        }
    };
    for (j, &th) in thetas.iter().enumerate() {
        consider(th);
        if (th - pi).abs() > 1e-12 {
            consider(2.0 * th);
        }
        for &th2 in thetas.iter().skip(j + 1) {
            consider(th + th2);
            consider(th - th2);
        }
    }
    let cap = (12.0 * (l * l) as f64 * c_const * c_const).ceil() as usize;

    for i in 0..=cap {
        let s: f64 = (0..l)
            .map(|j| rs[j] * (i as f64 * thetas[j] + gammas[j]).cos())
            .sum();
        if s <= -r_max / 4.0 {
            return Ok(i);
        }
    }
    Err(Error::NoConvergence {
        iterations: cap,
        residual: r_max / 4.0,
    })
}

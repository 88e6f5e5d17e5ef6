//! Persistence-probability estimation.
//!
//! Three estimators with very different dynamic ranges:
//!
//! * naive Monte Carlo — unbiased, fine down to p ~ 1e-5;
//! * multilevel splitting — stagewise conditional survival over a
//!   checkpoint grid, reaching p ~ e^{-60} and below. Validity rests on the
//!   window `(X_{n-L+1}, ..., X_n)` being Markov, so resampling clones the
//!   full window;
//! * a small-horizon orthant oracle (N <= 12) — the persistence probability
//!   is the positive-orthant mass of the path covariance, computed by a
//!   separation-of-variables quasi Monte Carlo scheme to ~1e-5.
//!
//! Explosive recurrences (`r* > 1`) are handled by rescaling: the signs of
//! `Y_n = X_n r*^{-n}` match `X_n` exactly while the recurrence
//! `Y_n = sum_j a_j r*^{-j} Y_{n-j} + r*^{-n} xi_n` stays bounded, so no
//! estimator ever meets inf - inf.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::arproc::impulse_response;
use crate::error::{Error, Result};
use crate::exec;
use crate::polyalg::{find_roots, GeneratingPolynomial};
use crate::regime::DecayModel;
use crate::rng;

/// Which estimator produced an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Naive,
    Splitting,
    Oracle,
}

/// One estimate of `p_N = P(X_n >= 0 for all 0 <= n < N)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PersistenceEstimate {
    pub n: usize,
    pub p_hat: f64,
    pub log_p_hat: f64,
    /// Standard error of `log p_hat`; infinite when extinct.
    pub stderr_log: f64,
    pub method: Method,
    /// Samples (naive), particles x stages x replicates (splitting), or
    /// QMC points (oracle).
    pub budget: u64,
    pub seed: u64,
    /// All probability mass died at some stage; more particles or tighter
    /// checkpoints are needed.
    pub extinct: bool,
}

impl PersistenceEstimate {
    fn from_p(n: usize, p: f64, stderr_log: f64, method: Method, budget: u64, seed: u64) -> Self {
        let extinct = p <= 0.0;
        Self {
            n,
            p_hat: p,
            log_p_hat: if extinct { f64::NEG_INFINITY } else { p.ln() },
            stderr_log: if extinct { f64::INFINITY } else { stderr_log },
            method,
            budget,
            seed,
            extinct,
        }
    }

    pub const CSV_HEADER: &'static str = "n,p_hat,log_p_hat,stderr_log,method,seed";

    pub fn to_csv_row(&self) -> String {
        let method = match self.method {
            Method::Naive => "naive",
            Method::Splitting => "splitting",
            Method::Oracle => "oracle",
        };
        format!(
            "{},{},{},{},{},{}",
            self.n, self.p_hat, self.log_p_hat, self.stderr_log, method, self.seed
        )
    }
}

/// Sign-preserving stepper: runs the (possibly rescaled) recurrence and
/// reports the first index where the path goes negative.
#[derive(Debug, Clone)]
pub(crate) struct SignStepper {
    /// Rescaled coefficients `a_j r*^{-j}` (plain `a_j` when `r* <= 1`).
    coeffs: Vec<f64>,
    /// `r*^{-1}` when rescaling, else 1.
    noise_decay: f64,
}

impl SignStepper {
    pub(crate) fn new(poly: &GeneratingPolynomial) -> Result<Self> {
        let r_star = find_roots(poly, 0.0)?.max_modulus();
        let decay = if r_star > 1.0 + 1e-9 {
            1.0 / r_star
        } else {
            1.0
        };
        let coeffs = poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, &a)| a * decay.powi(j as i32 + 1))
            .collect();
        Ok(Self {
            coeffs,
            noise_decay: decay,
        })
    }

    fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Advances the window from absolute time `start` through `count`
    /// steps with the given rng; returns the first relative index with a
    /// negative value, or `count` if the path survived. `window[L-1]` is
    /// the newest value; windows hold the rescaled process.
    fn run<R: Rng>(
        &self,
        window: &mut Vec<f64>,
        start: usize,
        count: usize,
        rng: &mut R,
    ) -> usize {
        let l = self.order();
        debug_assert_eq!(window.len(), l);
        let mut noise_scale = if self.noise_decay == 1.0 {
            1.0
        } else {
            self.noise_decay.powi(start as i32)
        };
        for step in 0..count {
            // The value produced here lives at absolute time start + step;
            // its noise carries the factor r*^{-(start+step)}.
            let xi: f64 = rng.sample(StandardNormal);
            let mut acc = xi * noise_scale;
            noise_scale *= self.noise_decay;
            for (j, &aj) in self.coeffs.iter().enumerate() {
                let idx = l - 1 - j; // window[l-1] = X_{t-1}, ...
                let t = start + step;
                if t > j {
                    acc += aj * window[idx];
                } else if t == j {
                    break;
                }
            }
            if acc < 0.0 {
                return step;
            }
            window.rotate_left(1);
            window[l - 1] = acc;
        }
        count
    }
}

/// Naive Monte Carlo at a single horizon.
pub fn naive_persistence(
    poly: &GeneratingPolynomial,
    n: usize,
    n_samples: u64,
    seed: u64,
) -> Result<PersistenceEstimate> {
    Ok(naive_persistence_grid(poly, &[n], n_samples, seed)?.remove(0))
}

/// Naive Monte Carlo with common random numbers: one path of length
/// `max(ns)` scores every horizon in `ns` at once, so the estimates are
/// exactly monotone in `N`.
pub fn naive_persistence_grid(
    poly: &GeneratingPolynomial,
    ns: &[usize],
    n_samples: u64,
    seed: u64,
) -> Result<Vec<PersistenceEstimate>> {
    if ns.is_empty() || ns.iter().any(|&n| n == 0) {
        return Err(Error::Precondition("horizons must be positive".into()));
    }
    if n_samples == 0 {
        return Err(Error::Precondition("n_samples must be >= 1".into()));
    }
    let n_max = *ns.iter().max().unwrap();
    let stepper = SignStepper::new(poly)?;
    let l = stepper.order();

    // First violation time per sample, aggregated into a survival curve.
    let first_viol = exec::map_collect(n_samples as usize, |i| {
        let mut rng = rng::stream(seed, &[1, i as u64]);
        let mut window = vec![0.0; l];
        stepper.run(&mut window, 0, n_max, &mut rng)
    });
    let mut died_at = vec![0u64; n_max + 1];
    for &t in &first_viol {
        died_at[t] += 1;
    }
    // survivors(n) = # samples with first violation >= n.
    let mut survivors_at = vec![0u64; n_max + 1];
    let mut acc = 0u64;
    for t in (0..=n_max).rev() {
        acc += died_at[t];
        survivors_at[t] = acc;
    }

    Ok(ns
        .iter()
        .map(|&n| {
            let k = survivors_at[n];
            let p = k as f64 / n_samples as f64;
            let se_log = if k > 0 {
                ((1.0 - p) / (k as f64)).sqrt()
            } else {
                f64::INFINITY
            };
            PersistenceEstimate::from_p(n, p, se_log, Method::Naive, n_samples, seed)
        })
        .collect())
}

/// Checkpoint schedule plus particle and replicate budgets.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SplittingConfig {
    /// Strictly increasing, first >= 1, last = target horizon.
    pub checkpoints: Vec<usize>,
    pub particles: usize,
    pub replicates: usize,
}

impl SplittingConfig {
    pub fn validate(&self) -> Result<()> {
        if self.checkpoints.is_empty() || self.checkpoints[0] < 1 {
            return Err(Error::Precondition(
                "checkpoints must be non-empty and start at >= 1".into(),
            ));
        }
        if !self.checkpoints.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Precondition(
                "checkpoints must be strictly increasing".into(),
            ));
        }
        if self.particles == 0 || self.replicates == 0 {
            return Err(Error::Precondition(
                "particles and replicates must be >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// Geometric checkpoints `ceil(N 2^{k-K})`, suited to power-law decay.
pub fn geometric_checkpoints(n: usize) -> Vec<usize> {
    let k_stages = (n as f64).log2().ceil() as u32;
    let mut cps: Vec<usize> = (0..=k_stages)
        .map(|k| ((n as f64) * 2f64.powi(k as i32 - k_stages as i32)).ceil() as usize)
        .collect();
    cps.dedup();
    cps
}

/// Arithmetic checkpoints with the given spacing, suited to exponential
/// decay.
pub fn arithmetic_checkpoints(n: usize, step: usize) -> Vec<usize> {
    let step = step.max(1);
    let mut cps: Vec<usize> = (1..).map(|k| k * step).take_while(|&c| c < n).collect();
    cps.push(n);
    cps
}

/// Checkpoints equally spaced in `N^alpha`, suited to stretched-exponential
/// decay (stage survival stays in a moderate band).
pub fn power_spaced_checkpoints(n: usize, alpha: f64) -> Vec<usize> {
    assert!(alpha > 0.0 && alpha <= 1.0);
    let u_max = (n as f64).powf(alpha);
    let mut cps = Vec::new();
    let mut u = 1.0f64;
    while u < u_max {
        let c = u.powf(1.0 / alpha).ceil() as usize;
        if cps.last() != Some(&c) && c < n {
            cps.push(c.max(1));
        }
        u += 1.0;
    }
    cps.push(n);
    cps.dedup();
    cps
}

/// Multilevel splitting at the final checkpoint.
pub fn splitting_persistence(
    poly: &GeneratingPolynomial,
    config: &SplittingConfig,
    seed: u64,
) -> Result<PersistenceEstimate> {
    let n = *config.checkpoints.last().unwrap_or(&0);
    let all = splitting_persistence_grid(poly, &[n], config, seed)?;
    Ok(all.into_iter().next().unwrap())
}

/// Multilevel splitting reporting estimates at every target horizon.
///
/// Every target must appear among the checkpoints (targets are inserted if
/// missing). Within a replicate, the product of stage survival fractions up
/// to a checkpoint is the estimate there; across replicates the estimates
/// are averaged and the spread gives the log-scale standard error.
pub fn splitting_persistence_grid(
    poly: &GeneratingPolynomial,
    targets: &[usize],
    config: &SplittingConfig,
    seed: u64,
) -> Result<Vec<PersistenceEstimate>> {
    config.validate()?;
    if targets.is_empty() || targets.iter().any(|&t| t == 0) {
        return Err(Error::Precondition("targets must be positive".into()));
    }
    let mut checkpoints = config.checkpoints.clone();
    checkpoints.extend_from_slice(targets);
    checkpoints.sort_unstable();
    checkpoints.dedup();
    let t_max = *targets.iter().max().unwrap();
    checkpoints.retain(|&c| c <= t_max);

    let stepper = SignStepper::new(poly)?;
    let l = stepper.order();

    // log p at every checkpoint, one row per replicate; NaN past extinction.
    let rows: Vec<Vec<f64>> = exec::map_collect(config.replicates, |rep| {
        let rep = rep as u64;
        let mut states: Vec<Vec<f64>> = vec![vec![0.0; l]; config.particles];
        let mut log_p = 0.0f64;
        let mut out = Vec::with_capacity(checkpoints.len());
        let mut start = 0usize;
        let mut extinct = false;
        for (stage, &cp) in checkpoints.iter().enumerate() {
            if extinct {
                out.push(f64::NAN);
                continue;
            }
            let count = cp - start;
            let survivors: Vec<Vec<f64>> = exec::map_collect(states.len(), |pi| {
                let mut w = states[pi].clone();
                let mut r = rng::stream(seed, &[2, rep, stage as u64, pi as u64]);
                let lived = stepper.run(&mut w, start, count, &mut r) == count;
                (lived, w)
            })
            .into_iter()
            .filter_map(|(lived, w)| lived.then_some(w))
            .collect();
            if survivors.is_empty() {
                extinct = true;
                out.push(f64::NAN);
                continue;
            }
            log_p += (survivors.len() as f64 / states.len() as f64).ln();
            out.push(log_p);
            // Resample with replacement up to the particle budget; clones
            // share history but get fresh noise next stage.
            let mut rr = rng::stream(seed, &[3, rep, stage as u64]);
            states = (0..config.particles)
                .map(|_| survivors[rr.gen_range(0..survivors.len())].clone())
                .collect();
            start = cp;
        }
        out
    });

    let budget =
        (config.particles * config.replicates) as u64 * checkpoints.len() as u64;
    Ok(targets
        .iter()
        .map(|&t| {
            let ci = checkpoints.iter().position(|&c| c == t).unwrap();
            let logs: Vec<f64> = rows.iter().map(|r| r[ci]).filter(|v| v.is_finite()).collect();
            if logs.is_empty() {
                return PersistenceEstimate::from_p(
                    t,
                    0.0,
                    f64::INFINITY,
                    Method::Splitting,
                    budget,
                    seed,
                );
            }
            // Arithmetic mean of the per-replicate estimates (each is
            // unbiased); spread of the logs gives the error bar.
            let p = logs.iter().map(|&v| v.exp()).sum::<f64>() / rows.len() as f64;
            let mean_log = logs.iter().sum::<f64>() / logs.len() as f64;
            let var_log = if logs.len() > 1 {
                logs.iter().map(|&v| (v - mean_log).powi(2)).sum::<f64>()
                    / (logs.len() - 1) as f64
            } else {
                // Single replicate: binomial error propagated through the
                // product is not recoverable here; report a crude bound.
                1.0 / config.particles as f64
            };
            let se = (var_log / logs.len() as f64).sqrt();
            PersistenceEstimate::from_p(t, p, se, Method::Splitting, budget, seed)
        })
        .collect())
}

const ORACLE_MAX_N: usize = 12;
const ORACLE_TOL: f64 = 1e-5;

/// Exact-reference oracle: `p_N` as the positive-orthant probability of the
/// path covariance, for `N <= 12`.
pub fn orthant_oracle(poly: &GeneratingPolynomial, n: usize) -> Result<PersistenceEstimate> {
    if n == 0 || n > ORACLE_MAX_N {
        return Err(Error::Precondition(format!(
            "oracle horizon must be in 1..={ORACLE_MAX_N}, got {n}"
        )));
    }
    let cov = path_covariance(poly, n);
    let (p, err, points) = mvn_rectangle(&cov, &vec![0.0; n], &vec![f64::INFINITY; n])?;
    let mut est = PersistenceEstimate::from_p(n, p, err / p.max(1e-300), Method::Oracle, points, 0);
    est.stderr_log = err / p.max(1e-300);
    Ok(est)
}

/// Covariance of `(X_0, ..., X_{N-1})` from the impulse response.
pub fn path_covariance(poly: &GeneratingPolynomial, n: usize) -> DMatrix<f64> {
    let h = impulse_response(poly, n.saturating_sub(1)).h;
    DMatrix::from_fn(n, n, |p, q| {
        (0..=p.min(q)).map(|i| h[p - i] * h[q - i]).sum()
    })
}

/// `P(lower <= X <= upper)` for `X ~ N(0, cov)` by the separation-of-
/// variables method with a shifted Kronecker QMC rule. Returns
/// `(p, error bound, points used)`; the error bound is three standard
/// errors across the shifts, driven below 1e-5 by doubling the rule size.
pub fn mvn_rectangle(
    cov: &DMatrix<f64>,
    lower: &[f64],
    upper: &[f64],
) -> Result<(f64, f64, u64)> {
    let d = cov.nrows();
    if d == 0 || lower.len() != d || upper.len() != d || cov.ncols() != d {
        return Err(Error::Precondition("dimension mismatch".into()));
    }
    if d > ORACLE_MAX_N + 4 {
        return Err(Error::Precondition(format!(
            "rectangle dimension {d} exceeds cap {}",
            ORACLE_MAX_N + 4
        )));
    }
    if lower.iter().zip(upper).any(|(l, u)| l >= u) {
        return Err(Error::Precondition("need lower < upper".into()));
    }
    let chol = cov
        .clone()
        .cholesky()
        .or_else(|| {
            // Tiny jitter for numerically semidefinite inputs.
            let mut c = cov.clone();
            let eps = 1e-12 * cov.diagonal().max().max(1.0);
            for i in 0..d {
                c[(i, i)] += eps;
            }
            c.cholesky()
        })
        .ok_or_else(|| Error::Numeric("covariance is not positive definite".into()))?;
    let lmat = chol.l();
    let normal = Normal::new(0.0, 1.0).unwrap();
    let phi = |x: f64| -> f64 {
        if x == f64::INFINITY {
            1.0
        } else if x == f64::NEG_INFINITY {
            0.0
        } else {
            normal.cdf(x)
        }
    };
    let phi_inv = |u: f64| -> f64 { normal.inverse_cdf(u.clamp(1e-16, 1.0 - 1e-16)) };

    // Kronecker sequence directions: fractional parts of sqrt(prime).
    const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let dirs: Vec<f64> = PRIMES[..d.saturating_sub(1).max(1)]
        .iter()
        .map(|&p| (p as f64).sqrt().fract())
        .collect();
    const N_SHIFTS: usize = 12;
    let shifts: Vec<Vec<f64>> = {
        let mut r = rng::stream(0x0a11_ce5e, &[d as u64]);
        (0..N_SHIFTS)
            .map(|_| (0..d).map(|_| r.gen::<f64>()).collect())
            .collect()
    };

    let integrand = |w: &[f64]| -> f64 {
        // Sequential conditioning: y_i in [phi_inv(d_i), phi_inv(e_i)].
        let mut y = [0.0f64; ORACLE_MAX_N + 4];
        let mut f = 1.0f64;
        for i in 0..d {
            let mut dot = 0.0;
            for j in 0..i {
                dot += lmat[(i, j)] * y[j];
            }
            let lii = lmat[(i, i)].max(1e-300);
            let a = phi((lower[i] - dot) / lii);
            let b = phi((upper[i] - dot) / lii);
            let width = (b - a).max(0.0);
            f *= width;
            if f == 0.0 {
                return 0.0;
            }
            let u = a + (if i + 1 < d { w[i] } else { 0.5 }) * width;
            y[i] = phi_inv(u);
        }
        f
    };

    let mut n_points = 4096u64;
    loop {
        let per_shift: Vec<f64> = exec::map_collect(N_SHIFTS, |m| {
            let shift = &shifts[m];
            let mut acc = 0.0f64;
            let mut w = vec![0.0f64; d.max(1)];
            for k in 0..n_points {
                for (j, dj) in dirs.iter().enumerate() {
                    w[j] = (k as f64 * dj + shift[j]).fract();
                }
                acc += integrand(&w);
            }
            acc / n_points as f64
        });
        let mean = per_shift.iter().sum::<f64>() / N_SHIFTS as f64;
        let var = per_shift
            .iter()
            .map(|&v| (v - mean).powi(2))
            .sum::<f64>()
            / (N_SHIFTS - 1) as f64;
        let err = 3.0 * (var / N_SHIFTS as f64).sqrt();
        if err <= ORACLE_TOL || n_points >= (1 << 21) {
            if err > ORACLE_TOL {
                return Err(Error::NoConvergence {
                    iterations: n_points as usize,
                    residual: err,
                });
            }
            return Ok((mean, err, n_points * N_SHIFTS as u64));
        }
        n_points *= 2;
    }
}

/// Slepian comparison via the oracle: with equal diagonals and
/// `covA <= covB` entrywise off-diagonal, the orthant mass of `A` cannot
/// exceed that of `B`.
#[derive(Debug, Clone, Serialize)]
pub struct SlepianReport {
    pub p_a: f64,
    pub p_b: f64,
    pub err: f64,
}

pub fn slepian_probe(cov_a: &DMatrix<f64>, cov_b: &DMatrix<f64>) -> Result<SlepianReport> {
    let d = cov_a.nrows();
    if d > 10 || cov_b.nrows() != d {
        return Err(Error::Precondition("need equal dimensions <= 10".into()));
    }
    for i in 0..d {
        if (cov_a[(i, i)] - cov_b[(i, i)]).abs() > 1e-12 {
            return Err(Error::Precondition("diagonals must match".into()));
        }
        for j in 0..d {
            if i != j && cov_a[(i, j)] > cov_b[(i, j)] + 1e-12 {
                return Err(Error::Precondition(
                    "covA must be dominated entrywise off-diagonal".into(),
                ));
            }
        }
    }
    let zeros = vec![0.0; d];
    let infs = vec![f64::INFINITY; d];
    let (p_a, e_a, _) = mvn_rectangle(cov_a, &zeros, &infs)?;
    let (p_b, e_b, _) = mvn_rectangle(cov_b, &zeros, &infs)?;
    let err = e_a + e_b;
    if p_a > p_b + 2e-5 {
        return Err(Error::Numeric(format!(
            "Slepian inequality violated: {p_a} > {p_b} + 2e-5"
        )));
    }
    Ok(SlepianReport { p_a, p_b, err })
}

/// Weighted least-squares fit of a decay model.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExponentFit {
    pub model: DecayModel,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub n_min: usize,
    pub n_max: usize,
}

/// Fits the model's linearization by weighted least squares
/// (weights `1/stderr^2` on the transformed scale):
/// power-law and bounded-below — `log p` vs `log N`; exponential — `log p`
/// vs `N`; stretched — `log(-log p)` vs `log N`. The decay exponent is
/// `-slope` for power/exponential models and `slope` for the stretched one.
pub fn fit_exponent(estimates: &[PersistenceEstimate], model: DecayModel) -> Result<ExponentFit> {
    let mut pts: Vec<(f64, f64, f64)> = Vec::new(); // (x, y, weight)
    for e in estimates {
        if e.extinct || !(e.p_hat > 0.0) {
            continue;
        }
        let (x, y, se) = match model {
            DecayModel::PowerLaw | DecayModel::BoundedBelow => {
                ((e.n as f64).ln(), e.log_p_hat, e.stderr_log)
            }
            DecayModel::Exponential => (e.n as f64, e.log_p_hat, e.stderr_log),
            DecayModel::Stretched => {
                if e.log_p_hat >= -1e-12 {
                    continue; // log(-log p) undefined at p = 1
                }
                let neg = -e.log_p_hat;
                // Propagate: d/dp log(-log p) = stderr_log / |log p|.
                ((e.n as f64).ln(), neg.ln(), e.stderr_log / neg)
            }
        };
        let w = 1.0 / se.max(1e-6).powi(2);
        pts.push((x, y, w));
    }
    if pts.len() < 4 {
        return Err(Error::Precondition(format!(
            "need >= 4 usable estimates, have {}",
            pts.len()
        )));
    }
    let n_min = estimates.iter().map(|e| e.n).min().unwrap();
    let n_max = estimates.iter().map(|e| e.n).max().unwrap();
    if (n_max as f64) < 4.0 * n_min as f64 {
        return Err(Error::Precondition(
            "horizons must span at least two octaves".into(),
        ));
    }

    let sw: f64 = pts.iter().map(|p| p.2).sum();
    let mx = pts.iter().map(|p| p.0 * p.2).sum::<f64>() / sw;
    let my = pts.iter().map(|p| p.1 * p.2).sum::<f64>() / sw;
    let sxx: f64 = pts.iter().map(|p| p.2 * (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| p.2 * (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::Precondition("degenerate horizons".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = pts
        .iter()
        .map(|p| p.2 * (p.1 - slope * p.0 - intercept).powi(2))
        .sum();
    let ss_tot: f64 = pts.iter().map(|p| p.2 * (p.1 - my).powi(2)).sum();
    let r_squared = if ss_tot > 0.0 {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    } else {
        1.0
    };
    Ok(ExponentFit {
        model,
        slope,
        intercept,
        r_squared,
        n_min,
        n_max,
    })
}

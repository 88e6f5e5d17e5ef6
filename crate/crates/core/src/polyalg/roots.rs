//! Root finding with multiplicity recovery.
//!
//! Aberth–Ehrlich simultaneous iteration on the monic polynomial, with
//! companion-matrix eigenvalues as a fallback start. Multiple zeros are
//! recovered by clustering: roots within `cluster_tol` merge into one entry
//! whose value is the cluster centroid and whose multiplicity is the
//! cluster size. Clusters are then symmetrized against their conjugate
//! mirrors so reconstruction yields real coefficients.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::{companion_matrix, GeneratingPolynomial, ZeroEntry, ZeroSet};

const MAX_ITERS: usize = 400;

/// Default cluster tolerance given the dominant modulus.
pub(crate) fn default_cluster_tol(r_star: f64) -> f64 {
    1e-6 * r_star.max(1.0)
}

/// All `L` roots of `Q`, clustered into entries with multiplicities.
///
/// Pass `cluster_tol = 0.0` (or any non-finite/zero value) to use the
/// default `1e-6 * max(1, r*)`.
pub fn find_roots(poly: &GeneratingPolynomial, cluster_tol: f64) -> Result<ZeroSet> {
    if cluster_tol < 0.0 {
        return Err(Error::Precondition("cluster_tol must be >= 0".into()));
    }
    let raw = aberth_roots(poly)?;
    let r_star = raw.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let tol = if cluster_tol > 0.0 {
        cluster_tol
    } else {
        default_cluster_tol(r_star)
    };
    let clustered = cluster(&raw, tol);
    let symmetric = symmetrize(clustered, tol);
    Ok(ZeroSet::from_parts(symmetric, tol))
}

fn aberth_roots(poly: &GeneratingPolynomial) -> Result<Vec<Complex64>> {
    let l = poly.degree();
    if l == 1 {
        return Ok(vec![Complex64::new(poly.coeffs()[0], 0.0)]);
    }

    let mut z = initial_guesses(poly);
    let scale = poly
        .coeffs()
        .iter()
        .map(|a| a.abs())
        .fold(1.0f64, f64::max);

    let mut converged = false;
    for _ in 0..MAX_ITERS {
        let mut max_step = 0.0f64;
        for i in 0..l {
            let p = poly.eval(z[i]);
            let dp = poly.eval_derivative(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() > 0.0 {
                p / dp
            } else {
                Complex64::new(1e-8, 1e-8)
            };
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..l {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 1e-300 {
                        sum += Complex64::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * sum;
            let step = if denom.norm() > 1e-300 {
                newton / denom
            } else {
                newton
            };
            z[i] -= step;
            max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
        }
        if max_step < 1e-14 {
            converged = true;
            break;
        }
    }

    // Multiple roots converge slowly; accept if residuals are tiny relative
    // to the coefficient scale, otherwise retry from eigenvalue starts.
    let residual = |zs: &[Complex64]| {
        zs.iter()
            .map(|&zi| poly.eval(zi).norm())
            .fold(0.0f64, f64::max)
    };
    let res = residual(&z);
    let res_tol = 1e-8 * scale.powi(2).max(1.0);
    if converged || res <= res_tol {
        return Ok(z);
    }

    let eig = companion_matrix(poly).into_matrix().complex_eigenvalues();
    let mut z2: Vec<Complex64> = eig.iter().copied().collect();
    for zi in &mut z2 {
        // A few Newton polish steps per eigenvalue.
        for _ in 0..20 {
            let p = poly.eval(*zi);
            let dp = poly.eval_derivative(*zi);
            if dp.norm() == 0.0 || p.norm() == 0.0 {
                break;
            }
            *zi -= p / dp;
        }
    }
    let res2 = residual(&z2);
    if res2 <= res_tol {
        Ok(z2)
    } else if res <= res2 {
        Err(Error::RootsNotConverged { residual: res })
    } else {
        Err(Error::RootsNotConverged { residual: res2 })
    }
}

fn initial_guesses(poly: &GeneratingPolynomial) -> Vec<Complex64> {
    let l = poly.degree();
    // Cauchy-style inclusion radius.
    let radius = 1.0
        + poly
            .coeffs()
            .iter()
            .map(|a| a.abs())
            .fold(0.0f64, f64::max);
    (0..l)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / l as f64 + 0.437;
            Complex64::from_polar(radius.min(1.0 + radius.sqrt()), angle)
        })
        .collect()
}

fn cluster(roots: &[Complex64], tol: f64) -> Vec<ZeroEntry> {
    let mut remaining: Vec<Complex64> = roots.to_vec();
    let mut out = Vec::new();
    while let Some(seed) = remaining.pop() {
        let mut members = vec![seed];
        let mut changed = true;
        // Grow the cluster transitively.
        while changed {
            changed = false;
            let mut i = 0;
            while i < remaining.len() {
                if members.iter().any(|m| (remaining[i] - m).norm() <= tol * 4.0) {
                    members.push(remaining.swap_remove(i));
                    changed = true;
                } else {
                    i += 1;
                }
            }
        }
        let centroid = members.iter().sum::<Complex64>() / members.len() as f64;
        out.push(ZeroEntry {
            root: centroid,
            mult: members.len(),
        });
    }
    out
}

fn symmetrize(mut entries: Vec<ZeroEntry>, tol: f64) -> Vec<ZeroEntry> {
    let scale = entries
        .iter()
        .map(|e| e.root.norm())
        .fold(1.0f64, f64::max);
    let axis_tol = tol * scale * 8.0;
    let mut used = vec![false; entries.len()];
    let mut out = Vec::with_capacity(entries.len());
    for i in 0..entries.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let e = entries[i];
        if e.root.im.abs() <= axis_tol {
            out.push(ZeroEntry {
                root: Complex64::new(e.root.re, 0.0),
                mult: e.mult,
            });
            continue;
        }
        // Pair with the conjugate mirror and average.
        let mut partner = None;
        for (j, item) in entries.iter().enumerate().skip(i + 1) {
            if !used[j]
                && item.mult == e.mult
                && (item.root - e.root.conj()).norm() <= axis_tol.max(tol * 8.0)
            {
                partner = Some(j);
                break;
            }
        }
        if let Some(j) = partner {
            used[j] = true;
            let avg = (e.root + entries[j].root.conj()) / 2.0;
            out.push(ZeroEntry { root: avg, mult: e.mult });
            out.push(ZeroEntry { root: avg.conj(), mult: e.mult });
        } else {
            // Unpaired complex cluster: keep as-is; conjugate closure is
            // checked by consumers that require it.
            out.push(e);
        }
    }
    entries.clear();
    // Stable order: by modulus then angle, for reproducible serialization.
    out.sort_by(|a, b| {
        (a.root.norm(), a.root.arg())
            .partial_cmp(&(b.root.norm(), b.root.arg()))
            .unwrap()
    });
    out
}

/// Expands `prod (z - lambda)^m` back into recurrence coefficients.
pub fn from_zero_set(zeros: &ZeroSet) -> Result<GeneratingPolynomial> {
    let mut coeffs: Vec<Complex64> = vec![Complex64::new(1.0, 0.0)];
    for e in zeros.entries() {
        for _ in 0..e.mult {
            // Multiply by (z - root).
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k] += c;
                next[k + 1] -= c * e.root;
            }
            coeffs = next;
        }
    }
    let scale = coeffs.iter().map(|c| c.norm()).fold(1.0f64, f64::max);
    let max_im = coeffs.iter().map(|c| c.im.abs()).fold(0.0f64, f64::max);
    if max_im > 1e-10 * scale {
        return Err(Error::NotConjugateClosed { residue: max_im });
    }
    // Q(z) = z^L - sum a_j z^{L-j}  =>  a_j = -coeff_j.
    let a: Vec<f64> = coeffs.iter().skip(1).map(|c| -c.re).collect();
    GeneratingPolynomial::new(a)
}

//! Polynomial and linear-algebra substrate.
//!
//! The generating polynomial `Q(z) = z^L - sum_j a_j z^{L-j}` is stored by
//! its recurrence coefficients `a_1..a_L`. Zeros carry multiplicities and
//! are kept conjugate-closed so that reconstructed coefficients are real.

mod jordan;
mod nonneg;
mod roots;
mod witness;

pub use jordan::{direct_power_apply, direct_power_from_zeros, jordan_power_apply};
pub use nonneg::{convolve, nonneg_multiplier, nonneg_multiplier_quadratic};
pub use roots::{find_roots, from_zero_set};
pub use witness::{grid_witness, GridWitness};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Monic real polynomial `Q(z) = z^L - a_1 z^{L-1} - ... - a_L`, identified
/// with the AR recurrence `X_n = sum_j a_j X_{n-j} + xi_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratingPolynomial {
    coeffs: Vec<f64>,
}

impl GeneratingPolynomial {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidPolynomial("degree must be >= 1".into()));
        }
        if coeffs.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidPolynomial(
                "coefficients must be finite".into(),
            ));
        }
        // A trailing zero means Q(0) = 0; zero roots are outside the model.
        if *coeffs.last().unwrap() == 0.0 {
            return Err(Error::InvalidPolynomial(
                "a_L = 0 (zero root) is rejected; trim the recurrence order".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// Recurrence coefficients `a_1..a_L`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Monic coefficients of `Q` in descending powers: `[1, -a_1, ..., -a_L]`.
    pub fn monic_coeffs(&self) -> Vec<f64> {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(1.0);
        c.extend(self.coeffs.iter().map(|a| -a));
        c
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.monic_coeffs()
            .iter()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn eval_derivative(&self, z: Complex64) -> Complex64 {
        let c = self.monic_coeffs();
        let n = c.len() - 1;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &ck) in c.iter().enumerate().take(n) {
            acc = acc * z + ck * (n - k) as f64;
        }
        acc
    }
}

/// One zero of `Q` with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroEntry {
    pub root: Complex64,
    pub mult: usize,
}

/// Zeros of `Q` with multiplicities; conjugate-closed within `cluster_tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    entries: Vec<ZeroEntry>,
    cluster_tol: f64,
}

impl ZeroSet {
    /// Builds a zero set from explicit entries, completing missing conjugates
    /// and validating the invariants.
    pub fn new(mut entries: Vec<ZeroEntry>, cluster_tol: f64) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Precondition("zero set must be non-empty".into()));
        }
        if !(cluster_tol >= 0.0) {
            return Err(Error::Precondition("cluster_tol must be >= 0".into()));
        }
        // Snap near-real entries onto the axis, then complete conjugates.
        let scale = entries
            .iter()
            .map(|e| e.root.norm())
            .fold(1.0f64, f64::max);
        let axis_tol = cluster_tol.max(1e-12) * scale;
        for e in &mut entries {
            if e.root.im.abs() <= axis_tol {
                e.root.im = 0.0;
            }
        }
        let mut completed = entries.clone();
        for e in &entries {
            if e.root.im != 0.0 {
                let has_conj = entries
                    .iter()
                    .any(|f| (f.root - e.root.conj()).norm() <= axis_tol && f.mult == e.mult);
                if !has_conj {
                    completed.push(ZeroEntry {
                        root: e.root.conj(),
                        mult: e.mult,
                    });
                }
            }
        }
        let zs = Self {
            entries: completed,
            cluster_tol,
        };
        zs.check_separation()?;
        Ok(zs)
    }

    pub(crate) fn from_parts(entries: Vec<ZeroEntry>, cluster_tol: f64) -> Self {
        Self {
            entries,
            cluster_tol,
        }
    }

    fn check_separation(&self) -> Result<()> {
        for (i, a) in self.entries.iter().enumerate() {
            for b in self.entries.iter().skip(i + 1) {
                if (a.root - b.root).norm() <= self.cluster_tol {
                    return Err(Error::Precondition(format!(
                        "zeros {} and {} are not separated beyond cluster_tol",
                        a.root, b.root
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn entries(&self) -> &[ZeroEntry] {
        &self.entries
    }

    pub fn cluster_tol(&self) -> f64 {
        self.cluster_tol
    }

    /// Total degree `L = sum of multiplicities`.
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    pub fn max_modulus(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.root.norm())
            .fold(0.0, f64::max)
    }
}

/// Serialized form of a zero set: `[{re, im, mult}]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ZeroEntryJson {
    pub re: f64,
    pub im: f64,
    pub mult: usize,
}

impl ZeroSet {
    pub fn to_json_entries(&self) -> Vec<ZeroEntryJson> {
        self.entries
            .iter()
            .map(|e| ZeroEntryJson {
                re: e.root.re,
                im: e.root.im,
                mult: e.mult,
            })
            .collect()
    }

    pub fn from_json_entries(entries: &[ZeroEntryJson], cluster_tol: f64) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|e| ZeroEntry {
                    root: Complex64::new(e.re, e.im),
                    mult: e.mult,
                })
                .collect(),
            cluster_tol,
        )
    }
}

/// `r*`, the zeros attaining it, and the two multiplicity statistics that
/// drive the regime classification.
#[derive(Debug, Clone)]
pub struct SpectralSummary {
    pub r_star: f64,
    pub lambda_star: Vec<ZeroEntry>,
    pub m_star: usize,
    /// Multiplicity of the positive real zero of modulus `r*`; 0 if absent.
    pub m_rstar: usize,
    /// Tolerance used for modulus comparisons, kept for downstream
    /// classification (comparisons of `r*` against 1 reuse it).
    pub modulus_tol: f64,
}

/// Modulus tolerance for zero sets constructed exactly.
pub const MODULUS_TOL_EXACT: f64 = 1e-9;
/// Modulus tolerance for zero sets produced by the numeric root finder.
pub const MODULUS_TOL_FOUND: f64 = 1e-6;

/// Extracts `r* = max |lambda|`, the set of maximal-modulus zeros, the
/// maximal multiplicity among them, and the multiplicity of the positive
/// real zero of modulus `r*`.
pub fn spectral_summary(zeros: &ZeroSet, modulus_tol: f64) -> SpectralSummary {
    let r_star = zeros.max_modulus();
    let lambda_star: Vec<ZeroEntry> = zeros
        .entries()
        .iter()
        .filter(|e| e.root.norm() >= r_star * (1.0 - modulus_tol))
        .copied()
        .collect();
    let m_star = lambda_star.iter().map(|e| e.mult).max().unwrap_or(0);
    let m_rstar = lambda_star
        .iter()
        .find(|e| e.root.re > 0.0 && e.root.im.abs() <= modulus_tol * r_star)
        .map(|e| e.mult)
        .unwrap_or(0);
    SpectralSummary {
        r_star,
        lambda_star,
        m_star,
        m_rstar,
        modulus_tol,
    }
}

/// Companion matrix of `Q`: coefficients across the first row, ones on the
/// subdiagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct CompanionMatrix(DMatrix<f64>);

impl CompanionMatrix {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.0
    }
}

pub fn companion_matrix(poly: &GeneratingPolynomial) -> CompanionMatrix {
    let l = poly.degree();
    let mut m = DMatrix::zeros(l, l);
    for (j, &a) in poly.coeffs().iter().enumerate() {
        m[(0, j)] = a;
    }
    for i in 1..l {
        m[(i, i - 1)] = 1.0;
    }
    CompanionMatrix(m)
}

/// Exact binomial `C(s-1+x, x)` in wide integer arithmetic.
pub fn binom_shift(s: u64, x: u64) -> Result<u128> {
    if s == 0 {
        return Err(Error::Precondition("s must be positive".into()));
    }
    binomial_u128(s as u128 - 1 + x as u128, x as u128)
}

fn binomial_u128(n: u128, k: u128) -> Result<u128> {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .ok_or_else(|| Error::Numeric("binomial overflow in u128".into()))?;
        acc /= i + 1;
    }
    Ok(acc)
}

/// `C(n, k)` as f64, for Jordan-power weights.
pub(crate) fn binomial_f64(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc *= (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_trailing_zero_and_empty() {
        assert!(GeneratingPolynomial::new(vec![]).is_err());
        assert!(GeneratingPolynomial::new(vec![1.0, 0.0]).is_err());
        assert!(GeneratingPolynomial::new(vec![f64::NAN]).is_err());
        assert!(GeneratingPolynomial::new(vec![1.0]).is_ok());
    }

    #[test]
    fn companion_matrix_pattern() {
        let p = GeneratingPolynomial::new(vec![1.0]).unwrap();
        assert_eq!(companion_matrix(&p).matrix()[(0, 0)], 1.0);

        let p = GeneratingPolynomial::new(vec![2.0, -1.0]).unwrap();
        let m = companion_matrix(&p).into_matrix();
        assert_eq!(m, DMatrix::from_row_slice(2, 2, &[2.0, -1.0, 1.0, 0.0]));

        let p = GeneratingPolynomial::new(vec![1.0, -1.0, 1.0]).unwrap();
        let m = companion_matrix(&p).into_matrix();
        assert_eq!(m.row(0).iter().copied().collect::<Vec<_>>(), vec![1.0, -1.0, 1.0]);
        assert_eq!(m[(1, 0)], 1.0);
        assert_eq!(m[(2, 1)], 1.0);
        assert_eq!(m[(1, 2)], 0.0);
    }

    #[test]
    fn binom_shift_values() {
        assert_eq!(binom_shift(1, 5).unwrap(), 1);
        assert_eq!(binom_shift(3, 2).unwrap(), 6);
        assert_eq!(binom_shift(5, 3).unwrap(), 35);
        assert!(binom_shift(0, 1).is_err());
        // Large inputs overflow and report rather than wrap.
        assert!(binom_shift(u64::MAX, u64::MAX).is_err());
    }

    #[test]
    fn spectral_summary_examples() {
        // {(1,1),(-1,2)} -> r*=1, m*=2, m(r*)=1
        let zs = ZeroSet::new(
            vec![
                ZeroEntry { root: Complex64::new(1.0, 0.0), mult: 1 },
                ZeroEntry { root: Complex64::new(-1.0, 0.0), mult: 2 },
            ],
            1e-9,
        )
        .unwrap();
        let s = spectral_summary(&zs, MODULUS_TOL_EXACT);
        assert_eq!(s.r_star, 1.0);
        assert_eq!(s.lambda_star.len(), 2);
        assert_eq!(s.m_star, 2);
        assert_eq!(s.m_rstar, 1);

        let zs = ZeroSet::new(
            vec![ZeroEntry { root: Complex64::new(0.5, 0.0), mult: 1 }],
            1e-9,
        )
        .unwrap();
        let s = spectral_summary(&zs, MODULUS_TOL_EXACT);
        assert_eq!(s.r_star, 0.5);
        assert_eq!(s.m_star, 1);
        assert_eq!(s.m_rstar, 1);

        let zs = ZeroSet::new(
            vec![
                ZeroEntry { root: Complex64::new(2.0, 0.0), mult: 1 },
                ZeroEntry { root: Complex64::new(-2.0, 0.0), mult: 2 },
            ],
            1e-9,
        )
        .unwrap();
        let s = spectral_summary(&zs, MODULUS_TOL_EXACT);
        assert_eq!(s.r_star, 2.0);
        assert_eq!(s.m_star, 2);
        assert_eq!(s.m_rstar, 1);
    }

    #[test]
    fn zero_set_completes_conjugates() {
        let zs = ZeroSet::new(
            vec![ZeroEntry { root: Complex64::new(0.3, 0.7), mult: 2 }],
            1e-9,
        )
        .unwrap();
        assert_eq!(zs.entries().len(), 2);
        assert_eq!(zs.total_multiplicity(), 4);
    }
}

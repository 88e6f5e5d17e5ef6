//! Powers of the companion matrix through its Jordan structure.
//!
//! For a zero `lambda` of multiplicity `m`, the chain vectors
//! `v_{lambda,r}[i] = C(L-i, r-1) lambda^{L-i-r+1}` (rows `i = 1..L`,
//! ranks `r = 1..m`) satisfy `A v_{lambda,1} = lambda v_{lambda,1}` and
//! `A v_{lambda,r} = lambda v_{lambda,r} + v_{lambda,r-1}`: the rank-`r`
//! vector is the `(r-1)`-th Taylor coefficient of the plain eigenvector in
//! `lambda`. Expanding an initial state in this basis gives
//! `A^n x = sum_{lambda,r} c_{lambda,r} sum_j C(n,j) lambda^{n-j} v_{lambda,r-j}`
//! without ever forming `A^n`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

use super::{binomial_f64, companion_matrix, from_zero_set, GeneratingPolynomial, ZeroSet};

const COND_LIMIT: f64 = 1e12;

/// Chain vector `v_{lambda,r}` for a degree-`L` companion matrix (`r >= 1`).
fn chain_vector(l: usize, lambda: Complex64, r: usize) -> DVector<Complex64> {
    DVector::from_fn(l, |i, _| {
        // Rows are 1-based in the formula; i = row - 1.
        let li = (l - 1 - i) as i64; // L - row
        let c = binomial_f64(li.max(0) as u64, (r - 1) as u64);
        if c == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            c * lambda.powi((li - (r as i64 - 1)) as i32)
        }
    })
}

/// Computes `A^n x` from the spectral data of `Q`, where `A` is the
/// companion matrix. Errors if the chain basis is numerically singular
/// (condition estimate above 1e12).
pub fn jordan_power_apply(zeros: &ZeroSet, x: &[f64], n: u64) -> Result<Vec<f64>> {
    let l = zeros.total_multiplicity();
    if x.len() != l {
        return Err(Error::Precondition(format!(
            "state length {} does not match degree {}",
            x.len(),
            l
        )));
    }
    // Assemble the chain basis column by column.
    let mut basis = DMatrix::zeros(l, l);
    let mut columns = Vec::with_capacity(l); // (entry index, rank)
    for (ei, e) in zeros.entries().iter().enumerate() {
        if e.root.norm() == 0.0 {
            return Err(Error::Precondition("zero roots are not supported".into()));
        }
        for r in 1..=e.mult {
            let col = columns.len();
            basis.set_column(col, &chain_vector(l, e.root, r));
            columns.push((ei, r));
        }
    }

    let svd = basis.clone().svd(false, false);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let cond = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if cond > COND_LIMIT {
        return Err(Error::IllConditioned {
            cond,
            hint: "Jordan chain basis; zeros may be nearly coincident".into(),
        });
    }

    let rhs = DVector::from_fn(l, |i, _| Complex64::new(x[i], 0.0));
    let c = basis
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Numeric("chain basis LU solve failed".into()))?;

    // A^n v_{lambda,r} = sum_{j=0}^{r-1} C(n,j) lambda^{n-j} v_{lambda,r-j}.
    let mut out = DVector::from_element(l, Complex64::new(0.0, 0.0));
    for (col, &(ei, r)) in columns.iter().enumerate() {
        let lambda = zeros.entries()[ei].root;
        for j in 0..r {
            if n < j as u64 {
                continue;
            }
            let w = binomial_f64(n, j as u64) * lambda.powi((n - j as u64) as i32);
            let v = chain_vector(l, lambda, r - j);
            out += v * (c[col] * w);
        }
    }

    let scale = out.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
    let max_im = out.iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
    if max_im > 1e-6 * scale {
        return Err(Error::Numeric(format!(
            "imaginary residue {max_im:.3e} in Jordan power (scale {scale:.3e})"
        )));
    }
    Ok(out.iter().map(|z| z.re).collect())
}

/// Oracle: `A^n x` by repeated multiplication with the companion matrix.
pub fn direct_power_apply(poly: &GeneratingPolynomial, x: &[f64], n: u64) -> Vec<f64> {
    let a = companion_matrix(poly).into_matrix();
    let mut v = DVector::from_column_slice(x);
    for _ in 0..n {
        v = &a * v;
    }
    v.iter().copied().collect()
}

/// Convenience: direct power from the zero set (reconstructs `Q` first).
pub fn direct_power_from_zeros(zeros: &ZeroSet, x: &[f64], n: u64) -> Result<Vec<f64>> {
    Ok(direct_power_apply(&from_zero_set(zeros)?, x, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::ZeroEntry;
    use rand::Rng;

    fn check_match(zeros: &ZeroSet, n: u64, rtol: f64) {
        let l = zeros.total_multiplicity();
        let mut rng = crate::rng::stream(11, &[n, l as u64]);
        let x: Vec<f64> = (0..l).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let jordan = jordan_power_apply(zeros, &x, n).unwrap();
        let direct = direct_power_from_zeros(zeros, &x, n).unwrap();
        let scale = direct.iter().map(|v| v.abs()).fold(1.0f64, f64::max);
        for (a, b) in jordan.iter().zip(&direct) {
            assert!(
                (a - b).abs() <= rtol * scale,
                "jordan {a} vs direct {b} (n={n}, scale={scale:.3e})"
            );
        }
    }

    #[test]
    fn chain_vector_satisfies_recurrence() {
        // (z-1)(z+1)^2: chain at -1 must satisfy A v_2 = -v_2 + v_1.
        let zs = ZeroSet::new(
            vec![
                ZeroEntry { root: Complex64::new(1.0, 0.0), mult: 1 },
                ZeroEntry { root: Complex64::new(-1.0, 0.0), mult: 2 },
            ],
            1e-9,
        )
        .unwrap();
        let p = from_zero_set(&zs).unwrap();
        let a = companion_matrix(&p).into_matrix().map(|v| Complex64::new(v, 0.0));
        let lam = Complex64::new(-1.0, 0.0);
        let v1 = chain_vector(3, lam, 1);
        let v2 = chain_vector(3, lam, 2);
        let lhs = &a * &v2;
        let rhs = &v2 * lam + &v1;
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn jordan_matches_direct_small_cases() {
        let cases: Vec<ZeroSet> = vec![
            ZeroSet::new(vec![ZeroEntry { root: Complex64::new(0.5, 0.0), mult: 1 }], 1e-9)
                .unwrap(),
            ZeroSet::new(
                vec![
                    ZeroEntry { root: Complex64::new(1.0, 0.0), mult: 1 },
                    ZeroEntry { root: Complex64::new(-1.0, 0.0), mult: 2 },
                ],
                1e-9,
            )
            .unwrap(),
            ZeroSet::new(
                vec![
                    ZeroEntry { root: Complex64::new(0.0, 1.0), mult: 1 },
                    ZeroEntry { root: Complex64::new(1.0, 0.0), mult: 1 },
                ],
                1e-9,
            )
            .unwrap(),
            ZeroSet::new(
                vec![
                    ZeroEntry { root: Complex64::new(-0.4, 0.9), mult: 2 },
                    ZeroEntry { root: Complex64::new(0.7, 0.0), mult: 1 },
                ],
                1e-9,
            )
            .unwrap(),
        ];
        for zs in &cases {
            for n in [0u64, 1, 2, 5, 17, 40] {
                check_match(zs, n, 1e-9);
            }
        }
    }

    #[test]
    fn ill_conditioned_basis_reported() {
        let zs = ZeroSet::new(
            vec![
                ZeroEntry { root: Complex64::new(1.0, 0.0), mult: 1 },
                ZeroEntry { root: Complex64::new(1.0 + 1e-13, 0.0), mult: 1 },
            ],
            1e-14,
        )
        .unwrap();
        match jordan_power_apply(&zs, &[1.0, 0.0], 3) {
            Err(Error::IllConditioned { .. }) => {}
            other => panic!("expected IllConditioned, got {other:?}"),
        }
    }
}

//! Five-way decay classification of the persistence probability.
//!
//! The regime is a function of three spectral statistics only: the dominant
//! modulus `r*`, the maximal multiplicity `m*` over the zeros of modulus
//! `r*`, and the multiplicity `m(r*)` of the positive real zero of modulus
//! `r*` (zero if absent). The five cases partition the parameter space:
//!
//! | condition                        | regime                   | decay of p_N              |
//! |----------------------------------|--------------------------|---------------------------|
//! | `r* > 1`, `m(r*) = m*`           | Constant                 | bounded below             |
//! | `r* < 1` or `m(r*) = 0`          | Exponential              | `exp(-cN)`                |
//! | `r* = 1`, `1 <= m(r*) < m*`      | StretchedExponential     | `exp(-N^alpha)` roughly   |
//! | `r* > 1`, `1 <= m(r*) < m*`      | PolynomialOscillatory    | `N^-alpha`                |
//! | `r* = 1`, `m(r*) = m*`           | ApproxIRW                | power law, power unknown  |
//!
//! with `alpha = 1 - m(r*)/m*` in the stretched case and
//! `alpha = (1/2) sum_{|lambda|=r*} (m(lambda)-m(r*))+ (m(lambda)-m(r*)+1)+`
//! in the oscillatory one.

use serde::{Deserialize, Serialize};

use crate::polyalg::{SpectralSummary, ZeroSet};

/// Decay class with its closed-form exponent where one exists.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum RegimeClass {
    /// `inf_N p_N > 0`.
    Constant,
    /// `p_N = e^{-cN(1+o(1))}` for some `c > 0` (rate not predicted here).
    Exponential,
    /// `p_N = exp(-N^{alpha + o(1)})`.
    StretchedExponential { alpha: f64 },
    /// `p_N = N^{-alpha + o(1)}`.
    PolynomialOscillatory { alpha: f64 },
    /// Approximately an integrated random walk: power-law decay with an
    /// unknown power in general (AR3 exponents come from the cone module).
    ApproxIRW,
}

/// Classification result: the class, the statistics it came from, and any
/// tolerance warnings incurred along the way.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Regime {
    pub class: RegimeClass,
    pub r_star: f64,
    pub m_star: usize,
    pub m_rstar: usize,
    pub warnings: Vec<String>,
}

/// Regression family matching each regime's decay law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecayModel {
    /// `p_N >= c > 0`: fit nothing, check a plateau.
    BoundedBelow,
    /// `log p_N` linear in `N`.
    Exponential,
    /// `log(-log p_N)` linear in `log N`.
    Stretched,
    /// `log p_N` linear in `log N`.
    PowerLaw,
}

/// Maps a spectral summary to its decay regime (total function).
///
/// Comparisons of `r*` against 1 use the summary's own `modulus_tol` as the
/// band; a value inside the band classifies as `r* = 1` and attaches a
/// near-critical warning, since the trichotomy is discontinuous there.
pub fn classify(summary: &SpectralSummary) -> Regime {
    let tol = summary.modulus_tol;
    let mut warnings = Vec::new();
    let near_one = (summary.r_star - 1.0).abs() <= tol;
    if near_one && summary.r_star != 1.0 {
        warnings.push(format!(
            "r* = {:.12} is within {tol:.1e} of 1; classified on the critical branch",
            summary.r_star
        ));
    }
    // Warn just outside the band too: the branch choice is sharp there.
    if !near_one && (summary.r_star - 1.0).abs() <= 1e3 * tol {
        warnings.push(format!(
            "r* = {:.12} is near-critical; branch r* {} 1 was assumed",
            summary.r_star,
            if summary.r_star > 1.0 { ">" } else { "<" }
        ));
    }

    let class = if summary.m_rstar == 0 || (!near_one && summary.r_star < 1.0) {
        RegimeClass::Exponential
    } else if near_one {
        if summary.m_rstar == summary.m_star {
            RegimeClass::ApproxIRW
        } else {
            let alpha = 1.0 - summary.m_rstar as f64 / summary.m_star as f64;
            debug_assert!(alpha > 0.0 && alpha < 1.0);
            RegimeClass::StretchedExponential { alpha }
        }
    } else if summary.m_rstar == summary.m_star {
        RegimeClass::Constant
    } else {
        let m0 = summary.m_rstar as f64;
        let alpha: f64 = summary
            .lambda_star
            .iter()
            .map(|e| {
                let d = (e.mult as f64 - m0).max(0.0);
                let d1 = (e.mult as f64 - m0 + 1.0).max(0.0);
                0.5 * d * d1
            })
            .sum();
        debug_assert!(alpha > 0.0, "case (d) requires some m(lambda) > m(r*)");
        RegimeClass::PolynomialOscillatory { alpha }
    };

    Regime {
        class,
        r_star: summary.r_star,
        m_star: summary.m_star,
        m_rstar: summary.m_rstar,
        warnings,
    }
}

/// Which regression family to fit against estimates of `p_N`.
pub fn decay_model(regime: &Regime) -> DecayModel {
    match regime.class {
        RegimeClass::Constant => DecayModel::BoundedBelow,
        RegimeClass::Exponential => DecayModel::Exponential,
        RegimeClass::StretchedExponential { .. } => DecayModel::Stretched,
        RegimeClass::PolynomialOscillatory { .. } | RegimeClass::ApproxIRW => DecayModel::PowerLaw,
    }
}

/// Detects the AR3 family `{1, e^{i theta}, e^{-i theta}}`, all simple.
/// Returns `theta in (0, pi)` when the zero set matches within `tol`.
pub fn ar3_angle(zeros: &ZeroSet, tol: f64) -> Option<f64> {
    let entries = zeros.entries();
    if entries.len() != 3 || entries.iter().any(|e| e.mult != 1) {
        return None;
    }
    let mut one = None;
    let mut upper = None;
    let mut lower = None;
    for e in entries {
        if (e.root.re - 1.0).abs() <= tol && e.root.im.abs() <= tol {
            one = Some(e);
        } else if (e.root.norm() - 1.0).abs() <= tol && e.root.im > tol {
            upper = Some(e);
        } else if (e.root.norm() - 1.0).abs() <= tol && e.root.im < -tol {
            lower = Some(e);
        }
    }
    let (u, l) = (upper?, lower?);
    one?;
    if (u.root - l.root.conj()).norm() > tol {
        return None;
    }
    let theta = u.root.arg();
    (theta > tol && theta < std::f64::consts::PI - tol).then_some(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{
        find_roots, spectral_summary, GeneratingPolynomial, ZeroEntry, MODULUS_TOL_EXACT,
    };
    use num_complex::Complex64;

    fn classify_coeffs(a: &[f64]) -> Regime {
        let p = GeneratingPolynomial::new(a.to_vec()).unwrap();
        let zs = find_roots(&p, 0.0).unwrap();
        classify(&spectral_summary(&zs, crate::polyalg::MODULUS_TOL_FOUND))
    }

    #[test]
    fn six_reference_polynomials() {
        assert_eq!(classify_coeffs(&[1.0]).class, RegimeClass::ApproxIRW);

        match classify_coeffs(&[-1.0, 1.0, 1.0]).class {
            RegimeClass::StretchedExponential { alpha } => {
                assert!((alpha - 0.5).abs() < 1e-12)
            }
            other => panic!("expected stretched, got {other:?}"),
        }

        // (z-2)(z+2)^2 = z^3 + 2z^2 - 4z - 8 -> a = [-2, 4, 8].
        match classify_coeffs(&[-2.0, 4.0, 8.0]).class {
            RegimeClass::PolynomialOscillatory { alpha } => {
                assert!((alpha - 1.0).abs() < 1e-12)
            }
            other => panic!("expected oscillatory, got {other:?}"),
        }

        assert_eq!(classify_coeffs(&[0.5]).class, RegimeClass::Exponential);
        assert_eq!(classify_coeffs(&[-1.0]).class, RegimeClass::Exponential);
        assert_eq!(classify_coeffs(&[2.0]).class, RegimeClass::Constant);
    }

    #[test]
    fn decay_model_table() {
        let mk = |class| Regime {
            class,
            r_star: 1.0,
            m_star: 1,
            m_rstar: 1,
            warnings: vec![],
        };
        assert_eq!(decay_model(&mk(RegimeClass::Constant)), DecayModel::BoundedBelow);
        assert_eq!(decay_model(&mk(RegimeClass::Exponential)), DecayModel::Exponential);
        assert_eq!(
            decay_model(&mk(RegimeClass::StretchedExponential { alpha: 0.5 })),
            DecayModel::Stretched
        );
        assert_eq!(
            decay_model(&mk(RegimeClass::PolynomialOscillatory { alpha: 1.0 })),
            DecayModel::PowerLaw
        );
        assert_eq!(decay_model(&mk(RegimeClass::ApproxIRW)), DecayModel::PowerLaw);
    }

    #[test]
    fn near_critical_warning() {
        let zs = ZeroSet::new(
            vec![ZeroEntry { root: Complex64::new(1.0 + 1e-10, 0.0), mult: 1 }],
            1e-12,
        )
        .unwrap();
        let r = classify(&spectral_summary(&zs, MODULUS_TOL_EXACT));
        assert_eq!(r.class, RegimeClass::ApproxIRW);
        assert!(!r.warnings.is_empty());
    }

    #[test]
    fn ar3_angle_detection() {
        // z^3 - z^2 + z - 1 = (z-1)(z^2+1) -> theta = pi/2.
        let p = GeneratingPolynomial::new(vec![1.0, -1.0, 1.0]).unwrap();
        let zs = find_roots(&p, 0.0).unwrap();
        let th = ar3_angle(&zs, 1e-6).unwrap();
        assert!((th - std::f64::consts::FRAC_PI_2).abs() < 1e-9);

        let p = GeneratingPolynomial::new(vec![1.0]).unwrap();
        assert!(ar3_angle(&find_roots(&p, 0.0).unwrap(), 1e-6).is_none());

        let p = GeneratingPolynomial::new(vec![-1.0, 1.0, 1.0]).unwrap();
        assert!(ar3_angle(&find_roots(&p, 0.0).unwrap(), 1e-6).is_none());
    }

    #[test]
    fn partition_is_total_and_exclusive() {
        use rand::Rng;
        let mut rng = crate::rng::stream(41, &[0]);
        for _ in 0..1000 {
            let n_real = rng.gen_range(0..=2usize);
            let n_pairs = rng.gen_range(0..=2usize);
            let mut entries = Vec::new();
            for _ in 0..n_real {
                let r: f64 = [0.5, 1.0, 2.0][rng.gen_range(0..3)];
                let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                let root = Complex64::new(sign * r, 0.0);
                if entries
                    .iter()
                    .all(|e: &ZeroEntry| (e.root - root).norm() > 1e-3)
                {
                    entries.push(ZeroEntry { root, mult: rng.gen_range(1..=3) });
                }
            }
            for _ in 0..n_pairs {
                let r: f64 = [0.5, 1.0, 2.0][rng.gen_range(0..3)];
                let th: f64 = rng.gen_range(0.2..2.9);
                let root = Complex64::from_polar(r, th);
                if entries
                    .iter()
                    .all(|e: &ZeroEntry| (e.root - root).norm() > 1e-3)
                {
                    entries.push(ZeroEntry { root, mult: rng.gen_range(1..=2) });
                }
            }
            if entries.is_empty() {
                continue;
            }
            let zs = ZeroSet::new(entries, 1e-9).unwrap();
            let s = spectral_summary(&zs, MODULUS_TOL_EXACT);

            // Count how many of the five predicates fire; must be exactly 1.
            let near_one = (s.r_star - 1.0).abs() <= s.modulus_tol;
            let preds = [
                !near_one && s.r_star > 1.0 && s.m_rstar == s.m_star,
                (!near_one && s.r_star < 1.0) || s.m_rstar == 0,
                near_one && s.m_rstar >= 1 && s.m_rstar < s.m_star,
                !near_one && s.r_star > 1.0 && s.m_rstar >= 1 && s.m_rstar < s.m_star,
                near_one && s.m_rstar >= 1 && s.m_rstar == s.m_star,
            ];
            assert_eq!(
                preds.iter().filter(|&&p| p).count(),
                1,
                "predicates {preds:?} for summary {s:?}"
            );

            let regime = classify(&s);
            match regime.class {
                RegimeClass::StretchedExponential { alpha } => {
                    assert!(alpha > 0.0 && alpha < 1.0)
                }
                RegimeClass::PolynomialOscillatory { alpha } => assert!(alpha > 0.0),
                _ => {}
            }
        }
    }

    #[test]
    fn json_shape() {
        let r = classify_coeffs(&[-1.0, 1.0, 1.0]);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["class"]["tag"], "StretchedExponential");
        assert_eq!(v["class"]["alpha"], 0.5);
        assert_eq!(v["m_star"], 2);
        assert_eq!(v["m_rstar"], 1);
    }
}

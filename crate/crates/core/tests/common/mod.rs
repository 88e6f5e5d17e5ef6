//! Shared test oracles.

/// Principal Dirichlet eigenvalue of the spherical cap of polar half-angle
/// `psi0`, by Legendre shooting: the regular solution of
/// `u'' + cot(psi) u' + lambda u = 0`, `u(0) = 1`, first vanishes at
/// `psi0` exactly when `lambda` is the principal eigenvalue
/// (`lambda = nu (nu + 1)` with `P_nu(cos psi0) = 0`).
pub fn cap_eigenvalue_shooting(psi0: f64) -> f64 {
    assert!(psi0 > 0.0 && psi0 < std::f64::consts::PI);
    // Sign of u(psi0) flips as lambda crosses the eigenvalue from below.
    let f = |lambda: f64| shoot(lambda, psi0);
    let mut lo = 0.05f64;
    assert!(f(lo) > 0.0, "eigenvalue below the scan start");
    let mut hi = lo;
    loop {
        hi += 0.25;
        assert!(hi < 1e4, "no sign change found");
        if f(hi) < 0.0 {
            break;
        }
        lo = hi;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `u(psi0)` for the regular solution, integrated by RK4 from a series
/// start at `eps` (`u = 1 - lambda psi^2 / 4 + O(psi^4)`).
fn shoot(lambda: f64, psi0: f64) -> f64 {
    let eps = 1e-6;
    let n = 20_000usize;
    let h = (psi0 - eps) / n as f64;
    let mut psi = eps;
    let mut u = 1.0 - lambda * eps * eps / 4.0;
    let mut v = -lambda * eps / 2.0;
    let rhs = |psi: f64, u: f64, v: f64| -> (f64, f64) {
        (v, -(psi.cos() / psi.sin()) * v - lambda * u)
    };
    for _ in 0..n {
        let (k1u, k1v) = rhs(psi, u, v);
        let (k2u, k2v) = rhs(psi + 0.5 * h, u + 0.5 * h * k1u, v + 0.5 * h * k1v);
        let (k3u, k3v) = rhs(psi + 0.5 * h, u + 0.5 * h * k2u, v + 0.5 * h * k2v);
        let (k4u, k4v) = rhs(psi + h, u + h * k3u, v + h * k3v);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        psi += h;
    }
    u
}

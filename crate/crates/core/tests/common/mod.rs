//! Independent quadrature oracles for the verification suites: adaptive
//! Simpson integration and symmetric-excision principal values. Test
//! support only; the production path never calls these.

use num_complex::Complex64;

/// Adaptive Simpson to `tol`, recursing on the classic error estimate.
pub fn adaptive_simpson<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64) -> Complex64 {
    fn simpson<F: Fn(f64) -> Complex64>(f: &F, a: f64, m: f64, b: f64) -> Complex64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b))
    }
    fn rec<F: Fn(f64) -> Complex64>(
        f: &F,
        a: f64,
        b: f64,
        whole: Complex64,
        tol: f64,
        depth: u32,
    ) -> Complex64 {
        let m = 0.5 * (a + b);
        let left = simpson(f, a, 0.5 * (a + m), m);
        let right = simpson(f, m, 0.5 * (m + b), b);
        let err = (left + right - whole).norm();
        if depth == 0 || err < 15.0 * tol || !err.is_finite() {
            return left + right + (left + right - whole) / 15.0;
        }
        rec(f, a, m, left, 0.5 * tol, depth - 1) + rec(f, m, b, right, 0.5 * tol, depth - 1)
    }
    let m = 0.5 * (a + b);
    rec(f, a, b, simpson(f, a, m, b), tol, 28)
}

/// `PV int_a^b g(t)/(t - s) dt` by symmetric excision: the window
/// `|t - s| < d` contributes `int_0^d [g(s+u) - g(s-u)]/u du` with
/// paired nodes, the rest is regular. `g` must be smooth; endpoint
/// weights are removed by substitution before calling this.
pub fn pv_excision<F: Fn(f64) -> Complex64>(g: &F, a: f64, b: f64, s: f64, tol: f64) -> Complex64 {
    assert!(s > a && s < b);
    let d = 0.5 * (s - a).min(b - s);
    let diff = |u: f64| (g(s + u) - g(s - u)) / u;
    // below u0 the difference quotient is dominated by rounding noise;
    // the integrand is 2g'(s) + O(u^2) there, so one midpoint suffices
    let u0 = 1e-4 * d;
    let inner = u0 * diff(0.5 * u0);
    let paired = adaptive_simpson(&diff, u0, d, tol);
    let outer = adaptive_simpson(&|t: f64| g(t) / (t - s), a, s - d, tol)
        + adaptive_simpson(&|t: f64| g(t) / (t - s), s + d, b, tol);
    inner + paired + outer
}

// the number of half-levels is bounded, so the substitution
// t = a + (b - a) sin^2(theta) turns both Chebyshev weights into smooth
// theta-integrands; the pole moves to theta_s with a nonzero slope
fn theta_of(t: f64, a: f64, b: f64) -> f64 {
    (((t - a) / (b - a)).clamp(0.0, 1.0)).sqrt().asin()
}

/// `PV int_a^b sqrt((t-a)(b-t)) f(t)/(t - xi) dt` (second-kind weight).
pub fn pv_gc2_oracle<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, xi: f64, tol: f64) -> f64 {
    let ts = theta_of(xi, a, b);
    let w = b - a;
    let num = |th: f64| {
        let (sn, cs) = (th.sin(), th.cos());
        let t = a + w * sn * sn;
        let weighted = 2.0 * w * w * sn * sn * cs * cs * f(t);
        if (th - ts).abs() < 1e-9 {
            Complex64::new(weighted / (w * (2.0 * ts).sin()), 0.0)
        } else {
            Complex64::new(weighted * (th - ts) / (t - xi), 0.0)
        }
    };
    pv_excision(&num, 0.0, core::f64::consts::FRAC_PI_2, ts, tol).re
}

/// `PV int_a^b f(t) / (sqrt((t-a)(b-t)) (t - xi)) dt` (first-kind weight).
pub fn pv_gc1_oracle<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, xi: f64, tol: f64) -> f64 {
    let ts = theta_of(xi, a, b);
    let w = b - a;
    let num = |th: f64| {
        let sn = th.sin();
        let t = a + w * sn * sn;
        if (th - ts).abs() < 1e-9 {
            Complex64::new(2.0 * f(t) / (w * (2.0 * ts).sin()), 0.0)
        } else {
            Complex64::new(2.0 * f(t) * (th - ts) / (t - xi), 0.0)
        }
    };
    pv_excision(&num, 0.0, core::f64::consts::FRAC_PI_2, ts, tol).re
}

/// `K(k)` by adaptive quadrature of the defining integral
/// (`t = sin(theta)` form), independent of the AGM.
pub fn ellip_k_oracle(k: f64, tol: f64) -> f64 {
    adaptive_simpson(
        &|th: f64| {
            let s = th.sin();
            Complex64::new(1.0 / (1.0 - k * k * s * s).sqrt(), 0.0)
        },
        0.0,
        core::f64::consts::FRAC_PI_2,
        tol,
    )
    .re
}

//! First Riemann-Hilbert problem: `Phi1^+ - Phi1^- = 2i b_j` on the slit
//! `l_j`, symmetric on the surface, growing like `zeta^(1/2)`.
//!
//! With the removability constraint at the kernel pole (`N2 = 0`,
//! `b1 = b0 - pi N1/(k K)`) the solution collapses to
//!
//! `Phi1(zeta, u) = N0 + i u(zeta)/(zeta - xi0) * B(zeta)`,
//!
//! `B(zeta) = 2 N1 - b0/pi * I_l0(zeta) + b1/pi * I_l1(zeta)`,
//!
//! where `I_l0` and `I_l1` are the Cauchy transforms of the weight
//! `(xi - xi0)/sqrt|p(xi)|` over `[m, oo)` and `[0, 1]`. The bracket
//! `B` vanishes at `xi0`, which is exactly the removability of the pole.

use num_complex::Complex64;
// in no_std builds the Float trait provides the f64 math methods;
// with std in the crate graph the inherent ones win and this goes idle
#[allow(unused_imports)]
use num_traits::Float;

use crate::params::{DerivedConstants, ModelParams};
use crate::quadrature::{cauchy_gc1_near, integrate_gc1, ChebSeries};
use crate::surface::{abs_p, Side, SurfacePoint};

use core::f64::consts::PI;

pub(crate) fn dist_to_interval(z: Complex64, a: f64, b: f64) -> f64 {
    let x = z.re.clamp(a, b);
    (z - x).norm()
}

/// `int_m^oo (xi - xi0) dxi / (sqrt|p(xi)| (xi - z))` for `z` off `[m, oo)`.
///
/// Evaluated after the inversion `xi = 1/s` as a first-kind Chebyshev
/// integral on `[0, 1/m]`; targets close to the contour are handled by
/// subtracting the pole against the closed-form weight integral, so the
/// accuracy is uniform up to distances far below the node spacing.
pub(crate) fn cauchy_l0(z: Complex64, m: f64, xi0: f64, n: usize) -> Complex64 {
    let c = 1.0 / m;
    let sqrt_m = m.sqrt();
    let g = |s: f64| (1.0 - s * xi0) / (sqrt_m * (1.0 - s).sqrt());
    if z.norm() < 1e-14 {
        // target at the origin: 1/(1 - s z) == 1
        return integrate_gc1(|s| Complex64::new(g(s), 0.0), 0.0, c, n);
    }
    let sigma = 1.0 / z;
    // I = -(1/z) int g(s) / (sqrt(s(c-s)) (s - sigma)) ds
    let body = if dist_to_interval(sigma, 0.0, c) > 0.05 * c {
        integrate_gc1(|s| g(s) / (s - sigma), 0.0, c, n)
    } else {
        cauchy_gc1_near(|s| Complex64::new(g(s), 0.0), c, sigma)
    };
    -body / z
}

/// `int_0^1 (tau - xi0) dtau / (sqrt|p(tau)| (tau - z))` for `z` off `[0, 1]`,
/// with the same near-contour pole subtraction.
pub(crate) fn cauchy_l1(z: Complex64, m: f64, xi0: f64, n: usize) -> Complex64 {
    let h = |t: f64| (t - xi0) / (m - t).sqrt();
    if dist_to_interval(z, 0.0, 1.0) > 0.05 {
        integrate_gc1(|t| h(t) / (t - z), 0.0, 1.0, n)
    } else {
        cauchy_gc1_near(|t| Complex64::new(h(t), 0.0), 1.0, z)
    }
}

/// The solved first problem: constants plus the spectral table for the
/// principal-value form of the `l1` transform.
#[derive(Debug, Clone)]
pub struct Phi1 {
    pub n0: f64,
    pub n1: f64,
    pub b0: f64,
    pub b1: f64,
    m: f64,
    xi0: f64,
    n_quad: usize,
    /// First-kind coefficients of `(tau - xi0)/sqrt(m - tau)` on `[0, 1]`.
    i1_series: ChebSeries,
}

impl Phi1 {
    pub fn new(p: &ModelParams, d: &DerivedConstants) -> Phi1 {
        let (m, xi0) = (p.m, p.xi0);
        let i1_series = ChebSeries::fit_first(
            |t| Complex64::new((t - xi0) / (m - t).sqrt(), 0.0),
            p.quad_order,
            (0.0, 1.0),
        );
        Phi1 {
            n0: p.n0_star,
            n1: p.n1,
            b0: p.b0,
            b1: d.b1,
            m,
            xi0,
            n_quad: 4 * p.quad_order,
            i1_series,
        }
    }

    /// The bracket multiplying `i u/(zeta - xi0)`; vanishes at `xi0`.
    pub fn bracket(&self, z: Complex64) -> Complex64 {
        2.0 * self.n1 - self.b0 / PI * cauchy_l0(z, self.m, self.xi0, self.n_quad)
            + self.b1 / PI * cauchy_l1(z, self.m, self.xi0, self.n_quad)
    }

    /// `Phi1` at an interior surface point. Not defined exactly at the
    /// removable singularity `zeta = xi0`; evaluate nearby instead.
    pub fn at(&self, pt: SurfacePoint) -> Complex64 {
        let u = pt.u(self.m);
        self.n0 + Complex64::i() * u * self.bracket(pt.zeta) / (pt.zeta - self.xi0)
    }

    /// The density `g0` of the side values on `l1`;
    /// `g0 = 2 N1` when both slit constants vanish.
    pub fn g0(&self, xi: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&xi));
        let i0 = cauchy_l0(Complex64::new(xi, 0.0), self.m, self.xi0, self.n_quad);
        let pv_i1 = self.i1_series.pv_integral(xi);
        2.0 * self.n1 - self.b0 / PI * i0.re + self.b1 / PI * pv_i1.re
    }

    /// `Re Phi1^+` on the chosen side of `l1`:
    /// `N0 +/- sqrt|p(xi)| g0(xi) / (xi - xi0)`.
    pub fn re_side_l1(&self, xi: f64, side: Side) -> f64 {
        self.n0 + side.signum() * abs_p(xi, self.m).sqrt() * self.g0(xi) / (xi - self.xi0)
    }

    /// Full one-sided boundary value on `l1` (imaginary part is `b1`).
    pub fn side_l1(&self, xi: f64, side: Side) -> Complex64 {
        Complex64::new(self.re_side_l1(xi, side), self.b1)
    }
}

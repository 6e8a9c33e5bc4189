//! Model and numeric parameters, validation, and the closed-form
//! derived constants of the solution family.

use alloc::string::String;
use alloc::vec::Vec;
use num_complex::Complex64;
// in no_std builds the Float trait provides the f64 math methods;
// with std in the crate graph the inherent ones win and this goes idle
#[allow(unused_imports)]
use num_traits::Float;

use crate::elliptic::ellip_k;

use core::f64::consts::PI;

/// All inputs of one solve. Immutable after construction.
///
/// The model constants are the shear-modulus ratio `kappa = mu1/mu0` and
/// the normalized stresses `tau1_hat = tau1/mu0` (inside the inclusion)
/// and `tau1_inf_hat = tau1_inf/mu0` (at infinity). The stress `tau2` is
/// identically zero in the decoupled case solved here and is not a
/// parameter. The map parameters are the slit endpoint `m > 1`, the
/// translation `N0* = N0 - a1` (with `a1` fixed to zero), the scaling
/// `N1 != 0` and the free constant `b0`. The auxiliary points `xi0 < 0`
/// (kernel pole) and `zeta0` (factorization start, off the real axis on
/// the upper sheet) do not affect the mapped shape.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    pub kappa: f64,
    pub tau1_hat: f64,
    pub tau1_inf_hat: f64,
    pub m: f64,
    pub n0_star: f64,
    pub n1: f64,
    pub b0: f64,
    pub xi0: f64,
    pub zeta0: Complex64,
    /// Chebyshev/Gauss order `N` of the spectral rules.
    pub quad_order: usize,
    /// Contour samples per slit side.
    pub n_points: usize,
    /// Residual tolerance used by the diagnostics.
    pub tol: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            kappa: 0.5,
            tau1_hat: -1.5,
            tau1_inf_hat: -2.0,
            m: 4.0,
            n0_star: 0.0,
            n1: 1.0,
            b0: 0.0,
            xi0: -1.0,
            zeta0: Complex64::new(0.5, 0.75),
            quad_order: 64,
            n_points: 400,
            tol: 1.0e-6,
        }
    }
}

/// One validation failure.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// Stable machine-readable code, e.g. `"kappa singular"`.
    pub code: &'static str,
    pub message: String,
}

/// Outcome of [`validate`]; passes iff no violations were recorded.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, code: &'static str, message: String) {
        self.violations.push(Violation { code, message });
    }
}

/// Checks the parameter invariants and the two singular cases of the
/// model (`kappa = 1` and `tau1 = tau1_inf`), for which no solution
/// exists.
pub fn validate(p: &ModelParams) -> ValidationReport {
    let mut r = ValidationReport::default();
    if p.kappa == 1.0 {
        r.push("kappa singular", String::from("kappa = 1 makes lambda = kappa/(1 - kappa) undefined"));
    }
    if p.kappa <= 0.0 {
        r.push("kappa nonpositive", alloc::format!("kappa = {} must be > 0", p.kappa));
    }
    if p.tau1_hat == p.tau1_inf_hat {
        r.push(
            "no solution exists",
            alloc::format!("tau1/mu0 = tau1_inf/mu0 = {} is the singular loading", p.tau1_hat),
        );
    }
    if p.tau1_hat == 0.0 {
        r.push("tau1 zero", String::from("tau1 = 0 leaves the map undefined"));
    }
    if p.m <= 1.0 {
        r.push("m out of range", alloc::format!("m = {} must exceed 1", p.m));
    }
    if p.n1 == 0.0 {
        r.push("n1 zero", String::from("scaling parameter N1 must be nonzero"));
    }
    if p.xi0 >= 0.0 {
        r.push(
            "xi0 on contour side",
            alloc::format!("xi0 = {} must be negative to keep the kernel pole off the slits", p.xi0),
        );
    }
    if p.zeta0.im == 0.0 {
        r.push(
            "zeta0 real",
            String::from("zeta0 must lie off the real axis so its conjugate pair is distinct"),
        );
    }
    if p.quad_order < 8 {
        r.push("quad_order too small", alloc::format!("quad_order = {} < 8", p.quad_order));
    }
    if p.n_points < 16 {
        r.push("n_points too small", alloc::format!("n_points = {} < 16", p.n_points));
    }
    if p.tol <= 0.0 || p.tol.is_nan() {
        r.push("tol nonpositive", alloc::format!("tol = {} must be positive", p.tol));
    }
    r
}

/// Closed-form constants shared by every stage of one solve.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedConstants {
    /// `lambda = kappa / (1 - kappa)`.
    pub lambda: f64,
    /// Elliptic modulus `k = m^(-1/2)`.
    pub k: f64,
    /// Complete elliptic integral `K(k)`.
    pub big_k: f64,
    /// Complementary integral `K' = K(sqrt(1 - k^2))`.
    pub big_kp: f64,
    /// `b1 = b0 - pi N1 / (k K)`.
    pub b1: f64,
    /// Cyclic period `A = -4 i k K` of `d xi / u`.
    pub a_period: Complex64,
    /// Cyclic period `B = 4 k K'`.
    pub b_period: f64,
    /// The ratio `lambda (tau1_inf - tau1) / (i tau1)` that `Phi1/Phi2`
    /// approaches at infinity.
    pub infinity_ratio: Complex64,
}

/// Computes [`DerivedConstants`]; requires a passing [`validate`].
pub fn derive(p: &ModelParams) -> DerivedConstants {
    let lambda = p.kappa / (1.0 - p.kappa);
    let k = 1.0 / p.m.sqrt();
    let big_k = ellip_k(k);
    let big_kp = ellip_k((1.0 - k * k).sqrt());
    let b1 = p.b0 - PI * p.n1 / (k * big_k);
    let a_period = Complex64::new(0.0, -4.0 * k * big_k);
    let b_period = 4.0 * k * big_kp;
    let infinity_ratio = lambda * (p.tau1_inf_hat - p.tau1_hat)
        / Complex64::new(0.0, p.tau1_hat);
    DerivedConstants {
        lambda,
        k,
        big_k,
        big_kp,
        b1,
        a_period,
        b_period,
        infinity_ratio,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{gauss_legendre, integrate_gl};

    #[test]
    fn default_params_pass() {
        assert!(validate(&ModelParams::default()).is_pass());
        // the regimes of the published figures pass as well
        let fig1 = ModelParams { m: 1.6, ..ModelParams::default() };
        assert!(validate(&fig1).is_pass());
    }

    #[test]
    fn singular_cases_are_flagged() {
        let p = ModelParams { kappa: 1.0, ..ModelParams::default() };
        let r = validate(&p);
        assert!(r.violations.iter().any(|v| v.code == "kappa singular"));
        let p = ModelParams { tau1_hat: -2.0, tau1_inf_hat: -2.0, ..ModelParams::default() };
        let r = validate(&p);
        assert!(r.violations.iter().any(|v| v.code == "no solution exists"));
        let p = ModelParams { xi0: 0.5, ..ModelParams::default() };
        assert!(!validate(&p).is_pass());
        let p = ModelParams { zeta0: Complex64::new(0.5, 0.0), ..ModelParams::default() };
        assert!(!validate(&p).is_pass());
    }

    #[test]
    fn derived_values_m4() {
        let p = ModelParams { m: 4.0, b0: 0.0, n1: 1.0, ..ModelParams::default() };
        let d = derive(&p);
        assert_eq!(d.k, 0.5);
        assert!((d.big_k - 1.685750354812596).abs() < 1e-12);
        // b1 = -pi / (0.5 K)
        let b1 = -PI / (0.5 * d.big_k);
        assert!((d.b1 - b1).abs() < 1e-12);
        assert!((d.b1 + 3.7272).abs() < 1e-4);
        // A = -4ikK = -2 K(1/2) i
        assert!(d.a_period.re == 0.0);
        assert!((d.a_period.im + 3.371500709625192).abs() < 1e-12);
        assert!(d.a_period.im < 0.0 && d.b_period > 0.0);
    }

    #[test]
    fn b1_is_affine() {
        // slope 1 in b0 and -pi/(kK) in N1, to machine precision
        let base = ModelParams::default();
        let d0 = derive(&base);
        let db0 = derive(&ModelParams { b0: base.b0 + 2.5, ..base.clone() });
        assert!((db0.b1 - d0.b1 - 2.5).abs() < 1e-14);
        let dn1 = derive(&ModelParams { n1: base.n1 + 1.0, ..base.clone() });
        let slope = -PI / (d0.k * d0.big_k);
        assert!((dn1.b1 - d0.b1 - slope).abs() < 1e-12);
    }

    #[test]
    fn legendre_consistency_of_big_k() {
        // independent quadrature of int_0^1 dt / sqrt((1-t^2)(1-k^2 t^2)),
        // via t = sin(theta) to remove the endpoint weight
        let rule = gauss_legendre(200);
        for &k in &[0.2, 0.5, 0.9] {
            let quad = integrate_gl(
                |th: f64| {
                    let s = th.sin();
                    Complex64::new(1.0 / (1.0 - k * k * s * s).sqrt(), 0.0)
                },
                0.0,
                PI / 2.0,
                &rule,
            );
            assert!((quad.re - ellip_k(k)).abs() < 1e-10, "k = {k}");
        }
    }

    #[test]
    fn periods_match_cycle_quadrature() {
        // A = -2i int_m^oo dxi/sqrt|p|, B = 2 int_1^m dxi/sqrt|p|
        use crate::quadrature::{integrate_gc1, semi_infinite};
        for &m in &[1.6, 2.0, 4.0, 5.0] {
            let p = ModelParams { m, ..ModelParams::default() };
            let d = derive(&p);
            let tail = semi_infinite(|_| Complex64::new(1.0, 0.0), m, 256).unwrap();
            let a_quad = Complex64::new(0.0, -2.0) * tail;
            assert!((a_quad - d.a_period).norm() < 1e-10, "m = {m}");
            let b_quad = 2.0
                * integrate_gc1(
                    |xi| Complex64::new(1.0 / xi.sqrt(), 0.0),
                    1.0,
                    m,
                    256,
                );
            assert!((b_quad.re - d.b_period).abs() < 1e-10, "m = {m}");
        }
    }
}

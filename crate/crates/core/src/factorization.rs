//! Factorization of the piecewise-constant coefficient of the second
//! Riemann-Hilbert problem: `X^+ = -X^-` on `l0`, `X^+ = X^-` on `l1`.
//!
//! `X` is assembled from a weighted transform over `l0` plus two path
//! integrals along a contour `gamma` from `q0 = (zeta0, +)` to the point
//! `q1 = (zeta1, . )` delivered by the Jacobi inversion problem. The
//! inversion is solved through the elliptic sine; whether `q1` falls on
//! the upper or lower sheet is decided by which of the two integer
//! assignments actually snaps to integers.

use alloc::string::String;
use alloc::vec::Vec;
use num_complex::Complex64;
// in no_std builds the Float trait provides the f64 math methods;
// with std in the crate graph the inherent ones win and this goes idle
#[allow(unused_imports)]
use num_traits::Float;

use crate::elliptic::jacobi_sn_complex;
use crate::params::{DerivedConstants, ModelParams};
use crate::quadrature::{
    gauss_legendre, path_integral, EndpointKind, PathSpec, QuadRule,
};
use crate::rh1::cauchy_l0;
use crate::surface::{abs_p, sqrt_p, Sheet, Side, SurfacePoint};
use crate::quadrature::ChebSeries;

/// Integer snapping: accepted silently below [`SNAP_ACCEPT`], accepted
/// with a warning up to [`SNAP_HARD`], rejected above.
pub const SNAP_ACCEPT: f64 = 1.0e-6;
pub const SNAP_HARD: f64 = 1.0e-3;

#[derive(Debug, Clone, PartialEq)]
pub enum FactorError {
    /// `zeta1` landed on a slit, or no slit-avoiding route exists.
    PathBlocked(String),
    /// Neither sheet assignment produced integers within tolerance.
    NoIntegerAssignment { upper_dist: f64, lower_dist: f64 },
    /// A path quadrature failed.
    Quadrature(crate::quadrature::QuadError),
}

impl core::fmt::Display for FactorError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FactorError::PathBlocked(s) => write!(f, "cannot route integration path: {s}"),
            FactorError::NoIntegerAssignment { upper_dist, lower_dist } => write!(
                f,
                "homology integers do not snap (upper {upper_dist:.2e}, lower {lower_dist:.2e})"
            ),
            FactorError::Quadrature(e) => write!(f, "path quadrature failed: {e}"),
        }
    }
}

/// Solution of the Jacobi inversion problem.
#[derive(Debug, Clone)]
pub struct JacobiSolution {
    /// Right-hand side `h = int_0^zeta0 dxi/p^(1/2) - i k K`.
    pub h: Complex64,
    /// Affix of `q1`, `zeta1 = sn^2(i h / (2k))`.
    pub zeta1: Complex64,
    pub sheet1: Sheet,
    pub n_a: i32,
    pub n_b: i32,
    /// Defect of the inversion relation with the abelian integrals
    /// recomputed along independent paths.
    pub residual: f64,
    /// Distance of the winning assignment from exact integers.
    pub snap_distance: f64,
    /// Distance of the losing assignment (should be far from integers).
    pub rejected_distance: f64,
}

/// One leg of the `gamma` contour, with the sheet its `u` lives on.
#[derive(Debug, Clone)]
struct GammaLeg {
    path: PathSpec,
    sheet: Sheet,
}

impl GammaLeg {
    fn u_at(&self, tau: Complex64, m: f64) -> Complex64 {
        match self.sheet {
            Sheet::Upper => sqrt_p(tau, m),
            Sheet::Lower => -sqrt_p(tau, m),
        }
    }
}

/// Segment `[a, b]` crosses a slit (interior crossing of `[0,1]` or
/// `[m, oo)` on the real axis, within `margin` of it).
fn crosses_slit(a: Complex64, b: Complex64, m: f64, margin: f64) -> bool {
    let hits = |x: f64| (-margin..=1.0 + margin).contains(&x) || x >= m - margin;
    if a.im == 0.0 && b.im == 0.0 {
        // collinear with the axis: overlap test
        let (lo, hi) = if a.re < b.re { (a.re, b.re) } else { (b.re, a.re) };
        return hi.min(1.0 + margin) > lo.max(-margin) || hi >= m - margin;
    }
    if (a.im > 0.0) == (b.im > 0.0) && a.im != 0.0 && b.im != 0.0 {
        return false;
    }
    // interior crossing point (endpoints touching the axis are allowed)
    let t = -a.im / (b.im - a.im);
    if !(1e-12..=1.0 - 1e-12).contains(&t) {
        return false;
    }
    hits(a.re + t * (b.re - a.re))
}

fn polyline_ok(points: &[Complex64], m: f64, margin: f64) -> bool {
    points.windows(2).all(|w| !crosses_slit(w[0], w[1], m, margin))
}

/// A slit-avoiding polyline from `from` to `to` that changes half-planes
/// only across the negative real axis, keeping every realization in the
/// homotopy class of the composite through the branch point at the
/// origin. `bias` selects among homotopic detours so a second,
/// independent realization exists.
fn route(from: Complex64, to: Complex64, m: f64, bias: f64, xi0: f64) -> Option<Vec<Complex64>> {
    let margin = 0.1 * (m - 1.0).min(1.0);
    let straight = alloc::vec![from, to];
    if polyline_ok(&straight, m, margin) && bias == 1.0 {
        return Some(straight);
    }
    // lift over the slits on the side of the dominant endpoint
    let sign = if from.im != 0.0 { from.im.signum() } else { to.im.signum() };
    let sign = if sign == 0.0 { 1.0 } else { sign };
    let height = bias * (1.0 + from.im.abs().max(to.im.abs()));
    for scale in [1.0, 2.0, 4.0, 8.0] {
        let w = Complex64::new(0.5 * (from.re + to.re), sign * height * scale);
        let cand = alloc::vec![from, w, to];
        if polyline_ok(&cand, m, margin) {
            return Some(cand);
        }
    }
    // endpoints on opposite sides: cross left of the slits, away from
    // both the tip and the kernel pole
    let neg = Complex64::new((xi0 - bias).min(-2.0 * bias), 0.0);
    let cand = alloc::vec![from, neg, to];
    if polyline_ok(&cand, m, margin) {
        return Some(cand);
    }
    None
}

/// `int_0^zeta dtau / p^(1/2)(tau)` on the upper sheet, along a
/// slit-avoiding route from the branch point.
fn abelian_from_zero(
    zeta: Complex64,
    m: f64,
    rule: &QuadRule,
    bias: f64,
    xi0: f64,
) -> Result<Complex64, FactorError> {
    let zero = Complex64::new(0.0, 0.0);
    let wp = route(zero, zeta, m, bias, xi0)
        .ok_or_else(|| FactorError::PathBlocked(alloc::format!("0 -> {zeta}")))?;
    let path = PathSpec::with_flags(wp, EndpointKind::InverseSqrt, EndpointKind::Regular);
    path_integral(|t| 1.0 / sqrt_p(t, m), &path, rule).map_err(FactorError::Quadrature)
}

/// Solves the Jacobi inversion problem for the factorization.
pub fn solve_jacobi(p: &ModelParams, d: &DerivedConstants) -> Result<JacobiSolution, FactorError> {
    let m = p.m;
    let rule = gauss_legendre((2 * p.quad_order).max(96));
    let ikk = Complex64::new(0.0, d.k * d.big_k);

    let int_zeta0 = abelian_from_zero(p.zeta0, m, &rule, 1.0, p.xi0)?;
    let h = int_zeta0 - ikk;
    let zeta1 = {
        let s = jacobi_sn_complex(Complex64::i() * h / (2.0 * d.k), d.k);
        s * s
    };
    // reject q1 landing on (or hugging) a slit
    if zeta1.im.abs() < 1e-9
        && ((-1e-9..=1.0 + 1e-9).contains(&zeta1.re) || zeta1.re >= m - 1e-9)
    {
        return Err(FactorError::PathBlocked(alloc::format!("zeta1 = {zeta1} lies on a slit")));
    }
    let int_zeta1 = abelian_from_zero(zeta1, m, &rule, 1.0, p.xi0)?;

    let period_a = 4.0 * d.k * d.big_k; // |A|, A = -i period_a
    let period_b = d.b_period;
    let assignment = |i: Complex64| {
        let na = -i.im / period_a;
        let nb = i.re / period_b;
        let dist = (na - na.round()).abs().max((nb - nb.round()).abs());
        (na.round() as i32, nb.round() as i32, dist)
    };
    let i_minus = int_zeta0 - int_zeta1 - ikk;
    let i_plus = int_zeta0 + int_zeta1 - ikk;
    let (na_u, nb_u, dist_u) = assignment(i_minus);
    let (na_l, nb_l, dist_l) = assignment(i_plus);

    let (sheet1, n_a, n_b, snap, rejected) = if dist_u <= SNAP_HARD {
        (Sheet::Upper, na_u, nb_u, dist_u, dist_l)
    } else if dist_l <= SNAP_HARD {
        (Sheet::Lower, na_l, nb_l, dist_l, dist_u)
    } else {
        return Err(FactorError::NoIntegerAssignment { upper_dist: dist_u, lower_dist: dist_l });
    };

    // defect of the inversion relation, with both abelian integrals
    // recomputed along alternative (homotopic) routes
    let alt_zeta0 = abelian_from_zero(p.zeta0, m, &rule, 1.4, p.xi0)?;
    let alt_zeta1 = abelian_from_zero(zeta1, m, &rule, 1.4, p.xi0)?;
    let signed = match sheet1 {
        Sheet::Upper => alt_zeta1,
        Sheet::Lower => -alt_zeta1,
    };
    let defect = signed + Complex64::new(0.0, -(n_a as f64) * period_a)
        + Complex64::new(n_b as f64 * period_b, 0.0)
        - (alt_zeta0 - ikk);
    Ok(JacobiSolution {
        h,
        zeta1,
        sheet1,
        n_a,
        n_b,
        residual: defect.norm(),
        snap_distance: snap,
        rejected_distance: rejected,
    })
}

/// The factorizing function `X` for one parameter set.
#[derive(Debug, Clone)]
pub struct Factorizer {
    pub jac: JacobiSolution,
    pub x_inf: f64,
    m: f64,
    xi0: f64,
    zeta0: Complex64,
    n_quad: usize,
    gamma: Vec<GammaLeg>,
    rule: QuadRule,
    /// First-kind series of `(1 - s xi0)/sqrt(1 - s)` on `[0, 1/m]`, for
    /// the principal value of the `l0` transform on its own contour.
    pv_l0_series: ChebSeries,
}

impl Factorizer {
    pub fn build(p: &ModelParams, d: &DerivedConstants) -> Result<Factorizer, FactorError> {
        let jac = solve_jacobi(p, d)?;
        let m = p.m;
        let rule = gauss_legendre((2 * p.quad_order).max(96));
        let gamma = build_gamma(p.zeta0, jac.zeta1, jac.sheet1, m, p.xi0)?;
        let xi0 = p.xi0;
        let pv_l0_series = ChebSeries::fit_first(
            |s| Complex64::new((1.0 - s * xi0) / (1.0 - s).sqrt(), 0.0),
            p.quad_order,
            (0.0, 1.0 / m),
        );
        let x_inf = ((jac.zeta1 - xi0) / (p.zeta0 - xi0)).norm();
        Ok(Factorizer {
            jac,
            x_inf,
            m,
            xi0,
            zeta0: p.zeta0,
            n_quad: 4 * p.quad_order,
            gamma,
            rule,
            pv_l0_series,
        })
    }

    /// `(1/2 - 2 n_a)` of the exponent's transform term.
    fn na_factor(&self) -> f64 {
        0.5 - 2.0 * self.jac.n_a as f64
    }

    /// `X` at an interior surface point (poles at `q1`, `q1*`).
    pub fn at(&self, pt: SurfacePoint) -> Complex64 {
        let u = pt.u(self.m);
        self.exponent(pt.zeta, u).exp()
    }

    fn exponent(&self, zeta: Complex64, u: Complex64) -> Complex64 {
        let i0 = cauchy_l0(zeta, self.m, self.xi0, self.n_quad);
        let first = self.na_factor() * u / (Complex64::i() * (zeta - self.xi0)) * i0;
        let mut j = Complex64::new(0.0, 0.0);
        let mut j_conj = Complex64::new(0.0, 0.0);
        for leg in &self.gamma {
            let m = self.m;
            let kernel = |tau: Complex64| {
                let ut = leg.u_at(tau, m);
                ((zeta - self.xi0) / (tau - self.xi0)
                    + (u / ut) * (tau - self.xi0) / (zeta - self.xi0))
                    / (tau - zeta)
            };
            j += path_integral(kernel, &leg.path, &self.rule)
                .expect("gamma integrand finite off the path");
            // symmetric path: conjugated waypoints, u-term negated
            let conj_path = PathSpec::with_flags(
                leg.path.waypoints.iter().map(|w| w.conj()).collect(),
                leg.path.start,
                leg.path.end,
            );
            let kernel_star = |tau: Complex64| {
                let ut = leg.u_at(tau, m);
                ((zeta - self.xi0) / (tau - self.xi0)
                    - (u / ut) * (tau - self.xi0) / (zeta - self.xi0))
                    / (tau - zeta)
            };
            j_conj += path_integral(kernel_star, &conj_path, &self.rule)
                .expect("gamma integrand finite off the path");
        }
        first - 0.5 * (j + j_conj)
    }

    /// The three real side-value building blocks on `l1`:
    /// `X(xi+/-) = exp(-/+ a - b +/- c)`.
    fn l1_parts(&self, xi: f64) -> (f64, f64, f64) {
        let sp = abs_p(xi, self.m).sqrt();
        let i0 = cauchy_l0(Complex64::new(xi, 0.0), self.m, self.xi0, self.n_quad);
        let a = self.na_factor() * sp / (xi - self.xi0) * i0.re;
        let (b, c) = self.gamma_side_parts(xi, sp);
        (a, b, c)
    }

    fn gamma_side_parts(&self, xi: f64, sqrt_abs_p: f64) -> (f64, f64) {
        let mut b = 0.0;
        let mut c = 0.0;
        for leg in &self.gamma {
            let m = self.m;
            let xi0 = self.xi0;
            let fb = |tau: Complex64| (xi - xi0) / ((tau - xi0) * (tau - xi));
            let fc = move |tau: Complex64| {
                let ut = leg.u_at(tau, m);
                Complex64::i() * sqrt_abs_p * (tau - xi0) / (ut * (xi - xi0) * (tau - xi))
            };
            b += path_integral(fb, &leg.path, &self.rule)
                .expect("gamma integrand finite off the path")
                .re;
            c += path_integral(fc, &leg.path, &self.rule)
                .expect("gamma integrand finite off the path")
                .re;
        }
        (b, c)
    }

    /// One-sided value of `X` on `l1` (real and positive).
    pub fn side_l1(&self, xi: f64, side: Side) -> f64 {
        let (a, b, c) = self.l1_parts(xi);
        let s = side.signum();
        (-s * a - b + s * c).exp()
    }

    /// Both `Y` combinations `1/X(xi+) +/- 1/X(xi-) = 2 e^b {cosh, sinh}(a - c)`.
    pub fn y_pair_l1(&self, xi: f64) -> (f64, f64) {
        let (a, b, c) = self.l1_parts(xi);
        let e = b.exp();
        (2.0 * e * (a - c).cosh(), 2.0 * e * (a - c).sinh())
    }

    /// One-sided value of `X` on `l0` (purely imaginary):
    /// `X(xi+/-) = i exp(+/- a_pv - b -/+ c)`.
    pub fn side_l0(&self, xi: f64, side: Side) -> Complex64 {
        debug_assert!(xi > self.m);
        let sp = abs_p(xi, self.m).sqrt();
        let a = self.na_factor() * sp / (xi - self.xi0) * self.pv_l0_transform(xi);
        let (b, c) = self.gamma_side_parts(xi, sp);
        let s = side.signum();
        Complex64::new(0.0, (s * a - b - s * c).exp())
    }

    /// Principal value of the `l0` transform at `xi > m` on its own
    /// contour, through the inversion substitution.
    fn pv_l0_transform(&self, xi: f64) -> f64 {
        let sigma = 1.0 / xi;
        -self.pv_l0_series.pv_integral(sigma).re / (xi * self.m.sqrt())
    }

    /// The limit `X -> i X_inf` at infinity; `X_inf = |(zeta1 - xi0)/(zeta0 - xi0)|`.
    pub fn x_infinity(&self) -> f64 {
        self.x_inf
    }

    /// `u` at `q1` (on its sheet).
    pub fn u1(&self) -> Complex64 {
        SurfacePoint { zeta: self.jac.zeta1, sheet: self.jac.sheet1 }.u(self.m)
    }

    pub fn q1(&self) -> SurfacePoint {
        SurfacePoint { zeta: self.jac.zeta1, sheet: self.jac.sheet1 }
    }

    pub fn zeta0(&self) -> Complex64 {
        self.zeta0
    }
}

fn build_gamma(
    zeta0: Complex64,
    zeta1: Complex64,
    sheet1: Sheet,
    m: f64,
    xi0: f64,
) -> Result<Vec<GammaLeg>, FactorError> {
    let zero = Complex64::new(0.0, 0.0);
    match sheet1 {
        Sheet::Upper => {
            let wp = route(zeta0, zeta1, m, 1.0, xi0)
                .ok_or_else(|| FactorError::PathBlocked(alloc::format!("{zeta0} -> {zeta1}")))?;
            Ok(alloc::vec![GammaLeg {
                path: PathSpec::regular(wp),
                sheet: Sheet::Upper,
            }])
        }
        Sheet::Lower => {
            // descend to the branch point on the upper sheet, continue
            // on the lower sheet
            let down = route(zeta0, zero, m, 1.0, xi0)
                .ok_or_else(|| FactorError::PathBlocked(alloc::format!("{zeta0} -> 0")))?;
            let up = route(zero, zeta1, m, 1.0, xi0)
                .ok_or_else(|| FactorError::PathBlocked(alloc::format!("0 -> {zeta1}")))?;
            Ok(alloc::vec![
                GammaLeg {
                    path: PathSpec::with_flags(down, EndpointKind::Regular, EndpointKind::InverseSqrt),
                    sheet: Sheet::Upper,
                },
                GammaLeg {
                    path: PathSpec::with_flags(up, EndpointKind::InverseSqrt, EndpointKind::Regular),
                    sheet: Sheet::Lower,
                },
            ])
        }
    }
}

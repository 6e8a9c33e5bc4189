//! Traces the conformal map along the slit sides, recovers the inclusion
//! contour, verifies the half-plane image, and packages the diagnostic
//! residuals of every solver stage.

use alloc::string::String;
use alloc::vec::Vec;
use num_complex::Complex64;
// in no_std builds the Float trait provides the f64 math methods;
// with std in the crate graph the inherent ones win and this goes idle
#[allow(unused_imports)]
use num_traits::Float;

use crate::params::{ModelParams, Violation};
use crate::quadrature::{integrate_gc1, semi_infinite};
use crate::solver::{SolveError, SolverState};
use crate::surface::{sqrt_p, Sheet, Side, SideValue, Slit, SurfacePoint};

use core::f64::consts::PI;

/// One traced boundary point with its slit provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourPoint {
    pub x: f64,
    pub y: f64,
    pub xi: f64,
    pub side: Side,
}

/// The recovered inclusion boundary, ordered plus side (`xi` ascending)
/// then minus side (descending), so consecutive points are adjacent on
/// the physical curve.
#[derive(Debug, Clone)]
pub struct InclusionContour {
    pub points: Vec<ContourPoint>,
    /// Worst side mismatch at the slit tips (the two sides must meet).
    pub closure_error: f64,
    pub min_abs_y: f64,
    pub signed_area: f64,
    pub centroid: (f64, f64),
    /// Sign of the half-plane the inclusion sits in.
    pub half_plane_sign: i8,
    /// Max pairwise point distance; the scale for relative tolerances.
    pub diameter: f64,
    /// All points strictly on one side of the boundary line `y = 0`.
    pub embedded: bool,
    /// Advisory O(n^2) segment sweep.
    pub self_intersecting: bool,
}

#[derive(Debug, Clone)]
pub enum TraceError {
    /// The two sides fail to meet at the slit tips far beyond tolerance;
    /// the solve is inconsistent.
    ClosureInconsistent { closure: f64, diameter: f64 },
}

impl core::fmt::Display for TraceError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TraceError::ClosureInconsistent { closure, diameter } => write!(
                f,
                "contour does not close: mismatch {closure:.3e} on diameter {diameter:.3e}"
            ),
        }
    }
}

/// Chebyshev-clustered sample abscissas on `(0, 1)`; the map varies
/// fastest near the slit tips.
pub fn trace_grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| 0.5 * (1.0 - (PI * (2 * i + 1) as f64 / (2 * n) as f64).cos()))
        .collect()
}

/// Maps one slit-side point; `l1` sides produce the inclusion boundary,
/// `l0` sides the half-plane boundary.
pub fn map_omega(state: &SolverState, sv: SideValue) -> Complex64 {
    state.omega_side(sv)
}

/// Traces the inclusion boundary on `n_points` samples per side.
pub fn trace_inclusion(state: &SolverState) -> Result<InclusionContour, TraceError> {
    trace_inclusion_sized(state, state.params.n_points)
}

pub fn trace_inclusion_sized(state: &SolverState, n: usize) -> Result<InclusionContour, TraceError> {
    let grid = trace_grid(n);
    let mut points = Vec::with_capacity(2 * n);
    for &xi in &grid {
        let z = map_omega(state, SideValue::new(xi, Slit::L1, Side::Plus));
        points.push(ContourPoint { x: z.re, y: z.im, xi, side: Side::Plus });
    }
    for &xi in grid.iter().rev() {
        let z = map_omega(state, SideValue::new(xi, Slit::L1, Side::Minus));
        points.push(ContourPoint { x: z.re, y: z.im, xi, side: Side::Minus });
    }

    // the two sides meet at the tip images; compare their even part near
    // each tip against the shared tip value (the odd part carries the
    // physical sqrt(xi) opening of the curve and cancels)
    let closure_error = {
        let probe = 1e-8;
        let mut worst = 0.0f64;
        for tip in [0.0, 1.0] {
            let xi = if tip == 0.0 { probe } else { 1.0 - probe };
            let plus = map_omega(state, SideValue::new(xi, Slit::L1, Side::Plus));
            let minus = map_omega(state, SideValue::new(xi, Slit::L1, Side::Minus));
            let at_tip = map_omega(state, SideValue::new(tip, Slit::L1, Side::Plus));
            worst = worst.max((plus + minus - 2.0 * at_tip).norm());
        }
        worst
    };

    let gap = |i: usize, j: usize| {
        let (a, b) = (&points[i], &points[j]);
        ((a.x - b.x).powi(2) + (a.y - b.y).powi(2)).sqrt()
    };
    let diameter = {
        let mut d = 0.0f64;
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                d = d.max(gap(i, j));
            }
        }
        d
    };
    if closure_error > 1e3 * state.params.tol * diameter.max(1e-300) {
        return Err(TraceError::ClosureInconsistent { closure: closure_error, diameter });
    }

    let signed_area = {
        let mut a = 0.0;
        for i in 0..points.len() {
            let p = &points[i];
            let q = &points[(i + 1) % points.len()];
            a += p.x * q.y - q.x * p.y;
        }
        0.5 * a
    };
    let centroid = if signed_area.abs() > 1e-14 * diameter * diameter {
        let mut cx = 0.0;
        let mut cy = 0.0;
        for i in 0..points.len() {
            let p = &points[i];
            let q = &points[(i + 1) % points.len()];
            let w = p.x * q.y - q.x * p.y;
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
        }
        (cx / (6.0 * signed_area), cy / (6.0 * signed_area))
    } else {
        let inv = 1.0 / points.len() as f64;
        (
            points.iter().map(|p| p.x).sum::<f64>() * inv,
            points.iter().map(|p| p.y).sum::<f64>() * inv,
        )
    };
    let min_abs_y = points.iter().map(|p| p.y.abs()).fold(f64::INFINITY, f64::min);
    let embedded = points.iter().all(|p| p.y > 0.0) || points.iter().all(|p| p.y < 0.0);
    let half_plane_sign = if centroid.1 >= 0.0 { 1 } else { -1 };
    let self_intersecting = has_self_intersection(&points);

    Ok(InclusionContour {
        points,
        closure_error,
        min_abs_y,
        signed_area,
        centroid,
        half_plane_sign,
        diameter,
        embedded,
        self_intersecting,
    })
}

// plain O(n^2) segment sweep; advisory only
fn has_self_intersection(pts: &[ContourPoint]) -> bool {
    let n = pts.len();
    let seg = |i: usize| {
        let a = &pts[i];
        let b = &pts[(i + 1) % n];
        ((a.x, a.y), (b.x, b.y))
    };
    let orient = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
        (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
    };
    for i in 0..n {
        let (a, b) = seg(i);
        for j in (i + 2)..n {
            // adjacent segments share an endpoint
            if i == 0 && j == n - 1 {
                continue;
            }
            let (c, d) = seg(j);
            let (o1, o2) = (orient(a, b, c), orient(a, b, d));
            let (o3, o4) = (orient(c, d, a), orient(c, d, b));
            if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
                return true;
            }
        }
    }
    false
}

/// Residuals of the original boundary condition along the traced
/// contour: `Re F = (tau1_hat/lambda) x` on `L1` (with `a1 = 0`) and
/// `Im F = b1`.
#[derive(Debug, Clone)]
pub struct BoundaryReport {
    pub max_re_residual: f64,
    pub max_im_residual: f64,
    /// Contour diameter, the natural normalizer.
    pub scale: f64,
}

pub fn verify_boundary_condition(state: &SolverState, contour: &InclusionContour) -> BoundaryReport {
    let lam = state.derived.lambda;
    let t1 = state.params.tau1_hat;
    let mut max_re = 0.0f64;
    for p in &contour.points {
        let re_f = state.phi1.re_side_l1(p.xi, p.side);
        max_re = max_re.max((re_f - t1 / lam * p.x).abs());
    }
    // Im F = b1 through an independent route: extrapolated interior
    // limits on a subsample
    let mut max_im = 0.0f64;
    let interior: Vec<&ContourPoint> = contour
        .points
        .iter()
        .filter(|p| (0.05..=0.95).contains(&p.xi))
        .collect();
    let stride = (interior.len() / 20).max(1);
    for p in interior.into_iter().step_by(stride) {
        let f = |eps: f64| {
            state
                .phi1_at(SurfacePoint::upper(Complex64::new(p.xi, p.side.signum() * eps)))
                .im
        };
        let (v1, v2) = (f(4e-4), f(2e-4));
        let lim = 2.0 * v2 - v1;
        max_im = max_im.max((lim - state.derived.b1).abs());
    }
    BoundaryReport { max_re_residual: max_re, max_im_residual: max_im, scale: contour.diameter }
}

/// One named residual with its gate.
#[derive(Debug, Clone)]
pub struct ResidualSlot {
    pub name: &'static str,
    pub value: f64,
    pub threshold: f64,
    pub pass: bool,
}

/// Scalar facts of a finished solve, echoed into reports.
#[derive(Debug, Clone)]
pub struct SolveSummary {
    pub k: f64,
    pub big_k: f64,
    pub b1: f64,
    pub lambda: f64,
    pub zeta1: Complex64,
    pub sheet1: Sheet,
    pub n_a: i32,
    pub n_b: i32,
    pub x_inf: f64,
    pub m_consts: [f64; 4],
    pub diameter: f64,
    pub signed_area: f64,
    pub centroid: (f64, f64),
    pub min_abs_y: f64,
    pub half_plane_sign: i8,
}

/// Residuals for every invariant of the pipeline, one run.
#[derive(Debug, Clone)]
pub struct Diagnostics {
    pub params: ModelParams,
    pub summary: Option<SolveSummary>,
    pub residuals: Vec<ResidualSlot>,
    pub warnings: Vec<String>,
    /// Violations or stage failure that stopped the pipeline early.
    pub failure: Option<String>,
    pub pass: bool,
}

impl Diagnostics {
    fn failed(params: ModelParams, failure: String, warnings: Vec<String>) -> Self {
        Diagnostics { params, summary: None, residuals: Vec::new(), warnings, failure: Some(failure), pass: false }
    }

    pub fn slot(&self, name: &str) -> Option<&ResidualSlot> {
        self.residuals.iter().find(|s| s.name == name)
    }
}

fn fmt_violations(vs: &[Violation]) -> String {
    let mut s = String::new();
    for v in vs {
        if !s.is_empty() {
            s.push_str("; ");
        }
        s.push_str(v.code);
        s.push_str(": ");
        s.push_str(&v.message);
    }
    s
}

// quadratic Richardson extrapolation to the boundary
fn richardson3<F: Fn(f64) -> Complex64>(f: F, eps: f64) -> Complex64 {
    let (v1, v2, v3) = (f(eps), f(0.5 * eps), f(0.25 * eps));
    let r1 = 2.0 * v2 - v1;
    let r2 = 2.0 * v3 - v2;
    (4.0 * r2 - r1) / 3.0
}

/// Runs the full pipeline and populates every residual slot. Stage
/// failures stop the run and are recorded; embedding problems are
/// warnings, not failures.
pub fn run_diagnostics(params: &ModelParams) -> Diagnostics {
    let mut warnings = Vec::new();
    let state = match SolverState::build(params.clone()) {
        Ok(s) => s,
        Err(e) => {
            let msg = match &e {
                SolveError::Validation(r) => fmt_violations(&r.violations),
                other => alloc::format!("{other}"),
            };
            return Diagnostics::failed(params.clone(), msg, warnings);
        }
    };
    let contour = match trace_inclusion(&state) {
        Ok(c) => c,
        Err(e) => return Diagnostics::failed(params.clone(), alloc::format!("{e}"), warnings),
    };
    let mut slots = Vec::new();
    let tol = params.tol;
    fn push(slots: &mut Vec<ResidualSlot>, name: &'static str, value: f64, threshold: f64) {
        slots.push(ResidualSlot { name, value, threshold, pass: value <= threshold });
    }

    let d = &state.derived;
    let m = params.m;

    // closed-form constants against quadrature
    {
        let tail = semi_infinite(|_| Complex64::new(1.0, 0.0), m, 4 * params.quad_order)
            .expect("bounded integrand");
        let loop_l0 = Complex64::new(0.0, -2.0) * tail;
        push(&mut slots, "loop_integral_l0", (loop_l0 - d.a_period).norm(), 1e-9);
        let inner = integrate_gc1(
            |xi| Complex64::new(1.0 / (m - xi).sqrt(), 0.0),
            0.0,
            1.0,
            4 * params.quad_order,
        );
        let loop_l1 = Complex64::new(0.0, 2.0) * inner;
        push(&mut slots, "loop_integral_l1", (loop_l1 + d.a_period).norm(), 1e-9);
        let b_quad = 2.0
            * integrate_gc1(
                |xi| Complex64::new(1.0 / xi.sqrt(), 0.0),
                1.0,
                m,
                4 * params.quad_order,
            )
            .re;
        push(&mut slots, "period_b", (b_quad - d.b_period).abs(), 1e-9);
        // b1 via the removability bracket at the kernel pole
        push(
            &mut slots,
            "removability_bracket",
            state.phi1.bracket(Complex64::new(params.xi0, 0.0)).norm(),
            1e-9,
        );
    }

    // Jacobi inversion
    let jac = &state.factorizer.jac;
    push(&mut slots, "jacobi_defect", jac.residual, 1e-8);
    push(&mut slots, "integer_snap", jac.snap_distance, crate::factorization::SNAP_ACCEPT);
    if jac.snap_distance > crate::factorization::SNAP_ACCEPT
        && jac.snap_distance <= crate::factorization::SNAP_HARD
    {
        warnings.push(alloc::format!(
            "homology integers snapped from distance {:.2e}",
            jac.snap_distance
        ));
    }
    if jac.rejected_distance < crate::factorization::SNAP_HARD {
        warnings.push(String::from("both sheet assignments look integral; kept the upper sheet"));
    }

    // factorization ratios by extrapolated limits
    {
        let ratio_err = |xi: f64, target: f64| {
            let r = richardson3(
                |eps| {
                    let up = state.x_at(SurfacePoint::upper(Complex64::new(xi, eps)));
                    let lo = state.x_at(SurfacePoint {
                        zeta: Complex64::new(xi, -eps),
                        sheet: Sheet::Lower,
                    });
                    up / lo
                },
                4e-4,
            );
            (r - target).norm()
        };
        let mut worst_l0 = 0.0f64;
        for i in 0..10 {
            let xi = m + 0.3 + 0.5 * i as f64;
            worst_l0 = worst_l0.max(ratio_err(xi, -1.0));
        }
        push(&mut slots, "factor_ratio_l0", worst_l0, 1e-6);
        let mut worst_l1 = 0.0f64;
        for i in 0..10 {
            let xi = (i as f64 + 0.5) / 10.0;
            worst_l1 = worst_l1.max(ratio_err(xi, 1.0));
        }
        push(&mut slots, "factor_ratio_l1", worst_l1, 1e-6);
    }

    // Sokhotski-Plemelj jumps, relative to the solution scale
    {
        let pts_l1: Vec<f64> = (0..20).map(|i| (i as f64 + 0.5) / 20.0).collect();
        let pts_l0: Vec<f64> = (0..20).map(|i| m + 0.2 + 0.45 * i as f64).collect();
        let scale1 = pts_l1
            .iter()
            .map(|&xi| state.phi1.side_l1(xi, Side::Plus).norm())
            .fold(1e-12, f64::max);
        let scale2 = pts_l1
            .iter()
            .map(|&xi| {
                state
                    .phi2
                    .phi2_side(&state.factorizer, &state.phi1, SideValue::new(xi, Slit::L1, Side::Plus))
                    .norm()
            })
            .fold(1e-12, f64::max);
        let pair = |xi: f64, eps: f64| {
            let up = SurfacePoint::upper(Complex64::new(xi, eps));
            let lo = SurfacePoint { zeta: Complex64::new(xi, -eps), sheet: Sheet::Lower };
            (up, lo)
        };
        let mut j1_l1 = 0.0f64;
        let mut j2_l1 = 0.0f64;
        for &xi in &pts_l1 {
            let jump1 = richardson3(
                |eps| {
                    let (up, lo) = pair(xi, eps);
                    state.phi1_at(up) - state.phi1_at(lo)
                },
                4e-4,
            );
            j1_l1 = j1_l1.max((jump1 - Complex64::new(0.0, 2.0 * d.b1)).norm());
            let jump2 = richardson3(
                |eps| {
                    let (up, lo) = pair(xi, eps);
                    state.phi2_at(up) - state.phi2_at(lo)
                },
                4e-4,
            );
            let expect = 2.0 * Complex64::i() * state.phi1.re_side_l1(xi, Side::Plus);
            j2_l1 = j2_l1.max((jump2 - expect).norm());
        }
        push(&mut slots, "phi1_jump_l1", j1_l1 / scale1, tol);
        push(&mut slots, "phi2_jump_l1", j2_l1 / scale2, tol);
        let mut j1_l0 = 0.0f64;
        let mut j2_l0 = 0.0f64;
        for &xi in &pts_l0 {
            let jump1 = richardson3(
                |eps| {
                    let (up, lo) = pair(xi, eps);
                    state.phi1_at(up) - state.phi1_at(lo)
                },
                4e-4,
            );
            j1_l0 = j1_l0.max((jump1 - Complex64::new(0.0, 2.0 * params.b0)).norm());
            let sum2 = richardson3(
                |eps| {
                    let (up, lo) = pair(xi, eps);
                    state.phi2_at(up) + state.phi2_at(lo)
                },
                4e-4,
            );
            j2_l0 = j2_l0.max(sum2.norm());
        }
        push(&mut slots, "phi1_jump_l0", j1_l0 / scale1, tol);
        push(&mut slots, "phi2_sum_l0", j2_l0 / scale2, tol);
    }

    // pole and residue conditions
    {
        let mut res = Complex64::new(0.0, 0.0);
        let r = 1e-3;
        for k in 0..4 {
            let th = 0.5 * PI * k as f64;
            let dz = r * Complex64::new(th.cos(), th.sin());
            let z = params.xi0 + dz;
            let u = sqrt_p(z, m);
            let v = state.phi2.psi_at(&state.factorizer, &state.phi1, z, u)
                + state.phi2.omega_rational(z, u);
            res += v * dz;
        }
        push(&mut slots, "residue_xi0", (res / 4.0).norm(), 1e-8);
        let q1 = state.factorizer.q1();
        let u1 = state.factorizer.u1();
        let cancel = state.phi2.psi_at(&state.factorizer, &state.phi1, q1.zeta, u1)
            + state.phi2.omega_rational(q1.zeta, u1);
        push(&mut slots, "q1_cancellation", cancel.norm(), 1e-8);
    }

    // infinity condition
    {
        let err = |r: f64| {
            let pt = SurfacePoint::upper(Complex64::new(0.0, r));
            (state.phi1_at(pt) / state.phi2_at(pt) - d.infinity_ratio).norm()
        };
        let (e4, e6) = (err(1e4), err(1e6));
        push(&mut slots, "infinity_error_1e4", e4, 1e-1);
        push(&mut slots, "infinity_error_1e6", e6, 1e-2);
        // decay slower than the expected sqrt rate is a defect; faster
        // only means the tail already sits at the quadrature floor
        let factor = e4 / e6.max(1e-300);
        let decay_ok = factor >= 5.0 || e6 < 1e-8;
        slots.push(ResidualSlot {
            name: "infinity_decay_factor",
            value: factor,
            threshold: 20.0,
            pass: decay_ok,
        });
    }

    // half-plane image and contour quality
    {
        let mut im_max = 0.0f64;
        for i in 0..20 {
            let xi = m * (1.0 + 0.002 * 1.6f64.powi(i));
            for side in [Side::Plus, Side::Minus] {
                let z = state.omega_side(SideValue::new(xi, Slit::L0, side));
                im_max = im_max.max(z.im.abs());
            }
        }
        push(&mut slots, "im_omega_l0", im_max / contour.diameter, tol);
        push(&mut slots, "closure", contour.closure_error / contour.diameter, 1e-4);
    }

    // order stability: double the spectral order, compare the map
    {
        let hi = SolverState::build(ModelParams {
            quad_order: 2 * params.quad_order,
            ..params.clone()
        })
        .expect("doubled-order solve");
        let grid = trace_grid(40);
        let mut diff = 0.0f64;
        for &xi in &grid {
            for side in [Side::Plus, Side::Minus] {
                let sv = SideValue::new(xi, Slit::L1, side);
                diff = diff.max((state.omega_side(sv) - hi.omega_side(sv)).norm());
            }
        }
        push(&mut slots, "order_doubling_omega", diff / contour.diameter, 1e-8);
        let c_hi = trace_inclusion_sized(&hi, 64).map(|c| c.closure_error);
        if let Ok(c2) = c_hi {
            let c1 = trace_inclusion_sized(&state, 64)
                .map(|c| c.closure_error)
                .unwrap_or(contour.closure_error);
            let ratio = c2 / c1.max(1e-300);
            slots.push(ResidualSlot {
                name: "closure_halving",
                value: ratio,
                threshold: 1.05,
                pass: ratio <= 1.05 || c2 <= 1e-6 * contour.diameter,
            });
        }
    }

    // parameter-family properties on a shared grid
    {
        let grid = trace_grid(64);
        let base: Vec<Complex64> = grid
            .iter()
            .flat_map(|&xi| {
                [Side::Plus, Side::Minus]
                    .map(|s| state.omega_side(SideValue::new(xi, Slit::L1, s)))
            })
            .collect();
        let family = |p2: ModelParams| -> Option<Vec<Complex64>> {
            let s2 = SolverState::build(p2).ok()?;
            Some(
                grid.iter()
                    .flat_map(|&xi| {
                        [Side::Plus, Side::Minus]
                            .map(|s| s2.omega_side(SideValue::new(xi, Slit::L1, s)))
                    })
                    .collect(),
            )
        };
        let diam = contour.diameter;
        if let Some(v) = family(ModelParams { b0: params.b0 + 2.0, ..params.clone() }) {
            let dmax = base.iter().zip(&v).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            push(&mut slots, "b0_invariance", dmax / diam, tol);
        }
        if let Some(v) = family(ModelParams { n0_star: params.n0_star + 1.0, ..params.clone() }) {
            let diffs: Vec<Complex64> = base.iter().zip(&v).map(|(a, b)| b - a).collect();
            let mean_re = diffs.iter().map(|d| d.re).sum::<f64>() / diffs.len() as f64;
            let std_re = (diffs.iter().map(|d| (d.re - mean_re).powi(2)).sum::<f64>()
                / diffs.len() as f64)
                .sqrt();
            let im_max = diffs.iter().map(|d| d.im.abs()).fold(0.0, f64::max);
            push(&mut slots, "n0star_translation", std_re.max(im_max) / diam, tol);
        }
        let s = 2.0;
        if let Some(v) = family(ModelParams {
            n1: s * params.n1,
            n0_star: s * params.n0_star,
            b0: s * params.b0,
            ..params.clone()
        }) {
            let rel = base
                .iter()
                .zip(&v)
                .map(|(a, b)| (b - s * a).norm())
                .fold(0.0, f64::max)
                / (s * diam);
            push(&mut slots, "n1_scaling", rel, 1e-8);
        }
        let mut aux = 0.0f64;
        for p2 in [
            ModelParams { xi0: -0.5, ..params.clone() },
            ModelParams { xi0: -2.0, ..params.clone() },
            ModelParams { zeta0: Complex64::new(0.3, 1.1), ..params.clone() },
        ] {
            if let Some(v) = family(p2) {
                aux = aux.max(
                    base.iter().zip(&v).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max),
                );
            }
        }
        push(&mut slots, "aux_point_independence", aux / diam, 1e-4);
    }

    // boundary condition on the traced contour
    {
        let report = verify_boundary_condition(&state, &contour);
        push(&mut slots, "boundary_re", report.max_re_residual / report.scale, 1e-5);
        push(&mut slots, "boundary_im", report.max_im_residual / report.scale, 1e-5);
    }

    if (params.tau1_hat - params.kappa * params.tau1_inf_hat).abs()
        < 1e-12 * params.tau1_hat.abs().max(1.0)
    {
        warnings.push(String::from(
            "tau1 = kappa tau1_inf: the uniformly stressed inclusion degenerates to a flat segment",
        ));
    }
    if !contour.embedded {
        warnings.push(String::from(
            "inclusion boundary touches or crosses the half-plane boundary; increase m",
        ));
    }
    if contour.self_intersecting {
        warnings.push(String::from("traced contour self-intersects"));
    }

    let pass = slots.iter().all(|s| s.pass);
    let summary = SolveSummary {
        k: d.k,
        big_k: d.big_k,
        b1: d.b1,
        lambda: d.lambda,
        zeta1: jac.zeta1,
        sheet1: jac.sheet1,
        n_a: jac.n_a,
        n_b: jac.n_b,
        x_inf: state.factorizer.x_inf,
        m_consts: state.phi2.m_consts,
        diameter: contour.diameter,
        signed_area: contour.signed_area,
        centroid: contour.centroid,
        min_abs_y: contour.min_abs_y,
        half_plane_sign: contour.half_plane_sign,
    };
    Diagnostics {
        params: params.clone(),
        summary: Some(summary),
        residuals: slots,
        warnings,
        failure: None,
        pass,
    }
}

//! Property tests for the branch, the surface algebra, the kernel, and
//! two end-to-end physical limits of the recovered shapes.

use num_complex::Complex64;
use proptest::prelude::*;
use slitmap_core::params::ModelParams;
use slitmap_core::shape::trace_inclusion_sized;
use slitmap_core::surface::{cauchy_kernel, p_of, sqrt_p, SideValue, Slit, SurfacePoint, Side};
use slitmap_core::SolverState;

const M: f64 = 4.0;

fn off_slits() -> impl Strategy<Value = Complex64> {
    (-3.0f64..6.0, 0.02f64..3.0, prop::bool::ANY).prop_map(|(re, im, lower)| {
        Complex64::new(re, if lower { -im } else { im })
    })
}

proptest! {
    #[test]
    fn branch_squares_to_p(z in off_slits()) {
        let u = sqrt_p(z, M);
        let p = p_of(z, M);
        prop_assert!((u * u - p).norm() <= 1e-12 * p.norm().max(1.0));
    }

    #[test]
    fn branch_respects_conjugation(z in off_slits()) {
        // the branch is real on the negative axis, so it commutes with
        // conjugation everywhere off the cuts
        let a = sqrt_p(z.conj(), M);
        let b = sqrt_p(z, M).conj();
        prop_assert!((a - b).norm() <= 1e-12 * b.norm().max(1.0));
    }

    #[test]
    fn involution_is_self_inverse(z in off_slits(), lower in prop::bool::ANY) {
        let pt = if lower { SurfacePoint::lower(z) } else { SurfacePoint::upper(z) };
        prop_assert_eq!(pt.symmetric().symmetric(), pt);
        let u_sym = pt.symmetric().u(M);
        let expect = -pt.u(M).conj();
        prop_assert!((u_sym - expect).norm() <= 1e-12 * expect.norm().max(1.0));
    }

    #[test]
    fn kernel_is_symmetric(
        z in off_slits(),
        lower in prop::bool::ANY,
        xi in 0.05f64..0.95,
        plus in prop::bool::ANY,
    ) {
        let target = if lower { SurfacePoint::lower(z) } else { SurfacePoint::upper(z) };
        let side = if plus { Side::Plus } else { Side::Minus };
        let sv = SideValue::new(xi, Slit::L1, side);
        let xi0 = -1.0;
        let a = cauchy_kernel(target.zeta, target.u(M), Complex64::new(xi, 0.0), sv.u(M), xi0);
        let s = target.symmetric();
        let b = cauchy_kernel(s.zeta, s.u(M), Complex64::new(xi, 0.0), sv.u(M), xi0);
        prop_assert!((a - b.conj()).norm() <= 1e-11 * a.norm().max(1.0));
    }
}

fn aspect_ratio(p: ModelParams) -> f64 {
    let state = SolverState::build(p).unwrap();
    let c = trace_inclusion_sized(&state, 96).unwrap();
    let (mut min_x, mut max_x) = (f64::MAX, f64::MIN);
    let (mut min_y, mut max_y) = (f64::MAX, f64::MIN);
    for q in &c.points {
        min_x = min_x.min(q.x);
        max_x = max_x.max(q.x);
        min_y = min_y.min(q.y);
        max_y = max_y.max(q.y);
    }
    (max_y - min_y) / (max_x - min_x)
}

/// Far from the boundary the shapes approach the isolated uniformly
/// stressed inclusion, an ellipse with aspect `rho` solving
/// `tau1 = kappa tau1_inf (1 + rho)/(1 + kappa rho)`.
#[test]
fn isolated_inclusion_limit_matches_the_classical_ellipse() {
    // rho = 1 (circle): tau1 = -4/3 at kappa = 1/2, tau1_inf = -2
    let circle = aspect_ratio(ModelParams {
        m: 50.0,
        tau1_hat: -4.0 / 3.0,
        ..ModelParams::default()
    });
    assert!((circle - 1.0).abs() < 1e-3, "aspect {circle}");
    // rho = 2: tau1 = -3/2
    let tall = aspect_ratio(ModelParams { m: 50.0, tau1_hat: -1.5, ..ModelParams::default() });
    assert!((tall - 2.0).abs() < 5e-3, "aspect {tall}");
}

/// `tau1 = kappa tau1_inf` is the unperturbed-field loading: the
/// inclusion family degenerates to a zero-area flat segment at every m.
#[test]
fn unperturbed_loading_degenerates_to_a_segment() {
    for m in [1.6, 4.0] {
        let p = ModelParams { m, tau1_hat: -1.0, tau1_inf_hat: -2.0, kappa: 0.5, ..ModelParams::default() };
        let state = SolverState::build(p).unwrap();
        let c = trace_inclusion_sized(&state, 64).unwrap();
        let height: f64 = c.points.iter().map(|q| q.y).fold(f64::MIN, f64::max)
            - c.points.iter().map(|q| q.y).fold(f64::MAX, f64::min);
        assert!(height < 1e-5 * c.diameter, "m = {m}: height {height}");
        assert!(c.signed_area.abs() < 1e-5 * c.diameter * c.diameter);
    }
}

/// The plus side of `l0` covers the half-plane boundary monotonically.
#[test]
fn l0_image_is_monotone_and_unbounded() {
    let state = SolverState::build(ModelParams { tau1_hat: -1.5, ..ModelParams::default() }).unwrap();
    let mut prev = f64::NEG_INFINITY;
    let mut last = 0.0;
    for i in 0..25 {
        let xi = state.params.m * (1.0 + 0.003 * 1.7f64.powi(i));
        let z = state.omega_side(SideValue::new(xi, Slit::L0, Side::Plus));
        assert!(z.re > prev, "not monotone at xi = {xi}");
        prev = z.re;
        last = z.re;
    }
    // heads off to infinity like sqrt(xi)
    assert!(last > 1e2);
}

//! The two-sheeted elliptic surface of `u^2 = p(zeta)`,
//! `p(zeta) = zeta (1 - zeta)(zeta - m)`, cut along the slits
//! `l1 = [0, 1]` and `l0 = [m, oo)`.
//!
//! The branch of `p^(1/2)` is fixed by `p^(1/2)(xi) > 0` for `xi < 0`.
//! On the slit sides it takes the values
//! `p^(1/2) = -/+ i sqrt|p|` on `l1` and `+/- i sqrt|p|` on `l0`
//! (upper sign = "+" side). The upper sheet carries `u = p^(1/2)`,
//! the lower sheet `u = -p^(1/2)`; the involution maps `(zeta, u)` to
//! `(conj zeta, -u(conj zeta))`.

use num_complex::Complex64;
// in no_std builds the Float trait provides the f64 math methods;
// with std in the crate graph the inherent ones win and this goes idle
#[allow(unused_imports)]
use num_traits::Float;

/// Sheet of the two-sheeted surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sheet {
    Upper,
    Lower,
}

impl Sheet {
    pub fn flipped(self) -> Sheet {
        match self {
            Sheet::Upper => Sheet::Lower,
            Sheet::Lower => Sheet::Upper,
        }
    }
}

/// One of the two slits of the parametric plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slit {
    /// `[m, oo)`, image of the half-plane boundary.
    L0,
    /// `[0, 1]`, image of the inclusion boundary.
    L1,
}

/// Side of a slit ("+" is the upper edge).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn signum(self) -> f64 {
        match self {
            Side::Plus => 1.0,
            Side::Minus => -1.0,
        }
    }
}

/// A point `(zeta, sheet)` of the surface, off the slits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub zeta: Complex64,
    pub sheet: Sheet,
}

impl SurfacePoint {
    pub fn upper(zeta: Complex64) -> Self {
        SurfacePoint { zeta, sheet: Sheet::Upper }
    }

    pub fn lower(zeta: Complex64) -> Self {
        SurfacePoint { zeta, sheet: Sheet::Lower }
    }

    /// The algebraic value `u` at this point.
    pub fn u(&self, m: f64) -> Complex64 {
        match self.sheet {
            Sheet::Upper => sqrt_p(self.zeta, m),
            Sheet::Lower => -sqrt_p(self.zeta, m),
        }
    }

    /// The point symmetric with respect to the contours,
    /// `(zeta, u) -> (conj zeta, -u(conj zeta))`. An involution.
    pub fn symmetric(&self) -> SurfacePoint {
        SurfacePoint {
            zeta: self.zeta.conj(),
            sheet: self.sheet.flipped(),
        }
    }
}

/// A point `xi` on a specified side of a slit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideValue {
    pub xi: f64,
    pub slit: Slit,
    pub side: Side,
}

impl SideValue {
    pub fn new(xi: f64, slit: Slit, side: Side) -> Self {
        debug_assert!(match slit {
            Slit::L1 => (0.0..=1.0).contains(&xi),
            Slit::L0 => xi >= 0.0, // compared against m by callers
        });
        SideValue { xi, slit, side }
    }

    /// The one-sided value `v = u(xi)` on the chosen edge (purely
    /// imaginary; exactly zero at the slit endpoints).
    pub fn u(&self, m: f64) -> Complex64 {
        side_u(*self, m)
    }
}

/// Fixed single-valued branch of `sqrt(zeta (1 - zeta)(zeta - m))` on the
/// plane cut along the slits, anchored by `p^(1/2)(xi) > 0` for `xi < 0`.
///
/// The principal square roots of `zeta` and `zeta - 1` jump together
/// across `(-oo, 0)`, so their product is single-valued off `[0, 1]`;
/// `sqrt(m - zeta)` carries the cut `[m, oo)`.
pub fn sqrt_p(zeta: Complex64, m: f64) -> Complex64 {
    -(zeta.sqrt() * (zeta - 1.0).sqrt() * (Complex64::new(m, 0.0) - zeta).sqrt())
}

/// `p(zeta)` itself.
pub fn p_of(zeta: Complex64, m: f64) -> Complex64 {
    zeta * (1.0 - zeta) * (zeta - m)
}

/// `|p(xi)|` for real `xi`.
pub fn abs_p(xi: f64, m: f64) -> f64 {
    (xi * (1.0 - xi) * (xi - m)).abs()
}

/// One-sided limit of `p^(1/2)` on the slit edges:
/// `-/+ i sqrt|p|` on `l1` and `+/- i sqrt|p|` on `l0`.
pub fn side_u(s: SideValue, m: f64) -> Complex64 {
    let mag = abs_p(s.xi, m).sqrt();
    let sign = match s.slit {
        Slit::L1 => -s.side.signum(),
        Slit::L0 => s.side.signum(),
    };
    Complex64::new(0.0, sign * mag)
}

/// The `d xi`-density of the Cauchy-kernel analogue on the surface,
/// `1/2 [ (zeta - xi0)/(xi - xi0) + (u/v)(xi - xi0)/(zeta - xi0) ] / (xi - zeta)`,
/// for generic complex source `(xi, v)` and target `(zeta, u)`.
pub fn cauchy_kernel(zeta: Complex64, u: Complex64, xi: Complex64, v: Complex64, xi0: f64) -> Complex64 {
    0.5 * ((zeta - xi0) / (xi - xi0) + (u / v) * (xi - xi0) / (zeta - xi0)) / (xi - zeta)
}

/// Kernel density for a target surface point and a source on the contour.
pub fn kernel_dv(target: SurfacePoint, source: SideValue, m: f64, xi0: f64) -> Complex64 {
    let u = target.u(m);
    let v = source.u(m);
    cauchy_kernel(target.zeta, u, Complex64::new(source.xi, 0.0), v, xi0)
}

/// Genus-n analogue of the kernel density,
/// `1/2 [ 1 + (u/v) prod_j (xi - xi_j)/(zeta - xi_j) ] (1/(xi - zeta) - 1/(xi - xi_0))`.
///
/// Evaluation only: the branch values `u`, `v` of the hyperelliptic
/// `p^(1/2)` are supplied by the caller. Coinciding `xi_j` are admitted
/// and the product is taken literally.
pub fn kernel_dv_genus_n(
    zeta: Complex64,
    u: Complex64,
    xi: Complex64,
    v: Complex64,
    xi_list: &[f64],
) -> Complex64 {
    let mut prod = Complex64::new(1.0, 0.0);
    for &xj in xi_list {
        prod *= (xi - xj) / (zeta - xj);
    }
    let xi0 = xi_list[0];
    0.5 * (1.0 + (u / v) * prod) * (1.0 / (xi - zeta) - 1.0 / (xi - xi0))
}

#[cfg(test)]
mod tests {
    use super::*;

    const M: f64 = 4.0;

    #[test]
    fn branch_anchor_negative_axis() {
        let v = sqrt_p(Complex64::new(-1.0, 0.0), M);
        assert!((v.re - 10.0f64.sqrt()).abs() < 1e-14 && v.im.abs() < 1e-14);
        // stays real positive further out
        let v = sqrt_p(Complex64::new(-7.5, 0.0), M);
        assert!(v.re > 0.0 && v.im.abs() < 1e-13);
    }

    #[test]
    fn branch_points_vanish() {
        for bp in [0.0, 1.0, M] {
            assert_eq!(sqrt_p(Complex64::new(bp, 0.0), M).norm(), 0.0);
        }
    }

    #[test]
    fn branch_matches_path_continuation() {
        // continue the phase of p^(1/2) along a slit-avoiding polyline from
        // the anchor xi = -1 to 2 + 0.5i and compare
        let target = Complex64::new(2.0, 0.5);
        let start = Complex64::new(-1.0, 0.0);
        let mid = Complex64::new(-1.0, 1.5);
        let mut val = Complex64::new(10.0f64.sqrt(), 0.0);
        let mut z_prev = start;
        let steps = 4000;
        for leg in [(start, mid), (mid, target)] {
            for i in 1..=steps {
                let t = i as f64 / steps as f64;
                let z = leg.0 + (leg.1 - leg.0) * t;
                let p_prev = p_of(z_prev, M);
                let p_now = p_of(z, M);
                // multiply by the square root of the ratio, staying on the
                // continuous branch because steps are small
                val *= (p_now / p_prev).sqrt();
                z_prev = z;
            }
        }
        let direct = sqrt_p(target, M);
        assert!(
            (val - direct).norm() < 1e-6,
            "continuation {val} vs branch {direct}"
        );
    }

    #[test]
    fn side_values_match_spec_signs() {
        // l1, xi = 0.5: |p| = 0.5*0.5*3.5 = 0.875
        let mag = 0.875f64.sqrt();
        let plus = side_u(SideValue::new(0.5, Slit::L1, Side::Plus), M);
        let minus = side_u(SideValue::new(0.5, Slit::L1, Side::Minus), M);
        assert!((plus - Complex64::new(0.0, -mag)).norm() < 1e-15);
        assert!((minus - Complex64::new(0.0, mag)).norm() < 1e-15);
        // l0, xi = 5: |p| = 5*4*1 = 20
        let mag0 = 20.0f64.sqrt();
        let plus0 = side_u(SideValue::new(5.0, Slit::L0, Side::Plus), M);
        assert!((plus0 - Complex64::new(0.0, mag0)).norm() < 1e-14);
    }

    #[test]
    fn side_limits_consistent_with_branch() {
        // sqrt_p(xi +/- i eps) -> side_u with Richardson consistency
        for (xi, slit) in [(0.3, Slit::L1), (0.8, Slit::L1), (4.7, Slit::L0), (9.0, Slit::L0)] {
            for side in [Side::Plus, Side::Minus] {
                let sv = side_u(SideValue::new(xi, slit, side), M);
                let lim = |eps: f64| sqrt_p(Complex64::new(xi, side.signum() * eps), M);
                let (a, b) = (lim(1e-4), lim(1e-6));
                assert!((a - sv).norm() < 2e-3);
                assert!((b - sv).norm() < 2e-5);
                // error shrinks roughly linearly in eps
                assert!((b - sv).norm() < (a - sv).norm());
            }
        }
    }

    #[test]
    fn involution_and_sheet_algebra() {
        let pts = [
            SurfacePoint::upper(Complex64::new(2.0, 1.0)),
            SurfacePoint::lower(Complex64::new(-0.7, -0.4)),
            SurfacePoint::upper(Complex64::new(0.5, 3.0)),
        ];
        for pt in pts {
            let s = pt.symmetric();
            assert_eq!(s.symmetric(), pt);
            // u(sym(pt)) = -conj(u(pt))
            let lhs = s.u(M);
            let rhs = -pt.u(M).conj();
            assert!((lhs - rhs).norm() < 1e-13);
        }
        // real zeta off the slits: conjugation is the identity on zeta
        let pt = SurfacePoint::upper(Complex64::new(2.5, 0.0));
        let s = pt.symmetric();
        assert_eq!(s.zeta, pt.zeta);
        assert_eq!(s.sheet, Sheet::Lower);
    }

    #[test]
    fn kernel_symmetry() {
        // density at (zeta, u) is the conjugate of the density at the
        // symmetric target, for the same contour source
        let xi0 = -1.0;
        let src = SideValue::new(0.4, Slit::L1, Side::Plus);
        for zeta in [Complex64::new(1.7, 0.8), Complex64::new(-0.3, 2.1)] {
            for sheet in [Sheet::Upper, Sheet::Lower] {
                let t = SurfacePoint { zeta, sheet };
                let a = kernel_dv(t, src, M, xi0);
                let b = kernel_dv(t.symmetric(), src, M, xi0);
                assert!((a - b.conj()).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn kernel_decay_along_l0() {
        // |density| ~ C xi^(-3/2): quadrupling xi divides by 8
        let xi0 = -1.0;
        let t = SurfacePoint::upper(Complex64::new(0.5, 0.5));
        let d = |xi: f64| kernel_dv(t, SideValue::new(xi, Slit::L0, Side::Plus), M, xi0).norm();
        let ratio = d(1.0e4) / d(4.0e4);
        assert!((ratio - 8.0).abs() < 0.1, "ratio {ratio}");
    }

    #[test]
    fn kernel_bounded_in_target() {
        // fixed source, zeta -> oo: density -> -1/(2 (xi - xi0))
        let xi0 = -1.0;
        let src = SideValue::new(0.5, Slit::L1, Side::Plus);
        let lim = -1.0 / (2.0 * (0.5 - xi0));
        let far = kernel_dv(SurfacePoint::upper(Complex64::new(0.0, 1e8)), src, M, xi0);
        assert!((far - Complex64::new(lim, 0.0)).norm() < 1e-3);
    }

    #[test]
    fn genus_n_kernel_reduction_and_decay() {
        let m = M;
        let xi0 = -1.0;
        let zeta = Complex64::new(0.6, 0.9);
        let u = sqrt_p(zeta, m);
        // distribution identity at n = 1 with coinciding points
        let xi = Complex64::new(0.35, 0.0);
        let v = side_u(SideValue::new(0.35, Slit::L1, Side::Plus), m);
        let g = kernel_dv_genus_n(zeta, u, xi, v, &[xi0, xi0]);
        let q = (xi - xi0) / (zeta - xi0);
        let bracket = 1.0 + (u / v) * q * q;
        let first = 0.5 * bracket / (xi - zeta);
        let second = 0.5 * bracket / (xi - xi0);
        assert!((g - (first - second)).norm() < 1e-14);
        // symmetry analogue: conjugate target, negated-u branch value
        let gs = kernel_dv_genus_n(zeta.conj(), -sqrt_p(zeta.conj(), m), xi, v, &[xi0, xi0]);
        assert!((g - gs.conj()).norm() < 1e-13);
        // decay xi^(-3/2) along l0
        let d = |xi: f64| {
            let v = side_u(SideValue::new(xi, Slit::L0, Side::Plus), m);
            kernel_dv_genus_n(zeta, u, Complex64::new(xi, 0.0), v, &[xi0, xi0]).norm()
        };
        let ratio = d(1.0e3) / d(4.0e3);
        assert!((ratio - 8.0).abs() < 0.2, "ratio {ratio}");
    }
}

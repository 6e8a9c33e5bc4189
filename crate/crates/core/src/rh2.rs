//! Second Riemann-Hilbert problem: `Phi2^+ + Phi2^- = 0` on `l0` and
//! `Phi2^+ - Phi2^- = 2i Re Phi1^+` on `l1` (the `a1 = 0` convention).
//!
//! After factorization the solution is `Phi2 = X (Psi + Omega)`, with
//! `Psi` the singular integral of `g2/X^+` against the surface kernel
//! over the two-sided `l1` and `Omega` a rational function of the
//! surface whose four real constants `M0..M3` are pinned by the residue
//! condition at the kernel pole, the behavior at infinity, and the
//! cancellation of the `X`-pole at `q1`.
//!
//! Everything on `l1` is spectral: the side densities are expanded in
//! Chebyshev series once per solve and each boundary evaluation is a
//! short series sum plus one evaluation of `X` on the sides.

use alloc::vec::Vec;
use num_complex::Complex64;
// in no_std builds the Float trait provides the f64 math methods;
// with std in the crate graph the inherent ones win and this goes idle
#[allow(unused_imports)]
use num_traits::Float;

use crate::factorization::Factorizer;
use crate::params::{DerivedConstants, ModelParams};
use crate::quadrature::{cauchy_gc1_near, cauchy_gc2_near, ChebSeries};
use crate::rh1::{dist_to_interval, Phi1};
use crate::surface::{abs_p, sqrt_p, Side, SideValue, Slit, SurfacePoint};

use core::f64::consts::PI;

#[derive(Debug, Clone, PartialEq)]
pub enum Rh2Error {
    /// `Q2 - Q1` vanished; the closure for `M1` breaks down for this
    /// `zeta0`. Perturb the auxiliary point and re-solve.
    DegenerateZeta0 { q1: f64, q2: f64 },
}

impl core::fmt::Display for Rh2Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Rh2Error::DegenerateZeta0 { q1, q2 } => write!(
                f,
                "degenerate constants Q1 = {q1:.3e}, Q2 = {q2:.3e}: move zeta0 and re-solve"
            ),
        }
    }
}

/// Node tables and series for one solved second problem.
#[derive(Debug, Clone)]
pub struct Phi2Solution {
    /// `M0..M3` of the rational part.
    pub m_consts: [f64; 4],
    /// `P + iQ = Psi(q1)`.
    pub p_psi: f64,
    pub q_psi: f64,
    /// `P_l + i Q_l` of the geometry constants, `l = 0, 1, 2`.
    pub pq_geom: [(f64, f64); 3],
    n0_star: f64,
    m: f64,
    xi0: f64,
    zeta0: Complex64,
    u0: Complex64,
    series_i1: ChebSeries,
    series_i2: ChebSeries,
    series_i3a: ChebSeries,
    series_i3b: ChebSeries,
    gc1: WeightedTable,
    gc2: WeightedTable,
}

/// Per-node data on `(0, 1)`: `Y+`, `Y-/sqrt(t(1-t))` and `g0`.
#[derive(Debug, Clone, Default)]
struct WeightedTable {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    y_plus: Vec<f64>,
    y_minus_hat: Vec<f64>,
    g0: Vec<f64>,
}

impl WeightedTable {
    fn build(nodes: Vec<f64>, weights: Vec<f64>, phi1: &Phi1, fac: &Factorizer) -> Self {
        let mut t = WeightedTable { nodes, weights, ..Default::default() };
        for &x in &t.nodes {
            let (yp, ym) = fac.y_pair_l1(x);
            t.y_plus.push(yp);
            t.y_minus_hat.push(ym / (x * (1.0 - x)).sqrt());
            t.g0.push(phi1.g0(x));
        }
        t
    }
}

impl Phi2Solution {
    pub fn assemble(
        p: &ModelParams,
        d: &DerivedConstants,
        phi1: &Phi1,
        fac: &Factorizer,
    ) -> Result<Phi2Solution, Rh2Error> {
        let n = p.quad_order;
        let nq = 4 * n;
        let (m, xi0) = (p.m, p.xi0);

        // interior-evaluation tables
        let gc1_nodes: Vec<f64> = (1..=nq)
            .map(|j| 0.5 * (1.0 + (PI * (2 * j - 1) as f64 / (2 * nq) as f64).cos()))
            .collect();
        let gc1_weights = alloc::vec![PI / nq as f64; nq];
        let gc2_nodes: Vec<f64> = (1..=nq)
            .map(|j| 0.5 * (1.0 + (PI * j as f64 / (nq + 1) as f64).cos()))
            .collect();
        let gc2_weights: Vec<f64> = (1..=nq)
            .map(|j| {
                let s = (PI * j as f64 / (nq + 1) as f64).sin();
                0.25 * PI / (nq + 1) as f64 * s * s
            })
            .collect();
        let gc1 = WeightedTable::build(gc1_nodes, gc1_weights, phi1, fac);
        let gc2 = WeightedTable::build(gc2_nodes, gc2_weights, phi1, fac);

        // spectral side series at the production order
        let dens = |x: f64| {
            let (yp, ym) = fac.y_pair_l1(x);
            (yp, ym / (x * (1.0 - x)).sqrt(), phi1.g0(x))
        };
        let series_i1 = ChebSeries::fit_second(
            |x| {
                let (yp, _, g0) = dens(x);
                Complex64::new((m - x).sqrt() * g0 * yp / ((x - xi0) * (x - xi0)), 0.0)
            },
            n,
            (0.0, 1.0),
        );
        let series_i2 = ChebSeries::fit_first(
            |x| {
                let (yp, _, _) = dens(x);
                Complex64::new((x - xi0) * yp / (m - x).sqrt(), 0.0)
            },
            n,
            (0.0, 1.0),
        );
        let series_i3a = ChebSeries::fit_second(
            |x| {
                let (_, ymh, _) = dens(x);
                Complex64::new(ymh / (x - xi0), 0.0)
            },
            n,
            (0.0, 1.0),
        );
        let series_i3b = ChebSeries::fit_second(
            |x| {
                let (_, ymh, g0) = dens(x);
                Complex64::new(g0 * ymh, 0.0)
            },
            n,
            (0.0, 1.0),
        );

        // M3 kills the residue of Psi + Omega at the kernel pole
        let mut gc1_sum = 0.0;
        for (j, &x) in gc1.nodes.iter().enumerate() {
            gc1_sum += gc1.weights[j] * p.n0_star * gc1.y_plus[j] / (m - x).sqrt();
        }
        let mut gc2_sum = 0.0;
        for (j, &x) in gc2.nodes.iter().enumerate() {
            gc2_sum += gc2.weights[j] * gc2.g0[j] * gc2.y_minus_hat[j] / (x - xi0);
        }
        let m3 = -(gc1_sum + gc2_sum) / (4.0 * PI);

        // infinity condition
        let delta = p.tau1_inf_hat - p.tau1_hat;
        let m2 = -m3 + p.tau1_hat * p.n1 / (d.lambda * delta * fac.x_inf);

        let u0 = sqrt_p(p.zeta0, m);
        let mut sol = Phi2Solution {
            m_consts: [0.0, 0.0, m2, m3],
            p_psi: 0.0,
            q_psi: 0.0,
            pq_geom: [(0.0, 0.0); 3],
            n0_star: p.n0_star,
            m,
            xi0,
            zeta0: p.zeta0,
            u0,
            series_i1,
            series_i2,
            series_i3a,
            series_i3b,
            gc1,
            gc2,
        };

        // pole cancellation at q1
        let q1pt = fac.q1();
        let u1 = fac.u1();
        let psi_q1 = sol.psi_at(fac, phi1, q1pt.zeta, u1);
        let (pp, qq) = (psi_q1.re, psi_q1.im);
        let g0c = 2.0 * u1 / (q1pt.zeta - xi0);
        let g1c = (u1 + u0) / (q1pt.zeta - p.zeta0);
        let g2c = (u1 - u0.conj()) / (q1pt.zeta - p.zeta0.conj());
        let (p0, q0) = (g0c.re, g0c.im);
        let (p1, q1) = (g1c.re, g1c.im);
        let (p2, q2) = (g2c.re, g2c.im);
        if (q2 - q1).abs() < 1e-10 * (q1.abs() + q2.abs()) {
            return Err(Rh2Error::DegenerateZeta0 { q1, q2 });
        }
        let m1 = ((p1 + p2) * m2 + p0 * m3 + qq) / (q2 - q1);
        let m0 = (p2 - p1) * m1 + (q1 + q2) * m2 + q0 * m3 - pp;
        sol.m_consts = [m0, m1, m2, m3];
        sol.p_psi = pp;
        sol.q_psi = qq;
        sol.pq_geom = [(p0, q0), (p1, q1), (p2, q2)];
        Ok(sol)
    }

    /// Boundary density of the second problem,
    /// `g2(xi+/-) = 2i [N0* +/- sqrt|p| g0/(xi - xi0)]`.
    pub fn g2_side(&self, phi1: &Phi1, xi: f64, side: Side) -> Complex64 {
        Complex64::new(0.0, 2.0 * self.side_bracket(phi1.g0(xi), xi, side))
    }

    fn side_bracket(&self, g0: f64, xi: f64, side: Side) -> f64 {
        self.n0_star + side.signum() * abs_p(xi, self.m).sqrt() * g0 / (xi - self.xi0)
    }

    /// One-sided limit of `Psi` on `l1` from the upper sheet, through the
    /// free term and the three singular integrals in series form.
    pub fn psi_side(&self, fac: &Factorizer, phi1: &Phi1, xi: f64, side: Side) -> Complex64 {
        let g0 = phi1.g0(xi);
        let s = side.signum();
        let x_side = fac.side_l1(xi, side);
        let sp = abs_p(xi, self.m).sqrt();
        let bracket = self.side_bracket(g0, xi, side);
        let free = Complex64::new(0.0, bracket / x_side);
        let i1 = (xi - self.xi0) / (2.0 * PI) * self.series_i1.pv_integral(xi).re;
        let i2 = self.n0_star * sp / (2.0 * PI * (xi - self.xi0)) * self.series_i2.pv_integral(xi).re;
        let i3 = (self.n0_star * (xi - self.xi0) * self.series_i3a.pv_integral(xi).re
            + s * sp / (xi - self.xi0) * self.series_i3b.pv_integral(xi).re)
            / (2.0 * PI);
        free + i1 + s * i2 + i3
    }

    /// `Psi` at an arbitrary point `(zeta, u)` of the surface off `l1`
    /// and off the kernel pole; near-contour targets switch to the
    /// pole-subtracted panel quadrature.
    pub fn psi_at(
        &self,
        fac: &Factorizer,
        phi1: &Phi1,
        zeta: Complex64,
        u: Complex64,
    ) -> Complex64 {
        let (m, xi0) = (self.m, self.xi0);
        if dist_to_interval(zeta, 0.0, 1.0) > 0.05 {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &t) in self.gc1.nodes.iter().enumerate() {
                let f = Complex64::i() * u * self.n0_star * (t - xi0) * self.gc1.y_plus[j]
                    / ((zeta - xi0) * (m - t).sqrt() * (t - zeta));
                acc += self.gc1.weights[j] * f;
            }
            for (j, &t) in self.gc2.nodes.iter().enumerate() {
                acc += self.gc2.weights[j] * self.g2_density(j, t, zeta, u) / (t - zeta);
            }
            acc / (2.0 * PI)
        } else {
            let g1 = |t: f64| {
                let (yp, _) = fac.y_pair_l1(t);
                Complex64::i() * u * self.n0_star * (t - xi0) * yp
                    / ((zeta - xi0) * (m - t).sqrt())
            };
            let g2 = |t: f64| {
                let (yp, ym) = fac.y_pair_l1(t);
                let ymh = ym / (t * (1.0 - t)).sqrt();
                let g0 = phi1.g0(t);
                (zeta - xi0) * (self.n0_star * ymh + (m - t).sqrt() * g0 * yp / (t - xi0))
                    / (t - xi0)
                    + Complex64::i() * u * g0 * ymh / (zeta - xi0)
            };
            (cauchy_gc1_near(g1, 1.0, zeta) + cauchy_gc2_near(g2, 1.0, zeta)) / (2.0 * PI)
        }
    }

    // smooth part of the grouped interior integrand, divided by the
    // second-kind weight
    fn g2_density(&self, j: usize, t: f64, zeta: Complex64, u: Complex64) -> Complex64 {
        let xi0 = self.xi0;
        let (yp, ymh, g0) = (self.gc2.y_plus[j], self.gc2.y_minus_hat[j], self.gc2.g0[j]);
        (zeta - xi0) * (self.n0_star * ymh + (self.m - t).sqrt() * g0 * yp / (t - xi0)) / (t - xi0)
            + Complex64::i() * u * g0 * ymh / (zeta - xi0)
    }

    /// The bounded limit of `Psi` at infinity (kernel limit route).
    pub fn psi_infinity(&self) -> Complex64 {
        let xi0 = self.xi0;
        let mut acc = 0.0;
        for (j, &t) in self.gc2.nodes.iter().enumerate() {
            let part = self.n0_star * self.gc2.y_minus_hat[j] / (t - xi0)
                + (self.m - t).sqrt() * self.gc2.g0[j] * self.gc2.y_plus[j]
                    / ((t - xi0) * (t - xi0));
            acc += self.gc2.weights[j] * part;
        }
        Complex64::new(-acc / (2.0 * PI), 0.0)
    }

    /// The rational part `Omega` at `(zeta, u)`.
    pub fn omega_rational(&self, zeta: Complex64, u: Complex64) -> Complex64 {
        let [m0, m1, m2, m3] = self.m_consts;
        let mc = Complex64::new(m1, m2);
        m0 + mc * (u + self.u0) / (zeta - self.zeta0)
            - mc.conj() * (u - self.u0.conj()) / (zeta - self.zeta0.conj())
            + 2.0 * Complex64::i() * m3 * u / (zeta - self.xi0)
    }

    /// `Phi2 = X (Psi + Omega)` at an interior surface point.
    pub fn phi2_at(&self, fac: &Factorizer, phi1: &Phi1, pt: SurfacePoint) -> Complex64 {
        let u = pt.u(self.m);
        fac.at(pt) * (self.psi_at(fac, phi1, pt.zeta, u) + self.omega_rational(pt.zeta, u))
    }

    /// One-sided boundary value of `Phi2` on either slit, from the upper
    /// sheet, entirely through the side formulas (no limits).
    pub fn phi2_side(&self, fac: &Factorizer, phi1: &Phi1, sv: SideValue) -> Complex64 {
        let u = sv.u(self.m);
        match sv.slit {
            Slit::L1 => {
                let x = fac.side_l1(sv.xi, sv.side);
                let psi = self.psi_side(fac, phi1, sv.xi, sv.side);
                x * (psi + self.omega_rational(Complex64::new(sv.xi, 0.0), u))
            }
            Slit::L0 => {
                let x = fac.side_l0(sv.xi, sv.side);
                let zeta = Complex64::new(sv.xi, 0.0);
                let psi = self.psi_at(fac, phi1, zeta, u);
                x * (psi + self.omega_rational(zeta, u))
            }
        }
    }
}

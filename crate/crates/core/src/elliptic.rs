//! Complete elliptic integrals and Jacobi elliptic functions.
//!
//! Everything here uses the *modulus* convention: `K(k)` with `k` the
//! modulus, not the parameter `m = k^2`.

use num_complex::Complex64;
// in no_std builds the Float trait provides the f64 math methods;
// with std in the crate graph the inherent ones win and this goes idle
#[allow(unused_imports)]
use num_traits::Float;

/// Convergence threshold for the AGM iterations.
const AGM_EPS: f64 = 1.0e-15;
const AGM_MAX_ITER: usize = 40;

/// Complete elliptic integral of the first kind `K(k)` by the
/// arithmetic-geometric mean, `K(k) = pi / (2 AGM(1, k'))`.
///
/// Requires `0 <= k < 1`; the AGM converges quadratically, so machine
/// precision is reached in fewer than ten sweeps.
pub fn ellip_k(k: f64) -> f64 {
    debug_assert!((0.0..1.0).contains(&k), "modulus out of range: {k}");
    let kp = (1.0 - k * k).sqrt();
    core::f64::consts::PI / (2.0 * agm(1.0, kp))
}

fn agm(a0: f64, b0: f64) -> f64 {
    let (mut a, mut b) = (a0, b0);
    for _ in 0..AGM_MAX_ITER {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= AGM_EPS * an {
            return an;
        }
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// Jacobi elliptic functions `sn`, `cn`, `dn` for real argument and
/// modulus `k in [0, 1]`, via the descending Landen / AGM scheme with
/// backward recurrence.
pub fn jacobi_sncndn(u: f64, k: f64) -> (f64, f64, f64) {
    const CA: f64 = 1.0e-9; // quadratic convergence squares this
    let mc = 1.0 - k * k;
    debug_assert!(mc >= 0.0, "modulus > 1");
    if mc < 1.0e-300 {
        let cn = 1.0 / u.cosh();
        return (u.tanh(), cn, cn);
    }
    let mut emc = mc;
    let mut a = 1.0f64;
    let mut dn = 1.0f64;
    let mut em = [0.0f64; 16];
    let mut en = [0.0f64; 16];
    let mut l = 0;
    let mut c = 0.0f64;
    for i in 0..16 {
        l = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= CA * a {
            break;
        }
        emc *= a;
        a = c;
    }
    let uc = u * c;
    let mut sn = uc.sin();
    let mut cn = uc.cos();
    if sn != 0.0 {
        let mut aa = cn / sn;
        c *= aa;
        for i in (0..=l).rev() {
            let b = em[i];
            aa *= c;
            c *= dn;
            dn = (en[i] + aa) / (b + aa);
            aa = c / b;
        }
        aa = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn >= 0.0 { aa } else { -aa };
        cn = c * sn;
    }
    (sn, cn, dn)
}

/// `sn(z, k)` for complex `z` via the addition theorem
/// `sn(x + iy)` in terms of real-argument functions with moduli `k`
/// and `k' = sqrt(1 - k^2)`.
pub fn jacobi_sn_complex(z: Complex64, k: f64) -> Complex64 {
    let kp = (1.0 - k * k).sqrt();
    let big_k = ellip_k(k);
    let big_kp = ellip_k(kp);
    // periods: 4K in the real direction, 2K' in the imaginary one
    let x = wrap(z.re, 4.0 * big_k);
    let y = wrap(z.im, 2.0 * big_kp);
    let (s, c, d) = jacobi_sncndn(x, k);
    let (s1, c1, d1) = jacobi_sncndn(y, kp);
    let den = c1 * c1 + k * k * s * s * s1 * s1;
    Complex64::new(s * d1 / den, c * d * s1 * c1 / den)
}

fn wrap(x: f64, period: f64) -> f64 {
    let r = x % period;
    // keep the representative near zero for accuracy
    if r > 0.5 * period {
        r - period
    } else if r < -0.5 * period {
        r + period
    } else {
        r
    }
}

//! Exponential integral E_n: power series inside |z| <= 3.5, Lentz continued
//! fraction outside. Branch data for the log term lives here too.

use crate::types::Complex;

/// psi(n) = -gamma + sum_{i<n} 1/i.
fn harmonic_psi(n: u32) -> f64 {
    let mut p = -crate::consts::EULER_GAMMA;
    for i in 1..n {
        p += 1.0 / i as f64;
    }
    p
}

/// (-z)^{n-1}/(n-1)! accumulated as a product so large n underflows cleanly.
pub(crate) fn log_branch_coeff(n: u32, z: Complex) -> Complex {
    let mut r = Complex::new(1.0, 0.0);
    for i in 1..n {
        r *= -z / i as f64;
    }
    r
}

/// E_n(z) on the principal branch (cut on the negative real axis, values on
/// the cut taken as the limit from above). z = 0 allowed for n >= 2.
pub(crate) fn expint_en_principal(n: u32, z: Complex) -> Complex {
    if z.norm() == 0.0 {
        return Complex::new(1.0 / (n as f64 - 1.0), 0.0);
    }
    // pin the cut to the limit-from-above side (catches -0.0 imaginary parts)
    let z = if z.im == 0.0 { Complex::new(z.re, 0.0) } else { z };
    // the continued fraction degrades near the cut, so the series keeps the
    // whole moderate left half-plane; its cancellation there is mild
    if z.norm() <= 3.5 || (z.re < 0.5 && z.norm() <= 9.0) {
        let mut res = log_branch_coeff(n, z) * (harmonic_psi(n) - z.ln());
        let mut term = Complex::new(1.0, 0.0);
        for m in 0..200u32 {
            if m != n - 1 {
                res -= term / (m as f64 - n as f64 + 1.0);
            }
            if term.norm() < 1e-19 * (res.norm() + 1.0) {
                break;
            }
            term *= -z / (m as f64 + 1.0);
        }
        return res;
    }
    let tiny = 1e-290;
    let mut b = z + n as f64;
    let mut c = if b.norm() > 0.0 { b } else { Complex::new(tiny, 0.0) };
    let mut d = Complex::new(0.0, 0.0);
    let mut h = c;
    for i in 1..400 {
        let an = -(i as f64) * (n as f64 - 1.0 + i as f64);
        b += 2.0;
        d = b + an * d;
        if d.norm() == 0.0 {
            d = Complex::new(tiny, 0.0);
        }
        c = b + an / c;
        if c.norm() == 0.0 {
            c = Complex::new(tiny, 0.0);
        }
        d = d.inv();
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    (-z).exp() / h
}
